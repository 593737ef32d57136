// SPDX-License-Identifier: Apache-2.0

#include "certmass/exactnum.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace certmass {

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den)
{
    return make_rational(BigInt(num), BigInt(den));
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text, 10));
        return make_rational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    } catch (const std::domain_error&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

ExactValue& ExactValue::operator+=(const ExactValue& o)
{
    a += o.a;
    b += o.b;
    return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& o)
{
    a -= o.a;
    b -= o.b;
    return *this;
}

ExactValue& ExactValue::operator*=(const Rational& s)
{
    a *= s;
    b *= s;
    return *this;
}

std::string to_string(const ExactValue& v)
{
    const bool has_a = sgn(v.a) != 0;
    const bool has_b = sgn(v.b) != 0;
    if (!has_a && !has_b)
        return "0";

    std::string out;
    if (has_a)
        out = to_string(v.a);
    if (has_b) {
        const Rational mag = abs(v.b);
        const std::string coeff = mag == 1 ? std::string("ln2") : to_string(mag) + "*ln2";
        if (has_a)
            out += sgn(v.b) < 0 ? " - " : " + ";
        else if (sgn(v.b) < 0)
            out += "-";
        out += coeff;
    }
    return out;
}

RatInterval::RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h))
{
    if (lo > hi)
        throw std::invalid_argument("interval with lo > hi");
}

RatInterval operator*(const Rational& s, const RatInterval& v)
{
    if (sgn(s) >= 0)
        return {s * v.lo, s * v.hi};
    return {s * v.hi, s * v.lo};
}

RatInterval widen(const RatInterval& i, const Rational& r)
{
    if (sgn(r) < 0)
        throw std::invalid_argument("negative widening radius");
    return {i.lo - r, i.hi + r};
}

namespace {

BigInt pow10(int places)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(places));
    return p;
}

}  // namespace

RatInterval ln2_enclosure(int decimal_digits)
{
    if (decimal_digits < 1)
        throw std::invalid_argument("ln2_enclosure needs at least one digit");

    static std::mutex mu;
    static std::map<int, RatInterval> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(decimal_digits); it != memo.end())
            return it->second;
    }

    // term_k = 2 / ((2k+1) 3^(2k+1)); consecutive terms shrink by at least 9,
    // so the tail after term_K is at most term_K/9 / (1 - 1/9) = term_K/8.
    const Rational tolerance(BigInt(1), pow10(decimal_digits));
    Rational sum = 0;
    BigInt power3 = 3;
    Rational tail;
    for (long k = 0;; ++k) {
        const Rational term = make_rational(BigInt(2), BigInt(2 * k + 1) * power3);
        sum += term;
        tail = term / 8;
        if (tail <= tolerance)
            break;
        power3 *= 9;
    }
    RatInterval result(sum, sum + tail);

    std::lock_guard lock(mu);
    memo.emplace(decimal_digits, result);
    return result;
}

RatInterval eval_interval(const ExactValue& v, int decimal_digits)
{
    if (v.is_rational())
        return RatInterval::point(v.a);
    return RatInterval::point(v.a) + v.b * ln2_enclosure(decimal_digits);
}

int ln2_digits_for(const ExactValue& v, int target_digits)
{
    if (v.is_rational())
        return std::max(target_digits, 1);
    const Rational b_abs = abs(v.b);
    BigInt mag;
    mpz_cdiv_q(mag.get_mpz_t(), b_abs.get_num_mpz_t(), b_abs.get_den_mpz_t());
    // sizeinbase(10) is exact or one too large, either way 10^size >= mag.
    const int extra = mag <= 1 ? 0 : static_cast<int>(mpz_sizeinbase(mag.get_mpz_t(), 10));
    return std::max(target_digits + extra, 1);
}

Rational sqrt_upper(const Rational& r)
{
    if (sgn(r) < 0)
        throw std::domain_error("sqrt_upper of a negative number");
    if (sgn(r) == 0)
        return 0;

    // Scale by 4^m so that sqrt(r 4^m) >= 2^24 > 10^7; the ceiling of the
    // integer square root then carries a relative slack below 1e-7.
    const long num_bits = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
    const long m = std::max(0L, (50 - (num_bits - den_bits - 1) + 1) / 2);

    BigInt scaled = r.get_num() << static_cast<mp_bitcnt_t>(2 * m);
    mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), r.get_den_mpz_t());

    BigInt root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    if (root * root < scaled)
        root += 1;

    BigInt den = 1;
    den <<= static_cast<mp_bitcnt_t>(m);
    return make_rational(root, den);
}

BigInt floor_scaled(const Rational& r, int places)
{
    BigInt out;
    const BigInt num = r.get_num() * pow10(places);
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
    return out;
}

BigInt ceil_scaled(const Rational& r, int places)
{
    BigInt out;
    const BigInt num = r.get_num() * pow10(places);
    mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
    return out;
}

std::string fixed_point(const BigInt& n, int places)
{
    std::string digits = BigInt(abs(n)).get_str(10);
    if (places > 0 && static_cast<int>(digits.size()) <= places)
        digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
    if (places > 0)
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    return sgn(n) < 0 ? "-" + digits : digits;
}

std::string decimal_string(const RatInterval& i, int places)
{
    if (places < 0)
        throw std::invalid_argument("negative decimal places");
    return fixed_point(floor_scaled(i.lo, places), places) + " .. " +
           fixed_point(ceil_scaled(i.hi, places), places);
}

double to_double(const ExactValue& v)
{
    if (v.is_rational())
        return v.a.get_d();
    // a and b can be huge and of opposite sign, so go through an enclosure
    const RatInterval i = eval_interval(v, ln2_digits_for(v, 20));
    return Rational((i.lo + i.hi) / 2).get_d();
}

}  // namespace certmass
