// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic kernel: GMP-backed rationals, the field Q + Q*ln2, and
// rational-endpoint intervals. The logarithm is kept symbolic; it only turns
// into numbers through ln2_enclosure() at output time.

#pragma once

#include <gmpxx.h>

#include <string>

namespace certmass {

using BigInt = mpz_class;

// mpq_class keeps itself in lowest terms after every arithmetic operation;
// make_rational() canonicalizes values built from a raw numerator/denominator.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

// Parses "n" or "n/d" (decimal integers). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Value of the form a + b*ln2 with rational a and b.
///
/// Since ln2 is irrational the representation is unique, so equality is
/// component-wise and no numeric tolerance is ever involved.
struct ExactValue {
    Rational a;
    Rational b;

    ExactValue() = default;
    ExactValue(Rational rational_part, Rational ln2_part)
        : a(std::move(rational_part)), b(std::move(ln2_part)) {}

    static ExactValue rational(Rational r) { return {std::move(r), Rational(0)}; }
    static ExactValue ln2() { return {Rational(0), Rational(1)}; }

    bool is_rational() const { return sgn(b) == 0; }

    ExactValue& operator+=(const ExactValue& o);
    ExactValue& operator-=(const ExactValue& o);
    ExactValue& operator*=(const Rational& s);

    friend ExactValue operator+(ExactValue l, const ExactValue& r) { return l += r; }
    friend ExactValue operator-(ExactValue l, const ExactValue& r) { return l -= r; }
    friend ExactValue operator-(const ExactValue& v) { return {-v.a, -v.b}; }
    friend ExactValue operator*(ExactValue v, const Rational& s) { return v *= s; }
    friend ExactValue operator*(const Rational& s, ExactValue v) { return v *= s; }
    friend bool operator==(const ExactValue& l, const ExactValue& r) {
        return l.a == r.a && l.b == r.b;
    }
};

/// "a + b*ln2" with both rationals in lowest terms, e.g. "4777/1260 - 208/45*ln2".
std::string to_string(const ExactValue& v);

/// Closed interval [lo, hi] with rational endpoints.
struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() = default;
    RatInterval(Rational l, Rational h);  // throws std::invalid_argument if l > h

    static RatInterval point(const Rational& r) { return {r, r}; }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool is_subset_of(const RatInterval& o) const { return o.contains(*this); }
    bool disjoint_from(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }

    friend RatInterval operator+(const RatInterval& l, const RatInterval& r) {
        return {l.lo + r.lo, l.hi + r.hi};
    }
    friend RatInterval operator-(const RatInterval& v) { return {-v.hi, -v.lo}; }
    friend RatInterval operator*(const Rational& s, const RatInterval& v);
    friend bool operator==(const RatInterval& l, const RatInterval& r) {
        return l.lo == r.lo && l.hi == r.hi;
    }
};

/// Widens [lo, hi] to [lo - r, hi + r]; r must be nonnegative.
RatInterval widen(const RatInterval& i, const Rational& r);

/// Enclosure of ln2 of width <= 10^-decimal_digits from partial sums of
/// ln2 = 2 * sum_k 3^-(2k+1) / (2k+1), with a geometric bound on the tail.
/// Enclosures for increasing digit counts are nested.
RatInterval ln2_enclosure(int decimal_digits);

/// Encloses a + b*ln2; the width is at most |b| * 10^-decimal_digits.
RatInterval eval_interval(const ExactValue& v, int decimal_digits);

/// Smallest number of ln2 digits for which eval_interval(v, .) is no wider
/// than 10^-target_digits.
int ln2_digits_for(const ExactValue& v, int target_digits);

/// Certified upper bound s of sqrt(r): s >= 0, s^2 >= r, s^2 <= r (1 + 1e-6)^2.
/// Throws std::domain_error for negative input.
Rational sqrt_upper(const Rational& r);

/// floor / ceil of r * 10^places, as integers.
BigInt floor_scaled(const Rational& r, int places);
BigInt ceil_scaled(const Rational& r, int places);

/// Fixed-point rendering of n * 10^-places, e.g. (-18922, 5) -> "-0.18922".
std::string fixed_point(const BigInt& n, int places);

/// "lo .. hi" with lo rounded toward -inf and hi toward +inf; the printed
/// interval always contains i.
std::string decimal_string(const RatInterval& i, int places);

/// Double within 1e-20 absolute of a + b*ln2 (plus rounding); diagnostics only.
double to_double(const ExactValue& v);

}  // namespace certmass
