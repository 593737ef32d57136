// SPDX-License-Identifier: Apache-2.0

#include "certmass/xyfunc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace certmass {

BiPoly::BiPoly(const Rational& c)
{
    add_term(0, 0, c);
}

BiPoly BiPoly::monomial(unsigned i, unsigned j, const Rational& c)
{
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

Rational BiPoly::coeff(unsigned i, unsigned j) const
{
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned BiPoly::total_degree() const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first + e.second);
    return d;
}

unsigned BiPoly::low_degree() const
{
    if (terms_.empty())
        return 0;
    unsigned d = ~0u;
    for (const auto& [e, c] : terms_)
        d = std::min(d, e.first + e.second);
    return d;
}

void BiPoly::add_term(unsigned i, unsigned j, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e.first, e.second, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

BiPoly operator*(const BiPoly& l, const BiPoly& r)
{
    BiPoly out;
    for (const auto& [el, cl] : l.terms_)
        for (const auto& [er, cr] : r.terms_)
            out.add_term(el.first + er.first, el.second + er.second, cl * cr);
    return out;
}

BiPoly BiPoly::d_dx() const
{
    BiPoly out;
    for (const auto& [e, c] : terms_)
        if (e.first > 0)
            out.add_term(e.first - 1, e.second, c * e.first);
    return out;
}

BiPoly BiPoly::d_dy() const
{
    BiPoly out;
    for (const auto& [e, c] : terms_)
        if (e.second > 0)
            out.add_term(e.first, e.second - 1, c * e.second);
    return out;
}

BiPoly BiPoly::times_sum() const
{
    BiPoly out;
    for (const auto& [e, c] : terms_) {
        out.add_term(e.first + 1, e.second, c);
        out.add_term(e.first, e.second + 1, c);
    }
    return out;
}

BiPoly BiPoly::pow(unsigned e) const
{
    BiPoly out(1);
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

bool BiPoly::divide_by_sum(BiPoly& quotient) const
{
    // Long division in x with coefficients in Q[y]. Writing P = sum_i x^i p_i(y)
    // and Q = sum_i x^i q_i(y), (x + y) Q = P forces q_{n-1} = p_n,
    // q_{i-1} = p_i - y q_i, and leaves the remainder p_0 - y q_0.
    quotient = BiPoly();
    if (is_zero())
        return true;

    unsigned n = 0;
    for (const auto& [e, c] : terms_)
        n = std::max(n, e.first);

    std::vector<std::map<unsigned, Rational>> rows(n + 1);
    for (const auto& [e, c] : terms_)
        rows[e.first][e.second] = c;

    std::map<unsigned, Rational> carry;  // q_i as a polynomial in y
    for (unsigned i = n; i >= 1; --i) {
        std::map<unsigned, Rational> q = rows[i];
        for (const auto& [d, c] : carry) {
            auto& slot = q[d + 1];
            slot -= c;
        }
        std::erase_if(q, [](const auto& kv) { return sgn(kv.second) == 0; });
        for (const auto& [d, c] : q)
            quotient.add_term(i - 1, d, c);
        carry = std::move(q);
    }

    std::map<unsigned, Rational> remainder = rows[0];
    for (const auto& [d, c] : carry)
        remainder[d + 1] -= c;
    const bool exact = std::all_of(remainder.begin(), remainder.end(),
                                   [](const auto& kv) { return sgn(kv.second) == 0; });
    if (!exact)
        quotient = BiPoly();
    return exact;
}

Rational BiPoly::evaluate(const Rational& x, const Rational& y) const
{
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < e.first; ++i)
            t *= x;
        for (unsigned j = 0; j < e.second; ++j)
            t *= y;
        sum += t;
    }
    return sum;
}

double BiPoly::evaluate(double x, double y) const
{
    double sum = 0;
    for (const auto& [e, c] : terms_)
        sum += c.get_d() * std::pow(x, e.first) * std::pow(y, e.second);
    return sum;
}

XYRational::XYRational(BiPoly num, unsigned k) : num_(std::move(num)), k_(k)
{
    canonicalize();
}

void XYRational::canonicalize()
{
    if (num_.is_zero()) {
        k_ = 0;
        return;
    }
    BiPoly q;
    while (k_ > 0 && num_.divide_by_sum(q)) {
        num_ = std::move(q);
        --k_;
    }
}

namespace {

BiPoly lift(const BiPoly& p, unsigned by)
{
    BiPoly out = p;
    for (unsigned i = 0; i < by; ++i)
        out = out.times_sum();
    return out;
}

}  // namespace

XYRational& XYRational::operator+=(const XYRational& o)
{
    const unsigned k = std::max(k_, o.k_);
    *this = XYRational(lift(num_, k - k_) + lift(o.num_, k - o.k_), k);
    return *this;
}

XYRational& XYRational::operator-=(const XYRational& o)
{
    const unsigned k = std::max(k_, o.k_);
    *this = XYRational(lift(num_, k - k_) - lift(o.num_, k - o.k_), k);
    return *this;
}

XYRational& XYRational::operator*=(const Rational& s)
{
    num_ *= s;
    if (num_.is_zero())
        k_ = 0;
    return *this;
}

XYRational operator*(const XYRational& l, const XYRational& r)
{
    return XYRational(l.num_ * r.num_, l.k_ + r.k_);
}

Rational XYRational::evaluate(const Rational& x, const Rational& y) const
{
    const Rational s = x + y;
    if (k_ > 0 && sgn(s) == 0)
        throw std::domain_error("evaluation at the pole x + y = 0");
    Rational den = 1;
    for (unsigned i = 0; i < k_; ++i)
        den *= s;
    return num_.evaluate(x, y) / den;
}

double XYRational::evaluate(double x, double y) const
{
    return num_.evaluate(x, y) / std::pow(x + y, static_cast<int>(k_));
}

XYRational d_dx(const XYRational& u)
{
    const BiPoly& p = u.numerator();
    const unsigned k = u.sum_power();
    return XYRational(p.d_dx().times_sum() - p * Rational(k), k + 1);
}

XYRational d_dy(const XYRational& u)
{
    const BiPoly& p = u.numerator();
    const unsigned k = u.sum_power();
    return XYRational(p.d_dy().times_sum() - p * Rational(k), k + 1);
}

namespace {

const XYRational& poly_x() { static const XYRational v(BiPoly::x()); return v; }
const XYRational& poly_y() { static const XYRational v(BiPoly::y()); return v; }

XYRational one_dim_part_x(const XYRational& u)
{
    const XYRational x = poly_x();
    const XYRational ux = d_dx(u);
    return x * (XYRational(1) - x) * d_dx(ux) + (XYRational(1) - Rational(2) * x) * ux;
}

XYRational one_dim_part_y(const XYRational& u)
{
    const XYRational y = poly_y();
    const XYRational uy = d_dy(u);
    return y * (XYRational(1) - y) * d_dy(uy) + (XYRational(1) - Rational(2) * y) * uy;
}

}  // namespace

XYRational box_xy(const XYRational& u)
{
    return Rational(-6) * (one_dim_part_x(u) + one_dim_part_y(u)) + Rational(4) * u;
}

XYRational box_x_only(const XYRational& u)
{
    return Rational(-6) * one_dim_part_x(u) + Rational(4) * u;
}

XYRational green_singular_part()
{
    const BiPoly x = BiPoly::x();
    const BiPoly y = BiPoly::y();
    return XYRational(BiPoly(make_rational(1, 4)), 1) +
           XYRational(x * y * make_rational(1, 6), 2) +
           XYRational(x * x * y * y * make_rational(1, 9), 3);
}

XYRational green_source()
{
    const BiPoly x = BiPoly::x();
    const BiPoly y = BiPoly::y();
    const BiPoly quad = x * x * Rational(5) - x * y * Rational(8) + y * y * Rational(5);
    return XYRational(x * x * y * y * quad * make_rational(8, 9), 5);
}

std::function<double(double, double)> as_function(const XYRational& u)
{
    return [u](double x, double y) { return u.evaluate(x, y); };
}

}  // namespace certmass
