// SPDX-License-Identifier: Apache-2.0
//
// Bivariate rational functions whose denominators are powers of (x + y).
// x = (1 - cos r1)/2 and y = (1 - cos r2)/2 parametrize the torus-invariant
// functions on S2 x S2, with the base point at the origin.

#pragma once

#include "certmass/exactnum.hpp"

#include <functional>
#include <map>
#include <utility>

namespace certmass {

/// Sparse polynomial in x and y with rational coefficients; never stores a zero.
class BiPoly {
public:
    using Exponent = std::pair<unsigned, unsigned>;  // (x-degree, y-degree)
    using Terms = std::map<Exponent, Rational>;

    BiPoly() = default;
    BiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

    static BiPoly monomial(unsigned i, unsigned j, const Rational& c = 1);
    static BiPoly x() { return monomial(1, 0); }
    static BiPoly y() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(unsigned i, unsigned j) const;
    unsigned total_degree() const;
    /// Smallest total degree of a stored monomial (0 for the zero polynomial).
    unsigned low_degree() const;

    void add_term(unsigned i, unsigned j, const Rational& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly l, const BiPoly& r) { return l += r; }
    friend BiPoly operator-(BiPoly l, const BiPoly& r) { return l -= r; }
    friend BiPoly operator-(const BiPoly& p) { return p * Rational(-1); }
    friend BiPoly operator*(BiPoly p, const Rational& s) { return p *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly p) { return p *= s; }
    friend BiPoly operator*(const BiPoly& l, const BiPoly& r);
    friend bool operator==(const BiPoly& l, const BiPoly& r) { return l.terms_ == r.terms_; }

    BiPoly d_dx() const;
    BiPoly d_dy() const;
    BiPoly times_sum() const;  // multiply by (x + y)
    BiPoly pow(unsigned e) const;

    /// Exact quotient by (x + y), or false if (x + y) does not divide *this.
    bool divide_by_sum(BiPoly& quotient) const;

    Rational evaluate(const Rational& x, const Rational& y) const;
    double evaluate(double x, double y) const;

private:
    Terms terms_;
};

/// num / (x + y)^k, kept canonical: (x + y) never divides num while k > 0,
/// and the zero function has k = 0. Equal functions compare equal.
class XYRational {
public:
    XYRational() = default;
    XYRational(BiPoly num, unsigned k = 0);  // NOLINT(google-explicit-constructor)
    XYRational(const Rational& c) : XYRational(BiPoly(c)) {}  // NOLINT

    const BiPoly& numerator() const { return num_; }
    unsigned sum_power() const { return k_; }

    XYRational& operator+=(const XYRational& o);
    XYRational& operator-=(const XYRational& o);
    XYRational& operator*=(const Rational& s);
    friend XYRational operator+(XYRational l, const XYRational& r) { return l += r; }
    friend XYRational operator-(XYRational l, const XYRational& r) { return l -= r; }
    friend XYRational operator*(XYRational u, const Rational& s) { return u *= s; }
    friend XYRational operator*(const Rational& s, XYRational u) { return u *= s; }
    friend XYRational operator*(const XYRational& l, const XYRational& r);
    friend bool operator==(const XYRational& l, const XYRational& r) {
        return l.k_ == r.k_ && l.num_ == r.num_;
    }

    /// Throws std::domain_error at the pole (0, 0) when k > 0.
    Rational evaluate(const Rational& x, const Rational& y) const;
    double evaluate(double x, double y) const;

    /// Re-run cancellation on an already canonical value (no-op by invariant).
    XYRational canonical() const { return XYRational(num_, k_); }

private:
    void canonicalize();

    BiPoly num_;
    unsigned k_ = 0;
};

// quotient rule: d/dx [p / (x+y)^k] = (p_x (x+y) - k p) / (x+y)^(k+1)
XYRational d_dx(const XYRational& u);
XYRational d_dy(const XYRational& u);

/// Conformal Laplacian of S2 x S2 on torus-invariant functions:
///   -6 { x(1-x) u_xx + (1-2x) u_x + y(1-y) u_yy + (1-2y) u_y } + 4u.
XYRational box_xy(const XYRational& u);

/// The one-variable part -6 { x(1-x) u_xx + (1-2x) u_x } + 4u, i.e. box_xy
/// restricted to functions of x alone.
XYRational box_x_only(const XYRational& u);

/// Singular part of the Green's function at the base point:
///   1/(4(x+y)) + xy/(6(x+y)^2) + x^2 y^2/(9(x+y)^3).
XYRational green_singular_part();

/// Source term 8 x^2 y^2 (5x^2 - 8xy + 5y^2) / (9 (x+y)^5) = box_xy(green_singular_part()).
XYRational green_source();

/// Evaluable double-precision view, for quadrature.
std::function<double(double, double)> as_function(const XYRational& u);

}  // namespace certmass
