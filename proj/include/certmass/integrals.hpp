// SPDX-License-Identifier: Apache-2.0
//
// Exact integrals over the unit square of functions with (x + y)-power
// denominators, built on the triangle integrals
//
//   I(p, q; n) = int_0^1 int_0^y x^p y^q / (x + y)^n dx dy,
//
// plus an adaptive Gauss-Legendre cubature used only as an independent check.

#pragma once

#include "certmass/exactnum.hpp"
#include "certmass/xyfunc.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace certmass {

/// I(p, q; 1) = (-1)^p (ln2 - A(p)) / (p + q + 1).
ExactValue triangle_integral_base(unsigned p, unsigned q);

/// I(p, q; n) by integration by parts in x down to n = 1 or p = 0:
///   I(p,q;n) = -1 / (2^(n-1) (n-1) (p+q+2-n)) + p/(n-1) I(p-1,q;n-1),  p >= 1,
///   I(0,q;n) = (1 - 2^(1-n)) / ((n-1) (q+2-n)),                         n >= 2.
/// Throws std::domain_error when the integral diverges (n > 1, p+q <= n-2)
/// or n == 0.
ExactValue triangle_integral(unsigned p, unsigned q, unsigned n);

/// Closed forms of I(p, q; 5) for p >= 4; p = 3, q >= 1; p = 2, q >= 2.
/// Throws std::domain_error outside those ranges.
ExactValue triangle_integral_5(unsigned p, unsigned q);

/// Moment f~(p,q) = int int_[0,1]^2 f x^p y^q of the source term f, from the
/// closed form in p and q. Memoized.
const ExactValue& f_tilde(unsigned p, unsigned q);

/// The same moment assembled from triangle integrals:
///   J(p,q) = 8/9 (5 I(p+4,q+2;5) - 8 I(p+3,q+3;5) + 5 I(p+2,q+4;5)),
///   f~(p,q) = J(p,q) + J(q,p).
ExactValue f_tilde_assembled(unsigned p, unsigned q);

/// Closed form of J(p,q) = triangle part of the moment:
///   J(p,q) = half_moment_numerator(p) / (p + q + 3),
/// with half_moment_numerator(p) =
///   1/18 { -109/2 - 68p - 33p^2 - 6p^3
///          + 4 (-1)^p (p+1)(p+2)(3p^2+9p+10) (ln2 - A(p)) }.
ExactValue half_moment_numerator(unsigned p);

/// Exact integral over [0,1]^2. Splits the square along the diagonal and
/// integrates monomial by monomial; throws std::domain_error if some
/// monomial x^a y^b / (x+y)^k has a + b <= k - 2 (non-integrable).
ExactValue integrate_square(const XYRational& u);

void clear_integral_caches();

/// Seeds / exports the moment memo table (persisted by the command line tool).
void seed_f_tilde(unsigned p, unsigned q, const ExactValue& value);
std::size_t f_tilde_cache_size();
std::vector<std::pair<std::pair<unsigned, unsigned>, ExactValue>> f_tilde_entries();

struct QuadResult {
    double value = 0;
    double error_estimate = 0;
    std::size_t panels = 0;
    bool converged = false;
};

/// Adaptive tensor-product Gauss-Legendre cubature on [0,1]^2 with dyadic
/// splitting of the worst panel. The panel error is estimated from the
/// difference between a panel rule and its four-child refinement.
QuadResult quad_square(const std::function<double(double, double)>& u, double tol,
                       std::size_t max_panels = 400000);

}  // namespace certmass
