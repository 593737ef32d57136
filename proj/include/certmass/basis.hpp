// SPDX-License-Identifier: Apache-2.0
//
// Spectral basis data for the torus-invariant eigenfunctions of S2 x S2.
//
// The L2-normalized eigenfunctions are sqrt((2j+1)/4pi) P_j(cos r). In the
// mass series the two square roots of each factor meet again (once in the
// Fourier coefficient, once in the evaluation at the base point), and the
// powers of pi cancel against the volume factor, leaving only the rational
// weight (2j+1)(2k+1). Nothing here therefore carries a normalization
// constant: the basis is the integer-coefficient polynomial P_j(1 - 2x).

#pragma once

#include "certmass/exactnum.hpp"
#include "certmass/xyfunc.hpp"

#include <vector>

namespace certmass {

/// Binomial coefficient C(n, k), zero for k > n. Pascal rows are memoized.
const BigInt& binomial(unsigned n, unsigned k);

/// P_j(1 - 2x) = sum_p coeffs[p] x^p with coeffs[p] = (-1)^p C(j,p) C(j+p,p).
struct ShiftedLegendre {
    unsigned j = 0;
    std::vector<BigInt> coeffs;

    Rational operator()(const Rational& x) const;
};

const ShiftedLegendre& shifted_legendre(unsigned j);

/// P_j(1 - 2x) (resp. 1 - 2y) as an element of Q[x, y].
BiPoly shifted_legendre_x(unsigned j);
BiPoly shifted_legendre_y(unsigned j);

/// A(p) = sum_{i=1}^p (-1)^(i-1) / i, with A(0) = 0.
const Rational& alt_harmonic(unsigned p);

/// (-1)^(p+q) C(j,p) C(j+p,p) C(k,q) C(k+q,q). Throws std::domain_error
/// unless p <= j and q <= k.
BigInt c_coeff(unsigned j, unsigned k, unsigned p, unsigned q);

/// Exact integral of a polynomial in one variable over [0, 1].
Rational integrate_unit(const std::vector<BigInt>& coeffs);

/// Drops the memo tables (tests and benchmarks).
void clear_basis_caches();

}  // namespace certmass
