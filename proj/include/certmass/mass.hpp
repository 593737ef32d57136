// SPDX-License-Identifier: Apache-2.0
//
// Mass series for S2 x S2 and its Einstein quotients G(2,4) and RP2 x RP2:
//
//   m = c_M - 12 sum_{j,k} (2j+1)(2k+1) / lambda_{j,k} * w_M(j,k) * inner(j,k),
//   inner(j,k) = sum_{p<=j, q<=k} c_{j,k}^{p,q} f~(p,q),
//
// evaluated exactly on square truncations j, k <= N, together with certified
// bounds on the truncation error.

#pragma once

#include "certmass/exactnum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace certmass {

enum class Manifold { S2xS2, G24, RP2xRP2 };

inline constexpr Manifold kAllManifolds[] = {Manifold::S2xS2, Manifold::G24, Manifold::RP2xRP2};

std::string_view display_name(Manifold m);  // "S2xS2", "G24", "RP2xRP2"
std::string_view cli_name(Manifold m);      // "s2xs2", "g24", "rp2xrp2"
std::optional<Manifold> parse_manifold(std::string_view name);

/// 2/3, 17/6 and 53/6.
Rational constant_term(Manifold m);
/// 1, 1 + (-1)^(j+k), and 1 + (-1)^j + (-1)^k + (-1)^(j+k).
int weight(Manifold m, unsigned j, unsigned k);
/// Number of corner evaluations of the regular part: 1, 2, 4.
unsigned error_multiplier(Manifold m);

/// Eigenvalue 6 (j(j+1) + k(k+1)) + 4 of the conformal Laplacian.
std::uint64_t eigenvalue(unsigned j, unsigned k);

/// int int (box f)^2 over the unit square, f the source term.
Rational source_laplacian_l2();  // 61547/45045

// ---------------------------------------------------------------------------
// Inner sums

/// Direct double sum over (p, q); the serial reference for the kernel.
ExactValue inner_sum_reference(unsigned j, unsigned k);

/// Memoized inner sum. A miss is filled by the factored formula
///   inner(j,k) = U(j,k) + U(k,j),  U(j,k) = sum_p c_j^p h(p) M_k(p),
///   M_k(p) = sum_q c_k^q / (p + q + 3) = int_0^1 y^(p+2) P_k(1-2y) dy,
/// where h(p)/(p+q+3) is the triangle part of f~(p,q).
const ExactValue& inner_sum(unsigned j, unsigned k);

/// Fills the memo for all j, k <= n, in parallel (threads <= 0: OpenMP default).
void ensure_inner_sums(unsigned n, int threads = 0);

void seed_inner_sum(unsigned j, unsigned k, const ExactValue& value);
std::vector<std::pair<std::pair<unsigned, unsigned>, ExactValue>> inner_sum_entries();
void clear_inner_sum_cache();

/// M_k(p) for p = 0..max_p, computed as the defining sum over q.
std::vector<Rational> legendre_moments(unsigned k, unsigned max_p);

// ---------------------------------------------------------------------------
// Partial sums and bounds

/// Exact square partial sum S_N; OpenMP reduction over the (j, k) grid.
ExactValue partial_sum(Manifold m, unsigned n, int threads = 0);

/// Serial O(N^4) evaluation through inner_sum_reference; no memoization.
ExactValue partial_sum_reference(Manifold m, unsigned n);

/// Floating-point evaluation of S_N for diagnostics. Loses all accuracy for
/// large N through cancellation between binomials and ln2 - A(p).
double partial_sum_fast(Manifold m, unsigned n);

/// F(N)^2 = -1/24 / (3N^2+3N+1)^2 + 1/3 / (3N^2+3N+2)^2 + 1 / (3N^2+3N+2)^3.
Rational f_bound_squared(unsigned n);

/// error_multiplier(m) * sqrt(61547/45045 F(N)^2), rounded upward.
/// Throws std::domain_error for n == 0.
Rational error_bound(Manifold m, unsigned n);

/// Truncation bound for RP2 x RP2 that keeps only the even-even indices
/// carrying nonzero weight in the Cauchy-Schwarz tail. Returns error_bound()
/// for the other manifolds.
Rational parity_error_bound(Manifold m, unsigned n);

/// min(error_bound, parity_error_bound).
Rational certified_error_bound(Manifold m, unsigned n);

struct MassEstimate {
    Manifold manifold = Manifold::S2xS2;
    unsigned n = 0;
    int digits = 0;
    ExactValue partial_sum;
    Rational error_bound;
    RatInterval sum_interval;
    RatInterval mass_interval;
    RatInterval t0_interval;         // -1 / (9 m)
    RatInterval t0_double_interval;  // -2 / (9 m)
};

/// Certified enclosure of the mass; the ln2 enclosure is refined until the
/// partial sum is known to 10^-(digits+2). Throws std::domain_error for
/// n == 0 and std::runtime_error if the mass interval does not stay positive.
MassEstimate mass_estimate(Manifold m, unsigned n, int digits, int threads = 0);

/// Image of a positive mass interval under m -> -multiple / (9 m).
RatInterval t0_from_mass(const RatInterval& mass, unsigned multiple);

struct T0Comparison {
    std::string label;
    std::string left_name;
    std::string right_name;
    RatInterval left;
    RatInterval right;
    bool proven_distinct = false;  // false means undecided at this truncation
};

T0Comparison check_distinct_t0(std::string label, std::string left_name, const RatInterval& left,
                               std::string right_name, const RatInterval& right);

/// The six pairs of t0 values whose distinctness is claimed for the connected
/// sums of the three manifolds with each other and with CP2-bar.
std::vector<T0Comparison> distinctness_table(const MassEstimate& s2xs2, const MassEstimate& g24,
                                             const MassEstimate& rp2xrp2);

}  // namespace certmass
