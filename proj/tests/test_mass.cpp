// SPDX-License-Identifier: Apache-2.0

#include "certmass/basis.hpp"
#include "certmass/integrals.hpp"
#include "certmass/mass.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace certmass;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// sum of w^2 (2j+1)(2k+1) / lambda^4 over N < max(j,k) <= K
double weighted_tail(Manifold m, unsigned n, unsigned cutoff)
{
    double tail = 0;
    for (unsigned j = 0; j <= cutoff; ++j)
        for (unsigned k = 0; k <= cutoff; ++k) {
            if (j <= n && k <= n)
                continue;
            const double w = weight(m, j, k);
            const double l = static_cast<double>(eigenvalue(j, k));
            tail += w * w * (2.0 * j + 1) * (2.0 * k + 1) / (l * l * l * l);
        }
    return tail;
}

}  // namespace

TEST_SUITE("mass") {

TEST_CASE("manifold names")
{
    for (Manifold m : kAllManifolds)
        CHECK(parse_manifold(cli_name(m)) == m);
    CHECK(display_name(Manifold::G24) == "G24");
    CHECK_FALSE(parse_manifold("cp2").has_value());
}

TEST_CASE("manifold data")
{
    CHECK(constant_term(Manifold::S2xS2) == q(2, 3));
    CHECK(constant_term(Manifold::G24) == q(17, 6));
    CHECK(constant_term(Manifold::RP2xRP2) == q(53, 6));
    CHECK(error_multiplier(Manifold::S2xS2) == 1);
    CHECK(error_multiplier(Manifold::G24) == 2);
    CHECK(error_multiplier(Manifold::RP2xRP2) == 4);
    for (unsigned j = 0; j < 12; ++j)
        for (unsigned k = 0; k < 12; ++k) {
            CHECK(weight(Manifold::S2xS2, j, k) == 1);
            CHECK(weight(Manifold::G24, j, k) == ((j + k) % 2 == 0 ? 2 : 0));
            CHECK(weight(Manifold::RP2xRP2, j, k) == (j % 2 == 0 && k % 2 == 0 ? 4 : 0));
            for (Manifold m : kAllManifolds)
                CHECK(weight(m, j, k) == weight(m, k, j));
        }
}

TEST_CASE("eigenvalues")
{
    CHECK(eigenvalue(0, 0) == 4);
    CHECK(eigenvalue(1, 0) == 16);
    CHECK(eigenvalue(1, 1) == 28);
    CHECK(source_laplacian_l2() == q(61547, 45045));
}

TEST_CASE("inner sums")
{
    clear_inner_sum_cache();
    CHECK(inner_sum(0, 0) == f_tilde(0, 0));
    CHECK(inner_sum(1, 0) == f_tilde(0, 0) - f_tilde(1, 0) * q(2));
    for (unsigned j = 0; j <= 9; ++j)
        for (unsigned k = 0; k <= 9; ++k) {
            CHECK(inner_sum(j, k) == inner_sum(k, j));
            CHECK(inner_sum(j, k) == inner_sum_reference(j, k));
        }
}

TEST_CASE("Legendre moments")
{
    for (unsigned k = 0; k <= 8; ++k) {
        const auto m = legendre_moments(k, 6);
        REQUIRE(m.size() == 7);
        for (unsigned p = 0; p <= 6; ++p) {
            // int_0^1 y^(p+2) P_k(1-2y) dy
            std::vector<BigInt> poly(p + 3, BigInt(0));
            poly[p + 2] = 1;
            std::vector<BigInt> prod(poly.size() + k, BigInt(0));
            for (std::size_t a = 0; a < poly.size(); ++a)
                for (unsigned b = 0; b <= k; ++b)
                    prod[a + b] += poly[a] * shifted_legendre(k).coeffs[b];
            CHECK(m[p] == integrate_unit(prod));
        }
    }
}

TEST_CASE("partial sums at small N")
{
    CHECK(partial_sum(Manifold::S2xS2, 0) == ExactValue(q(121, 18), q(-160, 18)));
    const ExactValue s1 = partial_sum(Manifold::S2xS2, 1);
    CHECK(s1 == ExactValue(q(4777, 1260), q(-208, 45)));
    const ExactValue expansion =
        ExactValue::rational(q(2, 3)) -
        (f_tilde(0, 0) * q(53) - f_tilde(1, 0) * q(57) - f_tilde(0, 1) * q(57) +
         f_tilde(1, 1) * q(72)) *
            q(12, 56);
    CHECK(s1 == expansion);
}

TEST_CASE("kernel agrees with the serial reference")
{
    for (Manifold m : kAllManifolds)
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(partial_sum(m, n) == partial_sum_reference(m, n));
}

TEST_CASE("thread count does not change the partial sum")
{
    const ExactValue ref = partial_sum_reference(Manifold::G24, 8);
    for (int threads : {1, 4, 8}) {
        clear_inner_sum_cache();
        CHECK(partial_sum(Manifold::G24, 8, threads) == ref);
    }
    clear_inner_sum_cache();
    ensure_inner_sums(12, 4);
    const ExactValue warm = partial_sum(Manifold::S2xS2, 12, 1);
    clear_inner_sum_cache();
    CHECK(partial_sum(Manifold::S2xS2, 12, 8) == warm);
}

TEST_CASE("G24 weight equals skipping odd j+k and doubling")
{
    for (unsigned n = 0; n <= 10; ++n) {
        ExactValue expected = ExactValue::rational(q(17, 6));
        for (unsigned j = 0; j <= n; ++j)
            for (unsigned k = 0; k <= n; ++k) {
                if ((j + k) % 2 == 1)
                    continue;
                const Rational factor = Rational(12 * (2 * j + 1) * (2 * k + 1)) /
                                        Rational(eigenvalue(j, k));
                expected -= inner_sum(j, k) * factor * q(2);
            }
        CHECK(partial_sum(Manifold::G24, n) == expected);
    }
}

TEST_CASE("inner sum cache seeding")
{
    clear_inner_sum_cache();
    seed_inner_sum(3, 2, inner_sum_reference(2, 3));
    const auto entries = inner_sum_entries();
    REQUIRE(entries.size() == 1);
    CHECK(entries.front().first == std::make_pair(2u, 3u));
    CHECK(inner_sum(3, 2) == inner_sum_reference(3, 2));
    clear_inner_sum_cache();
}

TEST_CASE("F(N)^2")
{
    CHECK(f_bound_squared(1) == q(-1, 24 * 49) + q(1, 3 * 64) + q(1, 512));
    CHECK(f_bound_squared(1).get_d() == doctest::Approx(0.0063111).epsilon(1e-4));
    for (unsigned n = 1; n <= 200; ++n) {
        CHECK(f_bound_squared(n) > 0);
        CHECK(f_bound_squared(n + 1) < f_bound_squared(n));
    }
}

TEST_CASE("error bounds")
{
    const Rational b1 = error_bound(Manifold::S2xS2, 1);
    CHECK(b1 >= q(9286, 100000));
    CHECK(b1 <= q(9287, 100000));
    CHECK(error_bound(Manifold::S2xS2, 100) < q(209, 10000000));
    for (unsigned n : {1u, 2u, 7u, 40u, 100u}) {
        CHECK(error_bound(Manifold::RP2xRP2, n) == error_bound(Manifold::S2xS2, n) * 4);
        CHECK(error_bound(Manifold::G24, n) == error_bound(Manifold::S2xS2, n) * 2);
        const Rational s = error_bound(Manifold::S2xS2, n);
        CHECK(s * s >= source_laplacian_l2() * f_bound_squared(n));
    }
    CHECK_THROWS_AS(error_bound(Manifold::S2xS2, 0), std::domain_error);
    CHECK_THROWS_AS(parity_error_bound(Manifold::RP2xRP2, 0), std::domain_error);
}

TEST_CASE("parity bound")
{
    for (unsigned n = 1; n <= 120; ++n) {
        CHECK(parity_error_bound(Manifold::S2xS2, n) == error_bound(Manifold::S2xS2, n));
        CHECK(certified_error_bound(Manifold::RP2xRP2, n) <= error_bound(Manifold::RP2xRP2, n));
    }
    CHECK(parity_error_bound(Manifold::RP2xRP2, 100) < error_bound(Manifold::RP2xRP2, 100));
}

TEST_CASE("bounds dominate the brute-force eigenvalue tails")
{
    const double c = source_laplacian_l2().get_d();
    for (unsigned n : {1u, 2u, 3u, 5u, 10u, 20u, 40u}) {
        for (Manifold m : kAllManifolds) {
            const double tail = weighted_tail(m, n, 1500);
            const double b_f = error_bound(m, n).get_d() / 12;
            const double b_p = parity_error_bound(m, n).get_d() / 12;
            CHECK(b_f * b_f / c >= tail);
            CHECK(b_p * b_p / c >= tail);
        }
    }
}

TEST_CASE("consecutive partial sums stay within the bound")
{
    for (Manifold m : kAllManifolds) {
        ExactValue prev = partial_sum(m, 1);
        for (unsigned n = 1; n <= 30; ++n) {
            const ExactValue next = partial_sum(m, n + 1);
            const ExactValue step = next - prev;
            const RatInterval diff = eval_interval(step, ln2_digits_for(step, 30));
            const Rational b = certified_error_bound(m, n);
            CHECK(diff.lo >= -b);
            CHECK(diff.hi <= b);
            prev = next;
        }
    }
}

TEST_CASE("fast mode tracks the exact sums at small N")
{
    for (Manifold m : kAllManifolds)
        for (unsigned n : {0u, 1u, 3u, 5u})
            CHECK(partial_sum_fast(m, n) == doctest::Approx(to_double(partial_sum(m, n))).epsilon(1e-8));
}

TEST_CASE("mass_estimate at N = 1")
{
    const MassEstimate e = mass_estimate(Manifold::S2xS2, 1, 6);
    CHECK(e.n == 1);
    CHECK(e.error_bound == error_bound(Manifold::S2xS2, 1));
    CHECK(e.mass_interval == widen(e.sum_interval, e.error_bound));
    CHECK(q(4940, 10000) < e.mass_interval.lo);
    CHECK(e.mass_interval.lo < q(4950, 10000));
    CHECK(q(6800, 10000) < e.mass_interval.hi);
    CHECK(e.mass_interval.hi < q(6810, 10000));
    CHECK(RatInterval(q(-2247, 10000), q(-1632, 10000)).contains(e.t0_interval));
    CHECK(e.t0_double_interval == q(2) * e.t0_interval);
    CHECK_THROWS_AS(mass_estimate(Manifold::S2xS2, 0, 6), std::domain_error);
    CHECK_THROWS_AS(mass_estimate(Manifold::S2xS2, 1, 0), std::domain_error);

    const MassEstimate r = mass_estimate(Manifold::RP2xRP2, 1, 6);
    CHECK(r.mass_interval.contains(q(84323, 10000)));
}

TEST_CASE("all masses stay positive")
{
    for (Manifold m : kAllManifolds)
        for (unsigned n = 1; n <= 25; ++n)
            CHECK(mass_estimate(m, n, 4).mass_interval.lo > 0);
}

TEST_CASE("t0 transform")
{
    const RatInterval t = t0_from_mass(RatInterval(q(1, 2), q(1)), 1);
    CHECK(t == RatInterval(q(-2, 9), q(-1, 9)));
    CHECK(t0_from_mass(RatInterval(q(1, 2), q(1)), 2) == RatInterval(q(-4, 9), q(-2, 9)));
    CHECK_THROWS_AS(t0_from_mass(RatInterval(q(0), q(1)), 1), std::domain_error);
    CHECK_THROWS_AS(t0_from_mass(RatInterval(q(-1), q(1)), 1), std::domain_error);
}

TEST_CASE("distinctness verdicts")
{
    const RatInterval a(q(1), q(2));
    CHECK_FALSE(check_distinct_t0("same", "a", a, "a", a).proven_distinct);
    CHECK(check_distinct_t0("apart", "a", a, "b", RatInterval(q(3), q(4))).proven_distinct);
    CHECK_FALSE(check_distinct_t0("touch", "a", a, "b", RatInterval(q(2), q(4))).proven_distinct);

    const auto e1 = mass_estimate(Manifold::S2xS2, 1, 6);
    const auto e2 = mass_estimate(Manifold::G24, 1, 6);
    const auto e3 = mass_estimate(Manifold::RP2xRP2, 1, 6);
    const auto rows = distinctness_table(e1, e2, e3);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows)
        CHECK(r.proven_distinct);
    CHECK(rows[0].right == e1.t0_interval);
}

}
