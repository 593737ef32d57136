// SPDX-License-Identifier: Apache-2.0

#include "certmass/basis.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace certmass;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<BigInt> product(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("binomial")
{
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    for (unsigned n = 1; n <= 80; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(400, 200) > BigInt("1" + std::string(100, '0')));
}

TEST_CASE("shifted Legendre coefficients")
{
    CHECK(shifted_legendre(0).coeffs == std::vector<BigInt>{1});
    CHECK(shifted_legendre(1).coeffs == std::vector<BigInt>{1, -2});
    CHECK(shifted_legendre(2).coeffs == std::vector<BigInt>{1, -6, 6});
    CHECK(shifted_legendre(3).j == 3);
    // P2(z) = (3z^2 - 1)/2 at z = 1 - 2x, x = 1/3.
    const Rational z = q(1, 3);
    CHECK(shifted_legendre(2)(q(1, 3)) == (q(3) * z * z - 1) / 2);
}

TEST_CASE("endpoint values for j <= 50")
{
    for (unsigned j = 0; j <= 50; ++j) {
        const auto& p = shifted_legendre(j);
        CHECK(p(q(0)) == 1);
        BigInt sum = 0;
        for (const auto& c : p.coeffs)
            sum += c;
        CHECK(sum == (j % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("orthogonality for j, k <= 15")
{
    for (unsigned j = 0; j <= 15; ++j)
        for (unsigned k = 0; k <= 15; ++k) {
            const Rational ip = integrate_unit(product(shifted_legendre(j).coeffs,
                                                       shifted_legendre(k).coeffs));
            CHECK(ip == (j == k ? q(1, 2 * j + 1) : q(0)));
        }
}

TEST_CASE("BiPoly views of the shifted Legendre polynomials")
{
    const BiPoly px = shifted_legendre_x(2);
    CHECK(px.coeff(0, 0) == 1);
    CHECK(px.coeff(1, 0) == -6);
    CHECK(px.coeff(2, 0) == 6);
    const BiPoly py = shifted_legendre_y(2);
    CHECK(py.coeff(0, 2) == 6);
    CHECK(px.evaluate(q(1, 5), q(0)) == py.evaluate(q(0), q(1, 5)));
}

TEST_CASE("alternating harmonic numbers")
{
    CHECK(alt_harmonic(0) == 0);
    CHECK(alt_harmonic(1) == 1);
    CHECK(alt_harmonic(3) == q(5, 6));
    for (unsigned p = 1; p <= 60; ++p)
        CHECK(alt_harmonic(p) - alt_harmonic(p - 1) == q(p % 2 ? 1 : -1, p));
}

TEST_CASE("c_coeff")
{
    CHECK(c_coeff(0, 0, 0, 0) == 1);
    CHECK(c_coeff(1, 1, 1, 1) == 4);
    CHECK(c_coeff(1, 0, 1, 0) == -2);
    CHECK_THROWS_AS(c_coeff(1, 1, 2, 0), std::domain_error);
    CHECK_THROWS_AS(c_coeff(1, 1, 0, 2), std::domain_error);
    for (unsigned j = 0; j <= 8; ++j)
        for (unsigned k = 0; k <= 8; ++k)
            for (unsigned p = 0; p <= j; ++p)
                for (unsigned qq = 0; qq <= k; ++qq) {
                    CHECK(c_coeff(j, k, p, qq) == c_coeff(k, j, qq, p));
                    CHECK(c_coeff(j, k, p, qq) ==
                          shifted_legendre(j).coeffs[p] * shifted_legendre(k).coeffs[qq]);
                }
}

TEST_CASE("integrate_unit")
{
    CHECK(integrate_unit({}) == 0);
    CHECK(integrate_unit({1}) == 1);
    CHECK(integrate_unit({0, 0, 3}) == 1);
    CHECK(integrate_unit({1, -2}) == 0);
}

TEST_CASE("caches can be dropped and rebuilt")
{
    const auto before = shifted_legendre(7).coeffs;
    const Rational a = alt_harmonic(9);
    clear_basis_caches();
    CHECK(shifted_legendre(7).coeffs == before);
    CHECK(alt_harmonic(9) == a);
}

}
