// SPDX-License-Identifier: Apache-2.0

#include "certmass/integrals.hpp"
#include "certmass/xyfunc.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace certmass;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

ExactValue ev(Rational a, Rational b = 0) { return {std::move(a), std::move(b)}; }

}  // namespace

TEST_SUITE("integrals") {

TEST_CASE("I(p,q;1) base formula")
{
    CHECK(triangle_integral_base(0, 0) == ExactValue::ln2());
    CHECK(triangle_integral_base(0, 5) == ev(q(0), q(1, 6)));
    CHECK(triangle_integral_base(1, 0) == ev(q(1, 2), q(-1, 2)));
    CHECK(to_double(triangle_integral_base(1, 0)) == doctest::Approx(0.15343).epsilon(1e-4));
}

TEST_CASE("recursion agrees with the base case at n = 1")
{
    for (unsigned p = 0; p <= 10; ++p)
        for (unsigned qq = 0; qq <= 10; ++qq)
            CHECK(triangle_integral(p, qq, 1) == triangle_integral_base(p, qq));
}

TEST_CASE("recursion examples")
{
    CHECK(triangle_integral(3, 1, 5) == ev(q(1, 64)));
    CHECK(triangle_integral(2, 3, 5) == ev(q(5, 384)));
    CHECK(triangle_integral(3, 2, 5) == ev(q(1, 128)));
    CHECK(triangle_integral(2, 4, 5) == ev(q(5, 576)));
}

TEST_CASE("p = 0 keeps the boundary term")
{
    // int_0^1 int_0^1 y^q / (x+y)^n over the triangle x < y, by hand.
    CHECK(triangle_integral(0, 1, 2) == ev(q(1, 2)));
    CHECK(triangle_integral(0, 3, 4) == ev(q(7, 24)));
    CHECK(triangle_integral(1, 1, 3) == ev(q(1, 8)));
}

TEST_CASE("recursion domain errors")
{
    CHECK_THROWS_AS(triangle_integral(0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(triangle_integral(0, 0, 3), std::domain_error);
    CHECK_THROWS_AS(triangle_integral(1, 1, 4), std::domain_error);
    CHECK_NOTHROW(triangle_integral(1, 2, 4));
}

TEST_CASE("n = 5 closed forms")
{
    for (unsigned p = 2; p <= 12; ++p)
        for (unsigned qq = 0; qq <= 12; ++qq) {
            const bool covered = p >= 4 || (p == 3 && qq >= 1) || (p == 2 && qq >= 2);
            if (covered)
                CHECK(triangle_integral_5(p, qq) == triangle_integral(p, qq, 5));
            else
                CHECK_THROWS_AS(triangle_integral_5(p, qq), std::domain_error);
        }
    CHECK_THROWS_AS(triangle_integral_5(1, 5), std::domain_error);
    CHECK(triangle_integral_5(3, 2) == ev(q(1, 128)));
    CHECK(triangle_integral_5(2, 4) == ev(q(5, 576)));
}

TEST_CASE("f~ examples")
{
    CHECK(f_tilde(0, 0) == ev(q(-109, 54), q(160, 54)));
    CHECK(f_tilde(1, 0) == ev(q(39, 9), q(-56, 9)));
    CHECK(to_double(f_tilde(0, 0)) == doctest::Approx(0.035250).epsilon(1e-4));
    CHECK(to_double(f_tilde(1, 0)) == doctest::Approx(0.020415).epsilon(1e-4));
}

TEST_CASE("f~ symmetry and the two evaluation paths")
{
    for (unsigned p = 0; p <= 12; ++p)
        for (unsigned qq = 0; qq <= 12; ++qq) {
            CHECK(f_tilde(p, qq) == f_tilde(qq, p));
            CHECK(f_tilde(p, qq) == f_tilde_assembled(p, qq));
        }
}

TEST_CASE("half moment at p = 0")
{
    // J(0,q) = (-109/2 + 80 ln2) / (18 (q+3))
    for (unsigned qq = 0; qq <= 6; ++qq) {
        ExactValue j = half_moment_numerator(0);
        j *= q(1, qq + 3);
        CHECK(j == ev(q(-109, 36 * (qq + 3)), q(80, 18 * (qq + 3))));
    }
}

TEST_CASE("integrate_square")
{
    CHECK(integrate_square(XYRational(q(1))) == ev(q(1)));
    CHECK(integrate_square(XYRational(BiPoly::x() * BiPoly::y())) == ev(q(1, 4)));
    CHECK(integrate_square(green_source()) == f_tilde(0, 0));
    const XYRational bf = box_xy(green_source());
    CHECK(integrate_square(bf * bf) == ev(q(61547, 45045)));
    CHECK_THROWS_AS(integrate_square(XYRational(BiPoly(q(1)), 3)), std::domain_error);
}

TEST_CASE("integrate_square agrees with f~ on monomial moments")
{
    for (unsigned p = 0; p <= 4; ++p)
        for (unsigned qq = 0; qq <= 4; ++qq)
            CHECK(integrate_square(green_source() * XYRational(BiPoly::monomial(p, qq))) ==
                  f_tilde(p, qq));
}

TEST_CASE("quad_square")
{
    const QuadResult xy = quad_square([](double x, double y) { return x * y; }, 1e-12);
    CHECK(xy.converged);
    CHECK(xy.value == doctest::Approx(0.25).epsilon(1e-12));

    const QuadResult f = quad_square(as_function(green_source()), 1e-9);
    CHECK(f.converged);
    CHECK(std::abs(f.value - to_double(f_tilde(0, 0))) <= 1e-8);

    const XYRational bf = box_xy(green_source());
    const QuadResult l2 = quad_square(as_function(bf * bf), 1e-7);
    CHECK(l2.converged);
    CHECK(std::abs(l2.value - 61547.0 / 45045.0) <= 1e-5);

    for (unsigned p = 0; p <= 6; ++p)
        for (unsigned qq = 0; qq <= 6; ++qq) {
            const auto r = quad_square(
                as_function(green_source() * XYRational(BiPoly::monomial(p, qq))), 1e-8);
            CHECK(std::abs(r.value - to_double(f_tilde(p, qq))) <= 1e-6);
        }
}

TEST_CASE("quad_square reports a blown budget")
{
    const QuadResult r = quad_square(
        [](double x, double y) { return 1.0 / std::sqrt(x * x + y * y + 1e-300); }, 1e-14, 50);
    CHECK_FALSE(r.converged);
    CHECK(r.panels <= 50 + 4);
}

TEST_CASE("moment cache")
{
    clear_integral_caches();
    CHECK(f_tilde_cache_size() == 0);
    f_tilde(2, 3);
    CHECK(f_tilde_cache_size() == 1);
    seed_f_tilde(4, 4, f_tilde_assembled(4, 4));
    CHECK(f_tilde_cache_size() == 2);
    CHECK(f_tilde_entries().size() == 2);
    clear_integral_caches();
}

}
