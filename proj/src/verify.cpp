// SPDX-License-Identifier: Apache-2.0

#include "certmass/verify.hpp"

#include "certmass/basis.hpp"
#include "certmass/integrals.hpp"
#include "certmass/mass.hpp"
#include "certmass/xyfunc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace certmass {

namespace {

CheckResult check(std::string suite, std::string name, bool passed, std::string detail = {})
{
    return {std::move(suite), std::move(name), passed, std::move(detail)};
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

std::vector<CheckResult> symbolic_suite()
{
    const std::string s = "symbolic";
    std::vector<CheckResult> out;

    out.push_back(check(s, "box(G_-2) == f", box_xy(green_singular_part()) == green_source()));

    bool eigen_ok = true;
    std::string eigen_detail;
    for (unsigned j = 0; j <= 10 && eigen_ok; ++j)
        for (unsigned k = 0; k <= 10 && eigen_ok; ++k) {
            const XYRational phi(shifted_legendre_x(j) * shifted_legendre_y(k));
            if (!(box_xy(phi) == phi * Rational(eigenvalue(j, k)))) {
                eigen_ok = false;
                eigen_detail = "fails at j=" + std::to_string(j) + " k=" + std::to_string(k);
            }
        }
    out.push_back(check(s, "eigenfunction identity j,k <= 10", eigen_ok, eigen_detail));

    bool ode_ok = true;
    for (unsigned j = 0; j <= 15; ++j) {
        const XYRational pj(shifted_legendre_x(j));
        ode_ok = ode_ok && box_x_only(pj) == pj * Rational(6 * j * (j + 1) + 4);
    }
    out.push_back(check(s, "Legendre ODE: 1-D part of box on P_j(1-2x), j <= 15", ode_ok));

    bool ends_ok = true;
    for (unsigned j = 0; j <= 50; ++j) {
        const auto& leg = shifted_legendre(j);
        ends_ok = ends_ok && leg(Rational(0)) == 1 && leg(Rational(1)) == (j % 2 == 0 ? 1 : -1);
    }
    out.push_back(check(s, "P_j(1) = 1 and P_j(-1) = (-1)^j for j <= 50", ends_ok));

    bool orth_ok = true;
    for (unsigned j = 0; j <= 15; ++j)
        for (unsigned k = 0; k <= 15; ++k) {
            const Rational ip =
                integrate_unit(convolve(shifted_legendre(j).coeffs, shifted_legendre(k).coeffs));
            const Rational expected = j == k ? make_rational(1, 2 * j + 1) : Rational(0);
            orth_ok = orth_ok && ip == expected;
        }
    out.push_back(check(s, "orthogonality on [0,1] for j,k <= 15", orth_ok));
    return out;
}

std::vector<CheckResult> integrals_suite(unsigned max_index)
{
    const std::string s = "integrals";
    std::vector<CheckResult> out;

    bool base_ok = true;
    for (unsigned p = 0; p <= 10; ++p)
        for (unsigned q = 0; q <= 10; ++q)
            base_ok = base_ok && triangle_integral(p, q, 1) == triangle_integral_base(p, q);
    out.push_back(check(s, "I(p,q;1) recursion == base formula, p,q <= 10", base_ok));

    bool closed_ok = true;
    std::size_t closed_cases = 0;
    for (unsigned p = 2; p <= max_index; ++p)
        for (unsigned q = 0; q <= max_index; ++q) {
            if ((p == 2 && q < 2) || (p == 3 && q < 1))
                continue;
            ++closed_cases;
            closed_ok = closed_ok && triangle_integral_5(p, q) == triangle_integral(p, q, 5);
        }
    out.push_back(check(s, "I(p,q;5) closed forms == recursion", closed_ok,
                        std::to_string(closed_cases) + " cases"));

    bool reference_ok = triangle_integral(3, 1, 5) == ExactValue::rational(make_rational(1, 64)) &&
                        triangle_integral(2, 3, 5) == ExactValue::rational(make_rational(5, 384)) &&
                        triangle_integral(3, 2, 5) == ExactValue::rational(make_rational(1, 128)) &&
                        triangle_integral(2, 4, 5) == ExactValue::rational(make_rational(5, 576));
    out.push_back(check(s, "reference values I(3,1;5), I(2,3;5), I(3,2;5), I(2,4;5)", reference_ok));

    bool dual_ok = true;
    for (unsigned p = 0; p <= max_index; ++p)
        for (unsigned q = 0; q <= max_index; ++q)
            dual_ok = dual_ok && f_tilde(p, q) == f_tilde_assembled(p, q);
    out.push_back(check(s, "f~ closed form == triangle assembly, p,q <= " + std::to_string(max_index),
                        dual_ok));
    return out;
}

std::vector<CheckResult> l2norm_suite()
{
    const XYRational box_f = box_xy(green_source());
    const ExactValue integral = integrate_square(box_f * box_f);
    std::ostringstream detail;
    detail << "int int (box f)^2 = " << to_string(integral);
    return {check("l2norm", "int int (box f)^2 == 61547/45045",
                  integral == ExactValue::rational(source_laplacian_l2()), detail.str())};
}

std::vector<CheckResult> quadrature_suite(double tol)
{
    const std::string s = "quadrature";
    std::vector<CheckResult> out;
    const XYRational f = green_source();

    double worst = 0;
    bool converged = true;
    for (unsigned p = 0; p <= 6; ++p)
        for (unsigned q = 0; q <= 6; ++q) {
            const XYRational g = f * XYRational(BiPoly::monomial(p, q));
            const QuadResult r = quad_square(as_function(g), tol / 10);
            converged = converged && r.converged;
            worst = std::max(worst, std::abs(r.value - to_double(f_tilde(p, q))));
        }
    std::ostringstream d1;
    d1 << "max deviation " << worst;
    out.push_back(check(s, "cubature vs exact f~(p,q), p,q <= 6", converged && worst <= tol, d1.str()));

    const XYRational box_f = box_xy(f);
    const QuadResult r = quad_square(as_function(box_f * box_f), 1e-6);
    const double dev = std::abs(r.value - source_laplacian_l2().get_d());
    std::ostringstream d2;
    d2 << "cubature " << r.value << ", deviation " << dev;
    out.push_back(check(s, "cubature vs 61547/45045", r.converged && dev <= 1e-5, d2.str()));
    return out;
}

std::vector<CheckResult> hand_suite()
{
    const std::string s = "hand";
    std::vector<CheckResult> out;

    const ExactValue s1 = partial_sum(Manifold::S2xS2, 1);
    out.push_back(check(s, "S_1 == 4777/1260 - 208/45 ln2",
                        s1 == ExactValue(make_rational(4777, 1260), make_rational(-208, 45)),
                        to_string(s1)));

    const Rational bound = error_bound(Manifold::S2xS2, 1);
    out.push_back(check(s, "F bound at N=1 in [0.0928, 0.0929]",
                        make_rational(928, 10000) <= bound && bound <= make_rational(929, 10000)));

    const MassEstimate est = mass_estimate(Manifold::S2xS2, 1, 6);
    const RatInterval& m = est.mass_interval;
    const bool ends_ok = make_rational(4940, 10000) < m.lo && m.lo < make_rational(4950, 10000) &&
                         make_rational(6800, 10000) < m.hi && m.hi < make_rational(6810, 10000);
    out.push_back(check(s, "m1 enclosure at N=1", ends_ok, decimal_string(m, 6)));
    out.push_back(check(s, "-1/3 excluded from -(9 m1)^-1 at N=1",
                        !est.t0_interval.contains(make_rational(-1, 3)),
                        decimal_string(est.t0_interval, 6)));
    return out;
}

}  // namespace

const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> names = {"symbolic", "integrals", "l2norm", "quadrature",
                                                   "hand"};
    return names;
}

std::vector<CheckResult> run_verify_suite(std::string_view suite, const VerifyOptions& opts)
{
    if (suite == "symbolic")
        return symbolic_suite();
    if (suite == "integrals")
        return integrals_suite(opts.max_index);
    if (suite == "l2norm")
        return l2norm_suite();
    if (suite == "quadrature")
        return quadrature_suite(opts.quadrature_tol);
    if (suite == "hand")
        return hand_suite();
    throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
}

}  // namespace certmass
