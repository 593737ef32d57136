// SPDX-License-Identifier: Apache-2.0

#include "certmass/integrals.hpp"

#include "certmass/basis.hpp"
#include "certmass/memo.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace certmass {

namespace {

Rational sign_power(unsigned p)
{
    return p % 2 == 0 ? Rational(1) : Rational(-1);
}

ExactValue ln2_minus_alt_harmonic(unsigned p)
{
    return {-alt_harmonic(p), Rational(1)};
}

BigInt pow2(unsigned e)
{
    BigInt v = 1;
    v <<= e;
    return v;
}

using MomentKey = std::pair<unsigned, unsigned>;

WriteOnceCache<MomentKey, ExactValue>& moment_table()
{
    static WriteOnceCache<MomentKey, ExactValue> table;
    return table;
}

}  // namespace

ExactValue triangle_integral_base(unsigned p, unsigned q)
{
    return ln2_minus_alt_harmonic(p) * (sign_power(p) / Rational(p + q + 1));
}

ExactValue triangle_integral(unsigned p, unsigned q, unsigned n)
{
    if (n == 0)
        throw std::domain_error("triangle_integral needs n >= 1");
    if (n > 1 && p + q + 2 <= n)
        throw std::domain_error("divergent triangle integral I(" + std::to_string(p) + "," +
                                std::to_string(q) + ";" + std::to_string(n) + ")");

    // Unrolled recursion; the condition p + q > n - 2 is preserved by each step.
    ExactValue acc;
    Rational scale = 1;
    for (;;) {
        if (n == 1) {
            acc += triangle_integral_base(p, q) * scale;
            return acc;
        }
        const BigInt den = pow2(n - 1) * (n - 1) * (p + q + 2 - n);
        if (p == 0) {
            // Both boundary terms survive: int_0^y (x+y)^-n dx = (1 - 2^(1-n)) y^(1-n) / (n-1).
            acc += ExactValue::rational(scale * Rational(pow2(n - 1) - 1) / Rational(den));
            return acc;
        }
        acc += ExactValue::rational(-scale / Rational(den));
        scale *= make_rational(p, n - 1);
        --p;
        --n;
    }
}

ExactValue triangle_integral_5(unsigned p, unsigned q)
{
    if (p >= 4) {
        const long pp = p;
        const Rational den(p + q - 3);
        const Rational poly(4 * pp * pp * pp - 10 * pp * pp + 8 * pp + 3);
        const Rational falling(pp * (pp - 1) * (pp - 2) * (pp - 3));
        return ExactValue::rational(-poly / (192 * den)) +
               ln2_minus_alt_harmonic(p - 4) * (falling * sign_power(p) / (24 * den));
    }
    if (p == 3 && q >= 1)
        return ExactValue::rational(make_rational(1, 64L * q));
    if (p == 2 && q >= 2)
        return ExactValue::rational(make_rational(5, 192L * (q - 1)));
    throw std::domain_error("no closed form for I(" + std::to_string(p) + "," +
                            std::to_string(q) + ";5)");
}

ExactValue half_moment_numerator(unsigned p)
{
    const long pp = p;
    const Rational poly = make_rational(-109, 2) - 68 * pp - 33 * pp * pp - 6 * pp * pp * pp;
    const Rational log_coeff = 4 * sign_power(p) * Rational((pp + 1) * (pp + 2)) *
                               Rational(3 * pp * pp + 9 * pp + 10);
    ExactValue v = ExactValue::rational(poly) + ln2_minus_alt_harmonic(p) * log_coeff;
    v *= make_rational(1, 18);
    return v;
}

const ExactValue& f_tilde(unsigned p, unsigned q)
{
    return moment_table().get({p, q}, [p, q] {
        ExactValue v = half_moment_numerator(p) + half_moment_numerator(q);
        v *= make_rational(1, p + q + 3);
        return v;
    });
}

ExactValue f_tilde_assembled(unsigned p, unsigned q)
{
    const auto triangle_part = [](unsigned a, unsigned b) {
        ExactValue v = triangle_integral(a + 4, b + 2, 5) * Rational(5) -
                       triangle_integral(a + 3, b + 3, 5) * Rational(8) +
                       triangle_integral(a + 2, b + 4, 5) * Rational(5);
        v *= make_rational(8, 9);
        return v;
    };
    return triangle_part(p, q) + triangle_part(q, p);
}

ExactValue integrate_square(const XYRational& u)
{
    const unsigned k = u.sum_power();
    ExactValue total;
    for (const auto& [e, c] : u.numerator().terms()) {
        const auto [a, b] = e;
        if (k == 0) {
            total += ExactValue::rational(c / Rational((a + 1) * (b + 1)));
            continue;
        }
        if (a + b + 2 <= k)
            throw std::domain_error("integrand is not integrable on the unit square");
        total += (triangle_integral(a, b, k) + triangle_integral(b, a, k)) * c;
    }
    return total;
}

void clear_integral_caches()
{
    moment_table().clear();
}

void seed_f_tilde(unsigned p, unsigned q, const ExactValue& value)
{
    moment_table().insert({p, q}, value);
}

std::size_t f_tilde_cache_size()
{
    return moment_table().size();
}

std::vector<std::pair<std::pair<unsigned, unsigned>, ExactValue>> f_tilde_entries()
{
    return moment_table().snapshot();
}

namespace {

constexpr unsigned kRulePoints = 10;

struct Rule1D {
    std::array<double, kRulePoints> nodes{};    // on [0, 1]
    std::array<double, kRulePoints> weights{};  // sum to 1
};

const Rule1D& unit_rule()
{
    static const Rule1D rule = [] {
        using gauss = boost::math::quadrature::gauss<double, kRulePoints>;
        const auto& abscissa = gauss::abscissa();
        const auto& weights = gauss::weights();
        Rule1D r;
        unsigned i = 0;
        for (std::size_t m = 0; m < abscissa.size(); ++m) {
            r.nodes[i] = 0.5 * (1 - abscissa[m]);
            r.weights[i++] = 0.5 * weights[m];
            r.nodes[i] = 0.5 * (1 + abscissa[m]);
            r.weights[i++] = 0.5 * weights[m];
        }
        return r;
    }();
    return rule;
}

struct Panel {
    double x0, y0, h;
    double value;  // four-child estimate
    double error;  // |children - parent rule|

    bool operator<(const Panel& o) const { return error < o.error; }
};

double apply_rule(const std::function<double(double, double)>& u, double x0, double y0, double h)
{
    const Rule1D& r = unit_rule();
    double sum = 0;
    for (unsigned i = 0; i < kRulePoints; ++i) {
        double row = 0;
        for (unsigned j = 0; j < kRulePoints; ++j)
            row += r.weights[j] * u(x0 + h * r.nodes[i], y0 + h * r.nodes[j]);
        sum += r.weights[i] * row;
    }
    return sum * h * h;
}

Panel make_panel(const std::function<double(double, double)>& u, double x0, double y0, double h,
                 double parent_rule)
{
    const double half = h / 2;
    const double children = apply_rule(u, x0, y0, half) + apply_rule(u, x0 + half, y0, half) +
                            apply_rule(u, x0, y0 + half, half) +
                            apply_rule(u, x0 + half, y0 + half, half);
    return {x0, y0, h, children, std::abs(children - parent_rule)};
}

}  // namespace

QuadResult quad_square(const std::function<double(double, double)>& u, double tol,
                       std::size_t max_panels)
{
    if (!(tol > 0))
        throw std::invalid_argument("quad_square needs a positive tolerance");

    std::priority_queue<Panel> work;
    work.push(make_panel(u, 0, 0, 1, apply_rule(u, 0, 0, 1)));
    double total_error = work.top().error;

    while (total_error > tol && work.size() < max_panels) {
        const Panel worst = work.top();
        work.pop();
        total_error -= worst.error;
        const double half = worst.h / 2;
        for (const auto& [dx, dy] : {std::pair{0.0, 0.0}, {half, 0.0}, {0.0, half}, {half, half}}) {
            const double x0 = worst.x0 + dx;
            const double y0 = worst.y0 + dy;
            Panel child = make_panel(u, x0, y0, half, apply_rule(u, x0, y0, half));
            total_error += child.error;
            work.push(child);
        }
    }

    QuadResult result;
    result.panels = work.size();
    long double value = 0;
    long double error = 0;
    while (!work.empty()) {
        value += work.top().value;
        error += work.top().error;
        work.pop();
    }
    result.value = static_cast<double>(value);
    result.error_estimate = static_cast<double>(error);
    result.converged = result.error_estimate <= tol;
    return result;
}

}  // namespace certmass
