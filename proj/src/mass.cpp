// SPDX-License-Identifier: Apache-2.0

#include "certmass/mass.hpp"

#include "certmass/basis.hpp"
#include "certmass/integrals.hpp"
#include "certmass/memo.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace certmass {

std::string_view display_name(Manifold m)
{
    switch (m) {
    case Manifold::S2xS2: return "S2xS2";
    case Manifold::G24: return "G24";
    case Manifold::RP2xRP2: return "RP2xRP2";
    }
    return "?";
}

std::string_view cli_name(Manifold m)
{
    switch (m) {
    case Manifold::S2xS2: return "s2xs2";
    case Manifold::G24: return "g24";
    case Manifold::RP2xRP2: return "rp2xrp2";
    }
    return "?";
}

std::optional<Manifold> parse_manifold(std::string_view name)
{
    for (Manifold m : kAllManifolds)
        if (name == cli_name(m) || name == display_name(m))
            return m;
    return std::nullopt;
}

Rational constant_term(Manifold m)
{
    switch (m) {
    case Manifold::S2xS2: return make_rational(2, 3);
    case Manifold::G24: return make_rational(17, 6);
    case Manifold::RP2xRP2: return make_rational(53, 6);
    }
    throw std::logic_error("unknown manifold");
}

int weight(Manifold m, unsigned j, unsigned k)
{
    const int sj = j % 2 == 0 ? 1 : -1;
    const int sk = k % 2 == 0 ? 1 : -1;
    switch (m) {
    case Manifold::S2xS2: return 1;
    case Manifold::G24: return 1 + sj * sk;
    case Manifold::RP2xRP2: return 1 + sj + sk + sj * sk;
    }
    throw std::logic_error("unknown manifold");
}

unsigned error_multiplier(Manifold m)
{
    switch (m) {
    case Manifold::S2xS2: return 1;
    case Manifold::G24: return 2;
    case Manifold::RP2xRP2: return 4;
    }
    throw std::logic_error("unknown manifold");
}

std::uint64_t eigenvalue(unsigned j, unsigned k)
{
    const std::uint64_t jj = j;
    const std::uint64_t kk = k;
    return 6 * (jj * (jj + 1) + kk * (kk + 1)) + 4;
}

Rational source_laplacian_l2()
{
    return make_rational(61547, 45045);
}

namespace {

using GridKey = std::pair<unsigned, unsigned>;

WriteOnceCache<GridKey, ExactValue>& inner_table()
{
    static WriteOnceCache<GridKey, ExactValue> table;
    return table;
}

GridKey ordered(unsigned j, unsigned k)
{
    return j <= k ? GridKey{j, k} : GridKey{k, j};
}

int resolve_threads(int threads)
{
    return threads > 0 ? threads : omp_get_max_threads();
}

// U(j,k) = sum_{p<=j} c_j^p h(p) M_k(p)
ExactValue half_inner(unsigned j, const std::vector<Rational>& moments_k,
                      const std::vector<ExactValue>& numerators)
{
    const auto& leg = shifted_legendre(j).coeffs;
    ExactValue acc;
    Rational t;
    for (unsigned p = 0; p <= j; ++p) {
        t = moments_k[p] * leg[p];
        acc.a += t * numerators[p].a;
        acc.b += t * numerators[p].b;
    }
    return acc;
}

std::vector<ExactValue> half_numerators(unsigned max_p)
{
    std::vector<ExactValue> out(max_p + 1);
    for (unsigned p = 0; p <= max_p; ++p)
        out[p] = half_moment_numerator(p);
    return out;
}

void warm_basis(unsigned n)
{
    for (unsigned j = 0; j <= n; ++j)
        shifted_legendre(j);
    for (unsigned p = 0; p <= n; ++p)
        alt_harmonic(p);
}

}  // namespace

std::vector<Rational> legendre_moments(unsigned k, unsigned max_p)
{
    const auto& leg = shifted_legendre(k).coeffs;
    std::vector<Rational> out(max_p + 1);
    for (unsigned p = 0; p <= max_p; ++p) {
        Rational sum = 0;
        for (unsigned q = 0; q <= k; ++q)
            sum += make_rational(leg[q], BigInt(p + q + 3));
        out[p] = std::move(sum);
    }
    return out;
}

ExactValue inner_sum_reference(unsigned j, unsigned k)
{
    ExactValue acc;
    for (unsigned p = 0; p <= j; ++p)
        for (unsigned q = 0; q <= k; ++q)
            acc += f_tilde(p, q) * Rational(c_coeff(j, k, p, q));
    return acc;
}

const ExactValue& inner_sum(unsigned j, unsigned k)
{
    const GridKey key = ordered(j, k);
    return inner_table().get(key, [key] {
        const auto [lo, hi] = key;
        const auto numerators = half_numerators(hi);
        return half_inner(lo, legendre_moments(hi, lo), numerators) +
               half_inner(hi, legendre_moments(lo, hi), numerators);
    });
}

void ensure_inner_sums(unsigned n, int threads)
{
    std::vector<GridKey> missing;
    for (unsigned j = 0; j <= n; ++j)
        for (unsigned k = j; k <= n; ++k)
            if (inner_table().find({j, k}) == nullptr)
                missing.emplace_back(j, k);
    if (missing.empty())
        return;

    warm_basis(n);
    const int nthreads = resolve_threads(threads);
    const auto numerators = half_numerators(n);

    std::vector<std::vector<Rational>> moments(n + 1);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (int k = 0; k <= static_cast<int>(n); ++k)
        moments[k] = legendre_moments(static_cast<unsigned>(k), n);

    std::vector<ExactValue> values(missing.size());
    const long count = static_cast<long>(missing.size());
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (long idx = 0; idx < count; ++idx) {
        const auto [j, k] = missing[idx];
        values[idx] = half_inner(j, moments[k], numerators);
        if (j != k)
            values[idx] += half_inner(k, moments[j], numerators);
        else
            values[idx] *= Rational(2);
    }

    for (std::size_t idx = 0; idx < missing.size(); ++idx)
        inner_table().insert(missing[idx], std::move(values[idx]));
}

void seed_inner_sum(unsigned j, unsigned k, const ExactValue& value)
{
    inner_table().insert(ordered(j, k), value);
}

std::vector<std::pair<std::pair<unsigned, unsigned>, ExactValue>> inner_sum_entries()
{
    return inner_table().snapshot();
}

void clear_inner_sum_cache()
{
    inner_table().clear();
}

namespace {

Rational series_factor(Manifold m, unsigned j, unsigned k)
{
    const long w = weight(m, j, k);
    const BigInt num = BigInt(12 * w) * (2 * j + 1) * (2 * k + 1);
    return make_rational(num, BigInt(static_cast<unsigned long>(eigenvalue(j, k))));
}

}  // namespace

ExactValue partial_sum(Manifold m, unsigned n, int threads)
{
    const int nthreads = resolve_threads(threads);
    ensure_inner_sums(n, nthreads);

    std::vector<ExactValue> rows(n + 1);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (int j = 0; j <= static_cast<int>(n); ++j) {
        ExactValue acc;
        for (unsigned k = 0; k <= n; ++k) {
            if (weight(m, static_cast<unsigned>(j), k) == 0)
                continue;
            acc += inner_sum(static_cast<unsigned>(j), k) *
                   series_factor(m, static_cast<unsigned>(j), k);
        }
        rows[j] = std::move(acc);
    }

    ExactValue total = ExactValue::rational(constant_term(m));
    for (const auto& row : rows)
        total -= row;
    return total;
}

ExactValue partial_sum_reference(Manifold m, unsigned n)
{
    ExactValue total = ExactValue::rational(constant_term(m));
    for (unsigned j = 0; j <= n; ++j)
        for (unsigned k = 0; k <= n; ++k)
            if (weight(m, j, k) != 0)
                total -= inner_sum_reference(j, k) * series_factor(m, j, k);
    return total;
}

double partial_sum_fast(Manifold m, unsigned n)
{
    constexpr double kLn2 = 0.693147180559945309417232121458;
    std::vector<double> alt(n + 1, 0.0);
    for (unsigned p = 1; p <= n; ++p)
        alt[p] = alt[p - 1] + (p % 2 == 1 ? 1.0 : -1.0) / p;
    std::vector<double> h(n + 1);
    for (unsigned p = 0; p <= n; ++p) {
        const double x = p;
        const double sign = p % 2 == 0 ? 1.0 : -1.0;
        h[p] = (-54.5 - 68 * x - 33 * x * x - 6 * x * x * x +
                4 * sign * (x + 1) * (x + 2) * (3 * x * x + 9 * x + 10) * (kLn2 - alt[p])) / 18;
    }
    std::vector<std::vector<double>> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        c[j].resize(j + 1);
        for (unsigned p = 0; p <= j; ++p)
            c[j][p] = shifted_legendre(j).coeffs[p].get_d();
    }

    double total = constant_term(m).get_d();
    for (unsigned j = 0; j <= n; ++j)
        for (unsigned k = 0; k <= n; ++k) {
            const int w = weight(m, j, k);
            if (w == 0)
                continue;
            double inner = 0;
            for (unsigned p = 0; p <= j; ++p)
                for (unsigned q = 0; q <= k; ++q)
                    inner += c[j][p] * c[k][q] * (h[p] + h[q]) / (p + q + 3);
            total -= 12.0 * w * (2 * j + 1) * (2 * k + 1) / static_cast<double>(eigenvalue(j, k)) *
                     inner;
        }
    return total;
}

Rational f_bound_squared(unsigned n)
{
    const BigInt nn = n;
    const BigInt a = 3 * nn * nn + 3 * nn + 1;
    const BigInt b = a + 1;
    return -make_rational(BigInt(1), 24 * a * a) + make_rational(BigInt(1), 3 * b * b) +
           make_rational(BigInt(1), b * b * b);
}

Rational error_bound(Manifold m, unsigned n)
{
    if (n == 0)
        throw std::domain_error("truncation error bound needs N >= 1");
    return Rational(error_multiplier(m)) * sqrt_upper(source_laplacian_l2() * f_bound_squared(n));
}

Rational parity_error_bound(Manifold m, unsigned n)
{
    if (m != Manifold::RP2xRP2)
        return error_bound(m, n);
    if (n == 0)
        throw std::domain_error("truncation error bound needs N >= 1");

    // Tail of sum w(j,k)^2 (2j+1)(2k+1) / lambda^4 over (j,k) outside [0,N]^2,
    // where w = 4 exactly when j and k are both even. With g(j,k) the summand
    // without w^2, u = j(j+1), v = k(k+1):
    //   sum over even j >= e of g  <= 1/2 int_{e-2}^inf g dj
    // and the closed forms
    //   both  = int_M^inf int_M^inf g        = 1/216 / (12V + 4)^2
    //   strip = int_0^N   int_M^inf g        = 1/216 (1/(6V+4)^2 - 1/(6U+6V+4)^2)
    //   edge  = int_M^inf g(0, k) dk         = 1/18  / (6V + 4)^3
    // with M = e - 2, e the first even index above N, V = M(M+1), U = N(N+1).
    // The tail is then at most 16 (both/4 + 2 (edge/2 + strip/4)), and the
    // mass error is 12 sqrt(61547/45045 * tail).
    const unsigned first_even = n % 2 == 0 ? n + 2 : n + 1;
    const BigInt mm = first_even - 2;
    const BigInt v = mm * (mm + 1);
    const BigInt u = BigInt(n) * (n + 1);
    const BigInt s4 = 6 * v + 4;
    const BigInt d4 = 12 * v + 4;
    const BigInt full = 6 * u + 6 * v + 4;

    const Rational both = make_rational(BigInt(1), 216 * d4 * d4);
    const Rational strip = make_rational(BigInt(1), 216 * s4 * s4) -
                           make_rational(BigInt(1), 216 * full * full);
    const Rational edge = make_rational(BigInt(1), 18 * s4 * s4 * s4);
    const Rational tail = 4 * both + 16 * edge + 8 * strip;
    return sqrt_upper(source_laplacian_l2() * 144 * tail);
}

Rational certified_error_bound(Manifold m, unsigned n)
{
    Rational corner = error_bound(m, n);
    Rational parity = parity_error_bound(m, n);
    return parity < corner ? parity : corner;
}

RatInterval t0_from_mass(const RatInterval& mass, unsigned multiple)
{
    if (sgn(mass.lo) <= 0)
        throw std::domain_error("t0 needs a positive mass interval");
    const Rational scale(multiple);
    // m -> -c/(9m) is increasing for m > 0
    return {-scale / (9 * mass.lo), -scale / (9 * mass.hi)};
}

MassEstimate mass_estimate(Manifold m, unsigned n, int digits, int threads)
{
    if (n == 0)
        throw std::domain_error("mass_estimate needs N >= 1");
    if (digits < 1)
        throw std::domain_error("mass_estimate needs digits >= 1");

    MassEstimate est;
    est.manifold = m;
    est.n = n;
    est.digits = digits;
    est.partial_sum = partial_sum(m, n, threads);
    est.error_bound = certified_error_bound(m, n);
    est.sum_interval = eval_interval(est.partial_sum, ln2_digits_for(est.partial_sum, digits + 2));
    est.mass_interval = widen(est.sum_interval, est.error_bound);
    if (sgn(est.mass_interval.lo) <= 0)
        throw std::runtime_error("mass interval is not positive; t0 unavailable at this N");
    est.t0_interval = t0_from_mass(est.mass_interval, 1);
    est.t0_double_interval = t0_from_mass(est.mass_interval, 2);
    return est;
}

T0Comparison check_distinct_t0(std::string label, std::string left_name, const RatInterval& left,
                               std::string right_name, const RatInterval& right)
{
    T0Comparison c;
    c.label = std::move(label);
    c.left_name = std::move(left_name);
    c.right_name = std::move(right_name);
    c.left = left;
    c.right = right;
    c.proven_distinct = left.disjoint_from(right);
    return c;
}

std::vector<T0Comparison> distinctness_table(const MassEstimate& s2xs2, const MassEstimate& g24,
                                             const MassEstimate& rp2xrp2)
{
    const RatInterval third = RatInterval::point(make_rational(-1, 3));
    return {
        check_distinct_t0("S2xS2 # CP2bar", "-1/3", third, "-(9 m1)^-1", s2xs2.t0_interval),
        check_distinct_t0("G24 # CP2bar", "-1/3", third, "-(9 m2)^-1", g24.t0_interval),
        check_distinct_t0("G24 # S2xS2", "-2(9 m1)^-1", s2xs2.t0_double_interval, "-2(9 m2)^-1",
                          g24.t0_double_interval),
        check_distinct_t0("G24 # RP2xRP2", "-2(9 m3)^-1", rp2xrp2.t0_double_interval,
                          "-2(9 m2)^-1", g24.t0_double_interval),
        check_distinct_t0("RP2xRP2 # CP2bar", "-1/3", third, "-(9 m3)^-1", rp2xrp2.t0_interval),
        check_distinct_t0("RP2xRP2 # S2xS2", "-2(9 m1)^-1", s2xs2.t0_double_interval,
                          "-2(9 m3)^-1", rp2xrp2.t0_double_interval),
    };
}

}  // namespace certmass
