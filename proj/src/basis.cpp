// SPDX-License-Identifier: Apache-2.0

#include "certmass/basis.hpp"

#include "certmass/memo.hpp"

#include <stdexcept>

namespace certmass {

namespace {

WriteOnceCache<unsigned, std::vector<BigInt>>& pascal_rows()
{
    static WriteOnceCache<unsigned, std::vector<BigInt>> rows;
    return rows;
}

WriteOnceCache<unsigned, ShiftedLegendre>& legendre_table()
{
    static WriteOnceCache<unsigned, ShiftedLegendre> table;
    return table;
}

WriteOnceCache<unsigned, Rational>& alt_harmonic_table()
{
    static WriteOnceCache<unsigned, Rational> table;
    return table;
}

const std::vector<BigInt>& pascal_row(unsigned n)
{
    return pascal_rows().get(n, [n] {
        std::vector<BigInt> row(n + 1);
        row[0] = 1;
        if (n > 0) {
            const auto& prev = pascal_row(n - 1);
            for (unsigned k = 1; k < n; ++k)
                row[k] = prev[k - 1] + prev[k];
            row[n] = 1;
        }
        return row;
    });
}

const BigInt& zero()
{
    static const BigInt z = 0;
    return z;
}

}  // namespace

const BigInt& binomial(unsigned n, unsigned k)
{
    if (k > n)
        return zero();
    return pascal_row(n)[k];
}

Rational ShiftedLegendre::operator()(const Rational& x) const
{
    // Horner
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

const ShiftedLegendre& shifted_legendre(unsigned j)
{
    return legendre_table().get(j, [j] {
        ShiftedLegendre s;
        s.j = j;
        s.coeffs.resize(j + 1);
        for (unsigned p = 0; p <= j; ++p) {
            s.coeffs[p] = binomial(j, p) * binomial(j + p, p);
            if (p % 2 == 1)
                s.coeffs[p] = -s.coeffs[p];
        }
        return s;
    });
}

BiPoly shifted_legendre_x(unsigned j)
{
    BiPoly out;
    const auto& s = shifted_legendre(j);
    for (unsigned p = 0; p <= j; ++p)
        out.add_term(p, 0, Rational(s.coeffs[p]));
    return out;
}

BiPoly shifted_legendre_y(unsigned j)
{
    BiPoly out;
    const auto& s = shifted_legendre(j);
    for (unsigned p = 0; p <= j; ++p)
        out.add_term(0, p, Rational(s.coeffs[p]));
    return out;
}

const Rational& alt_harmonic(unsigned p)
{
    return alt_harmonic_table().get(p, [p]() -> Rational {
        if (p == 0)
            return Rational(0);
        const Rational step = make_rational(p % 2 == 1 ? 1 : -1, static_cast<long>(p));
        return alt_harmonic(p - 1) + step;
    });
}

BigInt c_coeff(unsigned j, unsigned k, unsigned p, unsigned q)
{
    if (p > j || q > k)
        throw std::domain_error("c_coeff requires p <= j and q <= k");
    return shifted_legendre(j).coeffs[p] * shifted_legendre(k).coeffs[q];
}

Rational integrate_unit(const std::vector<BigInt>& coeffs)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        sum += make_rational(coeffs[i], BigInt(static_cast<unsigned long>(i + 1)));
    return sum;
}

void clear_basis_caches()
{
    legendre_table().clear();
    alt_harmonic_table().clear();
    pascal_rows().clear();
}

}  // namespace certmass
