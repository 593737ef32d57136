// SPDX-License-Identifier: Apache-2.0

#include "certmass/report.hpp"

#include <iomanip>
#include <sstream>

namespace certmass {

using nlohmann::json;

json rational_json(const Rational& r)
{
    return {{"num", r.get_num().get_str(10)}, {"den", r.get_den().get_str(10)}};
}

Rational rational_from_json(const json& j)
{
    return make_rational(BigInt(j.at("num").get<std::string>(), 10),
                         BigInt(j.at("den").get<std::string>(), 10));
}

json interval_json(const RatInterval& i, int places)
{
    return {{"lo", fixed_point(floor_scaled(i.lo, places), places)},
            {"hi", fixed_point(ceil_scaled(i.hi, places), places)}};
}

namespace {

json exact_value_json(const ExactValue& v)
{
    return {{"a_num", v.a.get_num().get_str(10)},
            {"a_den", v.a.get_den().get_str(10)},
            {"b_num", v.b.get_num().get_str(10)},
            {"b_den", v.b.get_den().get_str(10)}};
}

ExactValue exact_value_from_json(const json& j)
{
    return {make_rational(BigInt(j.at("a_num").get<std::string>(), 10),
                          BigInt(j.at("a_den").get<std::string>(), 10)),
            make_rational(BigInt(j.at("b_num").get<std::string>(), 10),
                          BigInt(j.at("b_den").get<std::string>(), 10))};
}

RatInterval mass_interval_from(const ExactValue& sum, const Rational& bound, int digits)
{
    return widen(eval_interval(sum, ln2_digits_for(sum, digits + 2)), bound);
}

std::string upper_decimal(const Rational& r, int places)
{
    return fixed_point(ceil_scaled(r, places), places);
}

}  // namespace

json mass_json(const MassEstimate& est)
{
    json j;
    j["manifold"] = std::string(cli_name(est.manifold));
    j["N"] = est.n;
    j["digits"] = est.digits;
    j["mode"] = "certified";
    j["sum_rational"] = exact_value_json(est.partial_sum);
    j["sum_interval"] = interval_json(est.sum_interval, est.digits);
    j["bound"] = rational_json(est.error_bound);
    j["interval"] = interval_json(est.mass_interval, est.digits);
    j["t0"] = interval_json(est.t0_interval, est.digits);
    j["t0_double"] = interval_json(est.t0_double_interval, est.digits);
    return j;
}

json rederive_interval(const json& mass)
{
    const int digits = mass.at("digits").get<int>();
    const ExactValue sum = exact_value_from_json(mass.at("sum_rational"));
    const Rational bound = rational_from_json(mass.at("bound"));
    return interval_json(mass_interval_from(sum, bound, digits), digits);
}

std::string mass_text(const MassEstimate& est)
{
    const int d = est.digits;
    std::ostringstream out;
    out << "manifold     " << display_name(est.manifold) << "\n"
        << "N            " << est.n << "\n"
        << "partial sum  " << to_string(est.partial_sum) << "\n"
        << "             ~ " << decimal_string(est.sum_interval, d) << "\n"
        << "error bound  " << upper_decimal(est.error_bound, d + 2) << "\n"
        << "mass         " << decimal_string(est.mass_interval, d) << "\n"
        << "-(9m)^-1     " << decimal_string(est.t0_interval, d) << "\n"
        << "-2(9m)^-1    " << decimal_string(est.t0_double_interval, d) << "\n";
    return out.str();
}

std::string csv_header()
{
    return "manifold,N,sum_a_num,sum_a_den,sum_b_num,sum_b_den,bound_num,bound_den,lo,hi";
}

std::string csv_row(const MassEstimate& est)
{
    const int d = est.digits;
    std::ostringstream out;
    out << cli_name(est.manifold) << ',' << est.n << ',' << est.partial_sum.a.get_num().get_str(10)
        << ',' << est.partial_sum.a.get_den().get_str(10) << ','
        << est.partial_sum.b.get_num().get_str(10) << ','
        << est.partial_sum.b.get_den().get_str(10) << ',' << est.error_bound.get_num().get_str(10)
        << ',' << est.error_bound.get_den().get_str(10) << ','
        << fixed_point(floor_scaled(est.mass_interval.lo, d), d) << ','
        << fixed_point(ceil_scaled(est.mass_interval.hi, d), d);
    return out.str();
}

std::string convergence_text(const std::vector<MassEstimate>& rows)
{
    if (rows.empty())
        return {};
    const int d = rows.front().digits;
    const int iw = 2 * (d + 4) + 4;
    std::ostringstream out;
    out << std::left << std::setw(9) << "manifold" << std::setw(6) << "N" << std::setw(iw)
        << "partial sum" << std::setw(d + 6) << "bound" << std::setw(iw) << "mass"
        << "width\n";
    for (const auto& r : rows) {
        out << std::setw(9) << display_name(r.manifold) << std::setw(6) << r.n << std::setw(iw)
            << decimal_string(r.sum_interval, d) << std::setw(d + 6)
            << upper_decimal(r.error_bound, d + 2) << std::setw(iw)
            << decimal_string(r.mass_interval, d) << upper_decimal(r.mass_interval.width(), d + 2)
            << "\n";
    }
    return out.str();
}

json comparison_json(const T0Comparison& c, int places)
{
    return {{"label", c.label},
            {"left", c.left_name},
            {"right", c.right_name},
            {"left_interval", interval_json(c.left, places)},
            {"right_interval", interval_json(c.right, places)},
            {"distinct", c.proven_distinct ? "proven" : "undecided"}};
}

std::string t0_text(const std::vector<MassEstimate>& estimates,
                    const std::vector<T0Comparison>& comparisons)
{
    std::ostringstream out;
    for (const auto& e : estimates) {
        const int d = e.digits;
        out << display_name(e.manifold) << " (N=" << e.n << ")\n"
            << "  -(9m)^-1   " << decimal_string(e.t0_interval, d) << "\n"
            << "  -2(9m)^-1  " << decimal_string(e.t0_double_interval, d) << "\n";
        if (e.manifold == Manifold::S2xS2)
            out << "  note: the commonly quoted bounds -.1892 and -.18922 for this value are in"
                   " inconsistent order; the enclosure above is the certified one\n";
    }
    if (!comparisons.empty()) {
        const int d = estimates.empty() ? 6 : estimates.front().digits;
        out << "distinctness\n";
        for (const auto& c : comparisons)
            out << "  " << c.label << ": " << c.left_name << " " << decimal_string(c.left, d)
                << " vs " << c.right_name << " " << decimal_string(c.right, d) << " -> "
                << (c.proven_distinct ? "distinct: proven" : "undecided at this N") << "\n";
    }
    return out.str();
}

}  // namespace certmass
