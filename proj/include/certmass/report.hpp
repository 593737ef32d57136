// SPDX-License-Identifier: Apache-2.0
//
// Text / JSON / CSV renderings of mass estimates. Rationals are written as
// decimal numerator and denominator strings; decimal intervals are always
// re-derived from those exact values, so the printed enclosures can be
// reproduced from the JSON alone.

#pragma once

#include "certmass/mass.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace certmass {

nlohmann::json rational_json(const Rational& r);  // {"num": "...", "den": "..."}
Rational rational_from_json(const nlohmann::json& j);

/// {"lo": "...", "hi": "..."} outward-rounded to `places` decimals.
nlohmann::json interval_json(const RatInterval& i, int places);

/// {manifold, N, digits, mode, sum_rational, sum_interval, bound, interval, t0, t0_double}
nlohmann::json mass_json(const MassEstimate& est);

/// Recomputes the "interval" member of mass_json() from its exact members.
nlohmann::json rederive_interval(const nlohmann::json& mass);

std::string mass_text(const MassEstimate& est);

std::string csv_header();  // manifold,N,sum_a_num,...,bound_den,lo,hi
std::string csv_row(const MassEstimate& est);

std::string convergence_text(const std::vector<MassEstimate>& rows);

nlohmann::json comparison_json(const T0Comparison& c, int places);
std::string t0_text(const std::vector<MassEstimate>& estimates,
                    const std::vector<T0Comparison>& comparisons);

}  // namespace certmass
