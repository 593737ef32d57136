// SPDX-License-Identifier: Apache-2.0
//
// Self-check suites behind `certmass verify`.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace certmass {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    double quadrature_tol = 1e-6;  // concordance threshold for numeric checks
    unsigned max_index = 12;       // p, q range for the exact integral checks
};

/// symbolic, integrals, l2norm, quadrature, hand
const std::vector<std::string>& verify_suites();

/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_verify_suite(std::string_view suite, const VerifyOptions& opts = {});

}  // namespace certmass
