// SPDX-License-Identifier: Apache-2.0

#include "certmass/verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace certmass;

TEST_SUITE("verify") {

TEST_CASE("every suite passes")
{
    for (const auto& suite : verify_suites()) {
        const auto results = run_verify_suite(suite);
        CHECK_FALSE(results.empty());
        for (const auto& r : results) {
            INFO(r.suite << ": " << r.name << " " << r.detail);
            CHECK(r.suite == suite);
            CHECK(r.passed);
        }
    }
}

TEST_CASE("l2norm reports the exact value")
{
    const auto results = run_verify_suite("l2norm");
    REQUIRE(results.size() == 1);
    CHECK(results.front().detail.find("61547/45045") != std::string::npos);
}


TEST_CASE("unknown suite")
{
    CHECK_THROWS_AS(run_verify_suite("nope"), std::invalid_argument);
}

}
