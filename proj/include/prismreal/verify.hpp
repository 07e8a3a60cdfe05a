#pragma once

// Seeded property suite for the exact sequence
//   0 -> Z((T))_r --(1 - bT)--> Z((T))_r --theta--> R -> 0
// at the point, plus the norm, continuity and digit-bound properties that
// support it.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "prismreal/rational.hpp"

namespace prismreal {

struct VerifyConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    Integer base = 10;
    Rational r = Rational(1, 2);
    std::size_t max_digits = 40;
};

struct PropertyResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure; // empty when failures == 0
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

VerifyReport run_verification(const VerifyConfig& config);

nlohmann::json report_to_json(const VerifyReport& report);
std::string report_to_text(const VerifyReport& report);

} // namespace prismreal
