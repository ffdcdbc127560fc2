#pragma once

#include <json.hpp>

#include <cstdint>

namespace fm18 {

struct SelftestOutcome {
    bool pass = false;
    nlohmann::json report; // deterministic for a fixed seed
};

/// Aggregated property suites of every module plus the full normal-form
/// table reproduction. A green selftest is the repository's health signal.
SelftestOutcome run_selftest(std::uint64_t seed);

} // namespace fm18
