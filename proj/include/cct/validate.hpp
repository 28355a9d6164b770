#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cct/model.hpp"

namespace cct {

struct ValidationOptions {
    std::uint64_t seed = 20181002;
    int trials = 1000;
    bool include_as_printed_eq10 = false;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      // worst observed deviation (or defect)
    double tolerance = 0.0;  // bound it was held against
    std::string detail;      // offending parameter tuple on failure
};

// Randomized cross-checks of the closed forms against the numeric
// propagator: normalization, elementwise agreement, propagator unitarity,
// time reversal, and the rate-scaling law. Deterministic for a fixed seed.
// With include_as_printed_eq10 an extra suite substitutes the published
// b1->b2 coefficient and reports its normalization defect (that suite
// "passes" when the defect is visible, i.e. clearly above round-off).
std::vector<SuiteResult> run_validation(const ValidationOptions& opts);

}  // namespace cct
