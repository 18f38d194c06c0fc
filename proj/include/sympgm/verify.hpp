#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympgm/family.hpp"
#include "sympgm/partition.hpp"

namespace sympgm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifySuiteResult {
    int nu = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

// Structural invariants of the base graph, both orbit partitions, the
// switching cells and the five switched graphs at one nu. The orbit-closure
// cross-check runs only for nu <= 5 where the stabilizer group is enumerable.
VerifySuiteResult run_verify_suite(int nu,
                                   const std::optional<SpecialQuadruple>& quad = std::nullopt);

}  // namespace sympgm
