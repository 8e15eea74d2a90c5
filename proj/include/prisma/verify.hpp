#pragma once

#include "prisma/jsonio.hpp"

namespace prisma {

/// Options shared by the verification suites; negative values select the
/// suite defaults so every run is fully pinned and reproducible.
struct SuiteOptions {
    std::uint64_t seed = 1;
    long box = -1;
    long trials = -1;
    long max_vertices = -1;
    long dim = -1;                  // restrict a suite to one ambient dimension
    std::vector<long> multipliers;  // empty selects {2, 3}
};

struct SuiteResult {
    std::string suite;
    bool passed = false;
    std::size_t checks = 0;
    json report;
};

const std::vector<std::string>& suite_names();

/// Run one named property suite; throws InputError for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace prisma
