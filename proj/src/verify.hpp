// verify.hpp — seeded randomized property suites behind the verify command

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcontract {

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    int checks = 0;
    int failures = 0;
    std::string first_counterexample; // JSON text, empty when clean
    bool passed() const { return failures == 0; }
};

std::vector<std::string> suite_names();

// UnknownSuite for names not in suite_names(). Deterministic given the seed.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials);

std::string suite_result_to_json(const SuiteResult& result);

} // namespace qcontract
