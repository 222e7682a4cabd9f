#pragma once

#include <string>
#include <vector>

namespace riordan::verify {

struct Options {
    int order = 12;
    unsigned long long seed = 8675309;
    std::string fixture_dir = "data/oeis";
};

struct SuiteReport {
    std::string suite;
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

// Runs one named suite; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const Options& opts);

}  // namespace riordan::verify
