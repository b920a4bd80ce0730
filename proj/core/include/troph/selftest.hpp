#pragma once

// Property corpora behind the acceptance suite and the `selftest` CLI
// subcommand.  Each suite runs a batch of randomized or exhaustive checks
// and reports counts; failures carry messages.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "troph/polyring.hpp"

namespace troph {

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    double seconds = 0.0;
    std::vector<std::string> messages;  // first few failure descriptions

    bool passed() const { return failures == 0; }
};

std::vector<std::string> selftest_suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

// Shared fixtures: ideals with known Hilbert data, asserted saturated.
struct TestIdeal {
    std::string label;
    GradedIdeal ideal;
    MVector m;
};
std::vector<TestIdeal> acceptance_ideal_family();

// (g1, g2, 0) over a small set of rational values; chart omega_2 = 0
std::vector<std::vector<Rat>> chart_grid_7x7();
std::vector<std::vector<Rat>> chart_grid_3x3();

}  // namespace troph
