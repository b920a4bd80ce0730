// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion maps to a property corpus in the core library; the time
// budgets are asserted along with the checks.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "troph/selftest.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    for (int i = 1; i < argc - 1; ++i)
        if (std::strcmp(argv[i], "--seed") == 0)
            seed = std::strtoull(argv[i + 1], nullptr, 10);

    struct Criterion {
        int number;
        const char* label;
        const char* suite;
        double budget_seconds;
    };
    const std::vector<Criterion> criteria = {
        {1, "pairs-of-points reproduction, 20 samples x 7 strata", "pairs", 60},
        {2, "Kapranov membership oracle, 50 polynomials x 7x7 grid", "kapranov", 120},
        {3, "degree-m0 certificates and monotonicity", "witness", 120},
        {4, "Hilbert-function preservation of initial spaces", "dimension", 60},
        {5, "numerical polynomial round-trips", "numpoly", 10},
        {6, "monomial-ideal inequality suite, 200 ideals", "monideal", 180},
        {7, "extension invariance over Q(t^(1/2))", "extension", 30},
        {8, "equal tropical Hilbert points, equal varieties", "hilbpoint", 60},
        {9, "dual curve balancing and perturbation witness", "subdiv", 30},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        troph::SuiteResult r = troph::run_suite(c.suite, seed);
        bool ok = r.passed() && r.seconds < c.budget_seconds;
        all_ok = all_ok && ok;
        std::printf("criterion %d [%s]: %s  (%ld checks, %ld failures, %.2fs, budget %.0fs)\n",
                    c.number, c.label, ok ? "PASS" : "FAIL", r.checks, r.failures,
                    r.seconds, c.budget_seconds);
        for (const auto& msg : r.messages) std::printf("    %s\n", msg.c_str());
    }
    return all_ok ? 0 : 1;
}
