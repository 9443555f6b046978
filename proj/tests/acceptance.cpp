// One PASS/FAIL line per acceptance criterion. Arguments select criteria
// (c01..c12); with none, every criterion runs.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "haarcomm/sampler.hpp"
#include "haarcomm/verify.hpp"

using namespace haarcomm;

namespace {

struct Criterion {
    const char* id;
    const char* suite;
    const char* title;
};

constexpr Criterion kCriteria[] = {
    {"c01", "formulas", "exact trace formulas, N in 3..10"},
    {"c02", "wg-cross", "Weingarten character and Gram routes agree"},
    {"c03", "oracle-u", "word engine matches unitary closed forms"},
    {"c04", "oracle-o", "word engine matches orthogonal closed forms"},
    {"c05", "conjecture", "f_lambda scan against d_lambda/{N}_lambda"},
    {"c06", "characters", "character orthogonality and convolution"},
    {"c07", "brauer", "Brauer character layer"},
    {"c08", "mc", "Monte Carlo agreement at N = 8"},
    {"c09", "density", "eigenphase density correction at N = 9, 10"},
    {"c10", "gaussian", "Gaussian limit of Tr C for CO(50)"},
    {"c11", "nongaussian", "non-Gaussian CU moments at N = 100"},
    {"c12", "structure", "structural sampling checks"},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> wanted(argv + 1, argv + argc);
    SuiteOptions options;
    options.workers = default_workers();
    bool all_passed = true;
    int index = 0;
    for (const auto& c : kCriteria) {
        ++index;
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        const auto report = run_suite(c.suite, options);
        for (const auto& check : report.checks)
            if (!check.passed) std::cout << "  failed: " << check.label << " (" << check.detail << ")\n";
        for (const auto& finding : report.findings) std::cout << "  finding: " << finding << '\n';
        std::printf("%s criterion %d: %s (%zu/%zu checks, %.2f s)\n", report.passed() ? "PASS" : "FAIL", index,
                    c.title, report.checks.size() - report.failures(), report.checks.size(), report.seconds);
        std::fflush(stdout);
        all_passed = all_passed && report.passed();
    }
    return all_passed ? 0 : 1;
}
