#ifndef STRATA_VERIFY_HPP
#define STRATA_VERIFY_HPP

#include <strata/permutation.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;
    // each failure names module/op plus the seed and trial to replay it
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

// canonical order: welldef, quadrants, ideal-image, kobayashi, ginv,
// erratum, charts, minors, fixture-n2
const std::vector<std::string>& verify_suite_names();

// Runs one suite at the given n.  seed and trials drive the sampled
// parts; exhaustive parts ignore them.  Unknown names are rejected.
// allow_large is forwarded to the suites that enumerate the whole
// stratification ideal, which is huge past n = 4.
SuiteResult run_verify_suite(const std::string& name, int n, std::uint64_t seed,
                             int trials, bool allow_large = false);

// per-chart pass/fail summary behind `charts --check`
struct ChartCheckRow {
    Permutation pi;
    bool round_trip = false;
    bool cell = false;
    bool stratified = false;
};
std::vector<ChartCheckRow> chart_check_matrix(int n, std::uint64_t seed, int trials);

} // namespace strata

#endif
