// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "rischan/scenario.hpp"

namespace rischan {

struct BenchRow {
    std::string method;
    int n = 0;
    int p = 0;
    int s = 0;
    int m = 0; // update rank (0 where not applicable)
    int realizations = 0;
    double total_seconds = 0.0;
    double seconds_per_realization = 0.0;
    double speedup = 0.0; // vs full re-assembly + inversion
    double max_rel_error = 0.0;
    bool skipped = false;
    std::string skip_reason;
};

struct BenchReport {
    double baseline_seconds_per_realization = 0.0;
    std::vector<BenchRow> rows;
};

// Times each method over `realizations` seeded random realizations after one
// warm-up. The baseline (full re-assembly + N x N solve) is the median of
// three repeats. Oracle errors are recorded on >= 5 sampled realizations.
// Known methods: "woodbury_reduced", "shifted_reduce", "woodbury_full",
// "displace_reduced". Methods whose preconditions fail are reported skipped.
BenchReport run_bench(const Scenario& sc, int realizations,
                      const std::vector<std::string>& methods, uint64_t seed,
                      int max_flips = 8);

std::string bench_report_json(const BenchReport& report);
BenchReport parse_bench_report_json(const std::string& text);
std::string bench_report_table(const BenchReport& report);

} // namespace rischan
