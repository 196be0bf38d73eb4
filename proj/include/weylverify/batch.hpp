#pragma once

#include "weylverify/report.hpp"

#include <set>
#include <string>
#include <vector>

namespace wv {

struct RunConfig {
    std::set<int> families{1, 2, 3, 4, 5, 6, 7, 8};
    int max_size = 6;
    long torus_lo = -3;
    long torus_hi = 3;
    Format format = Format::Table;
    int jobs = 1;
    int box = 2;
};

// Throws std::invalid_argument when the config breaks an invariant.
void validate(const RunConfig& c);

// Every (family, m, n, torus) tuple with m, n <= max_size, in sorted order.
// Families with a single size parameter report m = n.
std::vector<FamilyInstance> enumerate_instances(const RunConfig& c);

// verify_instance plus a bounded saturation cross-check on E.
ReportRecord run_one(const FamilyInstance& inst, int box);

std::vector<ReportRecord> run_batch(const RunConfig& c);

// 1 when some record has status FAIL, else 0
int exit_code(const std::vector<ReportRecord>& rs);

}  // namespace wv
