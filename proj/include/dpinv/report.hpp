#pragma once

// Verification reports, their JSON form, and an ordered parallel runner.

#include "dpinv/integer.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dpinv {

/// One verified cell. For rank-based checks lhs/rhs are the two ranks being
/// compared; for identity checks they count cases or terms (see README).
struct Report {
    std::string theorem;
    std::string label;
    unsigned n = 0;
    Multidegree multidegree;
    std::size_t lhs_rank = 0;
    std::size_t rhs_rank = 0;
    std::size_t kernel_rank = 0;
    bool pass = false;
    long long millis = 0;
    /// Invariant factors > 1 found by the optional integer check.
    std::vector<Integer> torsion;
    bool torsion_checked = false;
};

struct RunOptions {
    unsigned workers = 1;
    std::uint64_t seed = 0;
    bool strict_z = false;
    /// Record wall time; off by default so that reports are reproducible byte for byte.
    bool timing = false;
};

/// Runs the jobs on up to `workers` threads; results keep the job order.
/// The first exception (by job index) is rethrown after all threads finish.
std::vector<Report> run_ordered(const std::vector<std::function<Report()>>& jobs, const RunOptions& options);

/// JSON array, one object per report, keys in a fixed order.
std::string reports_to_json(const std::vector<Report>& reports);

bool all_pass(const std::vector<Report>& reports);

/// Deterministic 64-bit mixing, used to derive per-cell seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value);

} // namespace dpinv
