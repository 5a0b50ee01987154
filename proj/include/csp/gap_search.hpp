#pragma once

#include <functional>
#include <vector>

#include "csp/enumeration.hpp"
#include "csp/metrics.hpp"

namespace csp {

enum class GapSearchMode { Threshold, Maximize };

struct GapHit {
    PatternClass cls;
    Instance instance;
    GapReport report;
};

struct GapSearchOptions {
    bool strict = false; // require delta_p > delta instead of >=
    int zd_floor = 0;    // restrict to classes with z_D >= floor
    unsigned threads = 1;
    int split_depth = -1;
    int lp_stride = 1;
    std::function<void(const EnumState&)> on_prune; // test instrumentation
};

// Branch-and-bound over the class tree. Threshold mode returns every class
// whose proper gap reaches delta; maximize mode returns all classes
// attaining the maximum proper gap, tightening the bound as it improves.
// Each hit carries a realized instance and an independently recomputed
// gap report.
std::vector<GapHit> search_max_gap(int n, const Rational& delta, GapSearchMode mode,
                                   const GapSearchOptions& opt = {});

// LP-multiplier branching: solve the unit LP over all columns not yet
// forced infeasible and take the unclassified pattern with the largest
// multiplier (ties toward the smallest mask); falls back to the smallest
// unclassified mask when the LP support misses them all.
std::uint32_t choose_branch_pattern(const EnumState& st, int n);

} // namespace csp
