#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "csp/rational.hpp"
#include "csp/simplex.hpp"

namespace csp {

// min sum(x) subject to sum_j x_j col_j = demand, x >= 0, solved exactly by
// revised simplex with an explicit basis inverse. Columns are sparse
// nonnegative integer vectors; 0/1 pattern columns are the common case.
struct ColumnLpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    // (column index, positive value) pairs of the optimal basic solution.
    std::vector<std::pair<std::size_t, Rational>> support;
};

struct SparseCol {
    std::vector<std::pair<int, long long>> entries; // (row, value), value > 0
};

ColumnLpResult min_sum_cover(int rows, const std::vector<SparseCol>& cols,
                             const std::vector<long long>& demand);

// Unit-demand convenience: columns are pattern bitmasks, demand is all-ones.
// Zero columns are ignored.
ColumnLpResult minimize_unit_sum(const std::vector<std::uint32_t>& cols, int n);

} // namespace csp
