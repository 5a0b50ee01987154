#include "csp/column_lp.hpp"

#include <bit>

#include "csp/error.hpp"

namespace csp {

namespace {

constexpr std::size_t kPivotCap = 500000;
constexpr int kDegenerateStreak = 40; // switch to Bland after this many stalls

// Revised simplex state over an explicit rational basis inverse.
struct Revised {
    int m;
    const std::vector<SparseCol>& cols;
    std::vector<Rational> demand;
    std::vector<std::vector<Rational>> binv; // m x m
    std::vector<Rational> xb;                // basic values
    std::vector<std::size_t> basis;          // < cols.size() real, >= cols.size() artificial (row id)
    std::vector<char> in_basis;

    Revised(int rows, const std::vector<SparseCol>& c, const std::vector<long long>& b)
        : m(rows), cols(c) {
        demand.reserve(rows);
        for (long long v : b) demand.push_back(Rational(v));
        binv.assign(m, std::vector<Rational>(m, Rational(0)));
        for (int i = 0; i < m; ++i) binv[i][i] = 1;
        xb = demand;
        basis.assign(m, 0);
        in_basis.assign(cols.size(), 0);
        // Prefer unit columns as the start basis; rows not covered by one
        // get an artificial.
        std::vector<std::size_t> unit(m, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (cols[j].entries.size() == 1 && cols[j].entries[0].second == 1) {
                int r = cols[j].entries[0].first;
                if (unit[r] == cols.size()) unit[r] = j;
            }
        for (int i = 0; i < m; ++i) {
            if (unit[i] != cols.size()) {
                basis[i] = unit[i];
                in_basis[unit[i]] = 1;
            } else {
                basis[i] = cols.size() + i;
            }
        }
    }

    bool is_art(std::size_t id) const { return id >= cols.size(); }

    Rational col_dot(std::size_t j, const std::vector<Rational>& y) const {
        Rational s = 0;
        for (auto [r, v] : cols[j].entries) s += y[r] * v;
        return s;
    }

    std::vector<Rational> ftran(std::size_t j) const { // binv * A_j
        std::vector<Rational> d(m, Rational(0));
        for (auto [r, v] : cols[j].entries)
            for (int i = 0; i < m; ++i)
                if (binv[i][r] != 0) d[i] += binv[i][r] * v;
        return d;
    }

    // One simplex phase; phase 1 prices artificials at cost 1, real columns
    // at 0; phase 2 prices real columns at 1 with artificials pinned to 0 by
    // an immediate-leave rule in the ratio test.
    void run(bool phase1, std::size_t& pivots) {
        int stall = 0;
        bool bland = false;
        for (;; ++pivots) {
            if (pivots > kPivotCap) fail(ErrorCode::PivotLimit, "column LP pivot cap exceeded");
            // duals y = c_B binv
            std::vector<Rational> y(m, Rational(0));
            for (int i = 0; i < m; ++i) {
                Rational cb = phase1 ? Rational(is_art(basis[i]) ? 1 : 0) : Rational(1);
                if (is_art(basis[i]) && !phase1) cb = 0;
                if (cb != 0)
                    for (int r = 0; r < m; ++r)
                        if (binv[i][r] != 0) y[r] += cb * binv[i][r];
            }
            std::size_t enter = cols.size();
            Rational best_rc;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (in_basis[j]) continue;
                Rational cj = phase1 ? Rational(0) : Rational(1);
                Rational rc = cj - col_dot(j, y);
                if (rc < 0) {
                    if (bland) {
                        enter = j;
                        break;
                    }
                    if (enter == cols.size() || rc < best_rc) {
                        enter = j;
                        best_rc = rc;
                    }
                }
            }
            if (enter == cols.size()) return; // optimal for this phase
            auto d = ftran(enter);
            int leave = -1;
            Rational step;
            for (int i = 0; i < m; ++i) {
                bool art_block = !phase1 && is_art(basis[i]) && d[i] != 0;
                if (d[i] > 0 || art_block) {
                    // Surviving artificials sit at value zero and must leave
                    // before any step is taken.
                    Rational ratio = art_block ? Rational(0) : xb[i] / d[i];
                    if (leave < 0 || ratio < step ||
                        (ratio == step && basis[i] < basis[leave])) {
                        leave = i;
                        step = ratio;
                    }
                }
            }
            if (leave < 0) fail(ErrorCode::MalformedSystem, "cover LP unbounded");
            if (step == 0) {
                if (++stall >= kDegenerateStreak) bland = true;
            } else {
                stall = 0;
            }
            // basis change: row ops on binv and xb
            Rational inv = 1 / d[leave];
            for (int r = 0; r < m; ++r) binv[leave][r] *= inv;
            xb[leave] *= inv;
            for (int i = 0; i < m; ++i) {
                if (i == leave || d[i] == 0) continue;
                Rational f = d[i];
                for (int r = 0; r < m; ++r)
                    if (binv[leave][r] != 0) binv[i][r] -= f * binv[leave][r];
                xb[i] -= f * xb[leave];
            }
            if (!is_art(basis[leave])) in_basis[basis[leave]] = 0;
            basis[leave] = enter;
            in_basis[enter] = 1;
        }
    }
};

} // namespace

ColumnLpResult min_sum_cover(int rows, const std::vector<SparseCol>& cols,
                             const std::vector<long long>& demand) {
    if (cols.empty()) fail(ErrorCode::EmptyColumnSet, "no columns");
    if ((int)demand.size() != rows) fail(ErrorCode::DimensionMismatch, "demand size != rows");
    for (long long v : demand)
        if (v < 0) fail(ErrorCode::MalformedSystem, "negative demand");
    for (const auto& c : cols)
        for (auto [r, v] : c.entries)
            if (r < 0 || r >= rows || v <= 0) fail(ErrorCode::MalformedSystem, "bad column entry");

    Revised rs(rows, cols, demand);
    std::size_t pivots = 0;
    bool have_art = false;
    for (int i = 0; i < rows; ++i) have_art |= rs.is_art(rs.basis[i]);
    if (have_art) {
        rs.run(true, pivots);
        Rational art_sum = 0;
        for (int i = 0; i < rows; ++i)
            if (rs.is_art(rs.basis[i])) art_sum += rs.xb[i];
        if (art_sum != 0) {
            ColumnLpResult r;
            r.status = LpStatus::Infeasible;
            return r;
        }
    }
    rs.run(false, pivots);

    ColumnLpResult r;
    r.status = LpStatus::Optimal;
    r.objective = 0;
    for (int i = 0; i < rows; ++i) {
        if (!rs.is_art(rs.basis[i]) && rs.xb[i] != 0) {
            r.objective += rs.xb[i];
            r.support.emplace_back(rs.basis[i], rs.xb[i]);
        }
    }
    return r;
}

ColumnLpResult minimize_unit_sum(const std::vector<std::uint32_t>& cols, int n) {
    if (cols.empty()) fail(ErrorCode::EmptyColumnSet, "no columns");
    std::vector<SparseCol> sc;
    std::vector<std::size_t> orig;
    sc.reserve(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::uint32_t mask = cols[j];
        if (!mask) continue;
        if (mask >> n) fail(ErrorCode::DimensionMismatch, "column outside the n-item universe");
        SparseCol c;
        while (mask) {
            c.entries.emplace_back(std::countr_zero(mask), 1);
            mask &= mask - 1;
        }
        sc.push_back(std::move(c));
        orig.push_back(j);
    }
    if (sc.empty()) fail(ErrorCode::EmptyColumnSet, "only zero columns");
    std::vector<long long> ones(n, 1);
    auto res = min_sum_cover(n, sc, ones);
    for (auto& [j, v] : res.support) j = orig[j];
    return res;
}

} // namespace csp
