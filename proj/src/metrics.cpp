#include "csp/metrics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "csp/column_lp.hpp"

namespace csp {

int zd_of_pattern_set(const MaskSet& patterns) {
    int n = patterns.n();
    std::uint32_t full = full_mask(n);
    constexpr int kInf = 1 << 20;
    std::vector<int> dp(std::size_t(full) + 1, kInf);
    dp[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        int best = kInf;
        // first uncovered item must be in the chosen pattern
        for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
            if ((sub & low) && patterns.test(sub) && dp[mask ^ sub] + 1 < best)
                best = dp[mask ^ sub] + 1;
            if (sub == 0) break;
        }
        dp[mask] = best;
    }
    if (dp[full] >= kInf) fail(ErrorCode::ConsistencyViolation, "pattern set cannot cover all items");
    return dp[full];
}

int zd_subset_dp(const Instance& e) { return zd_of_pattern_set(proper_patterns(e).patterns); }

namespace {

int first_fit_decreasing(const Instance& e) {
    std::vector<long long> space;
    for (auto it = e.l.rbegin(); it != e.l.rend(); ++it) {
        bool placed = false;
        for (auto& s : space)
            if (*it <= s) {
                s -= *it;
                placed = true;
                break;
            }
        if (!placed) space.push_back(e.L - *it);
    }
    return (int)space.size();
}

struct BnB {
    int n;
    long long L;
    const std::vector<long long>& l;
    const MaskSet& feas;
    std::vector<long long> sum; // subset length sums
    int best;

    BnB(const Instance& e, const MaskSet& f, int ub)
        : n(e.n), L(e.L), l(e.l), feas(f), sum(std::size_t(1) << e.n, 0), best(ub) {
        for (std::uint32_t m = 1; m < (1u << n); ++m) {
            std::uint32_t low = m & (~m + 1);
            sum[m] = sum[m & (m - 1)] + l[std::countr_zero(low)];
        }
    }

    void dfs(std::uint32_t remaining, int used) {
        if (!remaining) {
            best = std::min(best, used);
            return;
        }
        long long need = (sum[remaining] + L - 1) / L; // material bound
        if (used + need >= best) return;
        std::uint32_t low = remaining & (~remaining + 1);
        std::uint32_t rest = remaining ^ low;
        // Feasible patterns containing the first open item, maximal within
        // the remaining set; some optimal solution uses one of these.
        std::vector<std::uint32_t> cands;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t p = sub | low;
            if (feas.test(p)) {
                std::uint32_t ext = remaining ^ p;
                bool maximal = true;
                while (ext) {
                    std::uint32_t bit = ext & (~ext + 1);
                    if (feas.test(p | bit)) {
                        maximal = false;
                        break;
                    }
                    ext ^= bit;
                }
                if (maximal) cands.push_back(p);
            }
            if (sub == 0) break;
        }
        std::sort(cands.begin(), cands.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return sum[a] > sum[b]; });
        for (std::uint32_t p : cands) {
            dfs(remaining ^ p, used + 1);
            if (used + need >= best) return;
        }
    }
};

} // namespace

int zd_bnb(const Instance& e) {
    auto cls = proper_patterns(e);
    int ub = first_fit_decreasing(e);
    Integer lb = rat_ceil(z_c_proper(e));
    if (lb == ub) return ub;
    BnB solver(e, cls.patterns, ub);
    solver.dfs(full_mask(e.n), 0);
    if (solver.best < lb) fail(ErrorCode::ConsistencyViolation, "z_D below its LP bound");
    return solver.best;
}

Rational z_c_of_pattern_set(const MaskSet& patterns) {
    auto cols = patterns.to_vector();
    auto res = minimize_unit_sum(cols, patterns.n());
    if (res.status != LpStatus::Optimal)
        fail(ErrorCode::ConsistencyViolation, "unit-demand LP infeasible on a pattern class");
    return res.objective;
}

Rational z_c_proper(const Instance& e) { return z_c_of_pattern_set(proper_patterns(e).patterns); }

namespace {

void enum_patterns_rec(const InstanceM& e, int idx, long long left, std::vector<long long>& cur,
                       std::vector<std::vector<long long>>& out, std::size_t cap) {
    if (idx == e.m) {
        bool zero = std::all_of(cur.begin(), cur.end(), [](long long v) { return v == 0; });
        if (!zero) {
            if (out.size() >= cap)
                fail(ErrorCode::PatternExplosion,
                     "more than " + std::to_string(cap) + " feasible patterns");
            out.push_back(cur);
        }
        return;
    }
    long long max_count = left / e.l[idx];
    for (long long c = 0; c <= max_count; ++c) {
        cur[idx] = c;
        enum_patterns_rec(e, idx + 1, left - c * e.l[idx], cur, out, cap);
    }
    cur[idx] = 0;
}

} // namespace

std::vector<std::vector<long long>> enumerate_feasible_patterns(const InstanceM& e, std::size_t cap) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(e.m, 0);
    enum_patterns_rec(e, 0, e.L, cur, out, cap);
    return out;
}

Rational z_c_feasible(const InstanceM& e, std::size_t cap) {
    auto patterns = enumerate_feasible_patterns(e, cap);
    std::vector<SparseCol> cols;
    cols.reserve(patterns.size());
    for (const auto& p : patterns) {
        SparseCol c;
        for (int i = 0; i < e.m; ++i)
            if (p[i]) c.entries.emplace_back(i, p[i]);
        cols.push_back(std::move(c));
    }
    auto res = min_sum_cover(e.m, cols, e.b);
    if (res.status != LpStatus::Optimal)
        fail(ErrorCode::ConsistencyViolation, "feasible-pattern LP must be solvable");
    return res.objective;
}

BoundFlags bound_flags(const Instance& e, const GapReport& r) {
    BoundFlags f;
    long long total = std::accumulate(e.l.begin(), e.l.end(), 0ll);
    f.zd_is_1 = total <= e.L;
    if (f.zd_is_1 != (r.z_d == 1))
        fail(ErrorCode::ConsistencyViolation, "z_D=1 characterization violated");

    auto cls = proper_patterns(e);
    std::uint32_t full = full_mask(e.n);
    bool pair_found = false;
    cls.patterns.for_each([&](std::uint32_t a) {
        if (!pair_found && cls.patterns.test(full & ~a)) pair_found = true;
    });
    f.zd_le_2 = pair_found;
    if (f.zd_le_2 != (r.z_d <= 2))
        fail(ErrorCode::ConsistencyViolation, "z_D<=2 characterization violated");

    if (r.z_d == 2) {
        f.zcp_lb = Rational(e.n, e.n - 1);
        f.zcp_lb_strict = false;
    } else if (r.z_d > 2) {
        f.zcp_lb = 2;
        f.zcp_lb_strict = true;
    } else {
        f.zcp_lb = 1;
        f.zcp_lb_strict = false;
    }
    bool lb_ok = f.zcp_lb_strict ? (r.z_c_proper > f.zcp_lb) : (r.z_c_proper >= f.zcp_lb);
    if (!lb_ok) fail(ErrorCode::ConsistencyViolation, "z_C^p lower bound violated");
    if (r.z_d == 2 && r.delta_proper > Rational(e.n - 2, e.n - 1))
        fail(ErrorCode::ConsistencyViolation, "proper gap bound for z_D=2 violated");
    if (r.z_d == 3 && !(r.delta_proper < 1))
        fail(ErrorCode::ConsistencyViolation, "proper gap bound for z_D=3 violated");

    f.chan_ok = Rational(r.z_d) <= Rational(4, 3) * Rational(rat_ceil(r.z_c_proper));
    if (!f.chan_ok) fail(ErrorCode::ConsistencyViolation, "relative bound z_D <= 4/3 ceil(z_C^p) violated");
    return f;
}

GapReport gaps(const Instance& e, bool want_feasible, std::size_t cap) {
    GapReport r;
    r.z_c_proper = z_c_proper(e);
    r.z_d = zd_bnb(e);
    r.delta_proper = Rational(r.z_d) - r.z_c_proper;
    if (want_feasible) {
        r.z_c_feasible = z_c_feasible(to_m_form(e), cap);
        r.delta = Rational(r.z_d) - *r.z_c_feasible;
        if (*r.z_c_feasible > r.z_c_proper)
            fail(ErrorCode::ConsistencyViolation, "z_C^f must not exceed z_C^p");
    }
    r.flags = bound_flags(e, r);
    return r;
}

GapReport gaps(const InstanceM& e, bool want_feasible, std::size_t cap) {
    Instance unit = expand_to_unit_demand(e);
    GapReport r = gaps(unit, false);
    if (want_feasible) {
        r.z_c_feasible = z_c_feasible(e, cap);
        r.delta = Rational(r.z_d) - *r.z_c_feasible;
        if (*r.z_c_feasible > r.z_c_proper)
            fail(ErrorCode::ConsistencyViolation, "z_C^f must not exceed z_C^p");
    }
    return r;
}

Instance tighten_capacity(const Instance& e) {
    long long best = 0;
    std::vector<long long> sum(std::size_t(1) << e.n, 0);
    for (std::uint32_t m = 1; m < (1u << e.n); ++m) {
        std::uint32_t low = m & (~m + 1);
        sum[m] = sum[m & (m - 1)] + e.l[std::countr_zero(low)];
        if (sum[m] <= e.L) best = std::max(best, sum[m]);
    }
    Instance out = e;
    out.L = std::max(best, 1ll);
    return out;
}

std::string gap_csv_row(const std::string& id, const Instance& e, const GapReport& r) {
    std::ostringstream out;
    out << id << ',' << e.n << ',' << e.L << ',' << r.z_d << ',' << rat_str(r.z_c_proper) << ',';
    if (r.z_c_feasible) out << rat_str(*r.z_c_feasible);
    out << ',' << rat_str(r.delta_proper) << ',' << (r.proper_irup() ? 1 : 0);
    return out.str();
}

} // namespace csp
