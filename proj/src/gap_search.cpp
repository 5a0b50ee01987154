#include "csp/gap_search.hpp"

#include <algorithm>
#include <mutex>

#include "csp/column_lp.hpp"

namespace csp {

namespace {

std::vector<std::uint32_t> open_columns(const EnumState& st) {
    // U = everything not yet forced infeasible, minus the zero pattern.
    std::vector<std::uint32_t> cols;
    for (std::uint32_t m = 1; m < st.above_gt.universe(); ++m)
        if (!st.above_gt.test(m)) cols.push_back(m);
    return cols;
}

struct BranchPick {
    bool has = false;
    std::uint32_t mask = 0;
};

BranchPick pick_from_support(const EnumState& st, const ColumnLpResult& lp,
                             const std::vector<std::uint32_t>& cols) {
    BranchPick pick;
    Rational best;
    for (const auto& [j, v] : lp.support) {
        std::uint32_t m = cols[j];
        if (st.below_le.test(m) || st.above_gt.test(m)) continue;
        if (!pick.has || v > best || (v == best && m < pick.mask)) {
            pick.has = true;
            pick.mask = m;
            best = v;
        }
    }
    return pick;
}

class GapHooks : public EngineHooks {
  public:
    GapHooks(int n, Rational delta, const GapSearchOptions& opt)
        : n_(n), strict_(opt.strict), zd_floor_(opt.zd_floor),
          on_prune_(opt.on_prune), delta_(std::move(delta)) {}

    Rational current_delta() const {
        std::lock_guard<std::mutex> lock(mu_);
        return delta_;
    }

    // Returns true when the incumbent improved.
    bool raise_delta(const Rational& d) {
        std::lock_guard<std::mutex> lock(mu_);
        if (d > delta_) {
            delta_ = d;
            return true;
        }
        return false;
    }

    bool attains(const Rational& gap, const Rational& delta) const {
        return strict_ ? gap > delta : gap >= delta;
    }

    bool visit(EnumState& st) override {
        auto cols = open_columns(st);
        auto lp = minimize_unit_sum(cols, n_);
        if (lp.status != LpStatus::Optimal)
            fail(ErrorCode::ConsistencyViolation, "open-column LP must stay feasible");
        const Rational& zc_open = lp.objective;
        Rational delta = current_delta();

        // Any class below this node has z_D at least ceil(zc_open) and
        // proper LP value at least zc_open, so the reachable proper gap is
        // at most zd(known feasible) - zc_open. Try the free rounded bound
        // before paying for the exact integer optimum.
        bool prunable = !attains(Rational(rat_ceil(zc_open)) - zc_open, delta);
        if (prunable) {
            int zd_known = zd_of_pattern_set(st.below_le);
            if (!attains(Rational(zd_known) - zc_open, delta)) {
                if (on_prune_) on_prune_(st);
                return false;
            }
        }
        auto pick = pick_from_support(st, lp, cols);
        st.has_suggestion = pick.has;
        st.suggested_branch = pick.mask;
        return true;
    }

    void forced_infeasible(const EnumState& st, std::uint32_t a,
                           std::vector<std::uint32_t>& out) override {
        Rational delta = current_delta();
        bool lvl2 = level2(delta);
        bool lvl3 = level3(delta);
        if (!lvl2 && !lvl3) return;
        std::uint32_t full = full_mask(n_);
        if (!lvl3) {
            out.push_back(full & ~a); // z_D >= 3: complements of feasible patterns
            return;
        }
        // z_D >= 4: the complement of any disjoint feasible pair (including
        // the pair a, 0) is infeasible.
        st.below_le.for_each([&](std::uint32_t y) {
            if ((y & a) == 0) out.push_back(full & ~(a | y));
        });
    }

    // Classes with z_D <= 2 are out of reach once delta passes (n-2)/(n-1);
    // z_D = 3 caps the proper gap below 1.
    bool level2(const Rational& delta) const {
        if (zd_floor_ >= 3) return true;
        if (n_ < 2) return false;
        Rational cap(n_ - 2, n_ - 1);
        return strict_ ? delta >= cap : delta > cap;
    }
    bool level3(const Rational& delta) const {
        if (zd_floor_ >= 4) return true;
        return delta >= 1;
    }

  private:
    int n_;
    bool strict_;
    int zd_floor_;
    std::function<void(const EnumState&)> on_prune_;
    mutable std::mutex mu_;
    Rational delta_;
};

} // namespace

std::uint32_t choose_branch_pattern(const EnumState& st, int n) {
    auto cols = open_columns(st);
    auto lp = minimize_unit_sum(cols, n);
    if (lp.status == LpStatus::Optimal) {
        auto pick = pick_from_support(st, lp, cols);
        if (pick.has) return pick.mask;
    }
    for (std::uint32_t m = 0; m < st.below_le.universe(); ++m)
        if (!st.below_le.test(m) && !st.above_gt.test(m)) return m;
    fail(ErrorCode::ConsistencyViolation, "no unclassified pattern to branch on");
}

std::vector<GapHit> search_max_gap(int n, const Rational& delta, GapSearchMode mode,
                                   const GapSearchOptions& opt) {
    if (n < 1 || n > kMaxItems) fail(ErrorCode::NTooLarge, "gap search needs 1 <= n <= 16");
    if (delta < 0) fail(ErrorCode::NonPositive, "delta must be >= 0");

    GapSearchOptions eff = opt;
    if (mode == GapSearchMode::Maximize) eff.strict = false; // ties must be kept
    Rational start_delta = mode == GapSearchMode::Maximize ? Rational(0) : delta;
    GapHooks hooks(n, start_delta, eff);
    EnumOptions eopt;
    eopt.threads = eff.threads;
    eopt.split_depth = eff.split_depth;
    eopt.lp_stride = eff.lp_stride;
    ClassEnumerator eng(n, SystemKind::CuttingStock, eopt, &hooks);

    EnumState start = eng.initial_state();
    // Bound-based seeding: z_D >= f forces every pattern of weight
    // >= n - f + 2 infeasible; the lightest of them dominates the rest.
    int floor_eff = eff.zd_floor;
    if (hooks.level3(start_delta)) floor_eff = std::max(floor_eff, 4);
    else if (hooks.level2(start_delta)) floor_eff = std::max(floor_eff, 3);
    if (floor_eff >= 2) {
        int w = n - floor_eff + 2;
        if (w <= 1) return {}; // would make a singleton or the zero pattern infeasible
        if (w <= n && !eng.classify_infeasible(start, full_mask(w))) return {};
    }

    struct Candidate {
        PatternClass cls;
        Rational gap;
    };
    std::vector<Candidate> found;
    std::mutex mu;

    eng.run(std::move(start), [&](const EnumState& st) {
        auto cls = state_class(st, n);
        Rational gap = Rational(zd_of_pattern_set(cls.patterns)) - z_c_of_pattern_set(cls.patterns);
        if (mode == GapSearchMode::Maximize) {
            std::lock_guard<std::mutex> lock(mu);
            if (hooks.raise_delta(gap))
                std::erase_if(found, [&](const Candidate& c) { return c.gap < gap; });
            if (gap >= hooks.current_delta()) found.push_back({std::move(cls), std::move(gap)});
        } else if (hooks.attains(gap, delta)) {
            std::lock_guard<std::mutex> lock(mu);
            found.push_back({std::move(cls), std::move(gap)});
        }
    });

    if (mode == GapSearchMode::Maximize) {
        Rational best = hooks.current_delta();
        std::erase_if(found, [&](const Candidate& c) { return c.gap != best; });
    }
    std::sort(found.begin(), found.end(),
              [](const Candidate& a, const Candidate& b) { return a.cls.maximal < b.cls.maximal; });

    std::vector<GapHit> hits;
    hits.reserve(found.size());
    for (auto& c : found) {
        auto real = realize(c.cls);
        if (!real.realizable)
            fail(ErrorCode::ConsistencyViolation, "leaf class must be realizable");
        GapHit hit;
        hit.report = gaps(real.instance, false);
        if (hit.report.delta_proper != c.gap)
            fail(ErrorCode::ConsistencyViolation, "leaf gap disagrees with instance metrics");
        hit.cls = std::move(c.cls);
        hit.instance = std::move(real.instance);
        hits.push_back(std::move(hit));
    }
    return hits;
}

} // namespace csp
