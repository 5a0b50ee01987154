#include "csp/enumeration.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <thread>

#include "csp/metrics.hpp"

namespace csp {

namespace {

LinearSystem build_weight_system(const std::vector<std::uint32_t>& losing,
                                 const std::vector<std::uint32_t>& winning, int n) {
    LinearSystem sys;
    sys.num_vars = n + 1; // w_1..w_n, q
    auto row = [&](auto fill) {
        std::vector<Rational> c(n + 1, Rational(0));
        fill(c);
        return c;
    };
    for (int i = 0; i + 1 < n; ++i)
        sys.add(row([&](auto& c) { c[i + 1] = 1; c[i] = -1; }), Rel::Ge, 0);
    sys.add(row([&](auto& c) { c[n] = 1; c[n - 1] = -1; }), Rel::Ge, 0); // w_n <= q
    sys.add(row([&](auto& c) { c[n] = 1; }), Rel::Ge, 1);               // q >= 1
    for (std::uint32_t a : losing)
        sys.add(row([&](auto& c) {
            for (int i = 0; i < n; ++i)
                if (a & (1u << i)) c[i] = 1;
            c[n] = -1;
        }), Rel::Le, -1);
    for (std::uint32_t a : winning)
        sys.add(row([&](auto& c) {
            for (int i = 0; i < n; ++i)
                if (a & (1u << i)) c[i] = 1;
            c[n] = -1;
        }), Rel::Ge, 0);
    return sys;
}

std::uint32_t first_unclassified(const EnumState& st) {
    const auto& a = st.below_le.words();
    const auto& b = st.above_gt.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t w = ~(a[i] | b[i]);
        if (w) return std::uint32_t(i * 64 + std::countr_zero(w));
    }
    return ~0u;
}

} // namespace

ClassEnumerator::ClassEnumerator(int n, SystemKind kind, EnumOptions opt, EngineHooks* hooks)
    : n_(n), kind_(kind), opt_(opt), hooks_(hooks), dom_(n) {
    if (n < 1 || n > kMaxItems) fail(ErrorCode::NTooLarge, "enumeration needs 1 <= n <= 16");
    if (opt_.lp_stride < 1) opt_.lp_stride = 1;
}

EnumState ClassEnumerator::initial_state() const {
    EnumState st;
    st.below_le = MaskSet(n_);
    st.above_gt = MaskSet(n_);
    if (kind_ == SystemKind::CuttingStock) {
        // Singletons are always feasible; e_n dominates them all.
        st.p_le.push_back(1u << (n_ - 1));
        st.below_le.set(0);
        for (int i = 0; i < n_; ++i) st.below_le.set(1u << i);
        st.unclassified = st.below_le.universe() - (std::size_t)n_ - 1;
    } else {
        st.p_le.push_back(0);
        st.below_le.set(0);
        st.p_gt.push_back(full_mask(n_));
        st.above_gt.set(full_mask(n_));
        st.unclassified = st.below_le.universe() - 2;
    }
    return st;
}

bool ClassEnumerator::side_holds(const std::vector<Rational>& w, std::uint32_t a, bool le_side) const {
    Rational s = 0;
    std::uint32_t m = a;
    while (m) {
        s += w[std::countr_zero(m)];
        m &= m - 1;
    }
    const Rational& cap = w[n_];
    if (kind_ == SystemKind::CuttingStock) return le_side ? s <= cap : s >= cap + 1;
    return le_side ? s <= cap - 1 : s >= cap;
}

bool ClassEnumerator::classify_feasible(EnumState& st, std::uint32_t a) const {
    if (st.below_le.test(a)) return true;
    const MaskSet& add = dom_.below(a);
    if (st.above_gt.intersects(add)) return false;
    std::erase_if(st.p_le, [&](std::uint32_t b) { return dom_.rel(b, a); });
    st.p_le.push_back(a);
    st.unclassified -= st.below_le.or_count(add);
    if (st.witness_ok && !side_holds(*st.witness, a, true)) st.witness_ok = false;
    return true;
}

bool ClassEnumerator::classify_infeasible(EnumState& st, std::uint32_t a) const {
    if (st.above_gt.test(a)) return true;
    const MaskSet& add = dom_.above(a);
    if (st.below_le.intersects(add)) return false;
    std::erase_if(st.p_gt, [&](std::uint32_t b) { return dom_.rel(a, b); });
    st.p_gt.push_back(a);
    st.unclassified -= st.above_gt.or_count(add);
    if (st.witness_ok && !side_holds(*st.witness, a, false)) st.witness_ok = false;
    return true;
}

LinearSystem ClassEnumerator::state_system(const EnumState& st) const {
    if (kind_ == SystemKind::CuttingStock) return build_length_system(st.p_le, st.p_gt, n_);
    return build_weight_system(st.p_le, st.p_gt, n_);
}

bool ClassEnumerator::ensure_witness(EnumState& st, bool force) const {
    if (st.witness_ok) return true;
    if (!force && st.depth % opt_.lp_stride != 0) return true; // deferred check
    auto sol = feasible(state_system(st));
    if (sol.status == LpStatus::Infeasible) return false;
    st.witness = std::make_shared<const std::vector<Rational>>(std::move(sol.values));
    st.witness_ok = true;
    return true;
}

std::uint32_t ClassEnumerator::pick_branch(const EnumState& st) const {
    if (st.has_suggestion) return st.suggested_branch;
    if (opt_.rule == BranchRule::SmallestNum) return first_unclassified(st);
    auto unclassified = [&] {
        std::vector<std::uint32_t> v;
        for (std::uint32_t m = 0; m < st.below_le.universe(); ++m)
            if (!st.below_le.test(m) && !st.above_gt.test(m)) v.push_back(m);
        return v;
    }();
    if (opt_.rule == BranchRule::LargestNum) return unclassified.back();
    static thread_local std::mt19937_64 rng(opt_.seed * 0x9e3779b97f4a7c15ull + 1);
    return unclassified[rng() % unclassified.size()];
}

std::size_t ClassEnumerator::rec(EnumState& st, const std::function<void(const EnumState&)>& leaf,
                                 int collect_depth, std::vector<EnumState>* frontier) const {
    bool is_leaf = st.unclassified == 0;
    if (!ensure_witness(st, is_leaf)) return 0;
    if (is_leaf) {
        leaf(st);
        return 1;
    }
    if (hooks_ && !hooks_->visit(st)) return 0;
    if (frontier && st.depth >= collect_depth) {
        frontier->push_back(st);
        return 0;
    }
    std::uint32_t a = pick_branch(st);
    st.has_suggestion = false;
    std::size_t total = 0;
    {
        EnumState child = st;
        ++child.depth;
        if (classify_feasible(child, a)) {
            bool alive = true;
            if (hooks_) {
                std::vector<std::uint32_t> forced;
                hooks_->forced_infeasible(child, a, forced);
                for (std::uint32_t g : forced)
                    if (!classify_infeasible(child, g)) {
                        alive = false;
                        break;
                    }
            }
            if (alive) total += rec(child, leaf, collect_depth, frontier);
        }
    }
    {
        EnumState child = std::move(st);
        ++child.depth;
        if (classify_infeasible(child, a)) total += rec(child, leaf, collect_depth, frontier);
    }
    return total;
}

std::size_t ClassEnumerator::run(EnumState start, const std::function<void(const EnumState&)>& leaf) const {
    if (opt_.threads <= 1) {
        EnumState st = std::move(start);
        return rec(st, leaf, 0, nullptr);
    }
    int split = opt_.split_depth >= 0 ? opt_.split_depth : 10;
    std::vector<EnumState> frontier;
    EnumState st = std::move(start);
    std::size_t total = rec(st, leaf, split, &frontier); // leaves above the split
    std::atomic<std::size_t> next{0}, found{total};
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < opt_.threads; ++t)
        workers.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= frontier.size()) return;
                EnumState local = std::move(frontier[i]);
                found += rec(local, leaf, 0, nullptr);
            }
        });
    for (auto& w : workers) w.join();
    return found.load();
}

std::size_t ClassEnumerator::run(const std::function<void(const EnumState&)>& leaf) const {
    return run(initial_state(), leaf);
}

PatternClass state_class(const EnumState& st, int n) {
    PatternClass c;
    c.n = n;
    c.patterns = st.below_le;
    c.maximal = st.p_le;
    std::sort(c.maximal.begin(), c.maximal.end());
    return c;
}

std::size_t enumerate_classes(int n, const ClassSink& sink, const EnumOptions& opt) {
    ClassEnumerator eng(n, SystemKind::CuttingStock, opt);
    if (opt.threads <= 1) return eng.run([&](const EnumState& st) { sink(state_class(st, n)); });
    std::mutex mu;
    return eng.run([&](const EnumState& st) {
        auto cls = state_class(st, n);
        std::lock_guard<std::mutex> lock(mu);
        sink(cls);
    });
}

std::map<int, std::size_t> histogram_by_zd(int n, const EnumOptions& opt) {
    std::map<int, std::size_t> hist;
    std::mutex mu;
    enumerate_classes(n, [&](const PatternClass& c) {
        int zd = zd_of_pattern_set(c.patterns);
        std::lock_guard<std::mutex> lock(mu);
        ++hist[zd];
    }, opt);
    return hist;
}

} // namespace csp
