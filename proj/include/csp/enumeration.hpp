#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <map>
#include <vector>

#include "csp/dominance.hpp"
#include "csp/pattern.hpp"
#include "csp/rational.hpp"
#include "csp/realization.hpp"
#include "csp/simplex.hpp"

namespace csp {

enum class BranchRule { SmallestNum, LargestNum, Random };

// The same recursion enumerates cutting-stock pattern classes and weighted
// simple games; only the underlying inequality system and the initial
// classification differ.
enum class SystemKind { CuttingStock, WeightedGame };

struct EnumState {
    std::vector<std::uint32_t> p_le; // minimal antichain of the feasible/losing side
    std::vector<std::uint32_t> p_gt; // minimal antichain (reverse order) of the other side
    MaskSet below_le;                // everything implied feasible/losing
    MaskSet above_gt;                // everything implied infeasible/winning
    std::size_t unclassified = 0;
    int depth = 0;

    // l_1..l_n, L (or w_1..w_n, q); shared with descendants until a new
    // constraint breaks it, so copying a state stays cheap.
    std::shared_ptr<const std::vector<Rational>> witness;
    bool witness_ok = false;

    // Scratch for branching hooks.
    bool has_suggestion = false;
    std::uint32_t suggested_branch = 0;
};

// Extension points used by the gap search: node pruning, branch choice,
// and extra infeasible-side forcings after a feasible classification.
struct EngineHooks {
    virtual ~EngineHooks() = default;
    virtual bool visit(EnumState&) { return true; }
    virtual void forced_infeasible(const EnumState&, std::uint32_t, std::vector<std::uint32_t>&) {}
};

struct EnumOptions {
    BranchRule rule = BranchRule::SmallestNum;
    std::uint64_t seed = 1; // Random rule only
    int lp_stride = 1;      // run the realizability check every d-th depth
    unsigned threads = 1;
    int split_depth = -1; // -1: auto when threads > 1
};

class ClassEnumerator {
  public:
    ClassEnumerator(int n, SystemKind kind, EnumOptions opt = {}, EngineHooks* hooks = nullptr);

    int n() const { return n_; }
    SystemKind kind() const { return kind_; }
    const DominanceTable& table() const { return dom_; }

    EnumState initial_state() const;

    // Returns false when the classification contradicts the current state;
    // the state must then be discarded.
    bool classify_feasible(EnumState& st, std::uint32_t a) const;
    bool classify_infeasible(EnumState& st, std::uint32_t a) const;

    LinearSystem state_system(const EnumState& st) const;

    // Depth-first expansion; `leaf` fires once per fully classified state.
    // Returns the number of leaves reached.
    std::size_t run(EnumState start, const std::function<void(const EnumState&)>& leaf) const;
    std::size_t run(const std::function<void(const EnumState&)>& leaf) const;

  private:
    std::size_t rec(EnumState& st, const std::function<void(const EnumState&)>& leaf,
                    int collect_depth, std::vector<EnumState>* frontier) const;
    bool ensure_witness(EnumState& st, bool force) const;
    std::uint32_t pick_branch(const EnumState& st) const;
    bool side_holds(const std::vector<Rational>& w, std::uint32_t a, bool le_side) const;

    int n_;
    SystemKind kind_;
    EnumOptions opt_;
    EngineHooks* hooks_;
    DominanceTable dom_;
};

PatternClass state_class(const EnumState& st, int n);

using ClassSink = std::function<void(const PatternClass&)>;

// All pattern-equivalence classes for demand n, one sink call per class.
std::size_t enumerate_classes(int n, const ClassSink& sink, const EnumOptions& opt = {});

// Class counts keyed by the integer optimum of a class representative.
std::map<int, std::size_t> histogram_by_zd(int n, const EnumOptions& opt = {});

} // namespace csp
