#pragma once

#include <cstdint>
#include <vector>

#include "csp/pattern.hpp"

namespace csp {

// Suffix-sum dominance: a <= b iff sum_{i=j..n} a_i <= sum_{i=j..n} b_i for
// every j. Compatible with any sorted length vector l_1 <= ... <= l_n: when
// a is dominated by b, l'a <= l'b, so feasible pattern sets are downward
// closed under this relation.
bool dominates(std::uint32_t a, std::uint32_t b, int n);
bool dominates(const Pattern& a, const Pattern& b);

// Precomputed relation, one bitset row per pattern in each direction so the
// enumeration can classify whole mask ranges with a few word operations.
class DominanceTable {
  public:
    explicit DominanceTable(int n);

    int n() const { return n_; }
    bool rel(std::uint32_t a, std::uint32_t b) const { return below_[b].test(a); }

    // {a : a <= b} and {b : a <= b}.
    const MaskSet& below(std::uint32_t b) const { return below_[b]; }
    const MaskSet& above(std::uint32_t a) const { return above_[a]; }

  private:
    int n_;
    std::vector<MaskSet> below_, above_;
};

DominanceTable build_table(int n);

// {a : exists b in s with a <= b}; contains s and is downward closed.
MaskSet downward_closure(const std::vector<std::uint32_t>& s, const DominanceTable& t);

// Dominance-maximal members of s (an antichain).
std::vector<std::uint32_t> maximal_elements(const std::vector<std::uint32_t>& s, const DominanceTable& t);

// Maximal members of a downward-closed set, without a table. A member is
// non-maximal iff one of its adjacent bit up-shifts or the addition of the
// lowest free bit stays inside the set.
std::vector<std::uint32_t> maximal_of_closed(const MaskSet& closed);

// True iff s is downward closed under dominance.
bool is_downward_closed(const MaskSet& s);

} // namespace csp
