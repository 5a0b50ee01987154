#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csp/dominance.hpp"
#include "csp/instance.hpp"
#include "csp/pattern.hpp"
#include "csp/simplex.hpp"

namespace csp {

// One pattern-equivalence class: a dominance-downward-closed pattern set,
// canonically carried by its maximal antichain.
struct PatternClass {
    int n = 0;
    MaskSet patterns;
    std::vector<std::uint32_t> maximal; // ascending mask order

    bool operator==(const PatternClass& o) const { return n == o.n && patterns == o.patterns; }
};

// Builds the downward closure of the given masks (no table required).
PatternClass class_from_maximal(int n, std::vector<std::uint32_t> masks);

// {a : l'a <= L}, downward closed and containing every <=1-bit pattern.
PatternClass proper_patterns(const Instance& e);

// Realizability system of a fully classified pattern set: ordered lengths,
// l'a <= L on the feasible side, l'a >= L+1 on the infeasible side.
// Variables are l_1..l_n, L. Both sides may be thinned to antichains.
LinearSystem build_length_system(const std::vector<std::uint32_t>& le,
                                 const std::vector<std::uint32_t>& gt, int n);

// True iff some instance E has le subset of P^p(E) and gt disjoint from it.
bool partially_realizable(const std::vector<std::uint32_t>& p_le,
                          const std::vector<std::uint32_t>& p_gt, int n);

struct RealizeOutcome {
    bool realizable = false;
    Instance instance;
};

// Integer instance with proper_patterns(instance) == c.patterns, obtained by
// scaling an exact LP witness to integers; round-trip checked before return.
RealizeOutcome realize(const PatternClass& c);

// Class text format: "n k m_1 ... m_k", maximal masks in decreasing order.
std::string format_class_line(const PatternClass& c);
PatternClass parse_class_line(const std::string& line);

} // namespace csp
