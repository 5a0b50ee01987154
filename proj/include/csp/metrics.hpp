#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csp/instance.hpp"
#include "csp/pattern.hpp"
#include "csp/rational.hpp"
#include "csp/realization.hpp"

namespace csp {

struct BoundFlags {
    bool zd_is_1 = false;      // sum(l) <= L
    bool zd_le_2 = false;      // some a with both a and 1-a proper
    Rational zcp_lb = 1;       // best applicable lower bound on z_C^p
    bool zcp_lb_strict = false;
    bool chan_ok = false;      // z_D <= 4/3 * ceil(z_C^p)
};

struct GapReport {
    int z_d = 0;
    Rational z_c_proper;
    std::optional<Rational> z_c_feasible;
    std::optional<Rational> delta;  // z_D - z_C^f
    Rational delta_proper;          // z_D - z_C^p
    BoundFlags flags;

    bool proper_irup() const { return delta_proper < 1; }
};

// Integer optimum over a downward-closed unit-demand pattern set.
int zd_of_pattern_set(const MaskSet& patterns);

// Primary method: branch and bound over proper pattern columns with the
// ceil(z_C^p) root bound and a first-fit-decreasing incumbent.
int zd_bnb(const Instance& e);

// Independent oracle: dynamic program over item subsets.
int zd_subset_dp(const Instance& e);

Rational z_c_proper(const Instance& e);
Rational z_c_of_pattern_set(const MaskSet& patterns);

inline constexpr std::size_t kDefaultPatternCap = 1000000;

// All integer feasible patterns {a >= 0 : l'a <= L} except the zero pattern.
std::vector<std::vector<long long>> enumerate_feasible_patterns(const InstanceM& e,
                                                                std::size_t cap = kDefaultPatternCap);

Rational z_c_feasible(const InstanceM& e, std::size_t cap = kDefaultPatternCap);

BoundFlags bound_flags(const Instance& e, const GapReport& r);

GapReport gaps(const Instance& e, bool want_feasible, std::size_t cap = kDefaultPatternCap);
GapReport gaps(const InstanceM& e, bool want_feasible, std::size_t cap = kDefaultPatternCap);

// Replaces L by the largest attainable proper pattern length; the proper
// pattern set is unchanged.
Instance tighten_capacity(const Instance& e);

// id, n, L, z_D, z_C^p, z_C^f (may be empty), delta_p, proper-IRUP flag.
std::string gap_csv_row(const std::string& id, const Instance& e, const GapReport& r);

} // namespace csp
