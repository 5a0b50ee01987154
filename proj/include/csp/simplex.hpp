#pragma once

#include <string>
#include <vector>

#include "csp/rational.hpp"

namespace csp {

enum class Rel { Le, Ge, Eq };

// Inequality system over nonnegative variables. Every decision taken on one
// of these is exact; there is no floating-point path.
struct LinearSystem {
    int num_vars = 0;
    std::vector<std::string> var_names; // optional, for debug dumps
    struct Row {
        std::vector<Rational> coeff;
        Rel rel;
        Rational rhs;
    };
    std::vector<Row> rows;

    void add(std::vector<Rational> coeff, Rel rel, Rational rhs);
    std::string dump() const; // "coeff ... rel rhs" lines
};

enum class LpStatus { Optimal, Feasible, Infeasible };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> values;
    Rational objective;
};

// Exact rechecking of a candidate point against every row.
bool check_solution(const LinearSystem& sys, const std::vector<Rational>& values);

// Phase-one simplex over rationals with Bland's rule. When a hint is given
// and already satisfies the system it is returned as the witness; the
// feasible/infeasible classification is always identical to a cold start.
LpSolution feasible(const LinearSystem& sys, const std::vector<Rational>* hint = nullptr);

} // namespace csp
