#pragma once

#include <iosfwd>

#include "csp/rational.hpp"

namespace csp {

// ceil(4n ((n+1)/4)^((n+1)/2)), the capacity bound used by the Big-M rows.
Integer big_m_value(int n);

// Emits the direct mixed-integer model that searches for a demand-n class
// with z_D >= k and a large proper gap, in LP model text format. Binary
// y_<mask> select the feasible pattern set, integer lengths l<i> and the
// capacity L realize it through Big-M rows, continuous x_<mask> give a
// proper-relaxation value, and layered binaries yL<i>_<mask> force the
// integer optimum to at least k. Objective: maximize k - sum(x).
// Deterministic: identical bytes for identical (n, k).
void emit_direct_model(int n, int k, std::ostream& out);

} // namespace csp
