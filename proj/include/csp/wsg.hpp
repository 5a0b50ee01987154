#pragma once

#include <cstdint>
#include <vector>

#include "csp/enumeration.hpp"

namespace csp {

// Number of weighted simple games on n voters whose losing set is
// dominance-closed for the fixed voter order (one canonical representative
// per game). Runs the class enumeration with the separating-weights system
// and the zero vector losing, the all-one vector winning, and everything
// else open.
std::size_t count_weighted_games(int n, const EnumOptions& opt = {});

// LP separability of an explicit winning set: weights w >= 0 and a quota
// q >= 1 with a'w >= q exactly on the winning vectors. The winning set must
// be superset-closed, exclude the empty coalition, and include the full one.
bool is_weighted(const std::vector<std::uint32_t>& winning, int n);

} // namespace csp
