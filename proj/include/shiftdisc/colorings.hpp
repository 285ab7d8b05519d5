#ifndef SHIFTDISC_COLORINGS_HPP
#define SHIFTDISC_COLORINGS_HPP

#include "shiftdisc/shift_graph.hpp"

namespace shiftdisc {

// phi(X): colors of the p = k-l+1 sliding length-l windows, stored 1-based
// (pipeline id + 1, so the 3-color pipeline yields entries in {1,2,3}).
// Consecutive windows are shift-adjacent, so consecutive entries differ.
std::vector<int> window_vector(const SortedSet& X, const ColoringPipeline& kappa);

// gamma'(X): sum of the n = k/l disjoint consecutive block colors
// (ids 0..2) mod c. Refuses pipelines that are not 3-color, because the
// analysis needs block-color gaps in {1,2}.
int gamma_explicit(const SortedSet& X, const ColoringPipeline& kappa, int c);

// gamma(X) = psi(phi(X)) with psi a fixed seeded hash: starting from the
// seed, each window color v is absorbed as
//   state = splitmix64_mix(state ^ (v + 0x9e3779b97f4a7c15)),
// and the sign is +1 on odd final state, -1 on even.
int gamma_randomized(const SortedSet& X, const ColoringPipeline& kappa,
                     std::uint64_t seed);

} // namespace shiftdisc

#endif
