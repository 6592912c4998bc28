#ifndef TREESPREAD_GENERATORS_HPP
#define TREESPREAD_GENERATORS_HPP

#include <cstdint>

#include "treespread/graph.hpp"
#include "treespread/tree.hpp"

namespace treespread {

// Random n-vertex graph with min degree >= ceil((delta_frac + alpha) * n).
// Each edge is sampled with probability delta_frac + alpha + 0.05, then
// deficient vertices are repaired by adding edges to random non-neighbors.
// Deterministic given the seed. Requires delta_frac + alpha < 1 and n >= 10.
Graph gen_dirac_graph(int n, double delta_frac, double alpha, std::uint64_t seed);

// Random n-vertex tree with all degrees <= max_deg, grown by random
// attachment to a vertex with spare degree. Rooted at 0.
Tree gen_bounded_tree(int n, int max_deg, std::uint64_t seed);

}  // namespace treespread

#endif  // TREESPREAD_GENERATORS_HPP
