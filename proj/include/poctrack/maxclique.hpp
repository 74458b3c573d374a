#pragma once

#include <cstdint>
#include <vector>

namespace poctrack {

// Exact maximum clique over graphs with at most 64 vertices, adjacency given
// as bitmask rows. Branch-and-bound with greedy colouring bounds; exact, not
// a heuristic.
int max_clique(const std::vector<uint64_t>& adj, uint64_t candidates);

// A maximum clique itself, chosen lexicographically smallest as a vertex set
// (smallest admissible vertex first, greedily). Deterministic.
uint64_t max_clique_witness(const std::vector<uint64_t>& adj, uint64_t candidates);

}  // namespace poctrack
