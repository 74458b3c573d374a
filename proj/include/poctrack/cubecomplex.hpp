#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "poctrack/pocset.hpp"

namespace poctrack {

// The dual cube complex of a finite pocset, realized through its vertex set:
// consistent orientations. An orientation is a 64-bit mask whose bit p picks
// side side_of(mask, p) of pair p, i.e. halfspace 2p + bit. Consistency means
// the selected halfspaces are pairwise intersecting (no h selected together
// with some k < h*).
class CubeComplex {
 public:
  CubeComplex() = default;

  // Enumerates all consistent orientations. Throws CapacityError when the
  // pocset has more than pair_cap pairs.
  static CubeComplex dual(const PocSet& ps, int pair_cap = kDefaultPairCap);

  const PocSet& pocset() const { return pocset_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  uint64_t vertex_mask(int index) const { return vertices_[index]; }
  // Index of an orientation mask, or -1 if inconsistent / absent.
  int index_of(uint64_t mask) const;

  // Edge endpoints as vertex indices (first < second), sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // The pair whose side flips across edge e.
  int edge_pair(int e) const { return edge_pairs_[e]; }

  // Largest cube dimension: maximum set of pairwise transverse pairs that is
  // actually spanned, which for a finite pocset dual equals the maximum
  // clique of the crossing graph restricted to pairs realized by some edge.
  int dimension() const;

  // Crossing graph over pair indices: adj[p] bit q set iff pairs p,q are
  // transverse in the pocset.
  std::vector<uint64_t> crossing_adjacency() const;

  // Median vertex of three vertices (majority vote per pair). The median of
  // three consistent orientations is consistent; returns its index.
  int median(int xi, int yi, int zi) const;

  // Vertices selecting halfspace h, as sorted vertex indices.
  std::vector<int> halfspace_vertices(int h) const;
  bool vertex_selects(int index, int h) const {
    return ((vertices_[index] >> pair_of(h)) & 1) == static_cast<uint64_t>(side_of(h));
  }

  // Edge-path (equivalently Hamming) distance from source to every vertex.
  std::vector<int> distances_from(int source) const;

 private:
  PocSet pocset_;
  std::vector<uint64_t> vertices_;           // sorted ascending as masks
  std::vector<std::pair<int, int>> edges_;   // (i, j) with i < j, lex sorted
  std::vector<int> edge_pairs_;
};

}  // namespace poctrack
