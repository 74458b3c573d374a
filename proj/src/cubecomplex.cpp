#include "poctrack/cubecomplex.hpp"

#include <algorithm>
#include <queue>

#include "poctrack/errors.hpp"
#include "poctrack/maxclique.hpp"

namespace poctrack {

CubeComplex CubeComplex::dual(const PocSet& ps, int pair_cap) {
  const int n = ps.pairs();
  if (n > pair_cap) {
    throw CapacityError("dual enumeration over " + std::to_string(n) +
                        " pairs exceeds cap " + std::to_string(pair_cap));
  }
  if (n > 30) throw CapacityError("dual enumeration is 2^pairs; 30 pairs maximum");
  CubeComplex X;
  X.pocset_ = ps;

  // Selecting h forces, for every k > h, the side of pair_of(k) that k is on.
  const int m = 2 * n;
  std::vector<uint64_t> force_mask(m, 0), force_bits(m, 0);
  for (int h = 0; h < m; ++h) {
    uint64_t up = ps.above(h);
    while (up) {
      int k = __builtin_ctzll(up);
      up &= up - 1;
      force_mask[h] |= 1ull << pair_of(k);
      if (side_of(k)) force_bits[h] |= 1ull << pair_of(k);
    }
  }
  for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (int p = 0; p < n; ++p) {
      int h = halfspace_of(p, static_cast<int>((mask >> p) & 1));
      if ((mask ^ force_bits[h]) & force_mask[h]) {
        ok = false;
        break;
      }
    }
    if (ok) X.vertices_.push_back(mask);
  }
  for (int i = 0; i < static_cast<int>(X.vertices_.size()); ++i) {
    uint64_t mask = X.vertices_[i];
    for (int p = 0; p < n; ++p) {
      uint64_t other = mask ^ (1ull << p);
      if (other < mask) continue;
      int j = X.index_of(other);
      if (j >= 0) {
        X.edges_.emplace_back(i, j);
        X.edge_pairs_.push_back(p);
      }
    }
  }
  return X;
}

int CubeComplex::index_of(uint64_t mask) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), mask);
  if (it == vertices_.end() || *it != mask) return -1;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<uint64_t> CubeComplex::crossing_adjacency() const {
  const int n = pocset_.pairs();
  std::vector<uint64_t> adj(n, 0);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (pocset_.transverse(2 * p, 2 * q)) {
        adj[p] |= 1ull << q;
        adj[q] |= 1ull << p;
      }
    }
  }
  return adj;
}

int CubeComplex::dimension() const {
  const int n = pocset_.pairs();
  if (n == 0) return 0;
  // Pairwise transverse pairs always span a cube in the dual of a finite
  // pocset, so the crossing-graph clique number is the exact dimension.
  return max_clique(crossing_adjacency(), (1ull << n) - 1);
}

int CubeComplex::median(int xi, int yi, int zi) const {
  const int nv = num_vertices();
  if (xi < 0 || xi >= nv || yi < 0 || yi >= nv || zi < 0 || zi >= nv) {
    throw NotAVertexError("median arguments must be vertex indices");
  }
  uint64_t x = vertices_[xi], y = vertices_[yi], z = vertices_[zi];
  uint64_t mmask = (x & y) | (y & z) | (x & z);
  int idx = index_of(mmask);
  if (idx < 0) throw Error("median of consistent orientations must be consistent");
  return idx;
}

std::vector<int> CubeComplex::halfspace_vertices(int h) const {
  std::vector<int> out;
  for (int i = 0; i < num_vertices(); ++i) {
    if (vertex_selects(i, h)) out.push_back(i);
  }
  return out;
}

std::vector<int> CubeComplex::distances_from(int source) const {
  const int nv = num_vertices();
  if (source < 0 || source >= nv) {
    throw NotAVertexError("distances_from needs a vertex index");
  }
  std::vector<std::vector<int>> nbr(nv);
  for (auto [a, b] : edges_) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  std::vector<int> dist(nv, -1);
  std::queue<int> bfs;
  dist[source] = 0;
  bfs.push(source);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : nbr[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        bfs.push(w);
      }
    }
  }
  return dist;
}

}  // namespace poctrack
