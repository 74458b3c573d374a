#include "poctrack/maxclique.hpp"

#include <algorithm>

namespace poctrack {

namespace {

// Tomita-style expansion: vertices of `cand` are greedily colored (same
// class = pairwise non-adjacent), then explored in reverse color order with
// the color index as the remaining-growth bound.
void expand(const std::vector<uint64_t>& adj, uint64_t cand, int size, int& best) {
  if (cand == 0) {
    best = std::max(best, size);
    return;
  }
  int verts[64];
  int color[64];
  int n = 0;
  uint64_t rest = cand;
  int c = 0;
  while (rest) {
    ++c;
    uint64_t avail = rest;
    while (avail) {
      int v = __builtin_ctzll(avail);
      verts[n] = v;
      color[n] = c;
      ++n;
      rest &= ~(1ull << v);
      avail &= ~(1ull << v);
      avail &= ~adj[v];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    if (size + color[i] <= best) return;
    int v = verts[i];
    expand(adj, cand & adj[v], size + 1, best);
    cand &= ~(1ull << v);
  }
}

}  // namespace

int max_clique(const std::vector<uint64_t>& adj, uint64_t candidates) {
  int best = 0;
  expand(adj, candidates, 0, best);
  return best;
}

uint64_t max_clique_witness(const std::vector<uint64_t>& adj, uint64_t candidates) {
  int need = max_clique(adj, candidates);
  uint64_t out = 0;
  uint64_t cand = candidates;
  while (need > 0) {
    bool found = false;
    uint64_t scan = cand;
    while (scan) {
      int v = __builtin_ctzll(scan);
      scan &= scan - 1;
      // Members are picked in ascending order, so later picks must be > v.
      uint64_t higher = (v == 63) ? 0 : ~((2ull << v) - 1);
      uint64_t tail = cand & adj[v] & higher;
      if (1 + max_clique(adj, tail) >= need) {
        out |= 1ull << v;
        cand = tail;
        --need;
        found = true;
        break;
      }
    }
    if (!found) break;  // unreachable when `need` came from max_clique
  }
  return out;
}

}  // namespace poctrack
