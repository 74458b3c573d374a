#include "poctrack/interval.hpp"

#include <algorithm>

#include "poctrack/maxclique.hpp"

namespace poctrack {

namespace {

std::vector<uint64_t> transverse_table(const Interval& I) {
  std::vector<uint64_t> adj(I.size(), 0);
  for (int i = 0; i < I.size(); ++i) {
    adj[i] = I.transverse_mask(i);
  }
  return adj;
}

}  // namespace

Interval Interval::between(const CubeComplex& X, int x_index, int y_index) {
  const int nv = X.num_vertices();
  if (x_index < 0 || x_index >= nv || y_index < 0 || y_index >= nv) {
    throw NotAVertexError("interval endpoints must be vertex indices");
  }
  uint64_t x = X.vertex_mask(x_index);
  uint64_t y = X.vertex_mask(y_index);
  auto data = std::make_shared<IntervalData>();
  data->from_complex = true;
  data->source = x;
  data->sink = y;
  uint64_t diff = x ^ y;
  while (diff) {
    int p = __builtin_ctzll(diff);
    diff &= diff - 1;
    data->halfspace_ids.push_back(halfspace_of(p, static_cast<int>((x >> p) & 1)));
  }
  const int n = static_cast<int>(data->halfspace_ids.size());
  data->n = n;
  data->above.assign(n, 0);
  data->below.assign(n, 0);
  const PocSet& ps = X.pocset();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && ps.less(data->halfspace_ids[i], data->halfspace_ids[j])) {
        data->above[i] |= 1ull << j;
        data->below[j] |= 1ull << i;
      }
    }
  }
  return Interval(std::move(data));
}

Interval Interval::from_poset(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 0 || n > kMaxIntervalSize) {
    throw CapacityError("intervals hold at most " + std::to_string(kMaxIntervalSize) +
                        " halfspaces, got " + std::to_string(n));
  }
  auto data = std::make_shared<IntervalData>();
  data->n = n;
  data->above.assign(n, 0);
  data->below.assign(n, 0);
  // Conceptually each element i doubles into a halfspace pair of a fresh
  // pocset whose only relations are the given ones (plus involution images
  // on the unused complements), with the interval running between the two
  // uniform orientations; only the local rows are materialized.
  for (int i = 0; i < n; ++i) data->halfspace_ids.push_back(2 * i);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw IndexError("poset relation index out of range");
    }
    if (a == b) throw CycleError("poset relation i < i");
    data->above[a] |= 1ull << b;
  }
  for (int mid = 0; mid < n; ++mid) {
    for (int i = 0; i < n; ++i) {
      if ((data->above[i] >> mid) & 1) data->above[i] |= data->above[mid];
    }
  }
  for (int i = 0; i < n; ++i) {
    if ((data->above[i] >> i) & 1) throw CycleError("poset relations contain a cycle");
  }
  for (int i = 0; i < n; ++i) {
    uint64_t up = data->above[i];
    while (up) {
      int j = __builtin_ctzll(up);
      up &= up - 1;
      data->below[j] |= 1ull << i;
    }
  }
  data->source = 0;
  data->sink = low_mask(n);
  return Interval(std::move(data));
}

int Interval::halfspace_id(int i) const {
  check_index(i);
  return data_->halfspace_ids[i];
}

uint64_t Interval::transverse_mask(int i) const {
  return all_mask() & ~(data_->above[i] | data_->below[i] | (1ull << i));
}

void Interval::check_index(int i) const {
  if (i < 0 || i >= data_->n) {
    throw IndexError("interval halfspace index " + std::to_string(i) +
                     " out of range (size " + std::to_string(data_->n) + ")");
  }
}

std::vector<int> Cross::members() const {
  std::vector<int> out;
  uint64_t b = bits;
  while (b) {
    out.push_back(__builtin_ctzll(b));
    b &= b - 1;
  }
  return out;
}

bool is_cross(const Interval& I, uint64_t bits) {
  if (bits == 0 || (bits & ~I.all_mask())) return false;
  uint64_t b = bits;
  while (b) {
    int i = __builtin_ctzll(b);
    b &= b - 1;
    if (I.above(i) & bits) return false;
  }
  return true;
}

Cross make_cross(const Interval& I, const std::vector<int>& members) {
  if (members.empty()) throw DegenerateError("a cross is nonempty");
  uint64_t bits = 0;
  for (int i : members) {
    I.check_index(i);
    bits |= 1ull << i;
  }
  if (!is_cross(I, bits)) {
    throw DegenerateError("cross members must be pairwise incomparable");
  }
  return Cross{I.data(), bits};
}

std::vector<Cross> enumerate_crosses(const Interval& I, int size_filter, int cap) {
  if (I.size() > cap) {
    throw CapacityError("cross enumeration over " + std::to_string(I.size()) +
                        " halfspaces exceeds cap " + std::to_string(cap));
  }
  std::vector<Cross> out;
  const int n = I.size();
  // Pre-order depth-first extension yields lexicographic order of the
  // ascending member lists.
  std::vector<std::pair<int, uint64_t>> stack;  // (next index to try, bits)
  uint64_t cur = 0;
  int start = 0;
  while (true) {
    int v = start;
    for (; v < n; ++v) {
      if ((I.above(v) | I.below(v)) & cur) continue;
      break;
    }
    if (v == n) {
      if (stack.empty()) break;
      start = stack.back().first + 1;
      cur = stack.back().second;
      stack.pop_back();
      continue;
    }
    uint64_t next = cur | (1ull << v);
    int sz = __builtin_popcountll(next);
    if (size_filter < 0 || sz == size_filter) out.push_back(Cross{I.data(), next});
    if (size_filter >= 0 && sz >= size_filter) {
      start = v + 1;  // supersets can only grow
    } else {
      stack.emplace_back(v, cur);
      cur = next;
      start = v + 1;
    }
  }
  return out;
}

namespace {

void require_same_interval(const Cross& a, const Cross& b) {
  if (a.iv != b.iv) {
    throw MixedIntervalError("crosses belong to different intervals");
  }
}

}  // namespace

Cross meet(const Cross& a, const Cross& b) {
  require_same_interval(a, b);
  uint64_t u = a.bits | b.bits;
  uint64_t out = 0;
  uint64_t scan = u;
  while (scan) {
    int i = __builtin_ctzll(scan);
    scan &= scan - 1;
    if ((a.iv->below[i] & u) == 0) out |= 1ull << i;
  }
  return Cross{a.iv, out};
}

Cross join(const Cross& a, const Cross& b) {
  require_same_interval(a, b);
  uint64_t u = a.bits | b.bits;
  uint64_t out = 0;
  uint64_t scan = u;
  while (scan) {
    int i = __builtin_ctzll(scan);
    scan &= scan - 1;
    if ((a.iv->above[i] & u) == 0) out |= 1ull << i;
  }
  return Cross{a.iv, out};
}

bool is_adjacent(const Interval& I, int h, int k) {
  I.check_index(h);
  I.check_index(k);
  return I.less(h, k) && (I.above(h) & I.below(k)) == 0;
}

std::vector<int> adjacent_above(const Interval& I, int h) {
  I.check_index(h);
  std::vector<int> out;
  uint64_t up = I.above(h);
  while (up) {
    int k = __builtin_ctzll(up);
    up &= up - 1;
    if ((I.above(h) & I.below(k)) == 0) out.push_back(k);
  }
  return out;
}

uint64_t intercross_h_eligible(const Interval& I, int h) {
  I.check_index(h);
  return I.transverse_mask(h);
}

uint64_t intercross_k_eligible(const Interval& I, int h, int k) {
  I.check_index(h);
  I.check_index(k);
  return I.above(h) & I.transverse_mask(k);
}

bool is_intercross(const Interval& I, const Cross& C, int h, int k) {
  if (C.iv != I.data()) throw MixedIntervalError("cross belongs to another interval");
  if (!is_adjacent(I, h, k)) return false;
  if (C.bits == 0 || !is_cross(I, C.bits)) return false;
  uint64_t eligible = intercross_h_eligible(I, h) | intercross_k_eligible(I, h, k);
  return (C.bits & ~eligible) == 0;
}

Intercross split_intercross(const Interval& I, const Cross& C, int h, int k) {
  if (!is_intercross(I, C, h, k)) {
    throw DegenerateError("not an intercross for the given adjacent pair");
  }
  Intercross out;
  out.cross = C;
  out.h_mask = C.bits & intercross_h_eligible(I, h);
  out.k_mask = C.bits & ~out.h_mask;
  return out;
}

std::optional<Intercross> max_intercross(const Interval& I, int h, int k) {
  if (!is_adjacent(I, h, k)) {
    throw NotAdjacentError("max_intercross requires an adjacent pair");
  }
  uint64_t eligible = intercross_h_eligible(I, h) | intercross_k_eligible(I, h, k);
  if (eligible == 0) return std::nullopt;
  auto adj = transverse_table(I);
  uint64_t witness = max_clique_witness(adj, eligible);
  Cross c{I.data(), witness};
  return split_intercross(I, c, h, k);
}

int maxdim_intercross(const Interval& I, int h, int k) {
  if (!is_adjacent(I, h, k)) {
    throw NotAdjacentError("maxdim_intercross requires an adjacent pair");
  }
  uint64_t eligible = intercross_h_eligible(I, h) | intercross_k_eligible(I, h, k);
  if (eligible == 0) return 0;
  return max_clique(transverse_table(I), eligible);
}

bool is_countercross(const Interval& I, const Cross& c2, const Intercross& C,
                     int h, int k) {
  if (c2.iv != I.data() || C.cross.iv != I.data()) {
    throw MixedIntervalError("countercross check across intervals");
  }
  I.check_index(h);
  I.check_index(k);
  if (c2.dimension() <= C.dimension()) return false;
  if (C.k_mask != 0) {
    bool hit = false;
    uint64_t scan = C.k_mask;
    while (scan && !hit) {
      int t = __builtin_ctzll(scan);
      scan &= scan - 1;
      if (c2.bits & (I.below(t) | (1ull << t))) hit = true;
    }
    if (!hit) return false;
  } else {
    if ((c2.bits & (1ull << h)) == 0) return false;
  }
  return (c2.bits & (I.above(h) | (1ull << h))) != 0;
}

// Decides whether every intercross of (h, candidate) admits a countercross,
// without enumerating intercrosses. Intercrosses with empty K_part always
// admit one (the cross plus h itself), so only K_part choices matter. For a
// K-eligible x let f1(x) be the largest cross containing some element <= x
// and some element >= h (feasible countercross sizes when x witnesses the
// K_part maximum); the candidate fails exactly when some x supports an
// intercross, among elements whose f1 does not exceed f1(x), at least as
// large as f1(x).
int find_countercrosser(const Interval& I, int h, int cap) {
  I.check_index(h);
  if (I.size() > cap) {
    throw CapacityError("find_countercrosser over " + std::to_string(I.size()) +
                        " halfspaces exceeds cap " + std::to_string(cap));
  }
  if (I.is_maximal(h)) {
    throw MaximalError("halfspace is maximal in the interval");
  }
  const int n = I.size();
  auto adj = transverse_table(I);
  std::vector<int> mtab(static_cast<size_t>(n) * n, -1);
  auto pair_max = [&](int a, int b) {
    int& slot = mtab[static_cast<size_t>(std::min(a, b)) * n + std::max(a, b)];
    if (slot < 0) {
      slot = (a == b) ? 1 + max_clique(adj, adj[a])
                      : 2 + max_clique(adj, adj[a] & adj[b]);
    }
    return slot;
  };
  uint64_t up_h = I.above(h) | (1ull << h);
  std::vector<int> f1(n, -1);
  auto f1_of = [&](int x) {
    if (f1[x] >= 0) return f1[x];
    int best = 0;
    uint64_t down_x = I.below(x) | (1ull << x);
    uint64_t da = down_x;
    while (da) {
      int a = __builtin_ctzll(da);
      da &= da - 1;
      uint64_t ub = up_h;
      while (ub) {
        int b = __builtin_ctzll(ub);
        ub &= ub - 1;
        if (a == b || ((adj[a] >> b) & 1)) best = std::max(best, pair_max(a, b));
      }
    }
    f1[x] = best;
    return best;
  };
  uint64_t h_elig = intercross_h_eligible(I, h);
  for (int k : adjacent_above(I, h)) {
    uint64_t k_elig = intercross_k_eligible(I, h, k);
    bool pass = true;
    uint64_t scan = k_elig;
    while (scan && pass) {
      int x = __builtin_ctzll(scan);
      scan &= scan - 1;
      int fx = f1_of(x);
      uint64_t ex = h_elig;
      uint64_t ys = k_elig;
      while (ys) {
        int y = __builtin_ctzll(ys);
        ys &= ys - 1;
        if (f1_of(y) <= fx) ex |= 1ull << y;
      }
      int largest_with_x = 1 + max_clique(adj, ex & adj[x]);
      if (largest_with_x >= fx) pass = false;
    }
    if (pass) return k;
  }
  throw LemmaViolationError("no adjacent halfspace above the given one is a countercrosser");
}

bool is_locally_parallel(const Interval& I, int h, int k) {
  I.check_index(h);
  I.check_index(k);
  if (!is_adjacent(I, h, k)) return false;
  int dim_hk = maxdim_intercross(I, h, k);
  for (int other : adjacent_above(I, h)) {
    if (maxdim_intercross(I, h, other) < dim_hk) return false;
  }
  return true;
}

}  // namespace poctrack
