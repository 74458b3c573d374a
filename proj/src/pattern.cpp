#include "poctrack/pattern.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "poctrack/cover.hpp"
#include "poctrack/maxclique.hpp"

namespace poctrack {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Union-find over vertices carrying the color offset to the root; merging
// with an inconsistent offset is reported to the caller.
struct ParityDsu {
  std::vector<int> parent;
  std::vector<uint8_t> offset;  // color(x) xor color(parent chain root)
  explicit ParityDsu(int n) : parent(n), offset(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, uint8_t> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, off] = find(parent[x]);
    parent[x] = root;
    offset[x] ^= off;
    return {root, offset[x]};
  }
  // False on a parity conflict.
  bool unite(int a, int b, uint8_t parity) {
    auto [ra, oa] = find(a);
    auto [rb, ob] = find(b);
    if (ra == rb) return (oa ^ ob) == parity;
    parent[ra] = rb;
    offset[ra] = oa ^ ob ^ parity;
    return true;
  }
};

}  // namespace

Complex2 Complex2::make(int num_vertices, std::vector<std::pair<int, int>> edges,
                        std::vector<std::array<int, 3>> triangles) {
  if (num_vertices < 0) throw ComplexError("negative vertex count");
  Complex2 K;
  K.num_vertices = num_vertices;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw ComplexError("edge endpoint out of range");
    }
    if (u >= v) throw ComplexError("edge endpoints must be strictly ascending");
  }
  for (size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i - 1] < edges[i])) {
      throw ComplexError("edge list must be strictly sorted");
    }
  }
  K.edges = std::move(edges);
  for (auto& t : triangles) {
    if (!(t[0] < t[1] && t[1] < t[2])) {
      throw ComplexError("triangle vertices must be strictly ascending");
    }
    if (t[0] < 0 || t[2] >= num_vertices) {
      throw ComplexError("triangle vertex out of range");
    }
  }
  for (size_t i = 1; i < triangles.size(); ++i) {
    if (!(triangles[i - 1] < triangles[i])) {
      throw ComplexError("triangle list must be strictly sorted");
    }
  }
  K.triangles = std::move(triangles);
  K.edge_tris.assign(K.edges.size(), {});
  for (int t = 0; t < K.num_triangles(); ++t) {
    auto [a, b, c] = K.triangles[static_cast<size_t>(t)];
    int ab = K.edge_id(a, b), ac = K.edge_id(a, c), bc = K.edge_id(b, c);
    if (ab < 0 || ac < 0 || bc < 0) {
      throw ComplexError("triangle " + std::to_string(t) + " is missing an edge");
    }
    K.tri_edges.push_back({ab, ac, bc});
    K.edge_tris[ab].push_back(t);
    K.edge_tris[ac].push_back(t);
    K.edge_tris[bc].push_back(t);
  }
  return K;
}

int Complex2::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

bool Complex2::connected() const {
  if (num_vertices <= 1) return true;
  Dsu dsu(num_vertices);
  for (auto [u, v] : edges) dsu.unite(u, v);
  int root = dsu.find(0);
  for (int v = 1; v < num_vertices; ++v) {
    if (dsu.find(v) != root) return false;
  }
  return true;
}

int Drawing::num_points() const {
  int total = 0;
  for (int c : edge_points) total += c;
  return total;
}

int Drawing::point_edge(int point) const {
  auto it = std::upper_bound(point_base.begin(), point_base.end(), point);
  return static_cast<int>(it - point_base.begin()) - 1;
}

Drawing validate_drawing(const Complex2& K, const RawDrawing& raw) {
  if (static_cast<int>(raw.edge_points.size()) != K.num_edges()) {
    throw IndexError("one point count per edge required");
  }
  Drawing D;
  D.complex = K;
  D.edge_points = raw.edge_points;
  D.chords = raw.chords;
  D.point_base.resize(K.num_edges());
  int base = 0;
  for (int e = 0; e < K.num_edges(); ++e) {
    if (raw.edge_points[e] < 0) throw IndexError("negative point count");
    D.point_base[e] = base;
    base += raw.edge_points[e];
  }
  for (const RawChord& c : raw.chords) {
    if (c.tri < 0 || c.tri >= K.num_triangles()) throw IndexError("chord triangle out of range");
    const auto& te = K.tri_edges[c.tri];
    for (int e : {c.e1, c.e2}) {
      if (e < 0 || e >= K.num_edges()) throw IndexError("chord edge out of range");
      if (e != te[0] && e != te[1] && e != te[2]) {
        throw IndexError("chord endpoint on an edge outside its triangle");
      }
    }
    if (c.r1 < 0 || c.r1 >= raw.edge_points[c.e1] || c.r2 < 0 ||
        c.r2 >= raw.edge_points[c.e2]) {
      throw IndexError("chord endpoint rank out of range");
    }
    if (c.e1 == c.e2) throw DistinctEdgeError("chord endpoints on one edge");
  }
  // No two chords of one triangle share an endpoint.
  std::map<std::pair<int, int>, int> seen;  // (triangle, point) -> chord
  for (size_t i = 0; i < raw.chords.size(); ++i) {
    const RawChord& c = raw.chords[i];
    for (int p : {D.point_id(c.e1, c.r1), D.point_id(c.e2, c.r2)}) {
      auto [it, fresh] = seen.emplace(std::make_pair(c.tri, p), static_cast<int>(i));
      if (!fresh) {
        throw SharedEndpointError("chords " + std::to_string(it->second) + " and " +
                                  std::to_string(i) + " share a point in triangle " +
                                  std::to_string(c.tri));
      }
    }
  }
  // Every point on an edge has one chord in every triangle containing it.
  for (int e = 0; e < K.num_edges(); ++e) {
    for (int t : K.edge_tris[e]) {
      for (int r = 0; r < raw.edge_points[e]; ++r) {
        if (!seen.count({t, D.point_id(e, r)})) {
          throw MatchingError("point " + std::to_string(r) + " on edge " +
                              std::to_string(e) + " has no chord in triangle " +
                              std::to_string(t));
        }
      }
    }
  }
  return D;
}

std::vector<Track> extract_pretracks(const Drawing& D) {
  const int np = D.num_points();
  Dsu dsu(np);
  for (const RawChord& c : D.chords) {
    dsu.unite(D.point_id(c.e1, c.r1), D.point_id(c.e2, c.r2));
  }
  std::map<int, Track> comp;  // root -> track (keys give min-point order)
  for (int p = 0; p < np; ++p) comp[dsu.find(p)].points.push_back(p);
  for (size_t i = 0; i < D.chords.size(); ++i) {
    const RawChord& c = D.chords[i];
    comp[dsu.find(D.point_id(c.e1, c.r1))].chords.push_back(static_cast<int>(i));
  }
  // Roots are arbitrary representatives; order components by least point.
  std::vector<Track> out;
  out.reserve(comp.size());
  for (auto& [root, t] : comp) out.push_back(std::move(t));
  std::sort(out.begin(), out.end(),
            [](const Track& a, const Track& b) { return a.points[0] < b.points[0]; });
  return out;
}

namespace {

// Position of a marked point along the cyclic boundary walk v0 -> v1 -> v2 ->
// v0 of its triangle; the first two legs traverse their edges by ascending
// rank, the returning leg descends.
int boundary_position(const Drawing& D, int tri, int e, int r) {
  const auto& te = D.complex.tri_edges[tri];
  int e01 = te[0], e02 = te[1], e12 = te[2];
  int n01 = D.edge_points[e01], n12 = D.edge_points[e12], n02 = D.edge_points[e02];
  if (e == e01) return r;
  if (e == e12) return n01 + r;
  if (e == e02) return n01 + n12 + (n02 - 1 - r);
  throw IndexError("point not on the triangle boundary");
}

}  // namespace

bool chords_interleave(const Drawing& D, int chord_a, int chord_b) {
  const RawChord& a = D.chords[chord_a];
  const RawChord& b = D.chords[chord_b];
  if (a.tri != b.tri) return false;
  int pa1 = boundary_position(D, a.tri, a.e1, a.r1);
  int pa2 = boundary_position(D, a.tri, a.e2, a.r2);
  int pb1 = boundary_position(D, b.tri, b.e1, b.r1);
  int pb2 = boundary_position(D, b.tri, b.e2, b.r2);
  if (pa1 > pa2) std::swap(pa1, pa2);
  // b's endpoints must straddle the segment [pa1, pa2] of the circle.
  bool in1 = pa1 < pb1 && pb1 < pa2;
  bool in2 = pa1 < pb2 && pb2 < pa2;
  return in1 != in2;
}

bool is_self_intersecting(const Drawing& D, const Track& t) {
  for (size_t i = 0; i < t.chords.size(); ++i) {
    for (size_t j = i + 1; j < t.chords.size(); ++j) {
      if (chords_interleave(D, t.chords[i], t.chords[j])) return true;
    }
  }
  return false;
}

bool tracks_intersect(const Drawing& D, const Track& a, const Track& b) {
  for (int ca : a.chords) {
    for (int cb : b.chords) {
      if (chords_interleave(D, ca, cb)) return true;
    }
  }
  return false;
}

namespace {

void require_simply_connected(const Complex2& K, Verify sc) {
  if (sc == Verify::kAssume) return;
  if (!is_simply_connected(K)) {
    throw SimplyConnectedRequiredError("complex is not simply connected");
  }
}

}  // namespace

Bipartition track_halfspaces(const Drawing& D, const Track& t, Verify sc) {
  const Complex2& K = D.complex;
  require_simply_connected(K, sc);
  if (K.num_vertices > 64) throw CapacityError("vertex bipartitions need <= 64 vertices");
  std::vector<int> points_on_edge(K.num_edges(), 0);
  for (int p : t.points) ++points_on_edge[D.point_edge(p)];
  ParityDsu dsu(K.num_vertices);
  for (int e = 0; e < K.num_edges(); ++e) {
    auto [u, v] = K.edges[e];
    if (!dsu.unite(u, v, static_cast<uint8_t>(points_on_edge[e] & 1))) {
      throw ParityConflictError("no consistent two-coloring across edge " +
                                std::to_string(e));
    }
  }
  auto [root0, off0] = dsu.find(0);
  Bipartition side0 = 0;
  for (int v = 0; v < K.num_vertices; ++v) {
    auto [root, off] = dsu.find(v);
    if (root == root0 && off == off0) side0 |= 1ull << v;
  }
  uint64_t all = low_mask(K.num_vertices);
  if (side0 == all) throw SingleClassError("track separates no vertices");
  return side0;
}

int pattern_d(const Drawing& D, Verify sc) {
  require_simply_connected(D.complex, sc);
  auto tracks = extract_pretracks(D);
  const int n = static_cast<int>(tracks.size());
  if (n > 64) throw CapacityError("clique search supports <= 64 tracks");
  if (n == 0) return 0;
  std::vector<uint64_t> adj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (tracks_intersect(D, tracks[i], tracks[j])) {
        adj[i] |= 1ull << j;
        adj[j] |= 1ull << i;
      }
    }
  }
  return max_clique(adj, low_mask(n));
}

std::vector<std::vector<int>> parallelism_classes(const Drawing& D, Verify sc) {
  require_simply_connected(D.complex, sc);
  auto tracks = extract_pretracks(D);
  std::vector<std::vector<int>> classes;
  std::vector<Bipartition> reps;
  for (size_t i = 0; i < tracks.size(); ++i) {
    Bipartition b = track_halfspaces(D, tracks[i], Verify::kAssume);
    auto it = std::find(reps.begin(), reps.end(), b);
    if (it == reps.end()) {
      reps.push_back(b);
      classes.push_back({static_cast<int>(i)});
    } else {
      classes[static_cast<size_t>(it - reps.begin())].push_back(static_cast<int>(i));
    }
  }
  return classes;
}

RawDrawing deduplicate_pattern(const Drawing& D, Verify sc) {
  auto classes = parallelism_classes(D, sc);
  auto tracks = extract_pretracks(D);

  std::vector<char> keep_point(static_cast<size_t>(D.num_points()), 0);
  std::vector<char> keep_chord(D.chords.size(), 0);
  for (const auto& cls : classes) {
    const Track& t = tracks[static_cast<size_t>(cls[0])];
    for (int p : t.points) keep_point[static_cast<size_t>(p)] = 1;
    for (int c : t.chords) keep_chord[static_cast<size_t>(c)] = 1;
  }

  const int ne = static_cast<int>(D.edge_points.size());
  RawDrawing out;
  out.edge_points.assign(static_cast<size_t>(ne), 0);
  std::vector<int> new_rank(static_cast<size_t>(D.num_points()), -1);
  for (int e = 0; e < ne; ++e) {
    int next = 0;
    for (int r = 0; r < D.edge_points[static_cast<size_t>(e)]; ++r) {
      int p = D.point_id(e, r);
      if (keep_point[static_cast<size_t>(p)]) new_rank[static_cast<size_t>(p)] = next++;
    }
    out.edge_points[static_cast<size_t>(e)] = next;
  }
  for (size_t c = 0; c < D.chords.size(); ++c) {
    if (!keep_chord[c]) continue;
    RawChord rc = D.chords[c];
    rc.r1 = new_rank[static_cast<size_t>(D.point_id(rc.e1, rc.r1))];
    rc.r2 = new_rank[static_cast<size_t>(D.point_id(rc.e2, rc.r2))];
    out.chords.push_back(rc);
  }
  return out;
}

PatternDual pattern_dual(const Drawing& D, Verify sc, int pair_cap) {
  const Complex2& K = D.complex;
  require_simply_connected(K, sc);
  PatternDual X;
  auto tracks = extract_pretracks(D);
  X.classes = parallelism_classes(D, Verify::kAssume);
  const int n = static_cast<int>(X.classes.size());
  if (n > kMaxPairs) throw CapacityError("too many parallelism classes");
  X.class_of_track.assign(tracks.size(), -1);
  for (int c = 0; c < n; ++c) {
    X.class_rep.push_back(X.classes[c][0]);
    for (int t : X.classes[c]) X.class_of_track[t] = c;
    X.class_vset0.push_back(track_halfspaces(D, tracks[X.classes[c][0]], Verify::kAssume));
  }
  uint64_t all = low_mask(K.num_vertices);
  auto vset = [&](int h) {
    uint64_t s = X.class_vset0[pair_of(h)];
    return side_of(h) == 0 ? s : (all & ~s);
  };
  std::vector<std::pair<int, int>> rels;
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      if (pair_of(a) == pair_of(b)) continue;
      uint64_t va = vset(a), vb = vset(b);
      if (va != vb && (va & ~vb) == 0) rels.emplace_back(a, b);
    }
  }
  X.pocset = PocSet::build(n, rels);
  X.complex = CubeComplex::dual(X.pocset, pair_cap);
  for (int v = 0; v < K.num_vertices; ++v) {
    uint64_t mask = 0;
    for (int p = 0; p < n; ++p) {
      if (((X.class_vset0[p] >> v) & 1) == 0) mask |= 1ull << p;
    }
    int idx = X.complex.index_of(mask);
    if (idx < 0) throw Error("pattern vertex maps to no dual vertex");
    X.vertex_image.push_back(idx);
  }
  return X;
}

PocSet pattern_pocset(const Drawing& D, Verify sc) {
  return pattern_dual(D, sc).pocset;
}

CategoryReport classify_halfspace_categories(const Drawing& D, const PatternDual& X,
                                             Verify sc) {
  const Complex2& K = D.complex;
  require_simply_connected(K, sc);
  for (const auto& cls : X.classes) {
    if (cls.size() > 1) throw ParallelTracksError("pattern has parallel tracks");
  }
  auto tracks = extract_pretracks(D);
  CategoryReport rep;
  rep.d = pattern_d(D, Verify::kAssume);
  const int n = X.pocset.pairs();
  rep.categories.assign(static_cast<size_t>(2 * n), 0);

  // Category 1: the class representative lives on a triangle-free edge.
  for (int p = 0; p < n; ++p) {
    const Track& t = tracks[X.class_rep[p]];
    if (!t.chords.empty()) continue;
    int e = D.point_edge(t.points[0]);
    if (K.edge_tris[e].empty()) {
      rep.categories[halfspace_of(p, 0)] |= 1;
      rep.categories[halfspace_of(p, 1)] |= 1;
    }
  }

  // Category 2: maximal in the interval of a directed edge.
  rep.maximal_per_directed_interval.assign(2 * K.edges.size(), 0);
  for (int e = 0; e < K.num_edges(); ++e) {
    for (int dir = 0; dir < 2; ++dir) {
      int x = dir == 0 ? K.edges[e].first : K.edges[e].second;
      int y = dir == 0 ? K.edges[e].second : K.edges[e].first;
      Interval I = Interval::between(X.complex, X.vertex_image[x], X.vertex_image[y]);
      int count = 0;
      for (int i = 0; i < I.size(); ++i) {
        if (I.is_maximal(i)) {
          rep.categories[I.halfspace_id(i)] |= 2;
          ++count;
        }
      }
      rep.maximal_per_directed_interval[2 * e + dir] = count;
      rep.max_maximal_per_directed_interval =
          std::max(rep.max_maximal_per_directed_interval, count);
    }
  }

  // Categories 3, 4, 5 range over ordered corners (x, y, z) of each triangle.
  for (int t = 0; t < K.num_triangles(); ++t) {
    const auto& tri = K.triangles[t];
    for (int ix = 0; ix < 3; ++ix) {
      for (int iy = 0; iy < 3; ++iy) {
        if (iy == ix) continue;
        int iz = 3 - ix - iy;
        int xb = X.vertex_image[tri[ix]];
        int yb = X.vertex_image[tri[iy]];
        int zb = X.vertex_image[tri[iz]];
        Interval I1 = Interval::between(X.complex, xb, yb);
        int m = X.complex.median(xb, yb, zb);
        Interval I2 = Interval::between(X.complex, xb, zb);
        Interval I1r = Interval::between(X.complex, yb, xb);
        Interval I2r = Interval::between(X.complex, zb, xb);
        auto find_in = [](const Interval& I, int ambient) {
          const auto& ids = I.data()->halfspace_ids;
          auto it = std::lower_bound(ids.begin(), ids.end(), ambient);
          if (it == ids.end() || *it != ambient) return -1;
          return static_cast<int>(it - ids.begin());
        };
        for (int ih = 0; ih < I1.size(); ++ih) {
          for (int ik : adjacent_above(I1, ih)) {
            if (!is_locally_parallel(I1, ih, ik)) continue;
            int ha = I1.halfspace_id(ih), ka = I1.halfspace_id(ik);
            if (!X.complex.vertex_selects(m, ha) && X.complex.vertex_selects(m, ka)) {
              rep.categories[ha] |= 4;
            }
            int jh = find_in(I2, ha), jk = find_in(I2, ka);
            if (jh >= 0 && jk >= 0 && !is_locally_parallel(I2, jh, jk)) {
              rep.categories[ha] |= 8;
            }
          }
        }
        for (int ih = 0; ih < I1r.size(); ++ih) {
          for (int ik : adjacent_above(I1r, ih)) {
            if (!is_locally_parallel(I1r, ih, ik)) continue;
            int ha = I1r.halfspace_id(ih), ka = I1r.halfspace_id(ik);
            int jh = find_in(I2r, ha), jk = find_in(I2r, ka);
            if (jh >= 0 && jk >= 0 && !is_locally_parallel(I2r, jh, jk)) {
              rep.categories[ha] |= 16;
            }
          }
        }
      }
    }
  }

  rep.covered = true;
  rep.category5_empty = true;
  for (uint8_t c : rep.categories) {
    if ((c & 0b1111) == 0) rep.covered = false;
    if (c & 16) rep.category5_empty = false;
  }
  return rep;
}

CategoryReport classify_halfspace_categories(const Drawing& D, Verify sc) {
  require_simply_connected(D.complex, sc);
  PatternDual X = pattern_dual(D, Verify::kAssume);
  return classify_halfspace_categories(D, X, Verify::kAssume);
}

}  // namespace poctrack
