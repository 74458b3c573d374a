#include "poctrack/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace poctrack {

namespace {

// Development state: nodes are lifted vertices carrying a base label, sigma
// holds the lifted edges as a partial map (node, directed base edge) -> node,
// and a union-find absorbs coincidences forced by triangle closure. Directed
// base edge ids are 2*edge + direction (0 from the smaller endpoint).
struct Development {
  const Complex2& base;
  std::vector<int> label;                  // base vertex per node
  std::vector<int> parent;                 // union-find
  std::vector<std::map<int, int>> sigma;   // per node, directed edge -> node
  std::vector<std::pair<int, int>> unions; // pending identifications

  explicit Development(const Complex2& K, int base_vertex) : base(K) {
    label.push_back(base_vertex);
    parent.push_back(0);
    sigma.emplace_back();
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  int head(int de) const {
    auto [u, v] = base.edges[de >> 1];
    return (de & 1) ? u : v;
  }
  int tail(int de) const {
    auto [u, v] = base.edges[de >> 1];
    return (de & 1) ? v : u;
  }

  int fresh(int base_vertex) {
    int id = static_cast<int>(label.size());
    label.push_back(base_vertex);
    parent.push_back(id);
    sigma.emplace_back();
    return id;
  }

  // Records sigma(u, de) = v together with the reverse edge; disagreement
  // with an existing entry queues an identification instead.
  void set_edge(int u, int de, int v) {
    u = find(u);
    v = find(v);
    auto it = sigma[u].find(de);
    if (it == sigma[u].end()) {
      sigma[u][de] = v;
      set_edge(v, de ^ 1, u);
    } else if (find(it->second) != v) {
      unions.emplace_back(it->second, v);
    }
  }

  void process_unions() {
    while (!unions.empty()) {
      auto [a, b] = unions.back();
      unions.pop_back();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (sigma[a].size() > sigma[b].size()) std::swap(a, b);
      parent[a] = b;
      for (auto [de, t] : sigma[a]) {
        auto it = sigma[b].find(de);
        if (it == sigma[b].end()) {
          sigma[b][de] = t;
        } else if (find(it->second) != find(t)) {
          unions.emplace_back(it->second, t);
        }
      }
      sigma[a].clear();
    }
  }

  // One pass of triangle closure; true when something changed.
  bool close_triangles() {
    bool changed = false;
    for (int u = 0; u < static_cast<int>(label.size()); ++u) {
      if (find(u) != u) continue;
      int a = label[u];
      for (int t = 0; t < base.num_triangles(); ++t) {
        const auto& tri = base.triangles[t];
        for (int corner = 0; corner < 3; ++corner) {
          if (tri[corner] != a) continue;
          int b = tri[(corner + 1) % 3];
          int c = tri[(corner + 2) % 3];
          int eab = base.edge_id(a, b), eac = base.edge_id(a, c);
          int ebc = base.edge_id(b, c);
          int de_ab = 2 * eab + (base.edges[eab].first == a ? 0 : 1);
          int de_ac = 2 * eac + (base.edges[eac].first == a ? 0 : 1);
          int de_bc = 2 * ebc + (base.edges[ebc].first == b ? 0 : 1);
          auto itx = sigma[u].find(de_ab);
          auto ity = sigma[u].find(de_ac);
          if (itx == sigma[u].end() || ity == sigma[u].end()) continue;
          int x = find(itx->second), y = find(ity->second);
          auto itz = sigma[x].find(de_bc);
          if (itz == sigma[x].end() || find(itz->second) != y) {
            set_edge(x, de_bc, y);
            changed = true;
          }
        }
      }
      process_unions();
    }
    return changed;
  }

  std::vector<int> bfs_depths() {
    std::vector<int> depth(label.size(), -1);
    std::queue<int> q;
    int root = find(0);
    depth[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [de, v] : sigma[u]) {
        v = find(v);
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          q.push(v);
        }
      }
    }
    return depth;
  }
};

}  // namespace

CoverBall CoverBall::build(const Complex2& K, int base_vertex, int r, int radius_cap) {
  if (base_vertex < 0 || base_vertex >= K.num_vertices) {
    throw IndexError("base vertex out of range");
  }
  if (r < 0) throw IndexError("negative radius");
  if (r > radius_cap) throw CapacityError("radius exceeds the cap");
  if (!K.connected()) throw ComplexError("cover development needs a connected base");

  // Directed incident edges per base vertex, ascending by edge id.
  std::vector<std::vector<int>> out_edges(K.num_vertices);
  for (int e = 0; e < K.num_edges(); ++e) {
    out_edges[K.edges[e].first].push_back(2 * e);
    out_edges[K.edges[e].second].push_back(2 * e + 1);
  }

  Development dev(K, base_vertex);
  constexpr int kNodeBudget = 100000;
  bool grew = true;
  while (grew) {
    while (dev.close_triangles()) {
    }
    grew = false;
    auto depth = dev.bfs_depths();
    const int count = static_cast<int>(dev.label.size());
    for (int u = 0; u < count; ++u) {
      if (dev.find(u) != u || depth[u] < 0 || depth[u] >= r) continue;
      for (int de : out_edges[dev.label[u]]) {
        if (dev.sigma[u].count(de)) continue;
        int v = dev.fresh(dev.head(de));
        dev.set_edge(u, de, v);
        dev.process_unions();
        grew = true;
      }
      if (static_cast<int>(dev.label.size()) > kNodeBudget) {
        throw CapacityError("development exceeded the node budget");
      }
    }
  }
  while (dev.close_triangles()) {
  }

  auto depth = dev.bfs_depths();
  std::vector<int> roots;
  for (int u = 0; u < static_cast<int>(dev.label.size()); ++u) {
    if (dev.find(u) == u) roots.push_back(u);
  }
  // Creation order is the node id itself; merged classes keep their least id.
  std::vector<int> least(dev.label.size(), -1);
  for (int u = 0; u < static_cast<int>(dev.label.size()); ++u) {
    int root = dev.find(u);
    if (least[root] < 0 || u < least[root]) least[root] = u;
  }
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return least[a] < least[b];
  });
  std::vector<int> newid(dev.label.size(), -1);
  for (size_t i = 0; i < roots.size(); ++i) newid[roots[i]] = static_cast<int>(i);

  CoverBall ball;
  ball.base = K;
  ball.base_vertex = base_vertex;
  ball.radius = r;
  for (int root : roots) {
    ball.vertex_proj.push_back(dev.label[root]);
    ball.vertex_depth.push_back(depth[root]);
  }

  std::vector<std::pair<std::pair<int, int>, int>> lifted_edges;  // (pair, base e)
  for (int root : roots) {
    for (auto [de, v] : dev.sigma[root]) {
      int a = newid[root], b = newid[dev.find(v)];
      if (a < b) lifted_edges.push_back({{a, b}, de >> 1});
    }
  }
  std::sort(lifted_edges.begin(), lifted_edges.end());
  lifted_edges.erase(std::unique(lifted_edges.begin(), lifted_edges.end()),
                     lifted_edges.end());

  std::vector<std::pair<std::array<int, 3>, int>> lifted_tris;  // (triple, base t)
  for (int root : roots) {
    int a = dev.label[root];
    for (int t = 0; t < K.num_triangles(); ++t) {
      const auto& tri = K.triangles[t];
      if (tri[0] != a) continue;  // each lift is seen once, from its least corner
      int b = tri[1], c = tri[2];
      int eab = K.edge_id(a, b), eac = K.edge_id(a, c), ebc = K.edge_id(b, c);
      int de_ab = 2 * eab + (K.edges[eab].first == a ? 0 : 1);
      int de_ac = 2 * eac + (K.edges[eac].first == a ? 0 : 1);
      int de_bc = 2 * ebc + (K.edges[ebc].first == b ? 0 : 1);
      auto itx = dev.sigma[root].find(de_ab);
      auto ity = dev.sigma[root].find(de_ac);
      if (itx == dev.sigma[root].end() || ity == dev.sigma[root].end()) continue;
      int x = dev.find(itx->second), y = dev.find(ity->second);
      auto itz = dev.sigma[x].find(de_bc);
      if (itz == dev.sigma[x].end() || dev.find(itz->second) != y) continue;
      std::array<int, 3> triple = {newid[root], newid[x], newid[y]};
      std::sort(triple.begin(), triple.end());
      lifted_tris.push_back({triple, t});
    }
  }
  std::sort(lifted_tris.begin(), lifted_tris.end());

  std::vector<std::pair<int, int>> edge_list;
  for (auto& [pr, be] : lifted_edges) {
    edge_list.push_back(pr);
    ball.edge_proj.push_back(be);
  }
  std::vector<std::array<int, 3>> tri_list;
  for (auto& [tp, bt] : lifted_tris) {
    tri_list.push_back(tp);
    ball.tri_proj.push_back(bt);
  }
  ball.lifted = Complex2::make(static_cast<int>(roots.size()), std::move(edge_list),
                               std::move(tri_list));

  ball.complete = true;
  for (int root : roots) {
    if (dev.sigma[root].size() != out_edges[dev.label[root]].size()) {
      ball.complete = false;
      break;
    }
  }
  return ball;
}

int h1_rank_gf2(const Complex2& K) {
  // Cycle rank of the 1-skeleton.
  std::vector<int> parent(K.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = K.num_vertices;
  for (auto [u, v] : K.edges) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  int cycle_rank = K.num_edges() - K.num_vertices + components;
  // Rank of the mod-2 triangle boundary matrix.
  const int words = (K.num_edges() + 63) / 64;
  std::vector<std::vector<uint64_t>> rows;
  for (const auto& te : K.tri_edges) {
    std::vector<uint64_t> row(words, 0);
    for (int e : te) row[e / 64] ^= 1ull << (e % 64);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int e = 0; e < K.num_edges() && rank < static_cast<int>(rows.size()); ++e) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if ((rows[i][e / 64] >> (e % 64)) & 1) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != rank && ((rows[i][e / 64] >> (e % 64)) & 1)) {
        for (int w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
      }
    }
    ++rank;
  }
  return cycle_rank - rank;
}

bool is_simply_connected(const Complex2& K, int develop_cap) {
  if (K.num_vertices == 0) return true;
  if (!K.connected()) return false;
  if (h1_rank_gf2(K) > 0) return false;
  for (int r = 1; r <= develop_cap; ++r) {
    CoverBall ball = CoverBall::build(K, 0, r, develop_cap);
    if (!ball.complete) continue;
    return ball.lifted.num_vertices == K.num_vertices &&
           ball.lifted.num_edges() == K.num_edges() &&
           ball.lifted.num_triangles() == K.num_triangles();
  }
  throw SimplyConnectedRequiredError(
      "development did not stabilize within the radius cap");
}

LiftedPattern lift_pattern(const CoverBall& B, const Drawing& D) {
  if (D.complex.num_vertices != B.base.num_vertices || D.complex.edges != B.base.edges ||
      D.complex.triangles != B.base.triangles) {
    throw ComplexError("drawing is not on the ball's base complex");
  }
  LiftedPattern L;
  L.ball = &B;
  L.raw.edge_points.resize(B.lifted.num_edges());
  for (int e = 0; e < B.lifted.num_edges(); ++e) {
    L.raw.edge_points[e] = D.edge_points[B.edge_proj[e]];
  }
  std::vector<std::vector<int>> base_tri_chords(B.base.num_triangles());
  for (size_t i = 0; i < D.chords.size(); ++i) {
    base_tri_chords[D.chords[i].tri].push_back(static_cast<int>(i));
  }
  for (int tt = 0; tt < B.lifted.num_triangles(); ++tt) {
    int bt = B.tri_proj[tt];
    // The three lifted sides project to the three distinct base sides.
    auto lifted_edge_over = [&](int base_edge) {
      for (int le : B.lifted.tri_edges[tt]) {
        if (B.edge_proj[le] == base_edge) return le;
      }
      throw Error("lifted triangle misses a side of its projection");
    };
    for (int ci : base_tri_chords[bt]) {
      const RawChord& c = D.chords[ci];
      RawChord lifted{tt, lifted_edge_over(c.e1), c.r1, lifted_edge_over(c.e2), c.r2};
      L.raw.chords.push_back(lifted);
      L.chord_origin.push_back(ci);
    }
  }

  Drawing lifted_drawing = validate_drawing(B.lifted, L.raw);
  std::vector<Track> lifted_tracks = extract_pretracks(lifted_drawing);
  std::vector<Track> base_tracks = extract_pretracks(D);
  std::vector<int> base_track_of_point(D.num_points(), -1);
  for (size_t i = 0; i < base_tracks.size(); ++i) {
    for (int p : base_tracks[i].points) base_track_of_point[p] = static_cast<int>(i);
  }
  auto base_point_of = [&](int lifted_point) {
    int le = lifted_drawing.point_edge(lifted_point);
    int r = lifted_drawing.point_rank(lifted_point);
    return D.point_id(B.edge_proj[le], r);
  };

  L.chord_component.assign(L.raw.chords.size(), -1);
  L.verdicts.assign(base_tracks.size(), LiftVerdict{false, B.complete});
  for (size_t comp = 0; comp < lifted_tracks.size(); ++comp) {
    const Track& t = lifted_tracks[comp];
    for (int ci : t.chords) L.chord_component[ci] = static_cast<int>(comp);
    int base_track = base_track_of_point[base_point_of(t.points[0])];
    L.component_base_pretrack.push_back(base_track);
    if (is_self_intersecting(lifted_drawing, t)) {
      L.verdicts[base_track].self_intersection_found = true;
      L.verdicts[base_track].conclusive = true;
    }
  }
  return L;
}

}  // namespace poctrack
