#include "poctrack/fixtures.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

#include "poctrack/errors.hpp"

namespace poctrack {

namespace {

Complex2 one_triangle() {
  return Complex2::make(3, {{0, 1}, {0, 2}, {1, 2}}, {{{0, 1, 2}}});
}

Complex2 tetrahedron() {
  return Complex2::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                        {{{0, 1, 2}}, {{0, 1, 3}}, {{0, 2, 3}}, {{1, 2, 3}}});
}

}  // namespace

PatternFixture single_triangle_arc() {
  PatternFixture f;
  f.name = "single-triangle-arc";
  f.complex = one_triangle();
  f.drawing.edge_points = {1, 1, 0};
  f.drawing.chords = {{0, 0, 0, 1, 0}};
  f.simply_connected = true;
  return f;
}

PatternFixture parallel_arcs(int m) {
  PatternFixture f;
  f.name = "parallel-arcs-" + std::to_string(m);
  f.complex = one_triangle();
  f.drawing.edge_points = {m, m, 0};
  for (int i = 0; i < m; ++i) f.drawing.chords.push_back({0, 0, i, 1, i});
  f.simply_connected = true;
  return f;
}

PatternFixture crossing_arcs(int d) {
  PatternFixture f;
  f.name = "crossing-arcs-" + std::to_string(d);
  f.complex = one_triangle();
  f.drawing.edge_points = {d, d, 0};
  for (int i = 0; i < d; ++i) f.drawing.chords.push_back({0, 0, i, 1, d - 1 - i});
  f.simply_connected = true;
  return f;
}

PatternFixture triangle_fan(int k) {
  PatternFixture f;
  f.name = "triangle-fan-" + std::to_string(k);
  // Hub 0, rim 1..k+1. Spoke (0,i) has edge id i-1; rim (i,i+1) has id k+i.
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k + 1; ++i) edges.emplace_back(0, i);
  for (int i = 1; i <= k; ++i) edges.emplace_back(i, i + 1);
  std::vector<std::array<int, 3>> tris;
  for (int i = 1; i <= k; ++i) tris.push_back({0, i, i + 1});
  f.complex = Complex2::make(k + 2, std::move(edges), std::move(tris));

  f.drawing.edge_points.assign(static_cast<size_t>(2 * k + 1), 0);
  for (int i = 0; i <= k; ++i) f.drawing.edge_points[static_cast<size_t>(i)] = 1;
  f.drawing.edge_points[0] = 2;          // linking point + corner arc point
  f.drawing.edge_points[static_cast<size_t>(k + 1)] = 1;  // rim (1,2)
  // Hub link: one chord per fan triangle between consecutive spokes.
  for (int i = 1; i <= k; ++i) f.drawing.chords.push_back({i - 1, i - 1, 0, i, 0});
  // Corner arc around rim vertex 1 in the first triangle.
  f.drawing.chords.push_back({0, 0, 1, k + 1, 0});
  f.simply_connected = true;
  return f;
}

PatternFixture tetrahedron_links() {
  PatternFixture f;
  f.name = "tetrahedron-links";
  f.complex = tetrahedron();
  f.drawing.edge_points.assign(6, 2);
  // On edge (u,v) with u < v, rank 0 is the link-of-u point and rank 1 the
  // link-of-v point, so the four triangle curves stay disjoint.
  for (int t = 0; t < f.complex.num_triangles(); ++t) {
    auto [eab, eac, ebc] = f.complex.tri_edges[static_cast<size_t>(t)];
    f.drawing.chords.push_back({t, eab, 0, eac, 0});
    f.drawing.chords.push_back({t, eab, 1, ebc, 0});
    f.drawing.chords.push_back({t, eac, 1, ebc, 1});
  }
  f.simply_connected = true;
  return f;
}

PatternFixture tetrahedron_quad() {
  PatternFixture f;
  f.name = "tetrahedron-quad";
  f.complex = tetrahedron();
  f.drawing.edge_points = {0, 1, 1, 1, 1, 0};  // the four {0,1}-{2,3} edges
  f.drawing.chords = {
      {0, 1, 0, 3, 0},  // (0,1,2): edges (0,2)-(1,2)
      {1, 2, 0, 4, 0},  // (0,1,3): edges (0,3)-(1,3)
      {2, 1, 0, 2, 0},  // (0,2,3): edges (0,2)-(0,3)
      {3, 3, 0, 4, 0},  // (1,2,3): edges (1,2)-(1,3)
  };
  f.simply_connected = true;
  return f;
}

PatternFixture bare_edge_triangle() {
  PatternFixture f;
  f.name = "bare-edge-triangle";
  f.complex = Complex2::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}, {{{0, 1, 2}}});
  f.drawing.edge_points = {1, 0, 1, 1};
  f.drawing.chords = {{0, 0, 0, 3, 0}};  // corner arc around vertex 1
  f.simply_connected = true;
  return f;
}

namespace {

// Triangulated cylinder: inner rim {0,1,2}, outer rim {3,4,5}, six triangles.
Complex2 annulus_complex() {
  return Complex2::make(6,
                        {{0, 1},
                         {0, 2},
                         {0, 3},
                         {0, 4},
                         {1, 2},
                         {1, 4},
                         {1, 5},
                         {2, 3},
                         {2, 5},
                         {3, 4},
                         {3, 5},
                         {4, 5}},
                        {{{0, 1, 4}},
                         {{0, 2, 3}},
                         {{0, 3, 4}},
                         {{1, 2, 5}},
                         {{1, 4, 5}},
                         {{2, 3, 5}}});
}

}  // namespace

PatternFixture annulus_embedded() {
  PatternFixture f;
  f.name = "annulus-embedded";
  f.complex = annulus_complex();
  // Core curve through the six band triangles, crossing edges
  // (0,3) (0,4) (1,4) (1,5) (2,3) (2,5) = ids 2 3 5 6 7 8 once each.
  f.drawing.edge_points = {0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0};
  f.drawing.chords = {
      {0, 3, 0, 5, 0},  // (0,1,4): (0,4)-(1,4)
      {4, 5, 0, 6, 0},  // (1,4,5): (1,4)-(1,5)
      {3, 6, 0, 8, 0},  // (1,2,5): (1,5)-(2,5)
      {5, 7, 0, 8, 0},  // (2,3,5): (2,3)-(2,5)
      {1, 2, 0, 7, 0},  // (0,2,3): (0,3)-(2,3)
      {2, 2, 0, 3, 0},  // (0,3,4): (0,3)-(0,4)
  };
  f.simply_connected = false;
  return f;
}

PatternFixture annulus_crossing() {
  PatternFixture f;
  f.name = "annulus-crossing";
  // The (0,1,4) face of the annulus is subdivided at a new vertex 6; the arc
  // starts on the rim edge (0,1), loops once around vertex 6 and returns to
  // (0,1), crossing itself in triangle (0,1,6). The loop bounds the star of
  // vertex 6, so the crossing persists in every lift.
  f.complex = Complex2::make(7,
                             {{0, 1},    // 0
                              {0, 2},    // 1
                              {0, 3},    // 2
                              {0, 4},    // 3
                              {0, 6},    // 4
                              {1, 2},    // 5
                              {1, 4},    // 6
                              {1, 5},    // 7
                              {1, 6},    // 8
                              {2, 3},    // 9
                              {2, 5},    // 10
                              {3, 4},    // 11
                              {3, 5},    // 12
                              {4, 5},    // 13
                              {4, 6}},   // 14
                             {{{0, 1, 6}},
                              {{0, 2, 3}},
                              {{0, 3, 4}},
                              {{0, 4, 6}},
                              {{1, 2, 5}},
                              {{1, 4, 5}},
                              {{1, 4, 6}},
                              {{2, 3, 5}}});
  f.drawing.edge_points.assign(15, 0);
  f.drawing.edge_points[0] = 2;   // (0,1)
  f.drawing.edge_points[4] = 1;   // (0,6)
  f.drawing.edge_points[8] = 1;   // (1,6)
  f.drawing.edge_points[14] = 1;  // (4,6)
  f.drawing.chords = {
      {0, 0, 0, 8, 0},   // (0,1,6): (0,1)@0 - (1,6)
      {6, 8, 0, 14, 0},  // (1,4,6): (1,6) - (4,6)
      {3, 4, 0, 14, 0},  // (0,4,6): (4,6) - (0,6)
      {0, 4, 0, 0, 1},   // (0,1,6): (0,6) - (0,1)@1, crosses the first chord
  };
  f.simply_connected = false;
  return f;
}

PatternFixture mobius_band() {
  PatternFixture f;
  f.name = "mobius-band";
  // Five-triangle band; orienting the triangles coherently fails on the
  // (0,1) gluing, so the band is one-sided.
  f.complex = Complex2::make(5,
                             {{0, 1},    // 0
                              {0, 2},    // 1
                              {0, 3},    // 2
                              {0, 4},    // 3
                              {1, 2},    // 4
                              {1, 3},    // 5
                              {1, 4},    // 6
                              {2, 3},    // 7
                              {2, 4},    // 8
                              {3, 4}},   // 9
                             {{{0, 1, 2}},
                              {{0, 1, 4}},
                              {{0, 3, 4}},
                              {{1, 2, 3}},
                              {{2, 3, 4}}});
  // Core curve crossing the five interior edges once each; its two sides
  // would have to 2-color the odd cycle 0-1-2-3-4-0.
  f.drawing.edge_points = {1, 0, 0, 1, 1, 0, 0, 1, 0, 1};
  f.drawing.chords = {
      {0, 0, 0, 4, 0},  // (0,1,2): (0,1)-(1,2)
      {3, 4, 0, 7, 0},  // (1,2,3): (1,2)-(2,3)
      {4, 7, 0, 9, 0},  // (2,3,4): (2,3)-(3,4)
      {2, 3, 0, 9, 0},  // (0,3,4): (3,4)-(0,4)
      {1, 0, 0, 3, 0},  // (0,1,4): (0,4)-(0,1)
  };
  f.simply_connected = false;
  return f;
}

std::vector<PatternFixture> fixture_corpus() {
  std::vector<PatternFixture> out;
  out.push_back(single_triangle_arc());
  out.push_back(crossing_arcs(2));
  out.push_back(crossing_arcs(3));
  out.push_back(crossing_arcs(4));
  out.push_back(triangle_fan(2));
  out.push_back(triangle_fan(3));
  out.push_back(tetrahedron_links());
  out.push_back(tetrahedron_quad());
  out.push_back(bare_edge_triangle());
  return out;
}

std::vector<PocSet> exhaustive_pocsets(int max_pairs) {
  if (max_pairs < 0 || max_pairs > 4)
    throw CapacityError("exhaustive enumeration supports at most 4 pairs");
  std::vector<PocSet> out;
  std::set<std::string> seen;
  for (int n = 1; n <= max_pairs; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) pairs.emplace_back(p, q);
    const int np = static_cast<int>(pairs.size());
    long long total = 1;
    for (int i = 0; i < np; ++i) total *= 5;
    for (long long code = 0; code < total; ++code) {
      std::vector<int> tag(static_cast<size_t>(np));
      long long rem = code;
      for (int i = np; i-- > 0;) {
        tag[static_cast<size_t>(i)] = static_cast<int>(rem % 5);
        rem /= 5;
      }
      std::vector<std::pair<int, int>> rels;
      for (int i = 0; i < np; ++i) {
        auto [p, q] = pairs[static_cast<size_t>(i)];
        switch (tag[static_cast<size_t>(i)]) {
          case 0: rels.emplace_back(2 * p, 2 * q); break;
          case 1: rels.emplace_back(2 * q, 2 * p); break;
          case 2: rels.emplace_back(2 * p, 2 * q + 1); break;
          case 3: rels.emplace_back(2 * q + 1, 2 * p); break;
          default: break;
        }
      }
      PocSet ps = [&]() -> PocSet {
        try {
          return PocSet::build(n, rels);
        } catch (const CycleError&) {
          return PocSet::build(0, {});
        } catch (const InvolutionError&) {
          return PocSet::build(0, {});
        }
      }();
      if (ps.pairs() != n) continue;  // assignment was contradictory
      // Keep the assignment only when the closure adds no relation beyond it,
      // so each labeled pocset appears for exactly one code.
      bool exact = true;
      for (int i = 0; i < np && exact; ++i) {
        auto [p, q] = pairs[static_cast<size_t>(i)];
        exact = static_cast<int>(ps.classify_pair(2 * p, 2 * q)) == tag[static_cast<size_t>(i)];
      }
      if (!exact) continue;
      if (seen.insert(ps.canonical_encoding()).second) out.push_back(std::move(ps));
    }
  }
  return out;
}

Interval random_interval(Rng& rng, int n, int d) {
  if (d < 1) d = 1;
  std::vector<int> chain(static_cast<size_t>(n));
  for (auto& c : chain) c = rng.uniform(0, d - 1);
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (chain[static_cast<size_t>(i)] == chain[static_cast<size_t>(j)]) {
        rels.emplace_back(i, j);
      } else if (rng.chance(1, 4)) {
        rels.emplace_back(i, j);  // forward edge, keeps the d-chain cover
      }
    }
  }
  return Interval::from_poset(n, rels);
}

PocSet random_pocset(Rng& rng, int pairs) {
  if (pairs <= 1) return PocSet::build(pairs, {});
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::pair<int, int>> rels;
    int k = rng.uniform(pairs / 2, 2 * pairs);
    for (int i = 0; i < k; ++i) {
      int p = rng.uniform(0, pairs - 1);
      int q = rng.uniform(0, pairs - 2);
      if (q >= p) ++q;
      rels.emplace_back(2 * p + rng.uniform(0, 1), 2 * q + rng.uniform(0, 1));
    }
    try {
      return PocSet::build(pairs, rels);
    } catch (const CycleError&) {
    } catch (const InvolutionError&) {
    }
  }
  return PocSet::build(pairs, {});
}

namespace {

// Shared scaffolding for the transform instance generators: elements are laid
// out in blocks, relabeled by a random permutation, and realized through
// Interval::from_poset, so the local index of block element e is perm[e].
struct RelabeledPoset {
  std::vector<int> perm;
  std::vector<std::pair<int, int>> rels;

  void relate(int a, int b) { rels.emplace_back(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]); }
  int at(int e) const { return perm[static_cast<size_t>(e)]; }

  static RelabeledPoset make(Rng& rng, int n) {
    RelabeledPoset rp;
    rp.perm.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rp.perm[static_cast<size_t>(i)] = i;
    rng.shuffle(rp.perm);
    return rp;
  }
};

}  // namespace

VHInstance random_vh_instance(Rng& rng) {
  const int n = rng.uniform(3, 6);
  const bool with_wild = rng.chance(2, 3);
  const bool with_tame = rng.chance(2, 3);
  // Blocks: h_i = i, k_i = n+i, w_i = 2n+i, u_i = 3n+i.
  auto h = [&](int i) { return i; };
  auto k = [&](int i) { return n + i; };
  auto w = [&](int i) { return 2 * n + i; };
  auto u = [&](int i) { return 3 * n + i; };
  RelabeledPoset rp = RelabeledPoset::make(rng, 4 * n);
  for (int i = 0; i + 1 < n; ++i) {
    rp.relate(h(i), h(i + 1));
    rp.relate(k(i), k(i + 1));
    rp.relate(w(i), w(i + 1));
    rp.relate(u(i), u(i + 1));
    rp.relate(u(i), h(i + 1));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) rp.relate(h(j), k(i));

  VHInstance inst;
  inst.interval = Interval::from_poset(4 * n, rp.rels);
  inst.cs.iv = inst.interval.data();
  inst.cs.threads.emplace_back();  // anchor thread, the h chain itself
  if (with_wild) inst.cs.threads.emplace_back();
  if (with_tame) inst.cs.threads.emplace_back();
  inst.cs.p = static_cast<int>(inst.cs.threads.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> members = {rp.at(h(i))};
    size_t t = 1;
    if (with_wild) {
      members.push_back(rp.at(w(i)));
      inst.cs.threads[t++].push_back(rp.at(w(i)));
    }
    if (with_tame) {
      members.push_back(rp.at(u(i)));
      inst.cs.threads[t++].push_back(rp.at(u(i)));
    }
    inst.cs.threads[0].push_back(rp.at(h(i)));
    inst.cs.crosses.push_back(make_cross(inst.interval, members));
    inst.pairs.emplace_back(rp.at(h(i)), rp.at(k(i)));
    inst.anchors.push_back(rp.at(h(i)));
  }
  return inst;
}

BUInstance random_bu_instance(Rng& rng) {
  const int m = rng.uniform(3, 6);
  bool with_a = rng.chance(2, 3);
  bool with_b = rng.chance(2, 3);
  bool with_c = rng.chance(2, 3);
  bool with_e = rng.chance(2, 3);
  if (!with_a && !with_b && !with_c && !with_e) with_a = true;
  // Blocks: h_i = i, k_i = m+i, then one block per included thread family.
  auto h = [&](int i) { return i; };
  auto k = [&](int i) { return m + i; };
  auto a = [&](int i) { return 2 * m + i; };
  auto b = [&](int i) { return 3 * m + i; };
  auto c = [&](int i) { return 4 * m + i; };
  auto e = [&](int i) { return 5 * m + i; };
  RelabeledPoset rp = RelabeledPoset::make(rng, 6 * m);
  for (int i = 0; i < m; ++i) {
    rp.relate(h(i), k(i));  // ladder rungs
    if (i + 1 < m) {
      rp.relate(k(i), h(i + 1));
      rp.relate(a(i), a(i + 1));
      rp.relate(b(i), b(i + 1));
      rp.relate(c(i), c(i + 1));
      rp.relate(e(i), e(i + 1));
      rp.relate(a(i), h(i + 1));  // a is tame upward
      rp.relate(e(i), h(i + 1));  // e is tame upward
    }
    if (i >= 1) {
      rp.relate(k(i - 1), a(i));  // a is tame downward
      rp.relate(k(i - 1), c(i));  // c is tame downward
    }
  }

  BUInstance inst;
  inst.interval = Interval::from_poset(6 * m, rp.rels);
  inst.cs.iv = inst.interval.data();
  const std::array<std::pair<bool, int>, 4> families = {
      {{with_a, 2 * m}, {with_b, 3 * m}, {with_c, 4 * m}, {with_e, 5 * m}}};
  for (auto [on, base] : families) {
    if (!on) continue;
    inst.cs.threads.emplace_back();
    for (int i = 0; i < m; ++i) inst.cs.threads.back().push_back(rp.at(base + i));
  }
  inst.cs.p = static_cast<int>(inst.cs.threads.size());
  for (int i = 0; i < m; ++i) {
    std::vector<int> members;
    for (const auto& th : inst.cs.threads) members.push_back(th[static_cast<size_t>(i)]);
    inst.cs.crosses.push_back(make_cross(inst.interval, members));
    inst.pairs.emplace_back(rp.at(h(i)), rp.at(k(i)));
  }
  return inst;
}

}  // namespace poctrack
