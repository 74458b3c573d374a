#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poctrack/chains.hpp"
#include "poctrack/interval.hpp"
#include "poctrack/pattern.hpp"
#include "poctrack/pocset.hpp"
#include "poctrack/rng.hpp"

namespace poctrack {

// A named complex + pattern used by the category/parallelism suites.
struct PatternFixture {
  std::string name;
  Complex2 complex;
  RawDrawing drawing;
  bool simply_connected = false;
};

// One triangle, one corner arc cutting off vertex 0.
PatternFixture single_triangle_arc();
// One triangle, m nested arcs around vertex 0 (one parallelism class).
PatternFixture parallel_arcs(int m);
// One triangle, d mutually interleaved arcs (chord i joins rank i on edge 01
// to rank d-1-i on edge 02).
PatternFixture crossing_arcs(int d);
// Fan of k triangles around a hub; one track crossing every fan triangle
// (links the hub) plus one corner arc in the first triangle.
PatternFixture triangle_fan(int k);
// Tetrahedron boundary with all four vertex-linking triangle curves.
PatternFixture tetrahedron_links();
// Tetrahedron boundary with a quad curve separating vertices {0,1} from {2,3}.
PatternFixture tetrahedron_quad();
// Triangle plus a dangling edge carrying one marked point (a bare track).
PatternFixture bare_edge_triangle();

// Triangulated annulus (one essential loop, not simply connected) carrying
// two pre-tracks: an embedded core curve and a self-crossing variant whose
// crossing survives in the universal cover.
PatternFixture annulus_embedded();
PatternFixture annulus_crossing();
// Moebius-like identification on which track bipartitions parity-conflict.
PatternFixture mobius_band();

// The simply connected corpus for the category coverage and pattern
// invariant suites.
std::vector<PatternFixture> fixture_corpus();

// All valid pocsets on at most max_pairs pairs (max_pairs <= 4), one per
// isomorphism class (canonical-encoding dedup), deterministic order.
std::vector<PocSet> exhaustive_pocsets(int max_pairs);

// Random poset of width <= d on n elements (a chain partition interleaved
// into a linear extension plus random forward relations), realized as an
// interval.
Interval random_interval(Rng& rng, int n, int d);

// Random valid pocset on `pairs` pairs (relations sampled and closed, retry
// on involution conflicts).
PocSet random_pocset(Rng& rng, int pairs);

// A generated instance satisfying vertical_horizontal_combine preconditions.
struct VHInstance {
  Interval interval;
  CrossSequence cs;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> anchors;
};
VHInstance random_vh_instance(Rng& rng);

// A generated instance satisfying bounded_unbounded_split preconditions.
struct BUInstance {
  Interval interval;
  CrossSequence cs;
  std::vector<std::pair<int, int>> pairs;
};
BUInstance random_bu_instance(Rng& rng);

}  // namespace poctrack
