#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "poctrack/cubecomplex.hpp"
#include "poctrack/interval.hpp"
#include "poctrack/pocset.hpp"

namespace poctrack {

// A finite 2-dimensional simplicial complex. Vertices are 0..num_vertices-1;
// edges are sorted pairs in lexicographic order; triangles are sorted triples
// whose three edges must exist.
struct Complex2 {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;
  // Edge ids of triangle t: {v0v1, v0v2, v1v2} for sorted vertices v0<v1<v2.
  std::vector<std::array<int, 3>> tri_edges;
  std::vector<std::vector<int>> edge_tris;  // triangles containing each edge

  // Validates simplicial structure and fills the incidence tables. Throws
  // ComplexError on duplicates, bad indices, or a triangle missing an edge.
  static Complex2 make(int num_vertices, std::vector<std::pair<int, int>> edges,
                       std::vector<std::array<int, 3>> triangles);

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }
  int edge_id(int u, int v) const;  // -1 when absent
  bool connected() const;
};

// One chord of a drawing: a path through triangle `tri` joining marked point
// r1 on edge e1 to marked point r2 on edge e2. Ranks are 0-based positions in
// the edge's point order (oriented from the smaller vertex to the larger).
struct RawChord {
  int tri = 0;
  int e1 = 0;
  int r1 = 0;
  int e2 = 0;
  int r2 = 0;
};

// Pre-validation drawing data: a number of marked points per edge plus a
// chord list. Marked points on edges that lie in no triangle need no chords;
// each such point is a bare one-point track.
struct RawDrawing {
  std::vector<int> edge_points;
  std::vector<RawChord> chords;
};

// A validated drawing. Points get global ids edge by edge (point_base[e] + rank).
struct Drawing {
  Complex2 complex;
  std::vector<int> edge_points;
  std::vector<RawChord> chords;
  std::vector<int> point_base;

  int num_points() const;
  int point_id(int e, int r) const { return point_base[e] + r; }
  int point_edge(int point) const;
  int point_rank(int point) const { return point - point_base[point_edge(point)]; }
};

// Checks the drawing conditions: chord endpoints on two distinct edges of
// their triangle (DistinctEdgeError), no two chords of a triangle sharing an
// endpoint (SharedEndpointError), and every marked point on an edge matched
// by exactly one chord in every triangle containing that edge
// (MatchingError). Bad references raise IndexError.
Drawing validate_drawing(const Complex2& K, const RawDrawing& raw);

// A pre-track: a connected component of the drawing. Bare points on
// triangle-free edges form their own one-point tracks.
struct Track {
  std::vector<int> chords;  // chord indices, ascending
  std::vector<int> points;  // global point ids, ascending
};

// Components of the shares-an-endpoint relation on chords, ordered by their
// smallest point id.
std::vector<Track> extract_pretracks(const Drawing& D);

// Two chords of one triangle cross iff their endpoints strictly alternate in
// the cyclic boundary order of the triangle.
bool chords_interleave(const Drawing& D, int chord_a, int chord_b);

// True iff two chords of the same track cross in some triangle. A track with
// embedded lifts never is; this is the cheap necessary check on the base.
bool is_self_intersecting(const Drawing& D, const Track& t);

bool tracks_intersect(const Drawing& D, const Track& a, const Track& b);

// Whether a precondition is trusted or (re)established by the callee.
enum class Verify { kAssume, kVerify };

// Vertex set of one side of a track's bipartition, bit per base vertex.
using Bipartition = uint64_t;

// Vertex set of the halfspace containing vertex 0 (bit v set iff vertex v is
// on vertex 0's side). Requires a simply connected complex for soundness;
// with Verify::kVerify that is established via the cover machinery first
// (SimplyConnectedRequiredError when it cannot be). Throws ParityConflictError
// when no parity-consistent 2-coloring exists and SingleClassError when the
// track separates nothing.
Bipartition track_halfspaces(const Drawing& D, const Track& t,
                             Verify sc = Verify::kAssume);

// Maximum number of pairwise intersecting tracks (exact clique search). On a
// simply connected complex tracks are their own lifts, so this is the
// pattern's d.
int pattern_d(const Drawing& D, Verify sc = Verify::kVerify);

// Tracks grouped by identical bipartitions; groups ordered by smallest track
// index, each group ascending.
std::vector<std::vector<int>> parallelism_classes(const Drawing& D,
                                                  Verify sc = Verify::kAssume);

// Keeps the least track of each parallelism class and rebuilds the drawing
// with point ranks compacted per edge.
RawDrawing deduplicate_pattern(const Drawing& D, Verify sc = Verify::kAssume);

// The pocset of a pattern plus everything needed to move between the pattern
// and its dual cube complex: one halfspace pair per parallelism class, side 0
// being vertex 0's side, ordered by strict inclusion of vertex sets.
struct PatternDual {
  PocSet pocset;
  CubeComplex complex;
  std::vector<std::vector<int>> classes;  // parallelism classes, track indices
  std::vector<int> class_rep;             // least track of each class
  std::vector<uint64_t> class_vset0;      // vertex set of halfspace 2p+0
  std::vector<int> class_of_track;
  std::vector<int> vertex_image;          // dual vertex index of each base vertex
};

PatternDual pattern_dual(const Drawing& D, Verify sc = Verify::kAssume,
                         int pair_cap = kDefaultPairCap);
PocSet pattern_pocset(const Drawing& D, Verify sc = Verify::kAssume);

// Halfspace categories from the dual-complex analysis of a deduplicated
// pattern (ParallelTracksError otherwise):
//   1: the class has a track on a triangle-free edge;
//   2: maximal in the interval of some directed edge;
//   3: locally parallel partner separated by a triangle's median;
//   4: locally parallel over one edge of a triangle, present but not locally
//      parallel over another;
//   5: the orientation-reversed variant of 4 (expected empty).
struct CategoryReport {
  int d = 0;  // pattern_d of the input
  std::vector<uint8_t> categories;  // per halfspace id, bits 0..4 = cats 1..5
  // Maximal-halfspace count per directed edge (2*edge + direction), and its max.
  std::vector<int> maximal_per_directed_interval;
  int max_maximal_per_directed_interval = 0;
  bool covered = false;         // every halfspace in category 1|2|3|4
  bool category5_empty = false;
};

CategoryReport classify_halfspace_categories(const Drawing& D, const PatternDual& X,
                                             Verify sc = Verify::kVerify);
CategoryReport classify_halfspace_categories(const Drawing& D,
                                             Verify sc = Verify::kVerify);

}  // namespace poctrack
