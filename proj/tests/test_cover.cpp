#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "poctrack/cover.hpp"
#include "poctrack/errors.hpp"
#include "poctrack/fixtures.hpp"
#include "poctrack/pattern.hpp"

using namespace poctrack;

namespace {

Complex2 tetra() {
  return Complex2::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                        {{{0, 1, 2}}, {{0, 1, 3}}, {{0, 2, 3}}, {{1, 2, 3}}});
}

int max_edge_multiplicity(const CoverBall& B) {
  std::vector<int> count(static_cast<size_t>(B.base.num_edges()), 0);
  int best = 0;
  for (int e : B.edge_proj) best = std::max(best, ++count[static_cast<size_t>(e)]);
  return best;
}

}  // namespace

TEST_CASE("a triangle is its own universal cover") {
  Complex2 K = single_triangle_arc().complex;
  CoverBall B = CoverBall::build(K, 0, 1);
  CHECK(B.complete);
  CHECK(B.lifted.num_vertices == 3);
  CHECK(B.lifted.num_edges() == 3);
  CHECK(B.lifted.num_triangles() == 1);
  CHECK(B.vertex_proj.size() == 3);
  CHECK(B.edge_proj.size() == 3);
  CHECK(B.tri_proj.size() == 1);
  CHECK(B.vertex_depth[0] == 0);
  for (int d : B.vertex_depth) CHECK(d <= 1);

  CoverBall tiny = CoverBall::build(K, 0, 0);
  CHECK(tiny.lifted.num_vertices == 1);
  CHECK(tiny.lifted.num_edges() == 0);
  CHECK_FALSE(tiny.complete);
}

TEST_CASE("the tetrahedron boundary develops trivially") {
  Complex2 K = tetra();
  CHECK(h1_rank_gf2(K) == 0);
  CHECK(is_simply_connected(K));
  CoverBall B = CoverBall::build(K, 0, 2);
  CHECK(B.complete);
  CHECK(B.lifted.num_vertices == 4);
  CHECK(B.lifted.num_edges() == 6);
  CHECK(B.lifted.num_triangles() == 4);
  CHECK(h1_rank_gf2(B.lifted) == 0);
}

TEST_CASE("the annulus is not simply connected and its cover unrolls") {
  Complex2 K = annulus_embedded().complex;
  CHECK(h1_rank_gf2(K) == 1);
  CHECK_FALSE(is_simply_connected(K));
  CoverBall B = CoverBall::build(K, 0, 3);
  CHECK_FALSE(B.complete);
  CHECK(max_edge_multiplicity(B) >= 2);
  CHECK(h1_rank_gf2(B.lifted) == 0);
  CHECK_FALSE(CoverBall::build(K, 0, 4).complete);
}

TEST_CASE("the one-sided band has nontrivial mod-2 homology") {
  Complex2 K = mobius_band().complex;
  CHECK(h1_rank_gf2(K) == 1);
  CHECK_FALSE(is_simply_connected(K));
}

TEST_CASE("cover construction guards its inputs") {
  Complex2 K = tetra();
  CHECK_THROWS_AS(is_simply_connected(K, 0), SimplyConnectedRequiredError);
  CHECK_THROWS_AS(CoverBall::build(K, 0, 7), CapacityError);
  CHECK_NOTHROW(CoverBall::build(K, 0, 7, 8));
  Complex2 split = Complex2::make(2, {}, {});
  CHECK_THROWS_AS(CoverBall::build(split, 0, 1), ComplexError);
  CHECK_FALSE(is_simply_connected(split));
}

TEST_CASE("lifting the vertex links of the tetrahedron is conclusive and clean") {
  PatternFixture f = tetrahedron_links();
  Drawing D = validate_drawing(f.complex, f.drawing);
  CoverBall B = CoverBall::build(f.complex, 0, 3);
  REQUIRE(B.complete);
  LiftedPattern L = lift_pattern(B, D);
  CHECK(L.raw.chords.size() == 12);
  REQUIRE(L.verdicts.size() == 4);
  for (const LiftVerdict& v : L.verdicts) {
    CHECK_FALSE(v.self_intersection_found);
    CHECK(v.conclusive);
  }
  // Identity cover: every lifted chord projects to a chord on the same
  // base triangle with the same pair of base edges.
  for (size_t c = 0; c < L.raw.chords.size(); ++c) {
    const RawChord& lc = L.raw.chords[c];
    const RawChord& bc = D.chords[static_cast<size_t>(L.chord_origin[c])];
    CHECK(B.tri_proj[static_cast<size_t>(lc.tri)] == bc.tri);
    std::set<int> lifted_edges{B.edge_proj[static_cast<size_t>(lc.e1)],
                               B.edge_proj[static_cast<size_t>(lc.e2)]};
    CHECK(lifted_edges == std::set<int>{bc.e1, bc.e2});
  }
  // Four base pre-tracks, and every lifted component names a real one.
  for (int p : L.component_base_pretrack) {
    CHECK(p >= 0);
    CHECK(p < 4);
  }
}

TEST_CASE("an embedded essential curve lifts cleanly but inconclusively") {
  PatternFixture f = annulus_embedded();
  Drawing D = validate_drawing(f.complex, f.drawing);
  CoverBall B = CoverBall::build(f.complex, 0, 3);
  LiftedPattern L = lift_pattern(B, D);
  REQUIRE(L.verdicts.size() == 1);
  CHECK_FALSE(L.verdicts[0].self_intersection_found);
  CHECK_FALSE(L.verdicts[0].conclusive);
}

TEST_CASE("a curl that bounds a disk keeps its crossing in the cover") {
  PatternFixture f = annulus_crossing();
  Drawing D = validate_drawing(f.complex, f.drawing);
  std::vector<bool> found;
  for (int r = 2; r <= 4; ++r) {
    CoverBall B = CoverBall::build(f.complex, 0, r);
    LiftedPattern L = lift_pattern(B, D);
    REQUIRE(L.verdicts.size() == 1);
    found.push_back(L.verdicts[0].self_intersection_found);
    if (L.verdicts[0].self_intersection_found) {
      CHECK(L.verdicts[0].conclusive);
    }
  }
  // Once seen, a self-intersection stays seen in larger balls.
  for (size_t i = 0; i + 1 < found.size(); ++i) {
    if (found[i]) CHECK(found[i + 1]);
  }
  CHECK(found.back());
}

TEST_CASE("lift_pattern rejects drawings from other complexes") {
  Complex2 K = tetra();
  CoverBall B = CoverBall::build(K, 0, 2);
  PatternFixture f = single_triangle_arc();
  Drawing D = validate_drawing(f.complex, f.drawing);
  CHECK_THROWS_AS(lift_pattern(B, D), ComplexError);
}
