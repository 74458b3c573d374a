#pragma once

#include <cstdint>
#include <vector>

#include "poctrack/pattern.hpp"

namespace poctrack {

// A radius-r ball in the universal cover of a connected finite 2-complex,
// grown by lifting edges breadth-first and closing triangle relations
// (two lifted sides of a base triangle force the third). Deterministic cell
// numbering by (depth, creation order).
struct CoverBall {
  Complex2 base;
  int base_vertex = 0;
  int radius = 0;
  Complex2 lifted;
  std::vector<int> vertex_proj;
  std::vector<int> edge_proj;
  std::vector<int> tri_proj;
  std::vector<int> vertex_depth;
  // True when the development saturated below the radius: every lift is
  // total and closed, so `lifted` is the entire (finite) universal cover.
  bool complete = false;

  // Throws ComplexError (disconnected base), CapacityError (r > radius_cap).
  static CoverBall build(const Complex2& K, int base_vertex, int r,
                         int radius_cap = kDefaultRadiusCap);
};

// Rank of first mod-2 homology: (E - V + components) - rank_GF2(boundary_2).
int h1_rank_gf2(const Complex2& K);

// True/false when decidable at desk scale: false on nontrivial mod-2 H1,
// otherwise develops the universal cover until it stabilizes (equal cell
// counts mean the trivial cover). Throws SimplyConnectedRequiredError when
// the development exceeds develop_cap without stabilizing.
bool is_simply_connected(const Complex2& K, int develop_cap = kDefaultRadiusCap);

struct LiftVerdict {
  bool self_intersection_found = false;
  // Positive findings are conclusive (soundness); a clean result is
  // conclusive only when the ball is the whole universal cover.
  bool conclusive = false;
};

// A pattern pulled back to a cover ball. Marked points replicate along each
// lifted edge; each lifted triangle receives the chords of its projection.
struct LiftedPattern {
  const CoverBall* ball = nullptr;
  RawDrawing raw;                         // on ball->lifted
  std::vector<int> chord_origin;          // lifted chord -> base chord
  std::vector<int> chord_component;      // lifted chord -> lifted component id
  std::vector<int> component_base_pretrack;
  std::vector<LiftVerdict> verdicts;      // one per base pre-track
};

// Lifts D to the ball and reports, per base pre-track, whether some lift of
// it self-intersects within the ball.
LiftedPattern lift_pattern(const CoverBall& B, const Drawing& D);

}  // namespace poctrack
