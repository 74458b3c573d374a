#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poctrack/cubecomplex.hpp"
#include "poctrack/pattern.hpp"
#include "poctrack/pocset.hpp"

namespace poctrack {

// Text input format, line oriented, with `#` comments:
//   [vertices]  count=N
//   [edges]     one `u v` per line
//   [triangles] one `a b c` per line
//   [pattern]   `points e=<edge>:<count>` lines, then chords as
//               `tri=<t> e1=<edge>:<rank> e2=<edge>:<rank>`
//   [pocset]    `pairs=N`, then relations `A < B` with halfspace syntax
//               `<pair>` (side 0) or `<pair>*` (side 1)
struct ParsedInput {
  bool has_complex = false;
  Complex2 complex;
  bool has_pattern = false;
  RawDrawing drawing;
  bool has_pocset = false;
  int pocset_pairs = 0;
  std::vector<std::pair<int, int>> pocset_relations;
};

ParsedInput parse_input_text(const std::string& text);  // throws ParseError

std::string halfspace_name(int h);
int parse_halfspace(const std::string& token);  // throws ParseError

std::string serialize_complex(const Complex2& K);
std::string serialize_pattern(const Complex2& K, const RawDrawing& raw);
std::string serialize_pocset(const PocSet& P);

// DOT exports: the 1-skeleton (vertices as orientation masks) and the
// crossing graph over hyperplane pairs.
std::string dot_skeleton(const CubeComplex& X);
std::string dot_crossing(const CubeComplex& X);

}  // namespace poctrack
