#include "poctrack/io.hpp"

#include <sstream>

namespace poctrack {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, int line_no) {
  if (s.empty()) throw ParseError("line " + std::to_string(line_no) + ": expected a number");
  size_t pos = 0;
  int value;
  try {
    value = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  if (pos != s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return value;
}

// Splits "<a>:<b>" after a "key=" prefix.
std::pair<int, int> parse_ref(const std::string& tok, const std::string& key, int line_no) {
  if (tok.rfind(key + "=", 0) != 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected '" + key +
                     "=...' but got '" + tok + "'");
  }
  std::string rest = tok.substr(key.size() + 1);
  size_t colon = rest.find(':');
  if (colon == std::string::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": expected '" + key +
                     "=<i>:<j>' but got '" + tok + "'");
  }
  return {parse_int(rest.substr(0, colon), line_no),
          parse_int(rest.substr(colon + 1), line_no)};
}

}  // namespace

std::string halfspace_name(int h) {
  return std::to_string(pair_of(h)) + (side_of(h) ? "*" : "");
}

int parse_halfspace(const std::string& token) {
  if (token.empty()) throw ParseError("empty halfspace token");
  int side = 0;
  std::string body = token;
  if (body.back() == '*') {
    side = 1;
    body.pop_back();
  }
  if (body.empty()) throw ParseError("bad halfspace token '" + token + "'");
  for (char c : body) {
    if (c < '0' || c > '9') throw ParseError("bad halfspace token '" + token + "'");
  }
  return halfspace_of(std::stoi(body), side);
}

ParsedInput parse_input_text(const std::string& text) {
  ParsedInput out;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;
  int vertex_count = -1;
  bool complex_built = false;
  std::vector<std::pair<int, std::pair<int, int>>> point_decls;  // (line, (edge, count))

  enum class Section { kNone, kVertices, kEdges, kTriangles, kPattern, kPocset };
  Section sec = Section::kNone;

  auto finish_complex = [&](int line_no) {
    if (complex_built) return;
    if (vertex_count < 0) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": pattern section requires a preceding complex");
    }
    out.complex = Complex2::make(vertex_count, edges, triangles);
    out.has_complex = true;
    out.drawing.edge_points.assign(edges.size(), 0);
    complex_built = true;
  };

  std::istringstream in(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    size_t hash = raw_line.find('#');
    if (hash != std::string::npos) raw_line.resize(hash);
    std::string line = trim(raw_line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line == "[vertices]") {
        sec = Section::kVertices;
      } else if (line == "[edges]") {
        sec = Section::kEdges;
      } else if (line == "[triangles]") {
        sec = Section::kTriangles;
      } else if (line == "[pattern]") {
        finish_complex(line_no);
        out.has_pattern = true;
        sec = Section::kPattern;
      } else if (line == "[pocset]") {
        sec = Section::kPocset;
        out.has_pocset = true;
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown section " + line);
      }
      continue;
    }
    auto toks = split_ws(line);
    switch (sec) {
      case Section::kNone:
        throw ParseError("line " + std::to_string(line_no) + ": content before any section");
      case Section::kVertices: {
        if (toks.size() != 1 || toks[0].rfind("count=", 0) != 0) {
          throw ParseError("line " + std::to_string(line_no) + ": expected count=N");
        }
        vertex_count = parse_int(toks[0].substr(6), line_no);
        break;
      }
      case Section::kEdges: {
        if (toks.size() != 2) {
          throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        }
        edges.emplace_back(parse_int(toks[0], line_no), parse_int(toks[1], line_no));
        break;
      }
      case Section::kTriangles: {
        if (toks.size() != 3) {
          throw ParseError("line " + std::to_string(line_no) + ": expected 'a b c'");
        }
        triangles.push_back({parse_int(toks[0], line_no), parse_int(toks[1], line_no),
                             parse_int(toks[2], line_no)});
        break;
      }
      case Section::kPattern: {
        if (toks[0] == "points") {
          for (size_t i = 1; i < toks.size(); ++i) {
            auto [e, count] = parse_ref(toks[i], "e", line_no);
            point_decls.push_back({line_no, {e, count}});
          }
        } else if (toks[0].rfind("tri=", 0) == 0) {
          if (toks.size() != 3) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'tri=<t> e1=<e>:<r> e2=<e>:<r>'");
          }
          RawChord c;
          c.tri = parse_int(toks[0].substr(4), line_no);
          auto [e1, r1] = parse_ref(toks[1], "e1", line_no);
          auto [e2, r2] = parse_ref(toks[2], "e2", line_no);
          c.e1 = e1;
          c.r1 = r1;
          c.e2 = e2;
          c.r2 = r2;
          out.drawing.chords.push_back(c);
        } else {
          throw ParseError("line " + std::to_string(line_no) +
                           ": expected a 'points' or 'tri=' line");
        }
        break;
      }
      case Section::kPocset: {
        if (toks.size() == 1 && toks[0].rfind("pairs=", 0) == 0) {
          out.pocset_pairs = parse_int(toks[0].substr(6), line_no);
        } else if (toks.size() == 3 && toks[1] == "<") {
          out.pocset_relations.emplace_back(parse_halfspace(toks[0]),
                                            parse_halfspace(toks[2]));
        } else {
          throw ParseError("line " + std::to_string(line_no) +
                           ": expected 'pairs=N' or 'A < B'");
        }
        break;
      }
    }
  }
  if (!complex_built && vertex_count >= 0) finish_complex(line_no);
  for (auto [decl_line, ec] : point_decls) {
    auto [e, count] = ec;
    if (e < 0 || e >= out.complex.num_edges()) {
      throw ParseError("line " + std::to_string(decl_line) + ": edge " +
                       std::to_string(e) + " out of range");
    }
    if (count < 0) {
      throw ParseError("line " + std::to_string(decl_line) + ": negative point count");
    }
    out.drawing.edge_points[e] = count;
  }
  return out;
}

std::string serialize_complex(const Complex2& K) {
  std::ostringstream o;
  o << "[vertices]\ncount=" << K.num_vertices << "\n";
  if (!K.edges.empty()) {
    o << "[edges]\n";
    for (auto [u, v] : K.edges) o << u << " " << v << "\n";
  }
  if (!K.triangles.empty()) {
    o << "[triangles]\n";
    for (const auto& t : K.triangles) o << t[0] << " " << t[1] << " " << t[2] << "\n";
  }
  return o.str();
}

std::string serialize_pattern(const Complex2& K, const RawDrawing& raw) {
  std::ostringstream o;
  o << "[pattern]\n";
  for (int e = 0; e < K.num_edges(); ++e) {
    if (e < static_cast<int>(raw.edge_points.size()) && raw.edge_points[e] > 0) {
      o << "points e=" << e << ":" << raw.edge_points[e] << "\n";
    }
  }
  for (const RawChord& c : raw.chords) {
    o << "tri=" << c.tri << " e1=" << c.e1 << ":" << c.r1 << " e2=" << c.e2 << ":"
      << c.r2 << "\n";
  }
  return o.str();
}

std::string serialize_pocset(const PocSet& P) {
  std::ostringstream o;
  o << "[pocset]\npairs=" << P.pairs() << "\n";
  for (auto [h, k] : P.relation_list()) {
    o << halfspace_name(h) << " < " << halfspace_name(k) << "\n";
  }
  return o.str();
}

namespace {

std::string mask_label(uint64_t mask, int pairs) {
  std::string s;
  for (int p = 0; p < pairs; ++p) s += ((mask >> p) & 1) ? '1' : '0';
  return s.empty() ? "-" : s;
}

}  // namespace

std::string dot_skeleton(const CubeComplex& X) {
  std::ostringstream o;
  o << "graph skeleton {\n";
  const int pairs = X.pocset().pairs();
  for (int i = 0; i < X.num_vertices(); ++i) {
    o << "  v" << i << " [label=\"" << mask_label(X.vertex_mask(i), pairs) << "\"];\n";
  }
  for (int e = 0; e < X.num_edges(); ++e) {
    auto [a, b] = X.edges()[e];
    o << "  v" << a << " -- v" << b << " [label=\"p" << X.edge_pair(e) << "\"];\n";
  }
  o << "}\n";
  return o.str();
}

std::string dot_crossing(const CubeComplex& X) {
  std::ostringstream o;
  o << "graph crossing {\n";
  const int pairs = X.pocset().pairs();
  for (int p = 0; p < pairs; ++p) {
    o << "  p" << p << " [label=\"p" << p << "\"];\n";
  }
  auto adj = X.crossing_adjacency();
  for (int p = 0; p < pairs; ++p) {
    for (int q = p + 1; q < pairs; ++q) {
      if ((adj[p] >> q) & 1) o << "  p" << p << " -- p" << q << ";\n";
    }
  }
  o << "}\n";
  return o.str();
}

}  // namespace poctrack
