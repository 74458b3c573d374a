#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "poctrack/cover.hpp"
#include "poctrack/cubecomplex.hpp"
#include "poctrack/errors.hpp"
#include "poctrack/interval.hpp"
#include "poctrack/io.hpp"
#include "poctrack/oracle.hpp"
#include "poctrack/pattern.hpp"
#include "poctrack/pocset.hpp"

namespace {

using namespace poctrack;
using njson = nlohmann::ordered_json;

struct Options {
  int cap_pairs = kDefaultPairCap;
  int cap_interval = kDefaultIntervalCap;
  int radius = kDefaultRadiusCap;
  uint64_t seed = 1;
  std::string format = "text";
};

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--cap-pairs", opt.cap_pairs, "pair cap for dual complexes");
  sub->add_option("--cap-interval", opt.cap_interval, "enumeration cap for interval queries");
  sub->add_option("--radius", opt.radius, "development cap for cover-based checks");
  sub->add_option("--seed", opt.seed, "seed for randomized suites");
  sub->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "dot", "json-lines"}));
}

void require_format(const Options& opt, bool dot_allowed) {
  if (opt.format == "dot" && !dot_allowed)
    throw ParseError("dot output is only available for dualize");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedInput load(const std::string& path) { return parse_input_text(read_file(path)); }

// The dual complex named by an input file: a pattern's dual when a pattern is
// present, otherwise the dual of its pocset section.
struct DualSource {
  CubeComplex complex;
  bool from_pattern = false;
  int classes = 0;
};

DualSource dual_of(const ParsedInput& in, const Options& opt) {
  DualSource out;
  if (in.has_pattern) {
    Drawing D = validate_drawing(in.complex, in.drawing);
    PatternDual X = pattern_dual(D, Verify::kVerify, opt.cap_pairs);
    out.complex = std::move(X.complex);
    out.from_pattern = true;
    out.classes = static_cast<int>(X.classes.size());
    return out;
  }
  if (in.has_pocset) {
    PocSet ps = PocSet::build(in.pocset_pairs, in.pocset_relations);
    out.complex = CubeComplex::dual(ps, opt.cap_pairs);
    return out;
  }
  throw ParseError("input has neither a pattern nor a pocset section");
}

int run_validate(const std::string& path, const Options& opt) {
  require_format(opt, false);
  ParsedInput in = load(path);
  const bool json = opt.format == "json-lines";

  if (in.has_complex) {
    const Complex2& K = in.complex;
    std::string sc;
    try {
      sc = is_simply_connected(K, opt.radius) ? "yes" : "no";
    } catch (const SimplyConnectedRequiredError&) {
      sc = "undecided";
    }
    if (json) {
      njson j;
      j["type"] = "complex";
      j["vertices"] = K.num_vertices;
      j["edges"] = K.num_edges();
      j["triangles"] = K.num_triangles();
      j["connected"] = K.connected();
      j["simply_connected"] = sc;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "complex: vertices=" << K.num_vertices << " edges=" << K.num_edges()
                << " triangles=" << K.num_triangles()
                << " connected=" << (K.connected() ? "yes" : "no") << "\n";
      std::cout << "simply-connected: " << sc << "\n";
    }
  }
  if (in.has_pattern) {
    Drawing D = validate_drawing(in.complex, in.drawing);
    const auto tracks = extract_pretracks(D);
    if (json) {
      njson j;
      j["type"] = "pattern";
      j["points"] = D.num_points();
      j["chords"] = D.chords.size();
      j["tracks"] = tracks.size();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "pattern: points=" << D.num_points() << " chords=" << D.chords.size()
                << " tracks=" << tracks.size() << "\n";
    }
  }
  if (in.has_pocset) {
    PocSet ps = PocSet::build(in.pocset_pairs, in.pocset_relations);
    if (json) {
      njson j;
      j["type"] = "pocset";
      j["pairs"] = ps.pairs();
      j["relations"] = ps.relation_list().size();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "pocset: pairs=" << ps.pairs() << " relations=" << ps.relation_list().size()
                << "\n";
    }
  }
  if (!in.has_complex && !in.has_pattern && !in.has_pocset)
    throw ParseError("input file declares no sections");
  if (json) {
    std::cout << njson{{"type", "ok"}}.dump() << "\n";
  } else {
    std::cout << "ok\n";
  }
  return 0;
}

int run_dualize(const std::string& path, const Options& opt) {
  ParsedInput in = load(path);
  DualSource src = dual_of(in, opt);
  const CubeComplex& X = src.complex;
  if (opt.format == "dot") {
    std::cout << dot_skeleton(X);
    return 0;
  }
  if (opt.format == "json-lines") {
    njson j;
    j["type"] = "dual";
    if (src.from_pattern) j["classes"] = src.classes;
    j["pairs"] = X.pocset().pairs();
    j["vertices"] = X.num_vertices();
    j["edges"] = X.num_edges();
    j["dimension"] = X.dimension();
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (src.from_pattern) std::cout << "classes=" << src.classes << "\n";
  std::cout << "pairs=" << X.pocset().pairs() << "\n";
  std::cout << "vertices=" << X.num_vertices() << "\n";
  std::cout << "edges=" << X.num_edges() << "\n";
  std::cout << "dimension=" << X.dimension() << "\n";
  return 0;
}

int run_interval(const std::string& path, int from, int to, const Options& opt) {
  require_format(opt, false);
  ParsedInput in = load(path);
  DualSource src = dual_of(in, opt);
  const CubeComplex& X = src.complex;
  Interval I = Interval::between(X, from, to);

  std::vector<std::string> names;
  for (int i = 0; i < I.size(); ++i) names.push_back(halfspace_name(I.halfspace_id(i)));

  auto crosses = enumerate_crosses(I, -1, opt.cap_interval);
  std::map<int, long> by_size;
  int maxdim = 0;
  for (const Cross& c : crosses) {
    ++by_size[c.dimension()];
    maxdim = std::max(maxdim, c.dimension());
  }

  std::vector<std::pair<int, int>> adjacent;
  std::vector<std::pair<int, int>> lp;
  for (int h = 0; h < I.size(); ++h)
    for (int k : adjacent_above(I, h)) {
      adjacent.emplace_back(h, k);
      if (is_locally_parallel(I, h, k)) lp.emplace_back(h, k);
    }
  auto name_pairs = [&](const std::vector<std::pair<int, int>>& ps) {
    njson arr = njson::array();
    for (auto [h, k] : ps)
      arr.push_back(njson::array(
          {names[static_cast<size_t>(h)], names[static_cast<size_t>(k)]}));
    return arr;
  };

  if (opt.format == "json-lines") {
    njson j1;
    j1["type"] = "interval";
    j1["from"] = from;
    j1["to"] = to;
    j1["size"] = I.size();
    j1["halfspaces"] = names;
    std::cout << j1.dump() << "\n";
    njson j2;
    j2["type"] = "crosses";
    j2["total"] = crosses.size();
    j2["max_dimension"] = maxdim;
    njson bys;
    for (auto [s, c] : by_size) bys[std::to_string(s)] = c;
    j2["by_size"] = std::move(bys);
    std::cout << j2.dump() << "\n";
    njson j3;
    j3["type"] = "adjacent";
    j3["pairs"] = name_pairs(adjacent);
    std::cout << j3.dump() << "\n";
    njson j4;
    j4["type"] = "locally_parallel";
    j4["pairs"] = name_pairs(lp);
    std::cout << j4.dump() << "\n";
    return 0;
  }

  std::cout << "interval from=" << from << " to=" << to << " size=" << I.size() << "\n";
  std::cout << "halfspaces:";
  for (const auto& n : names) std::cout << " " << n;
  std::cout << "\n";
  std::cout << "crosses total=" << crosses.size() << " max-dimension=" << maxdim << "\n";
  for (auto [s, c] : by_size) std::cout << "  size " << s << ": " << c << "\n";
  auto print_pairs = [&](const char* label, const std::vector<std::pair<int, int>>& ps) {
    std::cout << label << ":";
    for (auto [h, k] : ps)
      std::cout << " (" << names[static_cast<size_t>(h)] << ","
                << names[static_cast<size_t>(k)] << ")";
    std::cout << "\n";
  };
  print_pairs("adjacent", adjacent);
  print_pairs("locally-parallel", lp);
  return 0;
}

int run_classify(const std::string& path, const Options& opt) {
  require_format(opt, false);
  ParsedInput in = load(path);
  if (!in.has_pattern) throw ParseError("classify needs a pattern section");
  Drawing full = validate_drawing(in.complex, in.drawing);
  Drawing D = validate_drawing(in.complex, deduplicate_pattern(full, Verify::kVerify));
  CategoryReport cr = classify_halfspace_categories(D, Verify::kVerify);

  const bool json = opt.format == "json-lines";
  for (int h = 0; h < static_cast<int>(cr.categories.size()); ++h) {
    const uint8_t bits = cr.categories[static_cast<size_t>(h)];
    std::vector<int> cats;
    for (int c = 0; c < 5; ++c)
      if (bits & (1 << c)) cats.push_back(c + 1);
    if (json) {
      njson j;
      j["type"] = "halfspace";
      j["name"] = halfspace_name(h);
      j["categories"] = cats;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "halfspace " << halfspace_name(h) << ": categories";
      if (cats.empty()) std::cout << " none";
      for (int c : cats) std::cout << " " << c;
      std::cout << "\n";
    }
  }
  if (json) {
    njson j;
    j["type"] = "summary";
    j["d"] = cr.d;
    j["covered"] = cr.covered;
    j["category5_empty"] = cr.category5_empty;
    j["max_maximal_per_directed_interval"] = cr.max_maximal_per_directed_interval;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "d=" << cr.d << " covered=" << (cr.covered ? "yes" : "no")
              << " category5-empty=" << (cr.category5_empty ? "yes" : "no")
              << " max-maximal-per-directed-interval=" << cr.max_maximal_per_directed_interval
              << "\n";
  }
  return 0;
}

int run_stats(const std::string& path, const Options& opt) {
  require_format(opt, false);
  ParsedInput in = load(path);
  if (!in.has_pattern) throw ParseError("stats needs a pattern section");
  Drawing D = validate_drawing(in.complex, in.drawing);
  auto tracks = extract_pretracks(D);
  auto classes = parallelism_classes(D, Verify::kVerify);
  const int d = pattern_d(D, Verify::kAssume);

  if (opt.format == "json-lines") {
    njson j;
    j["type"] = "stats";
    j["tracks"] = tracks.size();
    j["classes"] = classes.size();
    j["pattern_d"] = d;
    njson sizes = njson::array();
    for (const auto& c : classes) sizes.push_back(c.size());
    j["class_sizes"] = std::move(sizes);
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "tracks=" << tracks.size() << "\n";
  std::cout << "classes=" << classes.size() << "\n";
  std::cout << "pattern-d=" << d << "\n";
  std::cout << "class-sizes:";
  for (const auto& c : classes) std::cout << " " << c.size();
  std::cout << "\n";
  return 0;
}

int run_lemmas(const std::string& suite, const FamilySpec& fam, const Options& opt) {
  require_format(opt, false);
  VerdictReport rep;
  if (suite == "cross-lattice") {
    rep = verify_cross_lattice(fam);
  } else if (suite == "countercrosser") {
    rep = verify_countercrosser(fam);
  } else if (suite == "locally-parallel") {
    rep = survey_locally_parallel(fam);
  } else if (suite == "categories") {
    rep = verify_category_coverage();
  } else {
    throw ParseError("unknown suite: " + suite);
  }
  std::cout << serialize_report(rep, opt.format == "json-lines");
  return rep.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite pocsets, dual cube complexes, and track patterns"};
  app.require_subcommand(1);

  Options vopt, dopt, iopt, copt, sopt, lopt;
  std::string vfile, dfile, ifile, cfile, sfile;
  int ifrom = 0, ito = 0;
  std::string suite;
  FamilySpec fam;

  CLI::App* validate = app.add_subcommand("validate", "parse an input file and check it");
  validate->add_option("input", vfile, "input file")->required();
  add_common(validate, vopt);

  CLI::App* dualize =
      app.add_subcommand("dualize", "dual cube complex of a pattern or pocset");
  dualize->add_option("input", dfile, "input file")->required();
  add_common(dualize, dopt);

  CLI::App* interval =
      app.add_subcommand("interval", "crosses and locally parallel pairs of a vertex pair");
  interval->add_option("input", ifile, "input file")->required();
  interval->add_option("--from,--x", ifrom, "source vertex index")->required();
  interval->add_option("--to,--y", ito, "target vertex index")->required();
  add_common(interval, iopt);

  CLI::App* classify = app.add_subcommand("classify", "halfspace categories of a pattern");
  classify->add_option("input", cfile, "input file")->required();
  add_common(classify, copt);

  CLI::App* stats = app.add_subcommand("stats", "parallelism classes and pattern d");
  stats->add_option("input", sfile, "input file")->required();
  add_common(stats, sopt);

  CLI::App* lemmas = app.add_subcommand("lemmas", "run a verification suite");
  lemmas->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"cross-lattice", "countercrosser", "locally-parallel",
                             "categories"}));
  lemmas->add_option("--pairs", fam.max_pairs, "exhaustive family bound");
  lemmas->add_flag("--exhaustive,!--no-exhaustive", fam.exhaustive,
                   "include the exhaustive family");
  lemmas->add_option("--random", fam.random_count, "number of seeded random intervals");
  add_common(lemmas, lopt);

  try {
    app.parse(argc, argv);
    fam.seed = lopt.seed;

    if (validate->parsed()) return run_validate(vfile, vopt);
    if (dualize->parsed()) return run_dualize(dfile, dopt);
    if (interval->parsed()) return run_interval(ifile, ifrom, ito, iopt);
    if (classify->parsed()) return run_classify(cfile, copt);
    if (stats->parsed()) return run_stats(sfile, sopt);
    if (lemmas->parsed()) return run_lemmas(suite, fam, lopt);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const LemmaViolationError& e) {
    std::cerr << "lemma violation: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
