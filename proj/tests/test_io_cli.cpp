#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "poctrack/cubecomplex.hpp"
#include "poctrack/errors.hpp"
#include "poctrack/fixtures.hpp"
#include "poctrack/io.hpp"
#include "poctrack/pocset.hpp"

using namespace poctrack;
using njson = nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(POCTRACK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_input(const std::string& name, const std::string& text) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  return p.string();
}

std::string fixture_text(const PatternFixture& f) {
  return serialize_complex(f.complex) + serialize_pattern(f.complex, f.drawing);
}

}  // namespace

TEST_CASE("halfspace names round trip") {
  CHECK(halfspace_name(0) == "0");
  CHECK(halfspace_name(1) == "0*");
  CHECK(halfspace_name(4) == "2");
  CHECK(halfspace_name(5) == "2*");
  for (int h = 0; h < 10; ++h) CHECK(parse_halfspace(halfspace_name(h)) == h);
  CHECK_THROWS_AS(parse_halfspace(""), ParseError);
  CHECK_THROWS_AS(parse_halfspace("x"), ParseError);
  CHECK_THROWS_AS(parse_halfspace("2**"), ParseError);
}

TEST_CASE("pocset text round trips through parse") {
  PocSet P = PocSet::build(3, {{0, 2}, {2, 4}});
  ParsedInput in = parse_input_text(serialize_pocset(P));
  REQUIRE(in.has_pocset);
  CHECK_FALSE(in.has_complex);
  CHECK(PocSet::build(in.pocset_pairs, in.pocset_relations) == P);

  PocSet Q = PocSet::build(2, {{1, 2}});
  ParsedInput in2 = parse_input_text(serialize_pocset(Q));
  CHECK(PocSet::build(in2.pocset_pairs, in2.pocset_relations) == Q);
}

TEST_CASE("complex and pattern text round trips through parse") {
  PatternFixture f = tetrahedron_links();
  ParsedInput in = parse_input_text(fixture_text(f));
  REQUIRE(in.has_complex);
  REQUIRE(in.has_pattern);
  CHECK(in.complex.num_vertices == f.complex.num_vertices);
  CHECK(in.complex.edges == f.complex.edges);
  CHECK(in.complex.triangles == f.complex.triangles);
  CHECK(in.drawing.edge_points == f.drawing.edge_points);
  REQUIRE(in.drawing.chords.size() == f.drawing.chords.size());
  for (size_t i = 0; i < f.drawing.chords.size(); ++i) {
    const RawChord& a = in.drawing.chords[i];
    const RawChord& b = f.drawing.chords[i];
    CHECK(a.tri == b.tri);
    CHECK(a.e1 == b.e1);
    CHECK(a.r1 == b.r1);
    CHECK(a.e2 == b.e2);
    CHECK(a.r2 == b.r2);
  }
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_input_text("[nope]\n"), ParseError);
  CHECK_THROWS_AS(parse_input_text("[pocset]\npairs=abc\n"), ParseError);
  CHECK_THROWS_AS(parse_input_text("hello\n"), ParseError);
}

TEST_CASE("dot exports name their graphs") {
  CubeComplex X = CubeComplex::dual(PocSet::build(2, {}));
  CHECK(dot_skeleton(X).find("graph") != std::string::npos);
  CHECK(dot_crossing(X).find("graph") != std::string::npos);
}

TEST_CASE("cli dualizes a free pocset to a cube") {
  std::string file = write_input("poctrack_io_free3.txt", "[pocset]\npairs=3\n");
  CliResult r = run_cli("dualize " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "pairs=3\nvertices=8\nedges=12\ndimension=3\n");
}

TEST_CASE("cli dualizes a pattern through its parallelism classes") {
  std::string file = write_input("poctrack_io_arcs4.txt", fixture_text(parallel_arcs(4)));
  CliResult r = run_cli("dualize " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "classes=1\npairs=1\nvertices=2\nedges=1\ndimension=1\n");
}

TEST_CASE("cli validate reports the whole input") {
  std::string file = write_input("poctrack_io_links.txt", fixture_text(tetrahedron_links()));
  CliResult r = run_cli("validate " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("simply-connected: yes") != std::string::npos);
  CHECK(r.out.find("pattern: points=12 chords=12 tracks=4") != std::string::npos);
  CHECK(r.out.find("ok\n") != std::string::npos);

  CliResult j = run_cli("validate --format json-lines " + file);
  CHECK(j.exit_code == 0);
  std::istringstream lines(j.out);
  std::string line, last_type;
  int parsed = 0;
  while (std::getline(lines, line)) {
    njson obj = njson::parse(line);
    last_type = obj.at("type").get<std::string>();
    ++parsed;
  }
  CHECK(parsed >= 3);
  CHECK(last_type == "ok");
}

TEST_CASE("cli interval describes a one-pair pocset") {
  std::string file = write_input("poctrack_io_free1.txt", "[pocset]\npairs=1\n");
  CliResult r = run_cli("interval " + file + " --from 0 --to 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("interval from=0 to=1 size=1") != std::string::npos);
  CHECK(r.out.find("crosses total=1 max-dimension=1") != std::string::npos);
}

TEST_CASE("cli classify labels a corner arc") {
  std::string file = write_input("poctrack_io_corner.txt", fixture_text(single_triangle_arc()));
  CliResult r = run_cli("classify " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("halfspace 0: categories 2") != std::string::npos);
  CHECK(r.out.find("halfspace 0*: categories 2") != std::string::npos);
  CHECK(r.out.find("d=1 covered=yes category5-empty=yes") != std::string::npos);
}

TEST_CASE("cli stats summarizes parallelism classes") {
  std::string file = write_input("poctrack_io_arcs3.txt", fixture_text(parallel_arcs(3)));
  CliResult r = run_cli("stats " + file);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "tracks=3\nclasses=1\npattern-d=1\nclass-sizes: 3\n");
}

TEST_CASE("cli lemmas passes a clean suite") {
  CliResult r = run_cli("lemmas --suite countercrosser --pairs 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("OK") != std::string::npos);

  CliResult j = run_cli("lemmas --suite countercrosser --pairs 3 --format json-lines");
  CHECK(j.exit_code == 0);
  std::istringstream lines(j.out);
  std::string first;
  REQUIRE(std::getline(lines, first));
  njson head = njson::parse(first);
  CHECK(head.at("type") == "report");
  CHECK(head.at("ok") == true);
}

TEST_CASE("cli exit codes distinguish failure kinds") {
  CliResult missing = run_cli("validate /nonexistent/poctrack_input.txt");
  CHECK(missing.exit_code == 1);

  std::string file = write_input("poctrack_io_free3b.txt", "[pocset]\npairs=3\n");
  CliResult bad_format = run_cli("validate --format dot " + file);
  CHECK(bad_format.exit_code == 1);

  CliResult capped = run_cli("dualize --cap-pairs 2 " + file);
  CHECK(capped.exit_code == 2);

  // The four-pair family contains genuine persistence counterexamples, so
  // this suite reports a violation and exits 3.
  CliResult violated = run_cli("lemmas --suite locally-parallel --pairs 4");
  CHECK(violated.exit_code == 3);
  CHECK(violated.out.find("FAIL") != std::string::npos);
  CHECK(violated.out.find("persistence") != std::string::npos);
}

TEST_CASE("cli reruns are byte identical") {
  std::string file = write_input("poctrack_io_det.txt", fixture_text(tetrahedron_links()));
  CliResult a = run_cli("dualize " + file);
  CliResult b = run_cli("dualize " + file);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  CliResult c = run_cli("lemmas --suite cross-lattice --pairs 2");
  CliResult d = run_cli("lemmas --suite cross-lattice --pairs 2");
  CHECK(c.exit_code == 0);
  CHECK(c.out == d.out);
}
