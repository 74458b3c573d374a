#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poctrack/pocset.hpp"

namespace poctrack {

// Instance family for a verification suite: exhaustive pocsets up to
// max_pairs, plus (when random_count > 0) seeded random intervals.
struct FamilySpec {
  int max_pairs = 4;
  bool exhaustive = true;
  int random_count = 0;
  int random_size = 12;   // halfspaces per random interval
  int random_width = 4;   // dimension bound for random intervals
  uint64_t seed = 1;
};

struct Violation {
  std::string instance;  // replayable serialization
  std::string detail;
};

struct VerdictReport {
  std::string lemma_id;
  long instances = 0;
  std::vector<Violation> violations;
  std::map<std::string, long> stats;

  bool ok() const { return violations.empty(); }
};

// Lattice laws across all cross pairs of all intervals of the family:
// commutativity, associativity, idempotence, superadditivity and the union
// identity on every pair; absorption and distributivity on maximum crosses.
VerdictReport verify_cross_lattice(const FamilySpec& family);

// find_countercrosser succeeds for every non-maximal halfspace of every
// interval; on small intervals the winning candidate is cross-checked
// against direct enumeration of intercrosses and countercrosses.
VerdictReport verify_countercrosser(const FamilySpec& family);

// Extremal statistics for the locally-parallel lemmas (longest staircase of
// locally parallel pairs, median-separated counts, pairs locally parallel in
// one interval but not another) plus a hard assertion of the
// reversed-interval persistence property; persistence violations are
// reported as failures.
VerdictReport survey_locally_parallel(const FamilySpec& family);

// Category coverage over the fixture corpus: every halfspace in categories
// 1-4, category 5 empty, per-directed-interval maximal count <= d.
VerdictReport verify_category_coverage();

// Re-runs a serialized violation instance; true iff it still fails.
bool replay_violation(const std::string& instance);

std::string serialize_report(const VerdictReport& report, bool json_lines);

}  // namespace poctrack
