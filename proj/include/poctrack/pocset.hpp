#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "poctrack/errors.hpp"

namespace poctrack {

// Default enumeration caps. These are configuration knobs, not hard limits of
// the data structures; exceeding them raises CapacityError instead of running
// an enumeration the caller did not budget for.
inline constexpr int kDefaultPairCap = 24;
inline constexpr int kDefaultIntervalCap = 20;
inline constexpr int kDefaultRadiusCap = 6;
// Hard representation ceilings (bitmask rows are 64 bits wide).
inline constexpr int kMaxPairs = 32;
inline constexpr int kMaxIntervalSize = 64;

// Halfspace ids are dense integers: pair p contributes halfspace 2p (side 0)
// and halfspace 2p+1 (side 1); the complement involution is id ^ 1.
inline constexpr int complement_of(int h) { return h ^ 1; }
inline constexpr int pair_of(int h) { return h >> 1; }
inline constexpr int side_of(int h) { return h & 1; }
inline constexpr int halfspace_of(int pair, int side) { return 2 * pair + side; }

// Relation of an ordered pair of distinct, non-complementary halfspaces
// (h, k). Exactly one tag holds in any valid pocset.
enum class RelationTag {
  kLess,             // h < k
  kGreater,          // k < h
  kLessComplement,   // h < k*
  kComplementLess,   // k* < h
  kTransverse,       // all four corner intersections nonempty
};

const char* to_string(RelationTag tag);

// A finite pocset: a strict partial order on 2*pairs halfspaces together with
// the free order-reversing involution h -> h^1. Immutable after build; all
// queries are const and safe to share across threads.
class PocSet {
 public:
  PocSet() = default;

  // Builds the transitive closure of `relations` (ordered halfspace id pairs
  // meaning first < second), augmented with every involution-forced relation.
  // Throws IndexError, CycleError, InvolutionError, CapacityError.
  static PocSet build(int num_pairs, const std::vector<std::pair<int, int>>& relations);

  int pairs() const { return n_pairs_; }
  int halfspaces() const { return 2 * n_pairs_; }

  bool less(int h, int k) const { return (above_[h] >> k) & 1; }
  bool comparable(int h, int k) const { return less(h, k) || less(k, h); }

  // Bitmask over halfspace ids strictly above / below h.
  uint64_t above(int h) const { return above_[h]; }
  uint64_t below(int h) const { return below_[h]; }

  // Throws DegenerateError if k is h or its complement.
  RelationTag classify_pair(int h, int k) const;

  bool transverse(int h, int k) const;

  // All strict relations as ordered id pairs, lexicographic. (Closure, not a
  // minimal generating set.)
  std::vector<std::pair<int, int>> relation_list() const;

  // The isomorphic pocset obtained by permuting pair indices and flipping the
  // chosen sides; pair p of the result is pair pair_perm[p] of *this, with
  // sides swapped when bit p of side_flips is set.
  PocSet relabeled(const std::vector<int>& pair_perm, uint32_t side_flips) const;

  // Minimal serialized relation table over all relabelings; equal strings
  // iff isomorphic. Guarded to small pocsets (factorial cost).
  std::string canonical_encoding() const;

  // Serialization of the exact labeled pocset (not canonicalized).
  std::string encoding() const;

  bool operator==(const PocSet& o) const {
    return n_pairs_ == o.n_pairs_ && above_ == o.above_;
  }

 private:
  int n_pairs_ = 0;
  std::vector<uint64_t> above_;
  std::vector<uint64_t> below_;
};

}  // namespace poctrack
