#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poctrack/cubecomplex.hpp"
#include "poctrack/pocset.hpp"

namespace poctrack {

// Shared immutable payload of an interval. Halfspaces are re-indexed locally
// (0..n-1); `above`/`below` are bitmask rows of the induced strict order.
// Within an interval, incomparable halfspaces are transverse in the ambient
// pocset, so the local order is all the structure the machinery needs.
struct IntervalData {
  int n = 0;
  std::vector<uint64_t> above;
  std::vector<uint64_t> below;
  std::vector<int> halfspace_ids;  // ambient ids, ascending
  uint64_t source = 0;             // orientation masks, meaningful when
  uint64_t sink = 0;               // from_complex is set
  bool from_complex = false;
};

// All-ones mask over n low bits, safe for n = 64.
inline uint64_t low_mask(int n) {
  return n >= 64 ? ~0ull : ((1ull << n) - 1);
}

class Interval {
 public:
  Interval() : data_(std::make_shared<IntervalData>()) {}

  // The halfspaces selected by vertex x whose complements are selected by
  // vertex y (separating halfspaces, oriented toward x). Empty iff x = y.
  // Throws NotAVertexError.
  static Interval between(const CubeComplex& X, int x_index, int y_index);

  // Realizes an arbitrary finite poset (given by generator relations i < j
  // over 0..n-1) as an interval: each element becomes one halfspace pair of a
  // fresh pocset and the interval runs from the all-positive orientation to
  // its complement. Throws CapacityError (n > 64), CycleError, IndexError.
  static Interval from_poset(int n, const std::vector<std::pair<int, int>>& relations);

  int size() const { return data_->n; }
  bool empty() const { return data_->n == 0; }
  int halfspace_id(int i) const;

  bool less(int i, int j) const { return (data_->above[i] >> j) & 1; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  // In-interval incomparability coincides with ambient transversality.
  bool transverse(int i, int j) const { return i != j && !comparable(i, j); }

  uint64_t above(int i) const { return data_->above[i]; }
  uint64_t below(int i) const { return data_->below[i]; }
  uint64_t all_mask() const { return low_mask(data_->n); }

  bool is_maximal(int i) const { return data_->above[i] == 0; }

  // Bit i set iff i is transverse to (incomparable with) the given index.
  uint64_t transverse_mask(int i) const;

  const std::shared_ptr<const IntervalData>& data() const { return data_; }
  bool same(const Interval& o) const { return data_ == o.data_; }

  void check_index(int i) const;

 private:
  explicit Interval(std::shared_ptr<const IntervalData> d) : data_(std::move(d)) {}
  std::shared_ptr<const IntervalData> data_;
};

// A pairwise-incomparable set of interval halfspaces, as a bitmask over local
// indices. Its dimension is its cardinality.
struct Cross {
  std::shared_ptr<const IntervalData> iv;
  uint64_t bits = 0;

  int dimension() const { return __builtin_popcountll(bits); }
  std::vector<int> members() const;
  bool operator==(const Cross& o) const { return iv == o.iv && bits == o.bits; }
};

// Validates pairwise incomparability (throws DegenerateError on a comparable
// pair or empty member list, IndexError on bad indices).
Cross make_cross(const Interval& I, const std::vector<int>& members);
bool is_cross(const Interval& I, uint64_t bits);

// All nonempty antichains in lexicographic order of their ascending member
// lists; size_filter < 0 means all sizes. Throws CapacityError when the
// interval exceeds cap.
std::vector<Cross> enumerate_crosses(const Interval& I, int size_filter = -1,
                                     int cap = kDefaultIntervalCap);

// Minimal / maximal elements of the union. Throws MixedIntervalError when
// the crosses live on different intervals.
Cross meet(const Cross& a, const Cross& b);
Cross join(const Cross& a, const Cross& b);

// h < k with nothing strictly between.
bool is_adjacent(const Interval& I, int h, int k);
// Indices k with (h, k) adjacent, ascending.
std::vector<int> adjacent_above(const Interval& I, int h);

// A cross split as H_part ∪ K_part relative to an adjacent pair h < k:
// H_part members are transverse to h, K_part members are transverse to k and
// strictly above h. Elements transverse to h always land in H_part (the
// canonical split).
struct Intercross {
  Cross cross;
  uint64_t h_mask = 0;
  uint64_t k_mask = 0;

  int dimension() const { return cross.dimension(); }
};

// Bitmasks of elements eligible for each part.
uint64_t intercross_h_eligible(const Interval& I, int h);
uint64_t intercross_k_eligible(const Interval& I, int h, int k);

// True iff C is nonempty and every member is eligible for H_part or K_part.
bool is_intercross(const Interval& I, const Cross& C, int h, int k);
// The canonical split of an intercross; throws DegenerateError when C is not
// an intercross for (h, k).
Intercross split_intercross(const Interval& I, const Cross& C, int h, int k);

// A maximum-dimension intercross for the adjacent pair (h, k), or absent when
// no eligible element exists; the witness is the lexicographically first
// maximum antichain. Throws NotAdjacentError.
std::optional<Intercross> max_intercross(const Interval& I, int h, int k);
// Its dimension, with absent = 0.
int maxdim_intercross(const Interval& I, int h, int k);

// The four-bullet countercross predicate for an intercross C of (h, k).
bool is_countercross(const Interval& I, const Cross& c2, const Intercross& C,
                     int h, int k);

// An adjacent k > h such that every intercross of (h, k) admits a
// countercross; smallest such k by local index. Throws MaximalError when h is
// maximal, CapacityError past cap, LemmaViolationError if no adjacent
// halfspace qualifies (which would contradict the countercross lemma).
int find_countercrosser(const Interval& I, int h, int cap = kDefaultIntervalCap);

// True iff (h, k) is adjacent and no adjacent k' > h has a smaller maximum
// intercross dimension; false for non-adjacent pairs.
bool is_locally_parallel(const Interval& I, int h, int k);

}  // namespace poctrack
