#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poctrack/interval.hpp"

namespace poctrack {

enum class ChainKind { kIncreasing, kDecreasing, kConstant, kNone };
enum class PairShape { kStaircase, kLadder, kOther };
enum class Tameness { kTame, kWild, kNeither };
enum class Boundedness { kBounded, kUnbounded };

const char* to_string(ChainKind k);
const char* to_string(PairShape s);
const char* to_string(Tameness t);
const char* to_string(Boundedness b);

// Strict classification of a halfspace sequence under the interval order.
// Sequences of length <= 1 are Constant.
ChainKind classify_chain(const Interval& I, const std::vector<int>& seq);

// Indices (strictly increasing) of a length-n subsequence forming a chain, or
// absent. Kinds are tried in the order increasing, decreasing, constant; the
// witness is the lexicographically least index list for the first kind that
// admits one.
std::optional<std::vector<int>> extract_chain(const Interval& I,
                                              const std::vector<int>& seq, int n);

// Componentwise version over p-tuples: one index list on which every
// component is a chain (kinds may differ per component). The witness is the
// overall lexicographically least index list, ties broken by component-kind
// profile in (increasing, decreasing, constant) order.
std::optional<std::vector<int>> extract_tuple_chain(
    const Interval& I, const std::vector<std::vector<int>>& seq, int n);

// Shape of a whole sequence of adjacent pairs. Length <= 1 satisfies both
// definitions vacuously and reports Ladder by tie-break. Throws
// NotAdjacentError when some entry is not an adjacent pair.
PairShape classify_pairs(const Interval& I,
                         const std::vector<std::pair<int, int>>& pairs);

// Lexicographically first length-n subsequence classifying as a staircase or
// ladder, or absent.
std::optional<std::pair<PairShape, std::vector<int>>> find_staircase_or_ladder(
    const Interval& I, const std::vector<std::pair<int, int>>& pairs, int n);

// tchain sits between consecutive pairs (|tchain| = |pairs| - 1, else
// LengthError). Tame: t_i < h_{i+1} for all i. Wild: t_i transverse to h_j
// for all j > i. Tame is checked first; both hold only vacuously.
Tameness tameness(const Interval& I, const std::vector<int>& tchain,
                  const std::vector<std::pair<int, int>>& pairs);

// A sequence of same-dimension crosses decomposed into p component chains
// ("threads"); threads[j][i] is the element of crosses[i] on thread j.
// Thread j starts at the j-th smallest element of the first cross.
struct CrossSequence {
  std::shared_ptr<const IntervalData> iv;
  std::vector<Cross> crosses;
  int p = 0;
  std::vector<std::vector<int>> threads;
};

struct SequenceFlags {
  bool regularly_ordered = false;
  bool regularly_increasing = false;
  bool weakly_tame = false;
  bool tame = false;
  bool k_tame = false;
  bool has_dominating_subchain = false;
};

// Decomposes the crosses into chains, preferring a decomposition with no
// decreasing thread (two-pass backtracking, lexicographically first witness).
// Absent when dimensions differ or no decomposition exists. Throws
// MixedIntervalError.
std::optional<CrossSequence> make_cross_sequence(const Interval& I,
                                                 const std::vector<Cross>& crosses);

// Flags of a decomposed sequence against its chain of pairs (|pairs| must
// equal |crosses|, else LengthError). tame / k_tame / has_dominating_subchain
// are evaluated on the given decomposition; weakly_tame is
// decomposition-independent (no element of C_i lies above h_{i+1}).
SequenceFlags cross_sequence_flags(const Interval& I, const CrossSequence& cs,
                                   const std::vector<std::pair<int, int>>& pairs);
// Raw overload: attempts decomposition first; when none exists only
// weakly_tame is meaningful (all other flags false).
SequenceFlags cross_sequence_flags(const Interval& I, const std::vector<Cross>& crosses,
                                   const std::vector<std::pair<int, int>>& pairs);

// Result of the staircase combination transform: D_i pairs wild elements of
// C_i with tame elements of C_{i+2}; the reduced sequence keeps every second
// combined cross against the odd-indexed pairs.
struct VHResult {
  std::vector<Intercross> combined;  // D_i for pair (h_{i+1}, k_{i+1})
  CrossSequence reduced;             // D_0, D_2, ...
  std::vector<std::pair<int, int>> reduced_pairs;
  SequenceFlags reduced_flags;
};

// Preconditions (PreconditionError): pairs form a staircase, >= 3 crosses,
// sizes match, sequence tame and regularly increasing, every thread tame or
// wild, anchors[i] in crosses[i] with h_i <= anchors[i]. Every combined cross
// is verified to be a tame, K-tame intercross for its pair and the reduced
// sequence is verified regularly increasing; failure of any verification
// throws LemmaViolationError.
VHResult vertical_horizontal_combine(const Interval& I, const CrossSequence& cs,
                                     const std::vector<std::pair<int, int>>& pairs,
                                     const std::vector<int>& anchors);

// Result of the ladder split transform: the two end crosses act as sentinels
// and the inner crosses are rebuilt from the four tame/wild combinations;
// every thread of the output is verified bounded (strictly between the
// neighbouring h's) or unbounded (transverse to every inner h).
struct BUResult {
  CrossSequence inner;  // D_1 .. D_{m-2}
  std::vector<std::pair<int, int>> inner_pairs;
  std::vector<Boundedness> verdicts;  // one per thread of `inner`
};

// Preconditions (PreconditionError): pairs form a ladder, >= 3 crosses
// including the sentinels, each cross an intercross for its pair, sequence
// regularly increasing, weakly tame in both orientations, every thread tame
// or wild in both orientations. Verification failures throw
// LemmaViolationError.
BUResult bounded_unbounded_split(const Interval& I, const CrossSequence& cs,
                                 const std::vector<std::pair<int, int>>& pairs);

}  // namespace poctrack
