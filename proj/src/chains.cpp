#include "poctrack/chains.hpp"

#include <algorithm>
#include <functional>

namespace poctrack {

const char* to_string(ChainKind k) {
  switch (k) {
    case ChainKind::kIncreasing: return "increasing";
    case ChainKind::kDecreasing: return "decreasing";
    case ChainKind::kConstant: return "constant";
    case ChainKind::kNone: return "none";
  }
  return "?";
}

const char* to_string(PairShape s) {
  switch (s) {
    case PairShape::kStaircase: return "staircase";
    case PairShape::kLadder: return "ladder";
    case PairShape::kOther: return "other";
  }
  return "?";
}

const char* to_string(Tameness t) {
  switch (t) {
    case Tameness::kTame: return "tame";
    case Tameness::kWild: return "wild";
    case Tameness::kNeither: return "neither";
  }
  return "?";
}

const char* to_string(Boundedness b) {
  return b == Boundedness::kBounded ? "bounded" : "unbounded";
}

ChainKind classify_chain(const Interval& I, const std::vector<int>& seq) {
  for (int i : seq) I.check_index(i);
  if (seq.size() <= 1) return ChainKind::kConstant;
  bool inc = true, dec = true, cons = true;
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    int a = seq[i], b = seq[i + 1];
    if (!I.less(a, b)) inc = false;
    if (!I.less(b, a)) dec = false;
    if (a != b) cons = false;
  }
  if (inc) return ChainKind::kIncreasing;
  if (dec) return ChainKind::kDecreasing;
  if (cons) return ChainKind::kConstant;
  return ChainKind::kNone;
}

namespace {

// rel(a, b) for one chain kind: 0 increasing, 1 decreasing, 2 constant.
bool kind_rel(const Interval& I, int kind, int a, int b) {
  if (kind == 0) return I.less(a, b);
  if (kind == 1) return I.less(b, a);
  return a == b;
}

// Longest subsequence of one kind starting at each index.
std::vector<int> kind_tails(const Interval& I, int kind, const std::vector<int>& seq) {
  const int len = static_cast<int>(seq.size());
  std::vector<int> tail(len, 1);
  for (int i = len - 1; i >= 0; --i) {
    for (int j = i + 1; j < len; ++j) {
      if (kind_rel(I, kind, seq[i], seq[j])) tail[i] = std::max(tail[i], 1 + tail[j]);
    }
  }
  return tail;
}

// Lexicographically least n indices of a kind chain, using precomputed tails.
std::optional<std::vector<int>> kind_witness(const Interval& I, int kind,
                                             const std::vector<int>& seq, int n,
                                             const std::vector<int>& tail) {
  const int len = static_cast<int>(seq.size());
  std::vector<int> out;
  int prev = -1;
  for (int need = n; need > 0; --need) {
    int pick = -1;
    for (int i = prev + 1; i < len; ++i) {
      if (tail[i] < need) continue;
      if (prev >= 0 && !kind_rel(I, kind, seq[prev], seq[i])) continue;
      pick = i;
      break;
    }
    if (pick < 0) return std::nullopt;
    out.push_back(pick);
    prev = pick;
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> extract_chain(const Interval& I,
                                              const std::vector<int>& seq, int n) {
  for (int i : seq) I.check_index(i);
  if (n <= 0) return std::vector<int>{};
  if (static_cast<int>(seq.size()) < n) return std::nullopt;
  for (int kind = 0; kind < 3; ++kind) {
    auto tail = kind_tails(I, kind, seq);
    if (*std::max_element(tail.begin(), tail.end()) >= n) {
      return kind_witness(I, kind, seq, n, tail);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> extract_tuple_chain(
    const Interval& I, const std::vector<std::vector<int>>& seq, int n) {
  if (n <= 0) return std::vector<int>{};
  if (static_cast<int>(seq.size()) < n) return std::nullopt;
  const size_t p = seq[0].size();
  for (const auto& tup : seq) {
    if (tup.size() != p) throw LengthError("tuples must share one arity");
    for (int i : tup) I.check_index(i);
  }
  int profiles = 1;
  for (size_t c = 0; c < p; ++c) profiles *= 3;
  std::optional<std::vector<int>> best;
  std::vector<int> kinds(p, 0);
  for (int prof = 0; prof < profiles; ++prof) {
    int rem = prof;
    // Component 0 is the most significant digit of the profile number.
    for (size_t c = p; c-- > 0;) {
      kinds[c] = rem % 3;
      rem /= 3;
    }
    auto rel = [&](int i, int j) {
      for (size_t c = 0; c < p; ++c) {
        if (!kind_rel(I, kinds[c], seq[i][c], seq[j][c])) return false;
      }
      return true;
    };
    const int len = static_cast<int>(seq.size());
    std::vector<int> tail(len, 1);
    for (int i = len - 1; i >= 0; --i) {
      for (int j = i + 1; j < len; ++j) {
        if (rel(i, j)) tail[i] = std::max(tail[i], 1 + tail[j]);
      }
    }
    if (*std::max_element(tail.begin(), tail.end()) < n) continue;
    std::vector<int> out;
    int prev = -1;
    bool ok = true;
    for (int need = n; need > 0 && ok; --need) {
      int pick = -1;
      for (int i = prev + 1; i < len; ++i) {
        if (tail[i] < need) continue;
        if (prev >= 0 && !rel(prev, i)) continue;
        pick = i;
        break;
      }
      if (pick < 0) {
        ok = false;
        break;
      }
      out.push_back(pick);
      prev = pick;
    }
    if (ok && (!best || out < *best)) best = out;
  }
  return best;
}

namespace {

void require_adjacent_pairs(const Interval& I,
                            const std::vector<std::pair<int, int>>& pairs) {
  for (auto [h, k] : pairs) {
    if (!is_adjacent(I, h, k)) {
      throw NotAdjacentError("pair (" + std::to_string(h) + ", " + std::to_string(k) +
                             ") is not adjacent in the interval");
    }
  }
}

}  // namespace

PairShape classify_pairs(const Interval& I,
                         const std::vector<std::pair<int, int>>& pairs) {
  require_adjacent_pairs(I, pairs);
  const int n = static_cast<int>(pairs.size());
  if (n <= 1) return PairShape::kLadder;  // both definitions hold vacuously
  bool ladder = true;
  for (int i = 0; i + 1 < n && ladder; ++i) {
    if (!I.less(pairs[i].second, pairs[i + 1].first)) ladder = false;
  }
  if (ladder) return PairShape::kLadder;
  bool stair = true;
  for (int i = 0; i + 1 < n && stair; ++i) {
    if (!I.less(pairs[i].first, pairs[i + 1].first)) stair = false;
    if (!I.less(pairs[i].second, pairs[i + 1].second)) stair = false;
  }
  for (int i = 0; i < n && stair; ++i) {
    for (int j = 0; j < n && stair; ++j) {
      if (i >= j) {
        if (!I.less(pairs[j].first, pairs[i].second)) stair = false;
      } else {
        if (!I.transverse(pairs[i].second, pairs[j].first)) stair = false;
      }
    }
  }
  if (stair) return PairShape::kStaircase;
  return PairShape::kOther;
}

std::optional<std::pair<PairShape, std::vector<int>>> find_staircase_or_ladder(
    const Interval& I, const std::vector<std::pair<int, int>>& pairs, int n) {
  require_adjacent_pairs(I, pairs);
  if (n <= 0) return std::make_pair(PairShape::kLadder, std::vector<int>{});
  const int len = static_cast<int>(pairs.size());
  std::vector<int> chosen;
  std::optional<std::pair<PairShape, std::vector<int>>> result;
  // Depth-first over ascending index tuples; smaller indices first gives the
  // lexicographically least witness.
  std::function<bool(int, bool, bool)> rec = [&](int from, bool stair, bool ladder) {
    if (static_cast<int>(chosen.size()) == n) {
      result = std::make_pair(ladder ? PairShape::kLadder : PairShape::kStaircase,
                              chosen);
      return true;
    }
    int remaining = n - static_cast<int>(chosen.size());
    for (int i = from; i + remaining <= len; ++i) {
      bool s = stair, l = ladder;
      if (!chosen.empty()) {
        int lastp = chosen.back();
        l = l && I.less(pairs[lastp].second, pairs[i].first);
        if (s) {
          s = I.less(pairs[lastp].first, pairs[i].first) &&
              I.less(pairs[lastp].second, pairs[i].second);
          for (int c : chosen) {
            if (!s) break;
            s = I.less(pairs[c].first, pairs[i].second) &&
                I.transverse(pairs[c].second, pairs[i].first);
          }
        }
      }
      if (!s && !l) continue;
      chosen.push_back(i);
      if (rec(i + 1, s, l)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(0, true, true);
  return result;
}

namespace {

bool thread_tame_up(const Interval& I, const std::vector<int>& vals,
                    const std::vector<std::pair<int, int>>& pairs) {
  for (size_t i = 0; i + 1 < vals.size(); ++i) {
    if (!I.less(vals[i], pairs[i + 1].first)) return false;
  }
  return true;
}

bool thread_wild_up(const Interval& I, const std::vector<int>& vals,
                    const std::vector<std::pair<int, int>>& pairs) {
  for (size_t i = 0; i < vals.size(); ++i) {
    for (size_t l = i + 1; l < pairs.size(); ++l) {
      if (!I.transverse(vals[i], pairs[l].first)) return false;
    }
  }
  return true;
}

bool thread_tame_down(const Interval& I, const std::vector<int>& vals,
                      const std::vector<std::pair<int, int>>& pairs) {
  for (size_t i = 1; i < vals.size(); ++i) {
    if (!I.less(pairs[i - 1].second, vals[i])) return false;
  }
  return true;
}

bool thread_wild_down(const Interval& I, const std::vector<int>& vals,
                      const std::vector<std::pair<int, int>>& pairs) {
  for (size_t i = 0; i < vals.size(); ++i) {
    for (size_t l = 0; l < i; ++l) {
      if (!I.transverse(vals[i], pairs[l].second)) return false;
    }
  }
  return true;
}

}  // namespace

Tameness tameness(const Interval& I, const std::vector<int>& tchain,
                  const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty() || tchain.size() != pairs.size() - 1) {
    throw LengthError("tameness needs |tchain| = |pairs| - 1");
  }
  for (int t : tchain) I.check_index(t);
  for (auto [h, k] : pairs) {
    I.check_index(h);
    I.check_index(k);
  }
  bool tame = true;
  for (size_t i = 0; i < tchain.size() && tame; ++i) {
    if (!I.less(tchain[i], pairs[i + 1].first)) tame = false;
  }
  if (tame) return Tameness::kTame;
  bool wild = true;
  for (size_t i = 0; i < tchain.size() && wild; ++i) {
    for (size_t j = i + 1; j < pairs.size() && wild; ++j) {
      if (!I.transverse(tchain[i], pairs[j].first)) wild = false;
    }
  }
  if (wild) return Tameness::kWild;
  return Tameness::kNeither;
}

namespace {

// Backtracking decomposition of equal-size crosses into component chains.
// Threads keep the order of the first cross's members; each later step
// extends every thread by one member of the next cross, bijectively, with
// each thread locked to one chain kind after its first non-trivial step.
bool decompose(const Interval& I, const std::vector<std::vector<int>>& members,
               bool allow_decreasing, std::vector<std::vector<int>>& threads) {
  const int steps = static_cast<int>(members.size());
  const int p = static_cast<int>(members[0].size());
  std::vector<int> ends(members[0]);
  std::vector<int> kinds(p, -1);  // -1 unset, else 0 inc / 1 dec / 2 const
  threads.assign(p, {});
  for (int j = 0; j < p; ++j) threads[j].push_back(members[0][j]);

  std::function<bool(int, int, uint64_t)> place = [&](int step, int j, uint64_t used) {
    if (j == p) {
      return place(step + 1, 0, 0);
    }
    if (step == steps) return true;
    for (int idx = 0; idx < p; ++idx) {
      if ((used >> idx) & 1) continue;
      int b = members[step][idx];
      int a = ends[j];
      int sk;
      if (a == b) {
        sk = 2;
      } else if (I.less(a, b)) {
        sk = 0;
      } else if (I.less(b, a)) {
        sk = 1;
      } else {
        continue;
      }
      if (sk == 1 && !allow_decreasing) continue;
      if (kinds[j] >= 0 && kinds[j] != sk) continue;
      int saved_kind = kinds[j];
      int saved_end = ends[j];
      kinds[j] = sk;
      ends[j] = b;
      threads[j].push_back(b);
      if (place(step, j + 1, used | (1ull << idx))) return true;
      threads[j].pop_back();
      ends[j] = saved_end;
      kinds[j] = saved_kind;
    }
    return false;
  };
  if (steps == 1) return true;
  return place(1, 0, 0);
}

}  // namespace

std::optional<CrossSequence> make_cross_sequence(const Interval& I,
                                                 const std::vector<Cross>& crosses) {
  for (const auto& c : crosses) {
    if (c.iv != I.data()) throw MixedIntervalError("cross from another interval");
  }
  CrossSequence out;
  out.iv = I.data();
  out.crosses = crosses;
  if (crosses.empty()) return out;
  out.p = crosses[0].dimension();
  std::vector<std::vector<int>> members;
  for (const auto& c : crosses) {
    if (c.dimension() != out.p) return std::nullopt;
    members.push_back(c.members());
  }
  std::vector<std::vector<int>> threads;
  if (decompose(I, members, false, threads) || decompose(I, members, true, threads)) {
    out.threads = std::move(threads);
    return out;
  }
  return std::nullopt;
}

namespace {

// Structural validity of a decomposed sequence against its interval; the
// transforms refuse hand-built sequences that are not genuine decompositions.
void require_valid_sequence(const Interval& I, const CrossSequence& cs) {
  if (cs.iv != I.data()) throw MixedIntervalError("sequence from another interval");
  const int n = static_cast<int>(cs.crosses.size());
  if (static_cast<int>(cs.threads.size()) != cs.p) {
    throw PreconditionError("sequence is not decomposed into p threads");
  }
  for (const auto& c : cs.crosses) {
    if (c.iv != I.data()) throw MixedIntervalError("cross from another interval");
    if (c.dimension() != cs.p || !is_cross(I, c.bits)) {
      throw PreconditionError("sequence crosses must share dimension p");
    }
  }
  for (const auto& th : cs.threads) {
    if (static_cast<int>(th.size()) != n) {
      throw PreconditionError("thread length differs from cross count");
    }
    if (classify_chain(I, th) == ChainKind::kNone) {
      throw PreconditionError("thread is not a chain");
    }
  }
  for (int i = 0; i < n; ++i) {
    uint64_t seen = 0;
    for (const auto& th : cs.threads) seen |= 1ull << th[i];
    if (seen != cs.crosses[i].bits) {
      throw PreconditionError("threads do not partition cross " + std::to_string(i));
    }
  }
}

bool thread_decreasing(const Interval& I, const std::vector<int>& th) {
  return classify_chain(I, th) == ChainKind::kDecreasing;
}

}  // namespace

SequenceFlags cross_sequence_flags(const Interval& I, const CrossSequence& cs,
                                   const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.size() != cs.crosses.size()) {
    throw LengthError("one pair per cross required");
  }
  require_valid_sequence(I, cs);
  for (auto [h, k] : pairs) {
    I.check_index(h);
    I.check_index(k);
  }
  SequenceFlags f;
  f.regularly_ordered = true;
  f.regularly_increasing = true;
  for (const auto& th : cs.threads) {
    if (thread_decreasing(I, th)) f.regularly_increasing = false;
  }
  const int n = static_cast<int>(cs.crosses.size());
  f.weakly_tame = true;
  for (int i = 0; i + 1 < n && f.weakly_tame; ++i) {
    uint64_t scan = cs.crosses[i].bits;
    while (scan) {
      int t = __builtin_ctzll(scan);
      scan &= scan - 1;
      if (I.less(pairs[i + 1].first, t)) {
        f.weakly_tame = false;
        break;
      }
    }
  }
  f.tame = false;
  f.k_tame = true;
  f.has_dominating_subchain = false;
  for (const auto& th : cs.threads) {
    bool tame = thread_tame_up(I, th, pairs);
    if (tame) f.tame = true;
    if (!tame) {
      bool cross_all = true;
      for (int i = 0; i < n && cross_all; ++i) {
        if (!I.transverse(th[i], pairs[i].first)) cross_all = false;
      }
      if (!cross_all) f.k_tame = false;
    }
    bool dom = true;
    for (int i = 0; i < n && dom; ++i) {
      if (!(th[i] == pairs[i].first || I.less(pairs[i].first, th[i]))) dom = false;
    }
    if (dom) f.has_dominating_subchain = true;
  }
  return f;
}

SequenceFlags cross_sequence_flags(const Interval& I, const std::vector<Cross>& crosses,
                                   const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.size() != crosses.size()) throw LengthError("one pair per cross required");
  auto cs = make_cross_sequence(I, crosses);
  if (cs) return cross_sequence_flags(I, *cs, pairs);
  SequenceFlags f;
  const int n = static_cast<int>(crosses.size());
  f.weakly_tame = true;
  for (int i = 0; i + 1 < n && f.weakly_tame; ++i) {
    uint64_t scan = crosses[i].bits;
    while (scan) {
      int t = __builtin_ctzll(scan);
      scan &= scan - 1;
      if (I.less(pairs[i + 1].first, t)) {
        f.weakly_tame = false;
        break;
      }
    }
  }
  return f;
}

VHResult vertical_horizontal_combine(const Interval& I, const CrossSequence& cs,
                                     const std::vector<std::pair<int, int>>& pairs,
                                     const std::vector<int>& anchors) {
  require_valid_sequence(I, cs);
  const int n = static_cast<int>(cs.crosses.size());
  if (n < 3) throw PreconditionError("need at least three crosses");
  if (pairs.size() != static_cast<size_t>(n) || anchors.size() != static_cast<size_t>(n)) {
    throw PreconditionError("pairs and anchors must match the cross count");
  }
  if (classify_pairs(I, pairs) != PairShape::kStaircase) {
    throw PreconditionError("pairs must form a staircase");
  }
  SequenceFlags flags = cross_sequence_flags(I, cs, pairs);
  if (!flags.regularly_increasing) {
    throw PreconditionError("sequence must be regularly increasing");
  }
  if (!flags.tame) throw PreconditionError("sequence must be tame");
  std::vector<bool> wild(cs.p);
  for (int j = 0; j < cs.p; ++j) {
    bool t = thread_tame_up(I, cs.threads[j], pairs);
    bool w = thread_wild_up(I, cs.threads[j], pairs);
    if (!t && !w) {
      throw PreconditionError("thread " + std::to_string(j) + " is neither tame nor wild");
    }
    wild[j] = !t;
  }
  for (int i = 0; i < n; ++i) {
    int s = anchors[i];
    I.check_index(s);
    if (((cs.crosses[i].bits >> s) & 1) == 0) {
      throw PreconditionError("anchor " + std::to_string(i) + " not in its cross");
    }
    if (!(s == pairs[i].first || I.less(pairs[i].first, s))) {
      throw PreconditionError("anchor " + std::to_string(i) + " must dominate h_i");
    }
  }

  VHResult out;
  for (int i = 0; i + 2 < n; ++i) {
    uint64_t bits = 0;
    int count = 0;
    for (int j = 0; j < cs.p; ++j) {
      int v = wild[j] ? cs.threads[j][i] : cs.threads[j][i + 2];
      bits |= 1ull << v;
      ++count;
    }
    if (__builtin_popcountll(bits) != count || !is_cross(I, bits)) {
      throw LemmaViolationError("combined set " + std::to_string(i) + " is not a cross");
    }
    Cross c{I.data(), bits};
    if (!is_intercross(I, c, pairs[i + 1].first, pairs[i + 1].second)) {
      throw LemmaViolationError("combined cross " + std::to_string(i) +
                                " is not an intercross for its pair");
    }
    out.combined.push_back(split_intercross(I, c, pairs[i + 1].first, pairs[i + 1].second));
  }

  out.reduced.iv = I.data();
  out.reduced.p = cs.p;
  out.reduced.threads.assign(cs.p, {});
  for (int i = 0; i + 2 < n; i += 2) {
    out.reduced.crosses.push_back(out.combined[i].cross);
    out.reduced_pairs.push_back(pairs[i + 1]);
    for (int j = 0; j < cs.p; ++j) {
      out.reduced.threads[j].push_back(wild[j] ? cs.threads[j][i] : cs.threads[j][i + 2]);
    }
  }
  try {
    out.reduced_flags = cross_sequence_flags(I, out.reduced, out.reduced_pairs);
  } catch (const PreconditionError& e) {
    throw LemmaViolationError(std::string("reduced sequence invalid: ") + e.what());
  }
  if (!out.reduced_flags.regularly_increasing || !out.reduced_flags.tame ||
      !out.reduced_flags.k_tame) {
    throw LemmaViolationError("reduced sequence lost a guaranteed flag");
  }
  for (int j = 0; j < cs.p; ++j) {
    if (!thread_tame_up(I, out.reduced.threads[j], out.reduced_pairs) &&
        !thread_wild_up(I, out.reduced.threads[j], out.reduced_pairs)) {
      throw LemmaViolationError("reduced thread is neither tame nor wild");
    }
  }
  return out;
}

BUResult bounded_unbounded_split(const Interval& I, const CrossSequence& cs,
                                 const std::vector<std::pair<int, int>>& pairs) {
  require_valid_sequence(I, cs);
  const int m = static_cast<int>(cs.crosses.size());
  if (m < 3) throw PreconditionError("need the two sentinel crosses plus an interior");
  if (pairs.size() != static_cast<size_t>(m)) {
    throw PreconditionError("one pair per cross required");
  }
  if (classify_pairs(I, pairs) != PairShape::kLadder) {
    throw PreconditionError("pairs must form a ladder");
  }
  for (int i = 0; i < m; ++i) {
    if (!is_intercross(I, cs.crosses[i], pairs[i].first, pairs[i].second)) {
      throw PreconditionError("cross " + std::to_string(i) +
                              " is not an intercross for its pair");
    }
  }
  SequenceFlags flags = cross_sequence_flags(I, cs, pairs);
  if (!flags.regularly_increasing) {
    throw PreconditionError("sequence must be regularly increasing");
  }
  // Weak tameness in both orientations, on all members.
  for (int i = 0; i < m; ++i) {
    uint64_t scan = cs.crosses[i].bits;
    while (scan) {
      int t = __builtin_ctzll(scan);
      scan &= scan - 1;
      if (i + 1 < m && I.less(pairs[i + 1].first, t)) {
        throw PreconditionError("member above the next h breaks upward weak tameness");
      }
      if (i >= 1 && I.less(t, pairs[i - 1].second)) {
        throw PreconditionError("member below the previous k breaks downward weak tameness");
      }
    }
  }
  std::vector<bool> up_tame(cs.p), down_tame(cs.p);
  for (int j = 0; j < cs.p; ++j) {
    bool ut = thread_tame_up(I, cs.threads[j], pairs);
    bool uw = thread_wild_up(I, cs.threads[j], pairs);
    bool dt = thread_tame_down(I, cs.threads[j], pairs);
    bool dw = thread_wild_down(I, cs.threads[j], pairs);
    if ((!ut && !uw) || (!dt && !dw)) {
      throw PreconditionError("thread " + std::to_string(j) +
                              " is not tame or wild in both orientations");
    }
    up_tame[j] = ut;
    down_tame[j] = dt;
  }

  BUResult out;
  out.inner.iv = I.data();
  out.inner.p = cs.p;
  out.inner.threads.assign(cs.p, {});
  for (int i = 1; i + 1 < m; ++i) {
    uint64_t bits = 0;
    for (int j = 0; j < cs.p; ++j) {
      int v;
      if (up_tame[j] && down_tame[j]) {
        v = cs.threads[j][i];
      } else if (!up_tame[j] && down_tame[j]) {
        v = cs.threads[j][0];
      } else if (up_tame[j] && !down_tame[j]) {
        v = cs.threads[j][m - 1];
      } else {
        v = cs.threads[j][i];
      }
      bits |= 1ull << v;
      out.inner.threads[j].push_back(v);
    }
    if (__builtin_popcountll(bits) != cs.p || !is_cross(I, bits)) {
      throw LemmaViolationError("split set " + std::to_string(i) + " is not a cross");
    }
    Cross c{I.data(), bits};
    if (!is_intercross(I, c, pairs[i].first, pairs[i].second)) {
      throw LemmaViolationError("split cross " + std::to_string(i) +
                                " is not an intercross for its pair");
    }
    out.inner.crosses.push_back(c);
    out.inner_pairs.push_back(pairs[i]);
  }
  for (int j = 0; j < cs.p; ++j) {
    if (classify_chain(I, out.inner.threads[j]) == ChainKind::kNone) {
      throw LemmaViolationError("split thread is not a chain");
    }
  }
  // Per-thread verdicts: strictly between the neighbouring h's at every
  // position, or transverse to every interior h.
  for (int j = 0; j < cs.p; ++j) {
    bool bounded = true;
    for (int i = 1; i + 1 < m && bounded; ++i) {
      int v = out.inner.threads[j][i - 1];
      if (!(I.less(pairs[i - 1].first, v) && I.less(v, pairs[i + 1].first))) {
        bounded = false;
      }
    }
    if (bounded) {
      out.verdicts.push_back(Boundedness::kBounded);
      continue;
    }
    bool unbounded = true;
    for (int i = 1; i + 1 < m && unbounded; ++i) {
      int v = out.inner.threads[j][i - 1];
      for (int l = 1; l + 1 < m && unbounded; ++l) {
        if (!I.transverse(v, pairs[l].first)) unbounded = false;
      }
    }
    if (!unbounded) {
      throw LemmaViolationError("split thread " + std::to_string(j) +
                                " is neither bounded nor unbounded");
    }
    out.verdicts.push_back(Boundedness::kUnbounded);
  }
  return out;
}

}  // namespace poctrack
