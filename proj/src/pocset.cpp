#include "poctrack/pocset.hpp"

#include <algorithm>
#include <numeric>

namespace poctrack {

const char* to_string(RelationTag tag) {
  switch (tag) {
    case RelationTag::kLess: return "h<k";
    case RelationTag::kGreater: return "k<h";
    case RelationTag::kLessComplement: return "h<k*";
    case RelationTag::kComplementLess: return "k*<h";
    case RelationTag::kTransverse: return "transverse";
  }
  return "?";
}

PocSet PocSet::build(int num_pairs, const std::vector<std::pair<int, int>>& relations) {
  if (num_pairs < 0 || num_pairs > kMaxPairs) {
    throw CapacityError("pocset supports 0.." + std::to_string(kMaxPairs) +
                        " pairs, got " + std::to_string(num_pairs));
  }
  const int m = 2 * num_pairs;
  PocSet ps;
  ps.n_pairs_ = num_pairs;
  ps.above_.assign(m, 0);
  ps.below_.assign(m, 0);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= m || b < 0 || b >= m) {
      throw IndexError("halfspace id out of range in relation " + std::to_string(a) +
                       " < " + std::to_string(b));
    }
    if (a == b) throw CycleError("relation " + std::to_string(a) + " < itself");
    // A generator set closed under the involution stays closed under
    // transitive closure, so adding the mirrored relation here suffices.
    ps.above_[a] |= 1ull << b;
    ps.above_[complement_of(b)] |= 1ull << complement_of(a);
  }
  for (int mid = 0; mid < m; ++mid) {
    for (int h = 0; h < m; ++h) {
      if ((ps.above_[h] >> mid) & 1) ps.above_[h] |= ps.above_[mid];
    }
  }
  for (int h = 0; h < m; ++h) {
    if ((ps.above_[h] >> h) & 1) {
      throw CycleError("closure makes halfspace " + std::to_string(h) +
                       " less than itself");
    }
    if ((ps.above_[h] >> complement_of(h)) & 1) {
      throw InvolutionError("closure makes halfspace " + std::to_string(h) +
                            " comparable to its complement");
    }
  }
  for (int h = 0; h < m; ++h) {
    for (int k = 0; k < m; ++k) {
      if ((ps.above_[h] >> k) & 1) ps.below_[k] |= 1ull << h;
    }
  }
  return ps;
}

RelationTag PocSet::classify_pair(int h, int k) const {
  const int m = halfspaces();
  if (h < 0 || h >= m || k < 0 || k >= m) {
    throw IndexError("halfspace id out of range in classify_pair");
  }
  if (k == h || k == complement_of(h)) {
    throw DegenerateError("classify_pair needs halfspaces of distinct pairs");
  }
  if (less(h, k)) return RelationTag::kLess;
  if (less(k, h)) return RelationTag::kGreater;
  if (less(h, complement_of(k))) return RelationTag::kLessComplement;
  if (less(complement_of(k), h)) return RelationTag::kComplementLess;
  return RelationTag::kTransverse;
}

bool PocSet::transverse(int h, int k) const {
  if (pair_of(h) == pair_of(k)) return false;
  return classify_pair(h, k) == RelationTag::kTransverse;
}

std::vector<std::pair<int, int>> PocSet::relation_list() const {
  std::vector<std::pair<int, int>> out;
  const int m = halfspaces();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

PocSet PocSet::relabeled(const std::vector<int>& pair_perm, uint32_t side_flips) const {
  if (static_cast<int>(pair_perm.size()) != n_pairs_) {
    throw IndexError("pair permutation has wrong length");
  }
  const int m = halfspaces();
  // new halfspace 2p+s maps to old halfspace of pair pair_perm[p], side
  // s xor flip bit.
  std::vector<int> to_old(m);
  for (int p = 0; p < n_pairs_; ++p) {
    int flip = (side_flips >> p) & 1;
    to_old[2 * p] = halfspace_of(pair_perm[p], flip);
    to_old[2 * p + 1] = halfspace_of(pair_perm[p], flip ^ 1);
  }
  PocSet out;
  out.n_pairs_ = n_pairs_;
  out.above_.assign(m, 0);
  out.below_.assign(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (less(to_old[a], to_old[b])) {
        out.above_[a] |= 1ull << b;
        out.below_[b] |= 1ull << a;
      }
    }
  }
  return out;
}

std::string PocSet::encoding() const {
  const int m = halfspaces();
  std::string s = std::to_string(n_pairs_);
  s.push_back(';');
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) s.push_back(less(a, b) ? '1' : '0');
  }
  return s;
}

std::string PocSet::canonical_encoding() const {
  if (n_pairs_ > 6) {
    throw CapacityError("canonical encoding is factorial; limited to 6 pairs");
  }
  std::vector<int> perm(n_pairs_);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    for (uint32_t flips = 0; flips < (1u << n_pairs_); ++flips) {
      std::string enc = relabeled(perm, flips).encoding();
      if (best.empty() || enc < best) best = std::move(enc);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace poctrack
