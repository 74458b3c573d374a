#pragma once

#include <cstdint>
#include <vector>

namespace poctrack {

// xorshift64* generator. <random> distributions are implementation defined,
// which would break byte-identical reproducibility of seeded runs across
// toolchains, so every seeded draw in the library goes through this.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dull;
  }

  // uniform in [lo, hi], inclusive; lo <= hi
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  bool chance(int num, int den) { return static_cast<int>(next() % static_cast<uint64_t>(den)) < num; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = next() % i;
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace poctrack
