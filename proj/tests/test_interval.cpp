#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "doctest.h"
#include "poctrack/cubecomplex.hpp"
#include "poctrack/errors.hpp"
#include "poctrack/fixtures.hpp"
#include "poctrack/interval.hpp"
#include "poctrack/pocset.hpp"
#include "poctrack/rng.hpp"

using namespace poctrack;

namespace {

// The four-halfspace running example as an interval: h < k, t transverse to
// everything, h < s with s transverse to k and t. Local ids 0=h, 1=k, 2=t, 3=s.
Interval example_interval() { return Interval::from_poset(4, {{0, 1}, {0, 3}}); }

// All nonempty pairwise-incomparable subsets, by brute force over subsets.
std::set<uint64_t> antichains_brute(const Interval& I) {
  std::set<uint64_t> out;
  const int n = I.size();
  for (uint64_t bits = 1; bits < (1ull << n); ++bits) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!((bits >> i) & 1)) continue;
      for (int j = i + 1; j < n && ok; ++j) {
        if (!((bits >> j) & 1)) continue;
        if (I.comparable(i, j)) ok = false;
      }
    }
    if (ok) out.insert(bits);
  }
  return out;
}

int brute_maxdim_intercross(const Interval& I, int h, int k) {
  int best = 0;
  for (uint64_t bits : antichains_brute(I)) {
    if (is_cross(I, bits) && is_intercross(I, Cross{I.data(), bits}, h, k)) {
      best = std::max(best, __builtin_popcountll(bits));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("the interval between a vertex and itself is empty") {
  CubeComplex X = CubeComplex::dual(PocSet::build(3, {}));
  Interval I = Interval::between(X, 2, 2);
  CHECK(I.empty());
  CHECK(I.size() == 0);
}

TEST_CASE("opposite corners of the 3-cube span a 3-antichain") {
  CubeComplex X = CubeComplex::dual(PocSet::build(3, {}));
  const int x = X.index_of(0b000);
  const int y = X.index_of(0b111);
  Interval I = Interval::between(X, x, y);
  CHECK(I.size() == 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) CHECK(I.transverse(i, j));
  }
}

TEST_CASE("endpoints of a path complex span a 2-chain oriented at the source") {
  CubeComplex X = CubeComplex::dual(PocSet::build(2, {{0, 2}}));
  const int x = X.index_of(0b00);
  const int y = X.index_of(0b11);
  Interval I = Interval::between(X, x, y);
  REQUIRE(I.size() == 2);
  CHECK(I.halfspace_id(0) == 0);
  CHECK(I.halfspace_id(1) == 2);
  CHECK(I.less(0, 1));
  // The reverse orientation carries the complements, dually ordered.
  Interval R = Interval::between(X, y, x);
  REQUIRE(R.size() == 2);
  CHECK(R.halfspace_id(0) == 1);
  CHECK(R.halfspace_id(1) == 3);
  CHECK(R.less(1, 0));
}

TEST_CASE("between rejects non-vertices") {
  CubeComplex X = CubeComplex::dual(PocSet::build(2, {}));
  CHECK_THROWS_AS(Interval::between(X, -1, 0), NotAVertexError);
  CHECK_THROWS_AS(Interval::between(X, 0, X.num_vertices()), NotAVertexError);
}

TEST_CASE("from_poset realizes the given order") {
  Interval I = Interval::from_poset(3, {{0, 1}, {1, 2}});
  CHECK(I.size() == 3);
  CHECK(I.less(0, 1));
  CHECK(I.less(1, 2));
  CHECK(I.less(0, 2));
  CHECK(I.halfspace_id(2) == 4);
  CHECK_THROWS_AS(Interval::from_poset(2, {{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(Interval::from_poset(2, {{0, 5}}), IndexError);
  CHECK_THROWS_AS(Interval::from_poset(65, {}), CapacityError);
}

TEST_CASE("crosses of a 2-chain and a 2-antichain") {
  Interval chain = Interval::from_poset(2, {{0, 1}});
  std::vector<Cross> cc = enumerate_crosses(chain);
  REQUIRE(cc.size() == 2);
  CHECK(cc[0].bits == 0b01);
  CHECK(cc[1].bits == 0b10);

  Interval anti = Interval::from_poset(2, {});
  std::vector<Cross> ca = enumerate_crosses(anti);
  REQUIRE(ca.size() == 3);
  // Lexicographic order on the member sequences: {0}, {0,1}, {1}.
  CHECK(ca[0].bits == 0b01);
  CHECK(ca[1].bits == 0b11);
  CHECK(ca[2].bits == 0b10);
  CHECK(ca[1].dimension() == 2);
}

TEST_CASE("enumerate_crosses matches the independent-set enumeration") {
  Rng rng(31);
  std::vector<Interval> family{example_interval()};
  for (int t = 0; t < 10; ++t) family.push_back(random_interval(rng, 8, 3));
  for (const Interval& I : family) {
    std::set<uint64_t> brute = antichains_brute(I);
    std::vector<Cross> listed = enumerate_crosses(I);
    CHECK(listed.size() == brute.size());
    std::set<uint64_t> got;
    for (const Cross& c : listed) {
      CHECK(is_cross(I, c.bits));
      got.insert(c.bits);
    }
    CHECK(got == brute);
    // Size filter selects exactly the crosses of that dimension.
    for (int s = 1; s <= 3; ++s) {
      std::vector<Cross> only = enumerate_crosses(I, s);
      size_t expect = 0;
      for (uint64_t b : brute) {
        if (__builtin_popcountll(b) == s) ++expect;
      }
      CHECK(only.size() == expect);
    }
  }
}

TEST_CASE("enumerate_crosses enforces the interval cap") {
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i + 1 < 21; ++i) rels.push_back({i, i + 1});
  Interval big = Interval::from_poset(21, rels);
  CHECK_THROWS_AS(enumerate_crosses(big), CapacityError);
  CHECK(enumerate_crosses(big, -1, 21).size() == 21);
}

TEST_CASE("make_cross validates its members") {
  Interval I = Interval::from_poset(3, {{0, 1}});
  CHECK(make_cross(I, {0, 2}).dimension() == 2);
  CHECK_THROWS_AS(make_cross(I, {}), DegenerateError);
  CHECK_THROWS_AS(make_cross(I, {0, 1}), DegenerateError);
  CHECK_THROWS_AS(make_cross(I, {0, 3}), IndexError);
}

TEST_CASE("meet and join on the h<k plus transversal interval") {
  Interval I = Interval::from_poset(3, {{0, 1}});  // 0=h < 1=k, 2=t
  Cross ht = make_cross(I, {0, 2});
  Cross kt = make_cross(I, {1, 2});
  CHECK(meet(ht, kt).bits == ht.bits);
  CHECK(join(ht, kt).bits == kt.bits);
  // Idempotence.
  CHECK(meet(ht, ht).bits == ht.bits);
  CHECK(join(kt, kt).bits == kt.bits);
}

TEST_CASE("meet rejects crosses of different intervals") {
  Interval a = Interval::from_poset(2, {});
  Interval b = Interval::from_poset(2, {});
  Cross ca = make_cross(a, {0});
  Cross cb = make_cross(b, {1});
  CHECK_THROWS_AS(meet(ca, cb), MixedIntervalError);
  CHECK_THROWS_AS(join(ca, cb), MixedIntervalError);
}

TEST_CASE("cross pairs satisfy superadditivity and the union identity") {
  Rng rng(47);
  for (int t = 0; t < 12; ++t) {
    Interval I = random_interval(rng, 8, 3);
    std::vector<Cross> crosses = enumerate_crosses(I);
    for (size_t i = 0; i < crosses.size(); ++i) {
      for (size_t j = i; j < crosses.size(); ++j) {
        Cross m = meet(crosses[i], crosses[j]);
        Cross jn = join(crosses[i], crosses[j]);
        CHECK(is_cross(I, m.bits));
        CHECK(is_cross(I, jn.bits));
        CHECK(crosses[i].dimension() + crosses[j].dimension() <=
              m.dimension() + jn.dimension());
        CHECK((crosses[i].bits | crosses[j].bits) == (m.bits | jn.bits));
        // Commutativity.
        CHECK(meet(crosses[j], crosses[i]).bits == m.bits);
        CHECK(join(crosses[j], crosses[i]).bits == jn.bits);
      }
    }
  }
}

TEST_CASE("absorption fails on general crosses") {
  // Two transverse singletons: {a} absorbed into their join gives {a,b}.
  Interval I = Interval::from_poset(2, {});
  Cross a = make_cross(I, {0});
  Cross b = make_cross(I, {1});
  CHECK(meet(a, join(a, b)).bits == 0b11);
  CHECK(join(a, meet(a, b)).bits == 0b11);
}

TEST_CASE("distributivity fails on general crosses but holds on maximum ones") {
  Interval I = Interval::from_poset(3, {{0, 1}});  // 0=a < 1=b, 2=c
  Cross b = make_cross(I, {1});
  Cross a = make_cross(I, {0});
  Cross c = make_cross(I, {2});
  CHECK(meet(b, join(a, c)).bits == 0b101);
  CHECK(join(meet(b, a), meet(b, c)).bits == 0b110);

  // Maximum crosses of this interval: {a,c} and {b,c}.
  std::vector<Cross> maxima;
  for (const Cross& x : enumerate_crosses(I)) {
    if (x.dimension() == 2) maxima.push_back(x);
  }
  REQUIRE(maxima.size() == 2);
  for (const Cross& x : maxima) {
    for (const Cross& y : maxima) {
      CHECK(meet(x, join(x, y)).bits == x.bits);
      CHECK(join(x, meet(x, y)).bits == x.bits);
      for (const Cross& z : maxima) {
        CHECK(meet(x, join(y, z)).bits == join(meet(x, y), meet(x, z)).bits);
        CHECK(join(x, meet(y, z)).bits == meet(join(x, y), join(x, z)).bits);
      }
    }
  }
}

TEST_CASE("adjacency in chains") {
  Interval two = Interval::from_poset(2, {{0, 1}});
  CHECK(is_adjacent(two, 0, 1));
  Interval three = Interval::from_poset(3, {{0, 1}, {1, 2}});
  CHECK(is_adjacent(three, 0, 1));
  CHECK(is_adjacent(three, 1, 2));
  CHECK_FALSE(is_adjacent(three, 0, 2));
  CHECK_FALSE(is_adjacent(three, 1, 0));
}

TEST_CASE("adjacency agrees with the exhaustive betweenness scan") {
  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    Interval I = random_interval(rng, 8, 3);
    for (int h = 0; h < I.size(); ++h) {
      for (int k = 0; k < I.size(); ++k) {
        bool expect = h != k && I.less(h, k);
        if (expect) {
          for (int m = 0; m < I.size(); ++m) {
            if (I.less(h, m) && I.less(m, k)) {
              expect = false;
              break;
            }
          }
        }
        CHECK(is_adjacent(I, h, k) == expect);
      }
    }
  }
}

TEST_CASE("the running example has two halfspaces adjacent above h") {
  Interval I = example_interval();
  CHECK(adjacent_above(I, 0) == std::vector<int>{1, 3});
}

TEST_CASE("max_intercross on the bare 2-chain is absent") {
  Interval I = Interval::from_poset(2, {{0, 1}});
  CHECK_FALSE(max_intercross(I, 0, 1).has_value());
  CHECK(maxdim_intercross(I, 0, 1) == 0);
}

TEST_CASE("max_intercross with one transversal") {
  Interval I = Interval::from_poset(3, {{0, 1}});
  auto mi = max_intercross(I, 0, 1);
  REQUIRE(mi.has_value());
  CHECK(mi->cross.bits == 0b100);
  CHECK(mi->h_mask == 0b100);
  CHECK(mi->k_mask == 0);
  CHECK(mi->dimension() == 1);
}

TEST_CASE("max_intercross on the running example") {
  Interval I = example_interval();
  auto mi = max_intercross(I, 0, 1);
  REQUIRE(mi.has_value());
  CHECK(mi->cross.bits == 0b1100);  // {t, s}
  CHECK(mi->h_mask == 0b0100);      // t transverse to h
  CHECK(mi->k_mask == 0b1000);      // s above h, transverse to k
  CHECK(mi->dimension() == 2);
  CHECK(maxdim_intercross(I, 0, 1) == brute_maxdim_intercross(I, 0, 1));
  CHECK_THROWS_AS(max_intercross(I, 0, 2), NotAdjacentError);
}

TEST_CASE("maxdim_intercross matches brute force on random intervals") {
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    Interval I = random_interval(rng, 7, 3);
    for (int h = 0; h < I.size(); ++h) {
      for (int k : adjacent_above(I, h)) {
        CHECK(maxdim_intercross(I, h, k) == brute_maxdim_intercross(I, h, k));
        auto mi = max_intercross(I, h, k);
        if (mi.has_value()) {
          CHECK(mi->dimension() == brute_maxdim_intercross(I, h, k));
          CHECK(is_intercross(I, mi->cross, h, k));
        }
      }
    }
  }
}

TEST_CASE("countercross bullets on the running example") {
  Interval I = example_interval();
  Intercross C = split_intercross(I, make_cross(I, {2, 3}), 0, 1);
  // The classic countercross {k, s, t}.
  CHECK(is_countercross(I, make_cross(I, {1, 2, 3}), C, 0, 1));
  // Equal size fails the first bullet.
  CHECK_FALSE(is_countercross(I, make_cross(I, {2, 3}), C, 0, 1));
}

TEST_CASE("an empty K part requires h itself in the countercross") {
  Interval I = Interval::from_poset(3, {{0, 1}});
  Intercross C = split_intercross(I, make_cross(I, {2}), 0, 1);
  CHECK(C.k_mask == 0);
  CHECK_FALSE(is_countercross(I, make_cross(I, {1, 2}), C, 0, 1));  // omits h
  CHECK(is_countercross(I, make_cross(I, {0, 2}), C, 0, 1));
}

TEST_CASE("find_countercrosser on a bare chain is the vacuous upper neighbour") {
  Interval I = Interval::from_poset(2, {{0, 1}});
  CHECK(find_countercrosser(I, 0) == 1);
  CHECK_THROWS_AS(find_countercrosser(I, 1), MaximalError);
}

TEST_CASE("find_countercrosser returns k on the running example") {
  Interval I = example_interval();
  CHECK(find_countercrosser(I, 0) == 1);
}

TEST_CASE("find_countercrosser enforces the interval cap") {
  Interval big = Interval::from_poset(21, {{0, 1}});
  CHECK_THROWS_AS(find_countercrosser(big, 0), CapacityError);
}

TEST_CASE("every countercrosser choice survives the brute-force audit") {
  for (const PocSet& ps : exhaustive_pocsets(3)) {
    CubeComplex X = CubeComplex::dual(ps);
    for (int a = 0; a < X.num_vertices(); ++a) {
      for (int b = 0; b < X.num_vertices(); ++b) {
        if (a == b) continue;
        Interval I = Interval::between(X, a, b);
        std::vector<Cross> crosses = enumerate_crosses(I);
        for (int h = 0; h < I.size(); ++h) {
          if (I.is_maximal(h)) continue;
          const int k = find_countercrosser(I, h);
          CHECK(is_adjacent(I, h, k));
          for (const Cross& c : crosses) {
            if (!is_intercross(I, c, h, k)) continue;
            Intercross ic = split_intercross(I, c, h, k);
            bool found = false;
            for (const Cross& c2 : crosses) {
              if (is_countercross(I, c2, ic, h, k)) {
                found = true;
                break;
              }
            }
            CHECK(found);
          }
        }
      }
    }
  }
}

TEST_CASE("local parallelism prefers the minimal intercross dimension") {
  // k1 and k2 both adjacent above h; two incomparable witnesses above k1 give
  // (h,k2) an intercross of dimension 2 while (h,k1) caps at 1.
  Interval I = Interval::from_poset(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}});
  CHECK(maxdim_intercross(I, 0, 1) == 1);
  CHECK(maxdim_intercross(I, 0, 2) == 2);
  CHECK(is_locally_parallel(I, 0, 1));
  CHECK_FALSE(is_locally_parallel(I, 0, 2));
  // Non-adjacent pairs are quietly not locally parallel.
  CHECK_FALSE(is_locally_parallel(I, 0, 3));
  CHECK_FALSE(is_locally_parallel(I, 1, 0));
}

TEST_CASE("a bare chain pair is locally parallel vacuously") {
  Interval I = Interval::from_poset(2, {{0, 1}});
  CHECK(is_locally_parallel(I, 0, 1));
}

TEST_CASE("local parallelism is not symmetric under orientation reversal") {
  // In the forward interval h has a single upper neighbour k, so (h,k) is
  // locally parallel vacuously. Reversed, k* sees two upper neighbours whose
  // intercross dimensions differ: two incomparable elements below g burden
  // (k*,h*) with a dimension-4 intercross while (k*,g*) caps at 3.
  PocSet ps = PocSet::build(7, {{0, 4}, {2, 4}, {10, 2}, {12, 2}});
  CubeComplex X = CubeComplex::dual(ps);
  const int x = X.index_of(0);
  const int y = X.index_of(0b1111111);
  REQUIRE(x >= 0);
  REQUIRE(y >= 0);
  Interval I = Interval::between(X, x, y);
  Interval R = Interval::between(X, y, x);
  REQUIRE(I.size() == 7);
  REQUIRE(R.size() == 7);
  // Local index i holds ambient 2i forward and its complement backward.
  const int h = 0, k = 2;
  CHECK(I.halfspace_id(h) == 0);
  CHECK(I.halfspace_id(k) == 4);
  CHECK(R.halfspace_id(k) == 5);
  CHECK(R.halfspace_id(h) == 1);
  CHECK(is_locally_parallel(I, h, k));
  CHECK(maxdim_intercross(R, k, h) == 4);
  CHECK(maxdim_intercross(R, k, 1) == 3);
  CHECK_FALSE(is_locally_parallel(R, k, h));
}

TEST_CASE("reversed-interval persistence fails on the minimal example") {
  // Pairs h,k,k2,s with h<k, h<k2, s<k. Toward x = all-complements, the
  // interval from y1 omits s and (h,k) is locally parallel there; the interval
  // from y2 contains s, which boosts maxdim(h,k) to 2 while (h,k2) stays at 1.
  PocSet ps = PocSet::build(4, {{0, 2}, {0, 4}, {6, 2}});
  CubeComplex X = CubeComplex::dual(ps);
  const int x = X.index_of(0b1111);
  const int y1 = X.index_of(0b1000);
  const int y2 = X.index_of(0b0000);
  REQUIRE(x >= 0);
  REQUIRE(y1 >= 0);
  REQUIRE(y2 >= 0);
  Interval i1 = Interval::between(X, y1, x);
  Interval i2 = Interval::between(X, y2, x);
  REQUIRE(i1.size() == 3);
  REQUIRE(i2.size() == 4);
  CHECK(i1.halfspace_id(0) == 0);
  CHECK(i1.halfspace_id(1) == 2);
  CHECK(is_locally_parallel(i1, 0, 1));
  // Both halfspaces lie in the second interval, and are adjacent there too.
  CHECK(i2.halfspace_id(0) == 0);
  CHECK(i2.halfspace_id(1) == 2);
  CHECK(is_adjacent(i2, 0, 1));
  CHECK(maxdim_intercross(i2, 0, 1) == 2);
  CHECK(maxdim_intercross(i2, 0, 2) == 1);
  CHECK_FALSE(is_locally_parallel(i2, 0, 1));
}

TEST_CASE("adjacency does persist into larger co-oriented intervals") {
  // The half of the persistence claim that is true: whenever (h,k) is adjacent
  // in [y1,x] and both lie in [y2,x], they are adjacent in [y2,x].
  for (const PocSet& ps : exhaustive_pocsets(3)) {
    CubeComplex X = CubeComplex::dual(ps);
    const int nv = X.num_vertices();
    for (int x = 0; x < nv; ++x) {
      for (int y1 = 0; y1 < nv; ++y1) {
        if (y1 == x) continue;
        Interval i1 = Interval::between(X, y1, x);
        for (int y2 = 0; y2 < nv; ++y2) {
          if (y2 == x || y2 == y1) continue;
          Interval i2 = Interval::between(X, y2, x);
          for (int h = 0; h < i1.size(); ++h) {
            for (int k = 0; k < i1.size(); ++k) {
              if (!is_adjacent(i1, h, k)) continue;
              int h2 = -1, k2 = -1;
              for (int m = 0; m < i2.size(); ++m) {
                if (i2.halfspace_id(m) == i1.halfspace_id(h)) h2 = m;
                if (i2.halfspace_id(m) == i1.halfspace_id(k)) k2 = m;
              }
              if (h2 < 0 || k2 < 0) continue;
              CHECK(is_adjacent(i2, h2, k2));
            }
          }
        }
      }
    }
  }
}
