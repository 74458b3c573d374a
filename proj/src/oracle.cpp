#include "poctrack/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "poctrack/cubecomplex.hpp"
#include "poctrack/errors.hpp"
#include "poctrack/fixtures.hpp"
#include "poctrack/interval.hpp"
#include "poctrack/maxclique.hpp"
#include "poctrack/pattern.hpp"
#include "poctrack/rng.hpp"

namespace poctrack {

namespace {

using njson = nlohmann::ordered_json;

njson interval_to_json(const Interval& I) {
  njson rels = njson::array();
  const int n = I.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (I.less(i, j)) rels.push_back(njson::array({i, j}));
  njson out;
  out["n"] = n;
  out["rels"] = std::move(rels);
  return out;
}

Interval interval_from_json(const njson& j) {
  std::vector<std::pair<int, int>> rels;
  for (const auto& r : j.at("rels")) rels.emplace_back(r.at(0).get<int>(), r.at(1).get<int>());
  return Interval::from_poset(j.at("n").get<int>(), rels);
}

// Local index of an ambient oriented halfspace id, or -1 when absent.
int local_of(const Interval& I, int ambient) {
  const auto& ids = I.data()->halfspace_ids;
  auto it = std::lower_bound(ids.begin(), ids.end(), ambient);
  if (it == ids.end() || *it != ambient) return -1;
  return static_cast<int>(it - ids.begin());
}

int interval_dimension(const Interval& I) {
  const int n = I.size();
  if (n == 0) return 0;
  std::vector<uint64_t> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) adj[static_cast<size_t>(i)] = I.transverse_mask(i);
  return max_clique(adj, low_mask(n));
}

// Visits every interval of the family: both orientations of every vertex pair
// of every exhaustive dual, then the seeded random intervals.
void for_each_interval(const FamilySpec& family,
                       const std::function<void(const Interval&)>& fn) {
  if (family.exhaustive) {
    for (const PocSet& ps : exhaustive_pocsets(family.max_pairs)) {
      CubeComplex X = CubeComplex::dual(ps);
      const int v = X.num_vertices();
      for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b)
          if (a != b) fn(Interval::between(X, a, b));
    }
  }
  if (family.random_count > 0) {
    Rng rng(family.seed);
    for (int i = 0; i < family.random_count; ++i)
      fn(random_interval(rng, family.random_size, family.random_width));
  }
}

// Shared by the verifier and replay so a reported instance re-runs the exact
// check that produced it.
bool law_violated(const Interval& I, const std::string& law, uint64_t b1, uint64_t b2,
                  uint64_t b3) {
  Cross a{I.data(), b1}, b{I.data(), b2}, c{I.data(), b3};
  if (law == "comm-meet") return !(meet(a, b) == meet(b, a));
  if (law == "comm-join") return !(join(a, b) == join(b, a));
  if (law == "idem-meet") return !(meet(a, a) == a);
  if (law == "idem-join") return !(join(a, a) == a);
  if (law == "superadd")
    return a.dimension() + b.dimension() >
           meet(a, b).dimension() + join(a, b).dimension();
  if (law == "union") return (a.bits | b.bits) != (meet(a, b).bits | join(a, b).bits);
  if (law == "assoc-meet") return !(meet(meet(a, b), c) == meet(a, meet(b, c)));
  if (law == "assoc-join") return !(join(join(a, b), c) == join(a, join(b, c)));
  if (law == "absorb-meet") return !(meet(a, join(a, b)) == a);
  if (law == "absorb-join") return !(join(a, meet(a, b)) == a);
  if (law == "dist-meet") return !(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
  if (law == "dist-join") return !(join(a, meet(b, c)) == meet(join(a, b), join(a, c)));
  throw Error("unknown lattice law: " + law);
}

}  // namespace

VerdictReport verify_cross_lattice(const FamilySpec& family) {
  VerdictReport rep;
  rep.lemma_id = "cross-lattice";
  long pairs_checked = 0, triples_checked = 0, capped_intervals = 0;
  long max_pairs_checked = 0, max_triples_checked = 0;
  long crosses_max = 0;

  for_each_interval(family, [&](const Interval& I) {
    ++rep.instances;
    if (I.empty()) return;
    auto crosses = enumerate_crosses(I);
    const int m = static_cast<int>(crosses.size());
    crosses_max = std::max(crosses_max, static_cast<long>(m));
    njson ser;  // built lazily on first violation of this interval
    bool have_ser = false;
    auto fail = [&](const char* law, const Cross& a, const Cross& b, const Cross* c) {
      if (!have_ser) {
        ser = interval_to_json(I);
        ser["suite"] = "cross-lattice";
        have_ser = true;
      }
      njson inst = ser;
      inst["law"] = law;
      inst["c1"] = a.bits;
      inst["c2"] = b.bits;
      if (c) inst["c3"] = c->bits;
      std::ostringstream detail;
      detail << law << " fails on crosses " << a.bits << ", " << b.bits;
      if (c) detail << ", " << c->bits;
      rep.violations.push_back({inst.dump(), detail.str()});
    };

    for (int i = 0; i < m; ++i) {
      const Cross& a = crosses[static_cast<size_t>(i)];
      if (law_violated(I, "idem-meet", a.bits, 0, 0)) fail("idem-meet", a, a, nullptr);
      if (law_violated(I, "idem-join", a.bits, 0, 0)) fail("idem-join", a, a, nullptr);
      for (int j = i + 1; j < m; ++j) {
        const Cross& b = crosses[static_cast<size_t>(j)];
        ++pairs_checked;
        for (const char* law : {"comm-meet", "comm-join", "superadd", "union"})
          if (law_violated(I, law, a.bits, b.bits, 0)) fail(law, a, b, nullptr);
      }
    }

    const int t = std::min(m, 64);  // triple laws over a deterministic prefix
    if (m > 64) ++capped_intervals;
    for (int i = 0; i < t; ++i)
      for (int j = i; j < t; ++j)
        for (int l = j; l < t; ++l) {
          ++triples_checked;
          const Cross& a = crosses[static_cast<size_t>(i)];
          const Cross& b = crosses[static_cast<size_t>(j)];
          const Cross& c = crosses[static_cast<size_t>(l)];
          if (law_violated(I, "assoc-meet", a.bits, b.bits, c.bits))
            fail("assoc-meet", a, b, &c);
          if (law_violated(I, "assoc-join", a.bits, b.bits, c.bits))
            fail("assoc-join", a, b, &c);
        }

    // Absorption and distributivity hold on the maximum crosses (they are
    // closed under meet/join by superadditivity); on general crosses both
    // fail, which the unit suite pins with explicit counterexamples.
    int maxdim = 0;
    for (const Cross& crs : crosses) maxdim = std::max(maxdim, crs.dimension());
    std::vector<const Cross*> maxi;
    for (const Cross& crs : crosses)
      if (crs.dimension() == maxdim) maxi.push_back(&crs);
    const int mm = std::min<int>(static_cast<int>(maxi.size()), 64);
    for (int i = 0; i < mm; ++i)
      for (int j = 0; j < mm; ++j) {
        ++max_pairs_checked;
        const Cross& a = *maxi[static_cast<size_t>(i)];
        const Cross& b = *maxi[static_cast<size_t>(j)];
        if (law_violated(I, "absorb-meet", a.bits, b.bits, 0)) fail("absorb-meet", a, b, nullptr);
        if (law_violated(I, "absorb-join", a.bits, b.bits, 0)) fail("absorb-join", a, b, nullptr);
      }
    for (int i = 0; i < mm; ++i)
      for (int j = 0; j < mm; ++j)
        for (int l = j; l < mm; ++l) {
          ++max_triples_checked;
          const Cross& a = *maxi[static_cast<size_t>(i)];
          const Cross& b = *maxi[static_cast<size_t>(j)];
          const Cross& c = *maxi[static_cast<size_t>(l)];
          if (law_violated(I, "dist-meet", a.bits, b.bits, c.bits)) fail("dist-meet", a, b, &c);
          if (law_violated(I, "dist-join", a.bits, b.bits, c.bits)) fail("dist-join", a, b, &c);
        }
  });

  rep.stats["crosses_max"] = crosses_max;
  rep.stats["maximum_pairs_checked"] = max_pairs_checked;
  rep.stats["maximum_triples_checked"] = max_triples_checked;
  rep.stats["pairs_checked"] = pairs_checked;
  rep.stats["triples_capped_intervals"] = capped_intervals;
  rep.stats["triples_checked"] = triples_checked;
  return rep;
}

namespace {

// Every intercross of (h, k) admits a countercross, by direct enumeration.
bool brute_countercrosser_ok(const Interval& I, const std::vector<Cross>& crosses, int h,
                             int k) {
  for (const Cross& C : crosses) {
    if (!is_intercross(I, C, h, k)) continue;
    Intercross ic = split_intercross(I, C, h, k);
    bool found = false;
    for (const Cross& c2 : crosses) {
      if (is_countercross(I, c2, ic, h, k)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

VerdictReport verify_countercrosser(const FamilySpec& family) {
  VerdictReport rep;
  rep.lemma_id = "countercrosser";
  long brute_checked = 0;

  for_each_interval(family, [&](const Interval& I) {
    const int n = I.size();
    std::vector<Cross> crosses;
    const bool brute = n <= 8 && n > 0;
    if (brute) crosses = enumerate_crosses(I);
    for (int h = 0; h < n; ++h) {
      if (I.above(h) == 0) continue;  // maximal halfspaces are out of scope
      ++rep.instances;
      auto report = [&](const std::string& detail) {
        njson inst = interval_to_json(I);
        inst["suite"] = "countercrosser";
        inst["h"] = h;
        rep.violations.push_back({inst.dump(), detail});
      };
      int k = -1;
      try {
        k = find_countercrosser(I, h);
      } catch (const LemmaViolationError& e) {
        report(std::string("find_countercrosser failed: ") + e.what());
        continue;
      }
      if (!brute) continue;
      ++brute_checked;
      if (!brute_countercrosser_ok(I, crosses, h, k)) {
        std::ostringstream d;
        d << "returned k=" << k << " admits an intercross with no countercross";
        report(d.str());
        continue;
      }
      for (int k2 : adjacent_above(I, h)) {
        if (k2 >= k) break;
        if (brute_countercrosser_ok(I, crosses, h, k2)) {
          std::ostringstream d;
          d << "returned k=" << k << " but smaller k=" << k2 << " also qualifies";
          report(d.str());
          break;
        }
      }
    }
  });

  rep.stats["brute_checked"] = brute_checked;
  return rep;
}

namespace {

struct LpPair {
  int h = 0, k = 0;  // local indices, h < k adjacent and locally parallel
};

std::vector<LpPair> locally_parallel_pairs(const Interval& I) {
  std::vector<LpPair> out;
  for (int h = 0; h < I.size(); ++h)
    for (int k : adjacent_above(I, h))
      if (is_locally_parallel(I, h, k)) out.push_back({h, k});
  return out;
}

// Longest staircase assembled from locally parallel pairs; depth-first with a
// hard node budget, so the result is an empirical maximum.
int longest_lp_staircase(const Interval& I, const std::vector<LpPair>& lp) {
  if (lp.empty()) return 0;
  const int m = static_cast<int>(lp.size());
  int best = 1;
  long nodes = 0;
  std::vector<int> chosen;
  std::vector<char> used(static_cast<size_t>(m), 0);
  std::function<void()> rec = [&]() {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (chosen.size() >= 12 || ++nodes > 200000) return;
    for (int i = 0; i < m; ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      const LpPair& p = lp[static_cast<size_t>(i)];
      bool ok = true;
      for (int ci : chosen) {
        const LpPair& q = lp[static_cast<size_t>(ci)];
        // appending p after q: h and k strictly increase, the new k clears
        // every earlier h, the new h is transverse to every earlier k
        if (!I.less(q.h, p.h) || !I.less(q.k, p.k) || !I.less(q.h, p.k) ||
            !I.transverse(q.k, p.h)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[static_cast<size_t>(i)] = 1;
      chosen.push_back(i);
      rec();
      chosen.pop_back();
      used[static_cast<size_t>(i)] = 0;
    }
  };
  rec();
  // A lone pair classifies as a ladder by tie-break, so staircases start at
  // length two.
  return best >= 2 ? best : 0;
}

void bump(std::map<std::string, long>& stats, const std::string& key, long value) {
  auto it = stats.find(key);
  if (it == stats.end())
    stats[key] = value;
  else
    it->second = std::max(it->second, value);
}

}  // namespace

VerdictReport survey_locally_parallel(const FamilySpec& family) {
  VerdictReport rep;
  rep.lemma_id = "locally-parallel";
  long lp_total = 0, asym = 0, persistence_checked = 0;

  if (family.exhaustive) {
    for (const PocSet& ps : exhaustive_pocsets(family.max_pairs)) {
      CubeComplex X = CubeComplex::dual(ps);
      const int v = X.num_vertices();

      struct Entry {
        Interval iv;
        std::vector<LpPair> lp;
        int dim = 0;
      };
      std::vector<std::vector<int>> slot(static_cast<size_t>(v),
                                         std::vector<int>(static_cast<size_t>(v), -1));
      std::vector<Entry> entries;
      for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b) {
          if (a == b) continue;
          Entry e{Interval::between(X, a, b), {}, 0};
          e.lp = locally_parallel_pairs(e.iv);
          e.dim = interval_dimension(e.iv);
          slot[static_cast<size_t>(a)][static_cast<size_t>(b)] =
              static_cast<int>(entries.size());
          entries.push_back(std::move(e));
          ++rep.instances;
        }

      for (const Entry& e : entries) {
        lp_total += static_cast<long>(e.lp.size());
        bump(rep.stats, "staircase_max_d" + std::to_string(e.dim),
             longest_lp_staircase(e.iv, e.lp));
      }

      // Medians of vertex triples separating locally parallel pairs.
      for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b) {
          if (a == b) continue;
          const Entry& e = entries[static_cast<size_t>(
              slot[static_cast<size_t>(a)][static_cast<size_t>(b)])];
          if (e.lp.empty()) continue;
          for (int z = 0; z < v; ++z) {
            if (z == a || z == b) continue;
            const int mv = X.median(a, b, z);
            long count = 0;
            for (const LpPair& p : e.lp) {
              const int ha = e.iv.halfspace_id(p.h);
              const int ka = e.iv.halfspace_id(p.k);
              if (X.vertex_selects(mv, ha) != X.vertex_selects(mv, ka)) ++count;
            }
            bump(rep.stats, "median_sep_max_d" + std::to_string(e.dim), count);
          }
        }

      // Pairs locally parallel in one interval but not in another, and the
      // same-sink persistence assertion.
      for (size_t i1 = 0; i1 < entries.size(); ++i1) {
        const Entry& e1 = entries[i1];
        if (e1.lp.empty()) continue;
        for (size_t i2 = 0; i2 < entries.size(); ++i2) {
          if (i1 == i2) continue;
          const Entry& e2 = entries[i2];
          long count = 0;
          for (const LpPair& p : e1.lp) {
            const int lh = local_of(e2.iv, e1.iv.halfspace_id(p.h));
            const int lk = local_of(e2.iv, e1.iv.halfspace_id(p.k));
            if (lh < 0 || lk < 0) continue;
            if (!is_locally_parallel(e2.iv, lh, lk)) ++count;
          }
          bump(rep.stats, "lp_one_not_other_max_d" + std::to_string(e1.dim), count);
        }
      }

      for (int x = 0; x < v; ++x)
        for (int y1 = 0; y1 < v; ++y1) {
          if (y1 == x) continue;
          const Entry& e1 = entries[static_cast<size_t>(
              slot[static_cast<size_t>(y1)][static_cast<size_t>(x)])];
          if (e1.lp.empty()) continue;
          for (int y2 = 0; y2 < v; ++y2) {
            if (y2 == x || y2 == y1) continue;
            const Entry& e2 = entries[static_cast<size_t>(
                slot[static_cast<size_t>(y2)][static_cast<size_t>(x)])];
            for (const LpPair& p : e1.lp) {
              const int ha = e1.iv.halfspace_id(p.h);
              const int ka = e1.iv.halfspace_id(p.k);
              const int lh = local_of(e2.iv, ha);
              const int lk = local_of(e2.iv, ka);
              if (lh < 0 || lk < 0) continue;
              ++persistence_checked;
              if (is_locally_parallel(e2.iv, lh, lk)) continue;
              njson inst;
              inst["suite"] = "persistence";
              inst["pairs"] = ps.pairs();
              njson rels = njson::array();
              for (auto [ra, rb] : ps.relation_list()) rels.push_back(njson::array({ra, rb}));
              inst["rels"] = std::move(rels);
              inst["x"] = x;
              inst["y1"] = y1;
              inst["y2"] = y2;
              inst["h"] = ha;
              inst["k"] = ka;
              std::ostringstream d;
              d << "(" << ha << "," << ka << ") locally parallel toward x=" << x
                << " from y1=" << y1 << " but not from y2=" << y2;
              rep.violations.push_back({inst.dump(), d.str()});
            }
          }
        }

      // Orientation asymmetry tally: reversed pair in the reversed interval.
      for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b) {
          if (a == b) continue;
          const Entry& e = entries[static_cast<size_t>(
              slot[static_cast<size_t>(a)][static_cast<size_t>(b)])];
          const Entry& er = entries[static_cast<size_t>(
              slot[static_cast<size_t>(b)][static_cast<size_t>(a)])];
          for (const LpPair& p : e.lp) {
            const int rh = local_of(er.iv, complement_of(e.iv.halfspace_id(p.k)));
            const int rk = local_of(er.iv, complement_of(e.iv.halfspace_id(p.h)));
            if (rh < 0 || rk < 0) continue;
            if (!is_locally_parallel(er.iv, rh, rk)) ++asym;
          }
        }
    }
  }

  if (family.random_count > 0) {
    Rng rng(family.seed);
    for (int i = 0; i < family.random_count; ++i) {
      Interval I = random_interval(rng, family.random_size, family.random_width);
      ++rep.instances;
      auto lp = locally_parallel_pairs(I);
      lp_total += static_cast<long>(lp.size());
      bump(rep.stats, "staircase_max_d" + std::to_string(interval_dimension(I)),
           longest_lp_staircase(I, lp));
    }
  }

  rep.stats["asymmetry_witnesses"] = asym;
  rep.stats["lp_pairs_total"] = lp_total;
  rep.stats["persistence_checked"] = persistence_checked;
  return rep;
}

VerdictReport verify_category_coverage() {
  VerdictReport rep;
  rep.lemma_id = "categories";
  long fixtures = 0, max_per_dir = 0, d_max = 0;

  for (const PatternFixture& f : fixture_corpus()) {
    ++fixtures;
    Drawing full = validate_drawing(f.complex, f.drawing);
    Drawing D = validate_drawing(f.complex, deduplicate_pattern(full, Verify::kVerify));
    CategoryReport cr = classify_halfspace_categories(D, Verify::kVerify);
    d_max = std::max(d_max, static_cast<long>(cr.d));
    auto report = [&](const std::string& kind, int id, const std::string& detail) {
      njson inst;
      inst["suite"] = "categories";
      inst["fixture"] = f.name;
      inst["kind"] = kind;
      inst["id"] = id;
      rep.violations.push_back({inst.dump(), detail});
    };
    for (int h = 0; h < static_cast<int>(cr.categories.size()); ++h) {
      ++rep.instances;
      const uint8_t bits = cr.categories[static_cast<size_t>(h)];
      if ((bits & 0b1111) == 0)
        report("uncovered", h,
               f.name + ": halfspace " + std::to_string(h) + " is in no category 1-4");
      if ((bits & 0b10000) != 0)
        report("cat5", h, f.name + ": halfspace " + std::to_string(h) + " is in category 5");
    }
    for (int de = 0; de < static_cast<int>(cr.maximal_per_directed_interval.size()); ++de) {
      const int count = cr.maximal_per_directed_interval[static_cast<size_t>(de)];
      max_per_dir = std::max(max_per_dir, static_cast<long>(count));
      if (count > cr.d)
        report("maximal-count", de,
               f.name + ": directed interval " + std::to_string(de) + " has " +
                   std::to_string(count) + " maximal halfspaces, d=" + std::to_string(cr.d));
    }
    for (int e = 0; e + 1 < static_cast<int>(cr.maximal_per_directed_interval.size()); e += 2) {
      const int both = cr.maximal_per_directed_interval[static_cast<size_t>(e)] +
                       cr.maximal_per_directed_interval[static_cast<size_t>(e) + 1];
      if (both > 2 * cr.d)
        report("maximal-count-edge", e / 2,
               f.name + ": edge " + std::to_string(e / 2) + " has " + std::to_string(both) +
                   " maximal halfspaces across both directions, d=" + std::to_string(cr.d));
    }
  }

  rep.stats["fixtures"] = fixtures;
  rep.stats["max_maximal_per_directed_interval"] = max_per_dir;
  rep.stats["pattern_d_max"] = d_max;
  return rep;
}

bool replay_violation(const std::string& instance) {
  njson j;
  try {
    j = njson::parse(instance);
  } catch (const njson::parse_error& e) {
    throw ParseError(std::string("bad violation instance: ") + e.what());
  }
  const std::string suite = j.at("suite").get<std::string>();

  if (suite == "cross-lattice") {
    Interval I = interval_from_json(j);
    const uint64_t c1 = j.at("c1").get<uint64_t>();
    const uint64_t c2 = j.at("c2").get<uint64_t>();
    const uint64_t c3 = j.contains("c3") ? j.at("c3").get<uint64_t>() : 0;
    return law_violated(I, j.at("law").get<std::string>(), c1, c2, c3);
  }

  if (suite == "countercrosser") {
    Interval I = interval_from_json(j);
    const int h = j.at("h").get<int>();
    int k = -1;
    try {
      k = find_countercrosser(I, h);
    } catch (const LemmaViolationError&) {
      return true;
    }
    if (I.size() > 8) return false;
    auto crosses = enumerate_crosses(I);
    if (!brute_countercrosser_ok(I, crosses, h, k)) return true;
    for (int k2 : adjacent_above(I, h)) {
      if (k2 >= k) break;
      if (brute_countercrosser_ok(I, crosses, h, k2)) return true;
    }
    return false;
  }

  if (suite == "persistence") {
    std::vector<std::pair<int, int>> rels;
    for (const auto& r : j.at("rels")) rels.emplace_back(r.at(0).get<int>(), r.at(1).get<int>());
    PocSet ps = PocSet::build(j.at("pairs").get<int>(), rels);
    CubeComplex X = CubeComplex::dual(ps);
    Interval i1 = Interval::between(X, j.at("y1").get<int>(), j.at("x").get<int>());
    Interval i2 = Interval::between(X, j.at("y2").get<int>(), j.at("x").get<int>());
    const int h1 = local_of(i1, j.at("h").get<int>());
    const int k1 = local_of(i1, j.at("k").get<int>());
    const int h2 = local_of(i2, j.at("h").get<int>());
    const int k2 = local_of(i2, j.at("k").get<int>());
    if (h1 < 0 || k1 < 0 || h2 < 0 || k2 < 0) return false;
    return is_locally_parallel(i1, h1, k1) && !is_locally_parallel(i2, h2, k2);
  }

  if (suite == "categories") {
    const std::string name = j.at("fixture").get<std::string>();
    for (const PatternFixture& f : fixture_corpus()) {
      if (f.name != name) continue;
      Drawing full = validate_drawing(f.complex, f.drawing);
      Drawing D = validate_drawing(f.complex, deduplicate_pattern(full, Verify::kVerify));
      CategoryReport cr = classify_halfspace_categories(D, Verify::kVerify);
      const std::string kind = j.at("kind").get<std::string>();
      const int id = j.at("id").get<int>();
      if (kind == "uncovered")
        return (cr.categories[static_cast<size_t>(id)] & 0b1111) == 0;
      if (kind == "cat5") return (cr.categories[static_cast<size_t>(id)] & 0b10000) != 0;
      if (kind == "maximal-count")
        return cr.maximal_per_directed_interval[static_cast<size_t>(id)] > cr.d;
      if (kind == "maximal-count-edge")
        return cr.maximal_per_directed_interval[static_cast<size_t>(2 * id)] +
                   cr.maximal_per_directed_interval[static_cast<size_t>(2 * id + 1)] >
               2 * cr.d;
      throw ParseError("unknown categories violation kind: " + kind);
    }
    throw ParseError("unknown fixture: " + name);
  }

  throw ParseError("unknown violation suite: " + suite);
}

std::string serialize_report(const VerdictReport& report, bool json_lines) {
  std::ostringstream out;
  if (json_lines) {
    njson head;
    head["type"] = "report";
    head["lemma"] = report.lemma_id;
    head["instances"] = report.instances;
    head["violations"] = report.violations.size();
    head["ok"] = report.ok();
    out << head.dump() << "\n";
    for (const auto& [key, value] : report.stats) {
      njson s;
      s["type"] = "stat";
      s["key"] = key;
      s["value"] = value;
      out << s.dump() << "\n";
    }
    for (const Violation& v : report.violations) {
      njson s;
      s["type"] = "violation";
      s["detail"] = v.detail;
      s["instance"] = v.instance;
      out << s.dump() << "\n";
    }
  } else {
    out << "lemma " << report.lemma_id << ": " << (report.ok() ? "OK" : "FAIL")
        << "  instances=" << report.instances << "  violations=" << report.violations.size()
        << "\n";
    for (const auto& [key, value] : report.stats) out << "  " << key << " = " << value << "\n";
    for (const Violation& v : report.violations) {
      out << "  violation: " << v.detail << "\n";
      out << "    instance: " << v.instance << "\n";
    }
  }
  return out.str();
}

}  // namespace poctrack
