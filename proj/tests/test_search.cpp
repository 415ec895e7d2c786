#include <doctest.h>

#include <numeric>
#include <set>

#include "slopekit/search.hpp"

using namespace slopekit;

namespace {

SearchConfig cfg(std::int64_t d, std::optional<std::int64_t> k = std::nullopt,
                 int jobs = 1) {
  SearchConfig c;
  c.diameter_bound = d;
  c.center_k = k;
  c.jobs = jobs;
  return c;
}

SlopeSet integer_witness() {
  SlopeSet s;
  s.insert(Slope(1, 0));
  for (std::int64_t n = 0; n <= 8; ++n) s.insert(Slope(n, 1));
  return s;
}

// Independent oracle: plain max-clique over a fixed window with the meridian
// forced in, no anchoring, no shared code with the search beyond the slope
// primitives. Any set containing 1/0 translates (numerators mod q) into
// |p| <= q + d <= 2d + 2, so the window covers a representative of every
// marking class and the maximum is exact.
struct BruteOracle {
  std::int64_t d;
  std::optional<std::int64_t> k;
  std::vector<Slope> pool;
  std::int64_t best = 1;
  std::set<SlopeSet> witnesses;

  explicit BruteOracle(std::int64_t d_, std::optional<std::int64_t> k_)
      : d(d_), k(k_) {
    for (std::int64_t q = 1; q <= d; ++q)
      for (std::int64_t p = -(2 * d + 2); p <= 2 * d + 2; ++p)
        if (std::gcd(std::abs(p), q) == 1) pool.emplace_back(p, q);
    witnesses.insert(SlopeSet{{Slope(1, 0)}});
    std::vector<Slope> chosen{Slope(1, 0)};
    std::vector<std::size_t> cand(pool.size());
    std::iota(cand.begin(), cand.end(), 0);
    dfs(chosen, cand);
  }

  bool has_center(const std::vector<Slope>& s) const {
    if (!k) return true;
    for (std::int64_t b = 0; b <= *k; ++b) {
      if (b == 0) {
        bool ok = true;
        for (const Slope& r : s) ok = ok && distance(Slope(1, 0), r) <= *k;
        if (ok) return true;
        continue;
      }
      for (std::int64_t a = -(3 * d + 10); a <= 3 * d + 10; ++a) {
        if (std::gcd(std::abs(a), b) != 1) continue;
        bool ok = true;
        for (const Slope& r : s) ok = ok && distance(Slope(a, b), r) <= *k;
        if (ok) return true;
      }
    }
    return false;
  }

  void dfs(std::vector<Slope>& chosen, const std::vector<std::size_t>& cand) {
    const auto total = static_cast<std::int64_t>(chosen.size());
    if (total >= best && has_center(chosen)) {
      if (total > best) {
        best = total;
        witnesses.clear();
      }
      witnesses.insert(normalize_set(SlopeSet{chosen}).set);
    }
    if (total + static_cast<std::int64_t>(cand.size()) < best) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const Slope& s = pool[cand[i]];
      bool ok = true;
      for (const Slope& c : chosen) ok = ok && distance(c, s) <= d;
      if (!ok) continue;
      std::vector<std::size_t> rest(cand.begin() + i + 1, cand.end());
      chosen.push_back(s);
      dfs(chosen, rest);
      chosen.pop_back();
    }
  }
};

}  // namespace

TEST_CASE("search: frozen exact values") {
  struct Expected {
    std::int64_t d;
    std::optional<std::int64_t> k;
    std::int64_t max;
    std::size_t witnesses;
  };
  const Expected table[] = {
      {0, 2, 1, 1},   {2, 2, 4, 2},   {4, 2, 6, 8},
      {6, 2, 8, 20},  {8, 2, 10, 40}, {8, 1, 10, 10},
      {8, 0, 1, 1},   {4, std::nullopt, 6, 8},
      {6, std::nullopt, 8, 20},       {8, std::nullopt, 12, 4},
  };
  for (const auto& e : table) {
    CAPTURE(e.d);
    const SearchResult r = search(cfg(e.d, e.k));
    CHECK(r.max_cardinality == e.max);
    CHECK(r.witnesses.size() == e.witnesses);
    CHECK(r.nodes_explored > 0);
  }
}

TEST_CASE("search: the theorem instance d = 8, k = 2") {
  const SearchResult r = search(cfg(8, 2));
  REQUIRE(r.max_cardinality == 10);
  const SlopeSet expected = integer_witness();
  CHECK(std::count(r.witnesses.begin(), r.witnesses.end(), expected) == 1);
  for (const SlopeSet& w : r.witnesses) {
    CHECK(w.size() == 10);
    CHECK(diameter(w) <= 8);
    CHECK(w.contains(Slope(1, 0)));
    CHECK(!centers(w, 2).empty());             // independently re-checked
    CHECK(normalize_set(w).set == w);          // stored in canonical form
  }
}

TEST_CASE("search: without the center constraint the example set appears") {
  const SearchResult r = search(cfg(8));
  REQUIRE(r.max_cardinality == 12);
  REQUIRE(r.witnesses.size() == 4);
  CHECK(std::count(r.witnesses.begin(), r.witnesses.end(),
                   paper_example_set()) == 1);
  // Frozen witness list (canonical forms, sorted).
  const SlopeSet w1{{Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(2, 1),
                     Slope(3, 1), Slope(4, 1), Slope(5, 1), Slope(3, 2),
                     Slope(5, 2), Slope(7, 2), Slope(7, 3), Slope(8, 3)}};
  const SlopeSet w3{{Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(1, 2),
                     Slope(1, 3), Slope(2, 3), Slope(1, 4), Slope(1, 5),
                     Slope(2, 5), Slope(2, 7), Slope(3, 7), Slope(3, 8)}};
  const SlopeSet w4{{Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(1, 2),
                     Slope(1, 3), Slope(2, 3), Slope(3, 4), Slope(3, 5),
                     Slope(4, 5), Slope(4, 7), Slope(5, 7), Slope(5, 8)}};
  CHECK(r.witnesses ==
        std::vector<SlopeSet>{w1, paper_example_set(), w3, w4});
  for (const SlopeSet& w : r.witnesses) {
    CHECK(diameter(w) == 8);
    CHECK(w.size() == 12);
  }
}

TEST_CASE("search: k = 1 keeps the maximum at 10") {
  const SearchResult r = search(cfg(8, 1));
  CHECK(r.max_cardinality == 10);
  CHECK(std::count(r.witnesses.begin(), r.witnesses.end(),
                   integer_witness()) == 1);
  for (const SlopeSet& w : r.witnesses) CHECK(!centers(w, 1).empty());
}

TEST_CASE("search agrees with the independent brute-force oracle") {
  for (std::int64_t d : {0, 1, 2, 3, 4}) {
    CAPTURE(d);
    for (const std::optional<std::int64_t> k :
         {std::optional<std::int64_t>{}, std::optional<std::int64_t>{2}}) {
      const BruteOracle oracle(d, k);
      const SearchResult r = search(cfg(d, k));
      CHECK(r.max_cardinality == oracle.best);
      CHECK(std::set<SlopeSet>(r.witnesses.begin(), r.witnesses.end()) ==
            oracle.witnesses);
    }
  }
}

TEST_CASE("search: monotone in the diameter and in the center distance") {
  std::int64_t prev = -1;
  for (std::int64_t d = 0; d <= 8; d += 2) {
    const auto m = search(cfg(d, 2)).max_cardinality;
    CHECK(m >= prev);
    prev = m;
  }
  CHECK(search(cfg(8, 0)).max_cardinality <= search(cfg(8, 1)).max_cardinality);
  CHECK(search(cfg(8, 1)).max_cardinality <= search(cfg(8, 2)).max_cardinality);
  CHECK(search(cfg(8, 2)).max_cardinality <= search(cfg(8)).max_cardinality);
}

TEST_CASE("search: result does not depend on exploration order") {
  const SearchResult base = search(cfg(8, 2, 1));
  SearchConfig reversed = cfg(8, 2, 1);
  reversed.reverse_branching = true;
  const SearchResult rev = search(reversed);
  CHECK(rev.max_cardinality == base.max_cardinality);
  CHECK(rev.witnesses == base.witnesses);

  const SearchResult parallel = search(cfg(8, 2, 4));
  CHECK(parallel.max_cardinality == base.max_cardinality);
  CHECK(parallel.witnesses == base.witnesses);
  CHECK(parallel.certificate == base.certificate);

  SearchConfig optional_meridian = cfg(6, 2, 2);
  optional_meridian.assume_meridian = false;
  const SearchResult opt = search(optional_meridian);
  const SearchResult fixed = search(cfg(6, 2, 1));
  CHECK(opt.max_cardinality == fixed.max_cardinality);
  CHECK(opt.witnesses == fixed.witnesses);
}

TEST_CASE("search guard") {
  CHECK_THROWS_AS(search(cfg(17)), std::invalid_argument);
  CHECK_THROWS_AS(search(cfg(-1)), std::invalid_argument);
  SearchConfig bad = cfg(8, -2);
  CHECK_THROWS_AS(search(bad), std::invalid_argument);
}

TEST_CASE("search certificate describes the window") {
  const SearchResult r = search(cfg(8, 2));
  CHECK(r.certificate.find("diameter bound: 8") != std::string::npos);
  CHECK(r.certificate.find("reduction") != std::string::npos);
  CHECK(r.certificate.find("window") != std::string::npos);
  CHECK(r.certificate.find("anchors explored: 22") != std::string::npos);
}

TEST_CASE("verify_no_larger") {
  const auto ok = verify_no_larger(cfg(8, 2), 10);
  CHECK(ok.ok);
  CHECK(ok.max_cardinality == 10);
  CHECK(ok.counterexamples.empty());
  CHECK(ok.certificate.find("bound holds") != std::string::npos);

  const auto fail = verify_no_larger(cfg(8), 10);
  CHECK(!fail.ok);
  CHECK(fail.max_cardinality == 12);
  CHECK(std::count(fail.counterexamples.begin(), fail.counterexamples.end(),
                   paper_example_set()) == 1);
  CHECK(fail.certificate.find("bound fails") != std::string::npos);

  CHECK(verify_no_larger(cfg(4, 2), 10).ok);
}
