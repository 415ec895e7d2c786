#include <doctest.h>

#include <random>

#include "slopekit/proof.hpp"
#include "slopekit/search.hpp"

using namespace slopekit;

namespace {

std::mt19937_64 rng(777001);

SlopeSet integer_witness() {
  SlopeSet s;
  s.insert(Slope(1, 0));
  for (std::int64_t n = 0; n <= 8; ++n) s.insert(Slope(n, 1));
  return s;
}

// A random transform fixing the meridian: translations and the mirror.
MarkingTransform random_meridian_fixing() {
  std::uniform_int_distribution<std::int64_t> shear(-6, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  MarkingTransform t = MarkingTransform::translation(shear(rng));
  if (coin(rng)) t = compose(t, MarkingTransform::mirror());
  if (coin(rng)) t = compose(MarkingTransform::translation(shear(rng)), t);
  return t;
}

}  // namespace

TEST_CASE("classify") {
  SUBCASE("mixed integral and half-integral elements") {
    const SlopeSet s{{Slope(1, 0), Slope(0, 1), Slope(3, 1), Slope(5, 2)}};
    const ProofClassification c = classify(s);
    CHECK(c.gamma_in_set);
    CHECK(c.integrals == std::vector<std::int64_t>{0, 3});
    CHECK(c.halves == std::vector<std::int64_t>{5});
    CHECK(c.integral_count() == 2);
    CHECK(c.half_count() == 1);
    CHECK(c.top_integral() == 3);
    CHECK(c.normalization == MarkingTransform::identity());
  }
  SUBCASE("no integral elements") {
    const SlopeSet s{{Slope(1, 0), Slope(1, 2), Slope(3, 2)}};
    const ProofClassification c = classify(s);
    CHECK(c.integral_count() == 0);
    CHECK(c.half_count() == 2);
    // With no integrals the largest half numerator is pinned at 1.
    CHECK(c.halves == std::vector<std::int64_t>{-1, 1});
  }
  SUBCASE("large integral span is kept for the bound check to flag") {
    const SlopeSet s{{Slope(1, 0), Slope(9, 1), Slope(0, 1)}};
    const ProofClassification c = classify(s);
    CHECK(c.integrals == std::vector<std::int64_t>{0, 9});
    CHECK(c.top_integral() == 9);
  }
  SUBCASE("negative minimum is translated to zero") {
    const SlopeSet s{{Slope(1, 0), Slope(-3, 1), Slope(5, 1), Slope(1, 2)}};
    const ProofClassification c = classify(s);
    CHECK(c.integrals == std::vector<std::int64_t>{0, 8});
    CHECK(c.halves == std::vector<std::int64_t>{7});
    CHECK(c.normalization == MarkingTransform::translation(3));
  }
  SUBCASE("elements beyond distance 2 are rejected by name") {
    const SlopeSet s{{Slope(1, 0), Slope(4, 3)}};
    try {
      classify(s);
      FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("4/3") != std::string::npos);
    }
  }
  SUBCASE("gamma need not belong to the set") {
    const SlopeSet s{{Slope(0, 1), Slope(1, 2), Slope(3, 2)}};
    const ProofClassification c = classify(s);
    CHECK(!c.gamma_in_set);
    CHECK(c.integral_count() == 1);
    CHECK(c.half_count() == 2);
  }
}

TEST_CASE("classify is marking-independent given the meridian constraint") {
  const SlopeSet samples[] = {
      integer_witness(),
      SlopeSet{{Slope(1, 0), Slope(0, 1), Slope(3, 1), Slope(5, 2)}},
      SlopeSet{{Slope(1, 0), Slope(1, 2), Slope(3, 2), Slope(5, 2)}},
  };
  for (const SlopeSet& s : samples) {
    const ProofClassification base = classify(s);
    for (int i = 0; i < 200; ++i) {
      const ProofClassification c =
          classify(apply(random_meridian_fixing(), s));
      CHECK(c.integral_count() == base.integral_count());
      CHECK(c.half_count() == base.half_count());
      CHECK(c.gamma_in_set == base.gamma_in_set);
      if (base.integral_count() > 0)
        CHECK(c.top_integral() == base.top_integral());
    }
  }
}

TEST_CASE("proof_bound") {
  SUBCASE("the all-integral witness reaches the cap 10") {
    const ProofBound pb = proof_bound(classify(integer_witness()), 8);
    REQUIRE(pb.hypothesis_ok);
    CHECK(pb.bound == 10);
    bool found = false;
    for (const std::string& line : pb.trace)
      found = found || line.find("(N_k + 1)") != std::string::npos;
    CHECK(found);
  }
  SUBCASE("no-integral case: diameter hypothesis fails at the widest pair") {
    ProofClassification c;
    c.halves = {1, 9, 17};
    const ProofBound pb = proof_bound(c, 8);
    REQUIRE(!pb.hypothesis_ok);
    REQUIRE(pb.violating_pair.has_value());
    CHECK(pb.violating_pair->first == Slope(1, 2));
    CHECK(pb.violating_pair->second == Slope(17, 2));
  }
  SUBCASE("no-integral case within the hypothesis gives the cap 4") {
    const SlopeSet s{{Slope(1, 0), Slope(1, 2), Slope(3, 2), Slope(5, 2)}};
    const ProofBound pb = proof_bound(classify(s), 8);
    REQUIRE(pb.hypothesis_ok);
    CHECK(pb.bound == 4);
  }
  SUBCASE("one integral, a full fan of halves: every inequality holds") {
    ProofClassification c;
    c.gamma_in_set = true;
    c.integrals = {0};
    c.halves = {-7, -5, -3, -1, 1, 3, 5, 7};
    const ProofBound pb = proof_bound(c, 8);
    REQUIRE(pb.hypothesis_ok);
    CHECK(pb.bound == 10);  // (0 + 1) + 8 + 1
  }
  SUBCASE("N_k beyond the diameter bound is flagged with the pair") {
    const SlopeSet s{{Slope(1, 0), Slope(9, 1), Slope(0, 1)}};
    const ProofBound pb = proof_bound(classify(s), 8);
    REQUIRE(!pb.hypothesis_ok);
    CHECK(pb.failed_inequality.find("N_k") != std::string::npos);
    REQUIRE(pb.violating_pair.has_value());
    CHECK(pb.violating_pair->first == Slope(0, 1));
    CHECK(pb.violating_pair->second == Slope(9, 1));
  }
  SUBCASE("violating pairs are reported in the input marking") {
    // Classification translates these halves; the diagnostics must not.
    const SlopeSet s{{Slope(1, 0), Slope(1, 2), Slope(9, 2), Slope(17, 2)}};
    const ProofBound pb = proof_bound(classify(s), 8);
    REQUIRE(!pb.hypothesis_ok);
    REQUIRE(pb.violating_pair.has_value());
    CHECK(pb.violating_pair->first == Slope(1, 2));
    CHECK(pb.violating_pair->second == Slope(17, 2));
  }
  SUBCASE("half out of the meridian window is flagged") {
    ProofClassification c;
    c.integrals = {0, 8};
    c.halves = {9};
    const ProofBound pb = proof_bound(c, 8);
    REQUIRE(!pb.hypothesis_ok);
    CHECK(pb.failed_inequality.find("M_l") != std::string::npos);
  }
  SUBCASE("parameterized diameter bound") {
    CHECK(proof_bound(classify(integer_witness()), 10).bound == 12);
    // At bound 6 the integral span 8 violates the hypothesis.
    CHECK(!proof_bound(classify(integer_witness()), 6).hypothesis_ok);
    const SlopeSet small{{Slope(1, 0), Slope(0, 1), Slope(1, 1)}};
    CHECK(proof_bound(classify(small), 6).bound == 8);
  }
}

TEST_CASE("mark_center_as_meridian") {
  const SlopeSet w = integer_witness();
  for (int i = 0; i < 100; ++i) {
    // Scramble the marking, then re-center on the image of 1/0.
    MarkingTransform t = random_meridian_fixing();
    t = compose(MarkingTransform(1, 0, 1, 1), t);  // move the meridian away
    const SlopeSet scrambled = apply(t, w);
    const Slope center = apply(t, Slope(1, 0));
    const auto [marked, back] = mark_center_as_meridian(scrambled, center);
    CHECK(marked.contains(Slope(1, 0)));
    const ProofClassification c = classify(marked);
    CHECK(c.integral_count() == 9);
    CHECK(c.half_count() == 0);
    CHECK(c.top_integral() == 8);
    CHECK(proof_bound(c, 8).bound == 10);
  }
}

TEST_CASE("exhaustive_cross_check") {
  SUBCASE("d = 6, k = 2: replayed bound 8 covers every witness") {
    const CrossCheck cc = exhaustive_cross_check(6, 2, 1);
    CHECK(cc.ok);
    CHECK(cc.max_cardinality == 8);
    CHECK(cc.rows.size() == 20);
    for (const auto& row : cc.rows) {
      CHECK(row.ok);
      CHECK(row.bound == 8);
      CHECK(row.size <= row.bound);
    }
  }
  SUBCASE("d = 8, k = 1") {
    const CrossCheck cc = exhaustive_cross_check(8, 1, 1);
    CHECK(cc.ok);
    CHECK(cc.max_cardinality == 10);
  }
  SUBCASE("d = 2, k = 2") {
    const CrossCheck cc = exhaustive_cross_check(2, 2, 1);
    CHECK(cc.ok);
    CHECK(cc.max_cardinality == 4);
  }
  SUBCASE("center distances beyond the classification are rejected") {
    CHECK_THROWS_AS(exhaustive_cross_check(8, 3, 1), std::invalid_argument);
  }
}
