#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "popcert/karamata.hpp"
#include "support/generators.hpp"

using namespace popcert;

TEST_CASE("symmetric condition passes on a two-into-two transfer", "[karamata]") {
  WeightedPointSystem sys({2, 0, 1, 1}, {1, 1, -1, -1});
  auto report = check_symmetric_condition(sys);
  REQUIRE(report.passed);
  REQUIRE(report.weight_sum == 0);
  REQUIRE(report.dominance.size() == 4);
  REQUIRE(report.dominance[0] == std::pair<Rational, Rational>{2, 0});
  REQUIRE(report.dominance[1] == std::pair<Rational, Rational>{0, 0});
  REQUIRE(report.dominance[2] == std::pair<Rational, Rational>{1, 2});
  REQUIRE(report.dominance[3] == std::pair<Rational, Rational>{1, 2});
}

TEST_CASE("nonzero weight sum fails the first condition", "[karamata]") {
  auto report = check_symmetric_condition(WeightedPointSystem({5, 9}, {1, 1}));
  REQUIRE_FALSE(report.passed);
  REQUIRE(report.failed == SymmetricConditionReport::Condition::weight_sum);
  REQUIRE(report.weight_sum == 2);
}

TEST_CASE("negative deviation sum fails the second condition", "[karamata]") {
  auto report = check_symmetric_condition(WeightedPointSystem({1, 0}, {-1, 1}));
  REQUIRE_FALSE(report.passed);
  REQUIRE(report.failed == SymmetricConditionReport::Condition::pointwise_dominance);
  REQUIRE(*report.violating_point == 0);
  REQUIRE(*report.violating_sum == -1);
}

TEST_CASE("karamata_value on known systems", "[karamata]") {
  WeightedPointSystem sys({2, 0, 1, 1}, {1, 1, -1, -1});
  REQUIRE(karamata_value(sys, ConvexFunction::square()) == 2);
  REQUIRE(karamata_value(sys, ConvexFunction::affine(3, 11)) == 0);

  WeightedPointSystem pair({1, 0}, {1, -1});
  REQUIRE(karamata_value(pair, ConvexFunction::affine(1, 0)) == 1);

  REQUIRE_THROWS_AS(karamata_value(sys, ConvexFunction::exponential()), FloatFunctionNotAllowed);
}

TEST_CASE("pair check over point lists", "[karamata]") {
  REQUIRE(karamata_pair_check({3, 1}, {2, 2}).passed);

  auto equal = karamata_pair_check({4, -1, 2}, {2, 4, -1});
  REQUIRE(equal.passed);
  for (const auto& [t, sum] : equal.dominance) REQUIRE(sum == 0);

  auto failing = karamata_pair_check({2, 2}, {3, 1});
  REQUIRE_FALSE(failing.passed);
  REQUIRE(*failing.violating_point == 2);
  REQUIRE(*failing.violating_sum == -2);

  REQUIRE_THROWS_AS(karamata_pair_check({1}, {1, 2}), LengthMismatch);
}

TEST_CASE("majorization prefix test", "[karamata]") {
  REQUIRE(majorizes({3, 1}, {2, 2}));
  REQUIRE(majorizes({2, 2}, {2, 2}));
  REQUIRE(majorizes({1, 1, 4}, {2, 2, 2}));
  REQUIRE_FALSE(majorizes({2, 2}, {3, 1}));
  REQUIRE_FALSE(majorizes({3, 1}, {2, 1}));  // totals differ
  REQUIRE_THROWS_AS(majorizes({1}, {1, 2}), LengthMismatch);
}

TEST_CASE("absolute deviation sums", "[karamata]") {
  REQUIRE(abs_sum_dominates({3, 1}, {2, 2}, 2));
  REQUIRE(abs_sum_dominates({5, -1}, {5, -1}, Rational(1, 3)));
  REQUIRE_FALSE(abs_sum_dominates({2, 2}, {3, 1}, 2));
}

TEST_CASE("a passing condition certifies nonnegative convex sums", "[karamata]") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto sys = testgen::random_passing_system(rng);
    REQUIRE(check_symmetric_condition(sys).passed);
    for (int draw = 0; draw < 10; ++draw) {
      auto f = random_convex(rng(), 5, Rational(12));
      REQUIRE(karamata_value(sys, f) >= 0);
    }
    REQUIRE(karamata_value(sys, ConvexFunction::square()) >= 0);
  }
}

TEST_CASE("majorization implies deviation dominance and the pair check", "[karamata]") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    auto [x, y] = testgen::random_majorizing_pair(rng, dim(rng));
    REQUIRE(majorizes(x, y));
    for (const Rational& t : x) REQUIRE(abs_sum_dominates(x, y, t));
    for (const Rational& t : y) REQUIRE(abs_sum_dominates(x, y, t));
    for (int draw = 0; draw < 20; ++draw)
      REQUIRE(abs_sum_dominates(x, y, random_rational_in(rng, Rational(15))));
    REQUIRE(karamata_pair_check(x, y).passed);
  }
}

TEST_CASE("checks are permutation invariant", "[karamata]") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto sys = testgen::random_passing_system(rng);
    std::vector<std::size_t> order(sys.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Rational> z;
    std::vector<Rational> w;
    for (std::size_t k : order) {
      z.push_back(sys.points[k]);
      w.push_back(sys.weights[k]);
    }
    WeightedPointSystem shuffled(z, w);
    auto f = random_convex(rng(), 4, Rational(10));
    REQUIRE(check_symmetric_condition(shuffled).passed ==
            check_symmetric_condition(sys).passed);
    REQUIRE(karamata_value(shuffled, f) == karamata_value(sys, f));
  }
}

TEST_CASE("positive weight scaling preserves the verdict and scales the value", "[karamata]") {
  Rng rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    auto sys = testgen::random_passing_system(rng);
    Rational lambda = random_positive_rational(rng, 9, 5);
    std::vector<Rational> scaled = sys.weights;
    for (Rational& w : scaled) w *= lambda;
    WeightedPointSystem scaled_sys(sys.points, scaled);
    REQUIRE(check_symmetric_condition(scaled_sys).passed);
    auto f = random_convex(rng(), 4, Rational(10));
    REQUIRE(karamata_value(scaled_sys, f) == lambda * karamata_value(sys, f));
  }
}
