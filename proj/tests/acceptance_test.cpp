// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Run directly for the full report, or through ctest.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <iostream>
#include <vector>

#include "popcert/popcert.hpp"
#include "support/generators.hpp"

using namespace popcert;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* label, bool pass, double elapsed) {
  std::cout << "[" << label << "] " << (pass ? "PASS" : "FAIL") << " (" << elapsed << " s)\n"
            << std::flush;
}

Rational interpolant_value(const Interpolant& p, const SampleSet& s, const Rational& t) {
  Rational value = p.slope * t + p.intercept;
  for (std::size_t i = 0; i < p.weights.size(); ++i) value += p.weights[i] * abs(t - s[i].x);
  return value;
}

}  // namespace

TEST_CASE("criterion 01: subset-mean family certification, n <= 8", "[acceptance]") {
  auto start = Clock::now();
  long violations = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::int64_t m = 0; m <= static_cast<std::int64_t>(n); ++m) {
      auto report_nm = check_conditions(zhao_spec(n, m), CheckMode::theorem14);
      if (!report_nm.passed) ++violations;
      for (const Rational& r : report_nm.equality_residuals)
        if (r != 0) ++violations;
      for (const auto& [key, slack] : report_nm.pair_slacks)
        if (slack < 0) ++violations;
    }
  }
  double elapsed = seconds_since(start);
  bool pass = violations == 0 && elapsed < 1.0;
  report("criterion 01: zhao certification", pass, elapsed);
  REQUIRE(violations == 0);
  REQUIRE(elapsed < 1.0);
}

TEST_CASE("criterion 02: cyclic family certification, n <= 12", "[acceptance]") {
  auto start = Clock::now();
  long violations = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r) {
      auto report_nr = check_conditions(cyclic_spec(n, r), CheckMode::theorem14);
      if (!report_nr.passed) ++violations;
      for (const Rational& value : report_nr.equality_residuals)
        if (value != 0) ++violations;
      for (const auto& [key, slack] : report_nr.pair_slacks)
        if (slack < 0) ++violations;
    }
  }
  double elapsed = seconds_since(start);
  bool pass = violations == 0 && elapsed < 1.0;
  report("criterion 02: cyclic certification", pass, elapsed);
  REQUIRE(violations == 0);
  REQUIRE(elapsed < 1.0);
}

TEST_CASE("criterion 03: certified specs never evaluate negative", "[acceptance]") {
  auto start = Clock::now();
  std::vector<InequalitySpec> specs = {jensen_spec(5),  popoviciu_spec(), zhao_spec(5, 3),
                                       zhao_spec(6, 2), cyclic_spec(5, 2), cyclic_spec(7, 4)};
  long violations = 0;
  Rng rng(20260810);
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 1000; ++trial) {
      Instance inst;
      inst.x = random_vector_in(rng, spec.n(), Rational(10));
      for (std::size_t v = 0; v < spec.n(); ++v)
        inst.w.push_back(random_positive_rational(rng, 12, 6));
      auto f = random_convex(rng(), 5, Rational(10));
      if (evaluate_instance(spec, inst, f) < 0) ++violations;
    }
  }
  double elapsed = seconds_since(start);
  bool pass = violations == 0 && elapsed < 30.0;
  report("criterion 03: certified-spec soundness (6000 draws)", pass, elapsed);
  REQUIRE(violations == 0);
  REQUIRE(elapsed < 30.0);
}

TEST_CASE("criterion 04: mean-point certificates are consistent", "[acceptance]") {
  auto start = Clock::now();
  long violations = 0;
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    auto spec = testgen::random_family_spec(rng);
    auto inst = random_instance(rng, spec, Rational(10));
    auto cert = mean_point_system(spec, inst);

    Rational weight_sum = 0;
    Rational moment_sum = 0;
    for (const auto& e : cert.entries) {
      weight_sum += e.weight;
      moment_sum += e.weight * e.point;
    }
    if (weight_sum != 0) ++violations;
    if (moment_sum != 0) ++violations;
    if (!check_symmetric_condition(cert.as_system()).passed) ++violations;

    for (int draw = 0; draw < 10; ++draw) {
      auto f = random_convex(rng(), 5, Rational(10));
      if (karamata_value(cert.as_system(), f) != evaluate_instance(spec, inst, f)) ++violations;
    }
  }
  double elapsed = seconds_since(start);
  report("criterion 04: mean-point/Karamata consistency", violations == 0, elapsed);
  REQUIRE(violations == 0);
}

TEST_CASE("criterion 05: every rejected spec yields a verified witness", "[acceptance]") {
  auto start = Clock::now();
  long failures = 0;
  int rejected = 0;
  Rng rng(505);
  while (rejected < 500) {
    auto spec = testgen::random_spec(rng, 6, 6);
    if (certify(spec).certified) continue;
    ++rejected;
    auto wit = falsify(spec);
    if (!wit.has_value() || verify_witness(spec, *wit) >= 0) ++failures;
  }
  double elapsed = seconds_since(start);
  report("criterion 05: falsifier completeness (500 rejected specs)", failures == 0, elapsed);
  REQUIRE(failures == 0);
}

TEST_CASE("criterion 06: interpolation reproduces convex data exactly", "[acceptance]") {
  auto start = Clock::now();
  long violations = 0;
  Rng rng(606);
  for (int trial = 0; trial < 1000; ++trial) {
    auto data = testgen::random_convex_samples(rng, 12);
    auto p = interpolate_abs(data.samples);
    if (p.weights.front() != 0 || p.weights.back() != 0) ++violations;
    for (const Rational& a : p.weights)
      if (a < 0) ++violations;
    for (const Sample& sample : data.samples.samples())
      if (interpolant_value(p, data.samples, sample.x) != sample.value) ++violations;
  }
  double elapsed = seconds_since(start);
  report("criterion 06: interpolation exactness (1000 sample sets)", violations == 0, elapsed);
  REQUIRE(violations == 0);
}

TEST_CASE("criterion 07: zero-sum decomposition round-trips", "[acceptance]") {
  auto start = Clock::now();
  long violations = 0;
  Rng rng(707);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 10);
    std::size_t n = dim(rng);
    ZeroSumVector x(random_zero_sum(rng, n, Rational(9)));
    auto supports = support_sets(x);
    auto d = decompose(x);

    if (recompose(d, n) != x.coords()) ++violations;
    for (const auto& [key, coefficient] : d.pairs) {
      if (coefficient <= 0) ++violations;
      if (x.coords()[key.first] <= 0 || x.coords()[key.second] >= 0) ++violations;
    }
    std::size_t support_size = supports.positive.size() + supports.negative.size();
    if (support_size > 0 && d.pairs.size() > support_size - 1) ++violations;

    for (std::size_t u = 0; u < n; ++u) {
      Rational total = 0;
      for (const auto& [key, coefficient] : d.pairs)
        if (key.first == u || key.second == u) total += coefficient;
      if (total != abs(x.coords()[u])) ++violations;
    }
  }
  double elapsed = seconds_since(start);
  report("criterion 07: decomposition round-trip (1000 vectors)", violations == 0, elapsed);
  REQUIRE(violations == 0);
}

TEST_CASE("criterion 08: quartic cyclic inequality, exact and via exp", "[acceptance]") {
  auto start = Clock::now();
  long violations = 0;
  Rng rng(808);

  // Explicit return type: deducing it would hand back a boost expression
  // template referencing the dead locals.
  auto quartic_gap = [](const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) -> Rational {
    Rational lhs = a * a * a * a + b * b * b * b + c * c * c * c + d * d * d * d +
                   4 * a * b * c * d;
    Rational rhs = 2 * (a * a * b * c + b * b * c * d + c * c * d * a + d * d * a * b);
    return lhs - rhs;
  };

  std::vector<std::array<Rational, 4>> quadruples;
  for (int trial = 0; trial < 1000; ++trial)
    quadruples.push_back({random_positive_rational(rng, 12, 5), random_positive_rational(rng, 12, 5),
                          random_positive_rational(rng, 12, 5),
                          random_positive_rational(rng, 12, 5)});

  // (a) direct exact arithmetic, including boundary and equality cases
  for (const auto& q : quadruples)
    if (quartic_gap(q[0], q[1], q[2], q[3]) < 0) ++violations;
  for (int k = 0; k < 20; ++k) {
    Rational b = random_nonnegative_rational(rng, 9, 4);
    Rational c = random_nonnegative_rational(rng, 9, 4);
    Rational d = random_nonnegative_rational(rng, 9, 4);
    if (quartic_gap(0, b, c, d) < 0) ++violations;
    Rational equal = random_positive_rational(rng, 9, 4);
    if (quartic_gap(equal, equal, equal, equal) != 0) ++violations;
  }

  // (b) the same quadruples through the cyclic spec with f = exp at
  // logarithmic points, within the declared relative tolerance
  auto spec = cyclic_spec(4, 3);
  auto f = ConvexFunction::exponential();
  for (const auto& q : quadruples) {
    Instance inst;
    for (const Rational& value : q)
      inst.x.push_back(Rational(4.0 * std::log(value.convert_to<double>())));
    inst.w.assign(4, Rational(1));
    auto approx = evaluate_instance_approx(spec, inst, f);
    if (approx.value < -1e-9 * std::max(1.0, approx.magnitude)) ++violations;
  }

  double elapsed = seconds_since(start);
  report("criterion 08: quartic inequality, exact + exp route", violations == 0, elapsed);
  REQUIRE(violations == 0);
}

TEST_CASE("criterion 09: cyclic shifts aggregate nonnegatively", "[acceptance]") {
  auto start = Clock::now();
  long violations = 0;
  Rng rng(909);
  for (std::size_t n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      Instance inst{random_vector_in(rng, n, Rational(10)),
                    std::vector<Rational>(n, Rational(1))};
      auto f = random_convex(rng(), 5, Rational(10));
      Rational aggregate = 0;
      for (std::int64_t r = 1; r < static_cast<std::int64_t>(n); ++r)
        aggregate += evaluate_instance(cyclic_spec(n, r), inst, f);
      if (aggregate < 0) ++violations;
    }
  }
  double elapsed = seconds_since(start);
  report("criterion 09: aggregated cyclic inequality", violations == 0, elapsed);
  REQUIRE(violations == 0);
}

TEST_CASE("criterion 10: symmetric condition certifies convex sums", "[acceptance]") {
  auto start = Clock::now();
  long violations = 0;
  Rng rng(1010);

  for (int trial = 0; trial < 500; ++trial) {
    auto sys = testgen::random_passing_system(rng);
    if (!check_symmetric_condition(sys).passed) ++violations;
    for (int draw = 0; draw < 100; ++draw) {
      auto f = random_convex(rng(), 4, Rational(12));
      if (karamata_value(sys, f) < 0) ++violations;
    }
  }

  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    auto [x, y] = testgen::random_majorizing_pair(rng, dim(rng));
    if (!majorizes(x, y)) ++violations;
    for (const Rational& t : x)
      if (!abs_sum_dominates(x, y, t)) ++violations;
    for (const Rational& t : y)
      if (!abs_sum_dominates(x, y, t)) ++violations;
    for (int draw = 0; draw < 100; ++draw)
      if (!abs_sum_dominates(x, y, random_rational_in(rng, Rational(15)))) ++violations;
    if (!karamata_pair_check(x, y).passed) ++violations;
  }

  double elapsed = seconds_since(start);
  report("criterion 10: Karamata certificate soundness", violations == 0, elapsed);
  REQUIRE(violations == 0);
}
