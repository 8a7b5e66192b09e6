#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "popcert/convex.hpp"
#include "popcert/errors.hpp"
#include "popcert/rational.hpp"

namespace popcert {

/// Points z_1..z_N with signed weights w_1..w_N.
struct WeightedPointSystem {
  std::vector<Rational> points;
  std::vector<Rational> weights;

  WeightedPointSystem(std::vector<Rational> z, std::vector<Rational> w)
      : points(std::move(z)), weights(std::move(w)) {
    if (points.size() != weights.size())
      throw LengthMismatch("point and weight lists differ in length");
    if (points.empty()) throw LengthMismatch("empty point system");
  }

  std::size_t size() const { return points.size(); }
};

/// Outcome of the symmetric condition check. A pass certifies that
/// sum_k w_k f(z_k) >= 0 for every convex f defined on all the points.
struct SymmetricConditionReport {
  enum class Condition { none, weight_sum, pointwise_dominance };

  bool passed = true;
  Condition failed = Condition::none;
  Rational weight_sum = 0;
  /// Per-point table of (t, sum_k w_k |z_k - t|), in point order.
  std::vector<std::pair<Rational, Rational>> dominance;
  std::optional<Rational> violating_point;
  std::optional<Rational> violating_sum;
};

/// Check (a) the weights sum to zero and (b) sum_k w_k |z_k - t| >= 0 for
/// every t in the point set. Both checks are exact; the first failure is
/// reported.
inline SymmetricConditionReport check_symmetric_condition(const WeightedPointSystem& sys) {
  SymmetricConditionReport report;
  for (const Rational& w : sys.weights) report.weight_sum += w;

  report.dominance.reserve(sys.size());
  for (const Rational& t : sys.points) {
    Rational sum = 0;
    for (std::size_t k = 0; k < sys.size(); ++k)
      sum += sys.weights[k] * abs(sys.points[k] - t);
    report.dominance.emplace_back(t, std::move(sum));
  }

  if (report.weight_sum != 0) {
    report.passed = false;
    report.failed = SymmetricConditionReport::Condition::weight_sum;
    return report;
  }
  for (const auto& [t, sum] : report.dominance) {
    if (sum < 0) {
      report.passed = false;
      report.failed = SymmetricConditionReport::Condition::pointwise_dominance;
      report.violating_point = t;
      report.violating_sum = sum;
      return report;
    }
  }
  return report;
}

/// sum_k w_k f(z_k), exactly. Nonnegative whenever the symmetric condition
/// holds for the system.
inline Rational karamata_value(const WeightedPointSystem& sys, const ConvexFunction& f) {
  if (!f.exact())
    throw FloatFunctionNotAllowed("karamata_value requires an exactly evaluable function");
  Rational total = 0;
  for (std::size_t k = 0; k < sys.size(); ++k) total += sys.weights[k] * f.evaluate(sys.points[k]);
  return total;
}

/// Unweighted two-list form: concatenate x with weight +1 and y with weight
/// -1, then run the symmetric condition check. A pass certifies
/// sum f(x_i) >= sum f(y_i) for every convex f on the points.
inline SymmetricConditionReport karamata_pair_check(const std::vector<Rational>& x,
                                                    const std::vector<Rational>& y) {
  if (x.size() != y.size()) throw LengthMismatch("point lists differ in length");
  if (x.empty()) throw LengthMismatch("empty point lists");
  std::vector<Rational> points = x;
  points.insert(points.end(), y.begin(), y.end());
  std::vector<Rational> weights(x.size(), Rational(1));
  weights.insert(weights.end(), y.size(), Rational(-1));
  return check_symmetric_condition(WeightedPointSystem(std::move(points), std::move(weights)));
}

/// Classical majorization: after sorting both descending, every prefix sum of
/// x dominates that of y and the totals agree.
inline bool majorizes(std::vector<Rational> x, std::vector<Rational> y) {
  if (x.size() != y.size()) throw LengthMismatch("vectors differ in length");
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  Rational px = 0;
  Rational py = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    px += x[k];
    py += y[k];
    if (px < py) return false;
  }
  return px == py;
}

/// sum |x_i - t| >= sum |y_i - t|, exactly.
inline bool abs_sum_dominates(const std::vector<Rational>& x, const std::vector<Rational>& y,
                              const Rational& t) {
  if (x.size() != y.size()) throw LengthMismatch("vectors differ in length");
  Rational sum = 0;
  for (const Rational& v : x) sum += abs(v - t);
  for (const Rational& v : y) sum -= abs(v - t);
  return sum >= 0;
}

}  // namespace popcert
