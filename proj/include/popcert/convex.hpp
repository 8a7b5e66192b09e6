#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "popcert/errors.hpp"
#include "popcert/random.hpp"
#include "popcert/rational.hpp"

namespace popcert {

enum class Builtin { none, square, exp };

/// One absolute-value kink c * |t - location| with c >= 0.
struct Knot {
  Rational coefficient;
  Rational location;
};

/// Convex test function: an affine part plus nonnegatively weighted
/// absolute-value knots, or one of two builtins. The piecewise-linear form and
/// the square builtin evaluate exactly in rationals; exp evaluates in double.
class ConvexFunction {
public:
  ConvexFunction() = default;

  static ConvexFunction affine(Rational slope, Rational intercept) {
    ConvexFunction f;
    f.slope_ = std::move(slope);
    f.intercept_ = std::move(intercept);
    return f;
  }

  static ConvexFunction piecewise(Rational slope, Rational intercept, std::vector<Knot> knots) {
    for (const Knot& k : knots) {
      if (k.coefficient < 0)
        throw InvalidFunction("knot coefficient must be nonnegative, got " +
                              format_rational(k.coefficient));
    }
    ConvexFunction f;
    f.slope_ = std::move(slope);
    f.intercept_ = std::move(intercept);
    f.knots_ = std::move(knots);
    return f;
  }

  static ConvexFunction square() {
    ConvexFunction f;
    f.builtin_ = Builtin::square;
    return f;
  }

  static ConvexFunction exponential() {
    ConvexFunction f;
    f.builtin_ = Builtin::exp;
    return f;
  }

  Builtin builtin() const { return builtin_; }
  const Rational& slope() const { return slope_; }
  const Rational& intercept() const { return intercept_; }
  const std::vector<Knot>& knots() const { return knots_; }

  /// True when evaluation at rationals stays rational.
  bool exact() const { return builtin_ != Builtin::exp; }

  /// Exact evaluation; rejects the exp builtin.
  Rational evaluate(const Rational& t) const {
    switch (builtin_) {
      case Builtin::square:
        return t * t;
      case Builtin::exp:
        throw FloatFunctionNotAllowed("exp builtin has no exact evaluation");
      case Builtin::none:
        break;
    }
    Rational value = slope_ * t + intercept_;
    for (const Knot& k : knots_) value += k.coefficient * abs(t - k.location);
    return value;
  }

  /// Double-precision evaluation; defined for every builtin.
  double approx(double t) const {
    switch (builtin_) {
      case Builtin::square:
        return t * t;
      case Builtin::exp:
        return std::exp(t);
      case Builtin::none:
        break;
    }
    double value = slope_.convert_to<double>() * t + intercept_.convert_to<double>();
    for (const Knot& k : knots_)
      value += k.coefficient.convert_to<double>() * std::abs(t - k.location.convert_to<double>());
    return value;
  }

private:
  Rational slope_ = 0;
  Rational intercept_ = 0;
  std::vector<Knot> knots_;
  Builtin builtin_ = Builtin::none;
};

/// Deterministic sampler over exact convex functions: up to max_knots kinks
/// with nonnegative coefficients and locations inside [-range, range].
inline ConvexFunction random_convex(std::uint64_t seed, int max_knots,
                                    const Rational& coordinate_range) {
  Rng rng(seed);
  Rational slope = random_rational(rng, -9, 9, 6);
  Rational intercept = random_rational(rng, -9, 9, 6);
  std::uniform_int_distribution<int> count(0, max_knots < 0 ? 0 : max_knots);
  int knots = count(rng);
  std::vector<Knot> kinks;
  kinks.reserve(static_cast<std::size_t>(knots));
  for (int k = 0; k < knots; ++k) {
    Rational coefficient = random_nonnegative_rational(rng, 8, 6);
    Rational location = random_rational_in(rng, coordinate_range);
    kinks.push_back(Knot{std::move(coefficient), std::move(location)});
  }
  return ConvexFunction::piecewise(std::move(slope), std::move(intercept), std::move(kinks));
}

}  // namespace popcert
