#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "popcert/convex.hpp"
#include "popcert/errors.hpp"
#include "popcert/rational.hpp"

namespace popcert {

struct Sample {
  Rational x;
  Rational value;
};

/// Sample data (x_j, f_j) kept sorted strictly increasing in x. Duplicate x
/// with equal value collapses to one sample; duplicate x with different values
/// is rejected at construction.
class SampleSet {
public:
  explicit SampleSet(std::vector<Sample> samples) : samples_(std::move(samples)) {
    std::sort(samples_.begin(), samples_.end(),
              [](const Sample& a, const Sample& b) { return a.x < b.x; });
    std::size_t kept = 0;
    for (std::size_t k = 0; k < samples_.size(); ++k) {
      if (kept > 0 && samples_[k].x == samples_[kept - 1].x) {
        if (samples_[k].value != samples_[kept - 1].value)
          throw ContradictorySamples("two samples at x = " + format_rational(samples_[k].x) +
                                     " with different values");
        continue;
      }
      samples_[kept++] = samples_[k];
    }
    samples_.resize(kept);
  }

  const std::vector<Sample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  const Sample& operator[](std::size_t k) const { return samples_[k]; }

private:
  std::vector<Sample> samples_;
};

/// Secant slope f[y,z] = (f(y) - f(z)) / (y - z); symmetric in its two pairs.
inline Rational divided_difference(const Rational& y, const Rational& fy, const Rational& z,
                                   const Rational& fz) {
  if (y == z) throw EqualPoints("divided difference needs two distinct points");
  return (fy - fz) / (y - z);
}

struct ConvexityReport {
  bool convex = true;
  /// Middle index of the first slope pair that decreases (only when !convex).
  std::size_t violation_index = 0;
};

/// Data is convex iff consecutive secant slopes never decrease.
inline ConvexityReport check_convex_samples(const SampleSet& s) {
  const auto& pts = s.samples();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    Rational left = divided_difference(pts[i].x, pts[i].value, pts[i - 1].x, pts[i - 1].value);
    Rational right = divided_difference(pts[i + 1].x, pts[i + 1].value, pts[i].x, pts[i].value);
    if (right < left) return ConvexityReport{false, i};
  }
  return ConvexityReport{};
}

/// Result of interpolating convex data: value at x_j is
/// slope * x_j + intercept + sum_i weights[i] * |x_j - x_i|,
/// with all weights nonnegative and the two endpoint weights zero.
struct Interpolant {
  Rational slope;
  Rational intercept;
  std::vector<Rational> weights;
};

/// Interpolate convex samples by an affine part plus nonnegative multiples of
/// |t - x_i|. The weight at interior x_i is half the jump between the secant
/// slopes on either side; endpoints carry zero weight. Reproduces every sample
/// exactly.
inline Interpolant interpolate_abs(const SampleSet& s) {
  const auto& pts = s.samples();
  const std::size_t n = pts.size();
  if (n < 2) throw TooFewSamples("interpolation needs at least two distinct samples");
  ConvexityReport convexity = check_convex_samples(s);
  if (!convexity.convex)
    throw NonConvexData("samples are not convex: secant slope decreases at x = " +
                        format_rational(pts[convexity.violation_index].x));

  std::vector<Rational> slopes;  // slopes[i] = f[x_{i+1}, x_i]
  slopes.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    slopes.push_back(divided_difference(pts[i + 1].x, pts[i + 1].value, pts[i].x, pts[i].value));

  std::vector<Rational> weights(n, Rational(0));
  Rational half_jump_sum = 0;       // sum of all weights
  Rational half_jump_moment = 0;    // sum of weights[i] * x_i
  for (std::size_t i = 1; i + 1 < n; ++i) {
    weights[i] = (slopes[i] - slopes[i - 1]) / 2;
    half_jump_sum += weights[i];
    half_jump_moment += weights[i] * pts[i].x;
  }

  Interpolant out;
  out.slope = slopes[0] + half_jump_sum;
  out.intercept = pts[0].value - slopes[0] * pts[0].x - half_jump_moment;
  out.weights = std::move(weights);
  return out;
}

/// Package an interpolant as a ConvexFunction, dropping zero-weight knots.
inline ConvexFunction to_function(const Interpolant& p, const SampleSet& s) {
  if (p.weights.size() != s.size())
    throw DimensionMismatch("interpolant weight count does not match sample count");
  std::vector<Knot> knots;
  for (std::size_t i = 0; i < p.weights.size(); ++i)
    if (p.weights[i] != 0) knots.push_back(Knot{p.weights[i], s[i].x});
  return ConvexFunction::piecewise(p.slope, p.intercept, std::move(knots));
}

}  // namespace popcert
