#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "popcert/errors.hpp"
#include "popcert/rational.hpp"

namespace popcert {

/// Vector with exactly zero coordinate sum.
class ZeroSumVector {
public:
  explicit ZeroSumVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
    Rational sum = 0;
    for (const Rational& c : coords_) sum += c;
    if (sum != 0)
      throw NotZeroSum("coordinates sum to " + format_rational(sum) + ", expected 0");
  }

  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }

private:
  std::vector<Rational> coords_;
};

/// Indices of the strictly positive and strictly negative coordinates.
struct SupportSets {
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
};

inline SupportSets support_sets(const ZeroSumVector& x) {
  SupportSets out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x.coords()[k] > 0) out.positive.push_back(k);
    if (x.coords()[k] < 0) out.negative.push_back(k);
  }
  return out;
}

using PairKey = std::pair<std::size_t, std::size_t>;

/// Expansion x = sum a_{i,j} (e_i - e_j) with every coefficient positive,
/// i drawn from the positive support and j from the negative support.
struct Decomposition {
  std::map<PairKey, Rational> pairs;
};

/// Greedy transfer loop: repeatedly move mass between the smallest positive
/// index and the smallest negative index, zeroing at least one coordinate per
/// step. When the two magnitudes tie, one step zeroes both.
inline Decomposition decompose(const ZeroSumVector& x) {
  std::vector<Rational> z = x.coords();
  Decomposition out;
  for (;;) {
    std::size_t u = z.size();
    std::size_t v = z.size();
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (u == z.size() && z[k] > 0) u = k;
      if (v == z.size() && z[k] < 0) v = k;
      if (u < z.size() && v < z.size()) break;
    }
    if (u == z.size() && v == z.size()) break;
    // A zero-sum vector cannot have support of only one sign.
    if (z[u] + z[v] >= 0) {
      out.pairs[{u, v}] += -z[v];
      z[u] += z[v];
      z[v] = 0;
    } else {
      out.pairs[{u, v}] += z[u];
      z[v] += z[u];
      z[u] = 0;
    }
  }
  return out;
}

/// Evaluate sum a_{i,j} (e_i - e_j) coordinate-wise in dimension n.
inline std::vector<Rational> recompose(const Decomposition& d, std::size_t dimension) {
  std::vector<Rational> out(dimension, Rational(0));
  for (const auto& [key, coefficient] : d.pairs) {
    if (key.first >= dimension || key.second >= dimension)
      throw IndexOutOfRange("pair index exceeds dimension");
    out[key.first] += coefficient;
    out[key.second] -= coefficient;
  }
  return out;
}

}  // namespace popcert
