#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "popcert/rational.hpp"

namespace popcert {

using Rng = std::mt19937_64;

/// Independent stream seed derived from a master seed (splitmix64 step).
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rational random_rational(Rng& rng, long min_numerator, long max_numerator,
                                long max_denominator) {
  std::uniform_int_distribution<long> num(min_numerator, max_numerator);
  std::uniform_int_distribution<long> den(1, max_denominator);
  long drawn_num = num(rng);  // sequenced draws keep the stream order pinned
  long drawn_den = den(rng);
  return Rational(drawn_num, drawn_den);
}

inline Rational random_nonnegative_rational(Rng& rng, long max_numerator, long max_denominator) {
  return random_rational(rng, 0, max_numerator, max_denominator);
}

inline Rational random_positive_rational(Rng& rng, long max_numerator, long max_denominator) {
  return random_rational(rng, 1, max_numerator, max_denominator);
}

/// Exact rational in [-bound, bound] with a mixed spread of denominators.
inline Rational random_rational_in(Rng& rng, const Rational& bound) {
  std::uniform_int_distribution<long> den(1, 48);
  long q = den(rng);
  std::uniform_int_distribution<long> num(-q, q);
  return Rational(num(rng), q) * bound;
}

inline std::vector<Rational> random_vector_in(Rng& rng, std::size_t n, const Rational& bound) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_rational_in(rng, bound));
  return out;
}

/// Zero-sum vector: random coordinates recentred by their exact mean.
inline std::vector<Rational> random_zero_sum(Rng& rng, std::size_t n, const Rational& bound) {
  std::vector<Rational> out = random_vector_in(rng, n, bound);
  Rational mean = 0;
  for (const Rational& c : out) mean += c;
  mean /= static_cast<long>(n);
  for (Rational& c : out) c -= mean;
  return out;
}

}  // namespace popcert
