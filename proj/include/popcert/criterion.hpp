#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "popcert/errors.hpp"
#include "popcert/rational.hpp"

namespace popcert {

/// One right-hand-side term: coefficient b and the nonnegative row
/// r_1..r_n defining its weighted mean.
struct Term {
  Rational b;
  std::vector<Rational> r;
};

/// The finite data of a Popoviciu-like inequality: point coefficients
/// a_1..a_n, the mean coefficient a, and the term list {(b_s, r_s)}.
/// All coefficients are nonnegative; the inequality itself quantifies over
/// convex functions and instances and is decided by check_conditions.
class InequalitySpec {
public:
  InequalitySpec(std::size_t n, std::vector<Rational> a, Rational a_mean, std::vector<Term> terms)
      : n_(n), a_(std::move(a)), a_mean_(std::move(a_mean)), terms_(std::move(terms)) {
    if (n_ == 0) throw InvalidSpec("dimension n must be positive");
    if (a_.size() != n_)
      throw DimensionMismatch("expected " + std::to_string(n_) + " point coefficients, got " +
                              std::to_string(a_.size()));
    for (std::size_t i = 0; i < n_; ++i)
      if (a_[i] < 0) throw InvalidSpec("a[" + std::to_string(i + 1) + "] is negative");
    if (a_mean_ < 0) throw InvalidSpec("mean coefficient a is negative");
    for (std::size_t s = 0; s < terms_.size(); ++s) {
      const Term& term = terms_[s];
      if (term.r.size() != n_)
        throw DimensionMismatch("term " + std::to_string(s + 1) + " row has length " +
                                std::to_string(term.r.size()) + ", expected " +
                                std::to_string(n_));
      if (term.b < 0) throw InvalidSpec("b[" + std::to_string(s + 1) + "] is negative");
      for (std::size_t i = 0; i < n_; ++i)
        if (term.r[i] < 0)
          throw InvalidSpec("r[" + std::to_string(s + 1) + "," + std::to_string(i + 1) +
                            "] is negative");
    }
  }

  std::size_t n() const { return n_; }
  const std::vector<Rational>& a() const { return a_; }
  const Rational& a_mean() const { return a_mean_; }
  const std::vector<Term>& terms() const { return terms_; }

private:
  std::size_t n_;
  std::vector<Rational> a_;
  Rational a_mean_;
  std::vector<Term> terms_;
};

/// g(x) = sum_u a_u |x_u| + a |sum x| - sum_s b_s |r_s . x|, exactly.
/// Nonnegativity of g on all of R^n is equivalent to nonnegativity on the
/// basis vectors e_i and differences e_i - e_j, which is what
/// check_conditions tests.
inline Rational g_value(const InequalitySpec& spec, const std::vector<Rational>& x) {
  if (x.size() != spec.n())
    throw DimensionMismatch("vector has length " + std::to_string(x.size()) + ", expected " +
                            std::to_string(spec.n()));
  Rational value = 0;
  Rational coordinate_sum = 0;
  for (std::size_t u = 0; u < spec.n(); ++u) {
    value += spec.a()[u] * abs(x[u]);
    coordinate_sum += x[u];
  }
  value += spec.a_mean() * abs(coordinate_sum);
  for (const Term& term : spec.terms()) {
    Rational dot = 0;
    for (std::size_t v = 0; v < spec.n(); ++v) dot += term.r[v] * x[v];
    value -= term.b * abs(dot);
  }
  return value;
}

enum class CheckMode { theorem13, theorem14 };

/// Exact condition report. equality_residuals[i] = a_i + a - sum_s b_s r_{s,i}
/// and pair_slacks[(i,j)] = a_i + a_j - sum_s b_s |r_{s,i} - r_{s,j}|.
/// theorem14 mode requires zero residuals and nonnegative slacks; theorem13
/// mode relaxes the residuals to nonnegative.
struct CheckReport {
  bool passed = true;
  CheckMode mode = CheckMode::theorem14;
  std::vector<Rational> equality_residuals;
  std::map<std::pair<std::size_t, std::size_t>, Rational> pair_slacks;
};

inline CheckReport check_conditions(const InequalitySpec& spec, CheckMode mode) {
  CheckReport report;
  report.mode = mode;

  std::vector<Rational> basis(spec.n(), Rational(0));
  for (std::size_t i = 0; i < spec.n(); ++i) {
    Rational covered = 0;
    for (const Term& term : spec.terms()) covered += term.b * term.r[i];
    Rational residual = spec.a()[i] + spec.a_mean() - covered;

    // The residual is g at the i-th basis vector; keep both routes honest.
    basis[i] = 1;
    if (residual != g_value(spec, basis))
      throw std::logic_error("residual disagrees with g at a basis vector");
    basis[i] = 0;

    bool ok = (mode == CheckMode::theorem14) ? residual == 0 : residual >= 0;
    if (!ok) report.passed = false;
    report.equality_residuals.push_back(std::move(residual));
  }

  for (std::size_t i = 0; i < spec.n(); ++i) {
    for (std::size_t j = i + 1; j < spec.n(); ++j) {
      Rational spread = 0;
      for (const Term& term : spec.terms()) spread += term.b * abs(term.r[i] - term.r[j]);
      Rational slack = spec.a()[i] + spec.a()[j] - spread;

      basis[i] = 1;
      basis[j] = -1;
      if (slack != g_value(spec, basis))
        throw std::logic_error("pair slack disagrees with g at a difference vector");
      basis[i] = 0;
      basis[j] = 0;

      if (slack < 0) report.passed = false;
      report.pair_slacks.emplace(std::make_pair(i, j), std::move(slack));
    }
  }
  return report;
}

/// The certified expression of the relaxed check, evaluated at y:
/// sum a_i |y_i| + a |sum y| - sum_s b_s |sum_v r_{s,v} y_v|. Guaranteed
/// nonnegative for every y once check_conditions passes in theorem13 mode.
inline Rational theorem13_form(const InequalitySpec& spec, const std::vector<Rational>& y) {
  return g_value(spec, y);
}

}  // namespace popcert
