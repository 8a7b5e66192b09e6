#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "popcert/convex.hpp"
#include "popcert/criterion.hpp"
#include "popcert/errors.hpp"
#include "popcert/karamata.hpp"
#include "popcert/random.hpp"
#include "popcert/rational.hpp"

namespace popcert {

/// Concrete evaluation context: points x_1..x_n and nonnegative weights
/// w_1..w_n. Validity is relative to a spec: the total weight and every
/// term's weighted row sum must be positive.
struct Instance {
  std::vector<Rational> x;
  std::vector<Rational> w;
};

inline void validate_instance(const InequalitySpec& spec, const Instance& inst) {
  if (inst.x.size() != spec.n() || inst.w.size() != spec.n())
    throw DimensionMismatch("instance has " + std::to_string(inst.x.size()) + " points and " +
                            std::to_string(inst.w.size()) + " weights, spec needs " +
                            std::to_string(spec.n()));
  Rational total = 0;
  for (std::size_t v = 0; v < spec.n(); ++v) {
    if (inst.w[v] < 0)
      throw InvalidInstance("weight w[" + std::to_string(v + 1) + "] is negative");
    total += inst.w[v];
  }
  if (total <= 0) throw InvalidInstance("total weight must be positive");
  for (std::size_t s = 0; s < spec.terms().size(); ++s) {
    Rational row_weight = 0;
    for (std::size_t v = 0; v < spec.n(); ++v) row_weight += spec.terms()[s].r[v] * inst.w[v];
    if (row_weight <= 0)
      throw InvalidInstance("term " + std::to_string(s + 1) +
                            " has nonpositive weighted row sum");
  }
}

struct CertifyResult {
  bool certified = false;
  CheckReport report;
};

/// A certified spec satisfies its inequality for every convex function and
/// every valid instance; a rejected one admits a counterexample (see falsify).
inline CertifyResult certify(const InequalitySpec& spec) {
  CertifyResult out;
  out.report = check_conditions(spec, CheckMode::theorem14);
  out.certified = out.report.passed;
  return out;
}

struct MeanPointEntry {
  Rational weight;  // u_k
  Rational point;   // z_k
};

/// The mean-point system of a certified spec at an instance: one entry per
/// point, one for the global mean, one per term mean. Its weights sum to
/// zero and it passes the symmetric Karamata condition, which is precisely
/// why the instance inequality holds.
struct KaramataCertificate {
  std::vector<MeanPointEntry> entries;

  WeightedPointSystem as_system() const {
    std::vector<Rational> points;
    std::vector<Rational> weights;
    points.reserve(entries.size());
    weights.reserve(entries.size());
    for (const MeanPointEntry& e : entries) {
      points.push_back(e.point);
      weights.push_back(e.weight);
    }
    return WeightedPointSystem(std::move(points), std::move(weights));
  }
};

inline KaramataCertificate mean_point_system(const InequalitySpec& spec, const Instance& inst) {
  if (!certify(spec).certified)
    throw NotCertified("mean-point system exists only for certified specs");
  validate_instance(spec, inst);

  KaramataCertificate cert;
  cert.entries.reserve(spec.n() + 1 + spec.terms().size());

  Rational total_weight = 0;
  Rational total_moment = 0;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    cert.entries.push_back(MeanPointEntry{spec.a()[i] * inst.w[i], inst.x[i]});
    total_weight += inst.w[i];
    total_moment += inst.w[i] * inst.x[i];
  }
  cert.entries.push_back(MeanPointEntry{spec.a_mean() * total_weight, total_moment / total_weight});
  for (const Term& term : spec.terms()) {
    Rational row_weight = 0;
    Rational row_moment = 0;
    for (std::size_t v = 0; v < spec.n(); ++v) {
      row_weight += term.r[v] * inst.w[v];
      row_moment += term.r[v] * inst.w[v] * inst.x[v];
    }
    cert.entries.push_back(MeanPointEntry{-term.b * row_weight, row_moment / row_weight});
  }
  return cert;
}

/// LHS - RHS of the spec's inequality at a concrete instance and exact
/// convex function:
///   sum a_i w_i f(x_i) + a (sum w) f(global mean)
///     - sum_s b_s (sum r_s w) f(term mean).
/// Nonnegative whenever the spec is certified.
inline Rational evaluate_instance(const InequalitySpec& spec, const Instance& inst,
                                  const ConvexFunction& f) {
  validate_instance(spec, inst);
  if (!f.exact())
    throw FloatFunctionNotAllowed("exact evaluation requires builtin none or square");

  Rational total_weight = 0;
  Rational total_moment = 0;
  Rational value = 0;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    value += spec.a()[i] * inst.w[i] * f.evaluate(inst.x[i]);
    total_weight += inst.w[i];
    total_moment += inst.w[i] * inst.x[i];
  }
  value += spec.a_mean() * total_weight * f.evaluate(total_moment / total_weight);
  for (const Term& term : spec.terms()) {
    Rational row_weight = 0;
    Rational row_moment = 0;
    for (std::size_t v = 0; v < spec.n(); ++v) {
      row_weight += term.r[v] * inst.w[v];
      row_moment += term.r[v] * inst.w[v] * inst.x[v];
    }
    value -= term.b * row_weight * f.evaluate(row_moment / row_weight);
  }
  return value;
}

/// Double-precision evaluation for functions without an exact path. Means are
/// still computed exactly; only the function values are floating point.
/// magnitude collects the absolute contributions for relative-tolerance use.
struct ApproxEvaluation {
  double value = 0;
  double magnitude = 0;
};

inline ApproxEvaluation evaluate_instance_approx(const InequalitySpec& spec, const Instance& inst,
                                                 const ConvexFunction& f) {
  validate_instance(spec, inst);
  ApproxEvaluation out;
  auto add = [&out](double coefficient, double fvalue) {
    double contribution = coefficient * fvalue;
    out.value += contribution;
    out.magnitude += std::abs(contribution);
  };

  Rational total_weight = 0;
  Rational total_moment = 0;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    add((spec.a()[i] * inst.w[i]).convert_to<double>(), f.approx(inst.x[i].convert_to<double>()));
    total_weight += inst.w[i];
    total_moment += inst.w[i] * inst.x[i];
  }
  add((spec.a_mean() * total_weight).convert_to<double>(),
      f.approx((total_moment / total_weight).convert_to<double>()));
  for (const Term& term : spec.terms()) {
    Rational row_weight = 0;
    Rational row_moment = 0;
    for (std::size_t v = 0; v < spec.n(); ++v) {
      row_weight += term.r[v] * inst.w[v];
      row_moment += term.r[v] * inst.w[v] * inst.x[v];
    }
    add(-(term.b * row_weight).convert_to<double>(),
        f.approx((row_moment / row_weight).convert_to<double>()));
  }
  return out;
}

/// Concrete counterexample to a rejected spec: a convex function, points and
/// weights on which LHS - RHS is strictly negative.
struct Witness {
  ConvexFunction f;
  std::vector<Rational> x;
  std::vector<Rational> w;
  std::string violated_condition;
};

/// Re-evaluate a witness against a spec; counterexamples return a strictly
/// negative value, anything else is rejected by the caller.
inline Rational verify_witness(const InequalitySpec& spec, const Witness& wit) {
  return evaluate_instance(spec, Instance{wit.x, wit.w}, wit.f);
}

/// Build a counterexample for a rejected spec, or nothing when certified.
/// A nonzero residual at i is witnessed by f(t) = t (negative residual) or
/// f(t) = -t (positive residual) at the i-th basis point pattern; a negative
/// pair slack at (i, j) is witnessed by f(t) = |t| with x_i = 1, x_j = -1.
/// Witnesses always use unit weights.
inline std::optional<Witness> falsify(const InequalitySpec& spec) {
  CheckReport report = check_conditions(spec, CheckMode::theorem14);
  if (report.passed) return std::nullopt;

  Witness wit;
  wit.x.assign(spec.n(), Rational(0));
  wit.w.assign(spec.n(), Rational(1));

  bool found = false;
  for (std::size_t i = 0; i < spec.n() && !found; ++i) {
    const Rational& residual = report.equality_residuals[i];
    if (residual == 0) continue;
    wit.x[i] = 1;
    wit.f = ConvexFunction::affine(residual < 0 ? Rational(1) : Rational(-1), Rational(0));
    wit.violated_condition = "equality residual at i=" + std::to_string(i + 1) + " is " +
                             format_rational(residual);
    found = true;
  }
  if (!found) {
    for (const auto& [key, slack] : report.pair_slacks) {
      if (slack >= 0) continue;
      wit.x[key.first] = 1;
      wit.x[key.second] = -1;
      wit.f = ConvexFunction::piecewise(Rational(0), Rational(0),
                                        {Knot{Rational(1), Rational(0)}});
      wit.violated_condition = "pair slack at (i,j)=(" + std::to_string(key.first + 1) + "," +
                               std::to_string(key.second + 1) + ") is " + format_rational(slack);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("rejected spec without a violated condition");

  if (verify_witness(spec, wit) >= 0)
    throw std::logic_error("constructed witness fails to refute the spec");
  return wit;
}

/// Deterministic sampler of valid instances: points inside
/// [-coordinate_bound, coordinate_bound], weights positive.
inline Instance random_instance(Rng& rng, const InequalitySpec& spec,
                                const Rational& coordinate_bound) {
  Instance inst;
  inst.x = random_vector_in(rng, spec.n(), coordinate_bound);
  inst.w.reserve(spec.n());
  for (std::size_t v = 0; v < spec.n(); ++v)
    inst.w.push_back(random_positive_rational(rng, 12, 6));
  validate_instance(spec, inst);
  return inst;
}

}  // namespace popcert
