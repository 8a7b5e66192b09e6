#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "popcert/criterion.hpp"
#include "popcert/errors.hpp"
#include "popcert/rational.hpp"

namespace popcert {

/// C(n, k) with the zero convention for k < 0 or k > n. Requires n >= 0.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidSpec("binomial requires a nonnegative upper index");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// All k-element subsets of {0,..,n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    out.push_back(pick);
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// Weighted Jensen as a spec: unit point coefficients, no mean term, and a
/// single all-ones row.
inline InequalitySpec jensen_spec(std::size_t n) {
  if (n < 1) throw InvalidSpec("jensen family needs n >= 1");
  std::vector<Rational> a(n, Rational(1));
  std::vector<Term> terms;
  terms.push_back(Term{Rational(1), std::vector<Rational>(n, Rational(1))});
  return InequalitySpec(n, std::move(a), Rational(0), std::move(terms));
}

/// Subset-mean family: point coefficients C(n-2, m-1), mean coefficient
/// C(n-2, m-2), and one unit term per m-element subset of the indices
/// (indicator rows, lexicographic order). Out-of-range m produces an empty
/// term list with all coefficients zero.
inline InequalitySpec zhao_spec(std::size_t n, std::int64_t m) {
  if (n < 2) throw InvalidSpec("zhao family needs n >= 2");
  Rational point_coeff(binomial(static_cast<std::int64_t>(n) - 2, m - 1));
  Rational mean_coeff(binomial(static_cast<std::int64_t>(n) - 2, m - 2));
  std::vector<Rational> a(n, point_coeff);
  std::vector<Term> terms;
  if (m >= 1 && m <= static_cast<std::int64_t>(n)) {
    for (const auto& subset : subsets_lex(n, static_cast<std::size_t>(m))) {
      std::vector<Rational> row(n, Rational(0));
      for (std::size_t i : subset) row[i] = 1;
      terms.push_back(Term{Rational(1), std::move(row)});
    }
  }
  return InequalitySpec(n, std::move(a), std::move(mean_coeff), std::move(terms));
}

/// The classical three-point case: pair means against the global mean.
inline InequalitySpec popoviciu_spec() { return zhao_spec(3, 2); }

/// Cyclic-shift family: point coefficients 2, mean coefficient n - 2, and for
/// each s one unit term with row entries 1 + [i = s] - [i = s + r mod n],
/// each in {0, 1, 2}. The shift r is reduced modulo n.
inline InequalitySpec cyclic_spec(std::size_t n, std::int64_t r) {
  if (n < 2) throw InvalidSpec("cyclic family needs n >= 2");
  const std::int64_t size = static_cast<std::int64_t>(n);
  std::int64_t shift = ((r % size) + size) % size;
  std::vector<Rational> a(n, Rational(2));
  std::vector<Term> terms;
  terms.reserve(n);
  for (std::int64_t s = 0; s < size; ++s) {
    std::vector<Rational> row(n, Rational(1));
    row[static_cast<std::size_t>(s)] += 1;
    row[static_cast<std::size_t>((s + shift) % size)] -= 1;
    terms.push_back(Term{Rational(1), std::move(row)});
  }
  return InequalitySpec(n, std::move(a), Rational(size - 2), std::move(terms));
}

/// Name plus parameters of a generated family; the CLI front end for the
/// four generators above.
struct FamilyId {
  enum class Kind { jensen, popoviciu, zhao, cyclic };
  Kind kind = Kind::popoviciu;
  std::size_t n = 0;
  std::int64_t m = 0;
  std::int64_t shift = 0;
};

inline InequalitySpec family_spec(const FamilyId& id) {
  switch (id.kind) {
    case FamilyId::Kind::jensen:
      return jensen_spec(id.n);
    case FamilyId::Kind::popoviciu:
      return popoviciu_spec();
    case FamilyId::Kind::zhao:
      return zhao_spec(id.n, id.m);
    case FamilyId::Kind::cyclic:
      return cyclic_spec(id.n, id.shift);
  }
  throw InvalidSpec("unknown family");
}

}  // namespace popcert
