#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "popcert/certify.hpp"
#include "popcert/convex.hpp"
#include "popcert/criterion.hpp"
#include "popcert/errors.hpp"
#include "popcert/interpolation.hpp"
#include "popcert/karamata.hpp"
#include "popcert/rational.hpp"
#include "popcert/zerosum.hpp"

namespace popcert {

using Json = nlohmann::json;

// Rationals travel as strings ("p/q" or decimal integer); bare JSON integers
// are accepted on input.

inline Json rational_to_json(const Rational& q) { return format_rational(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

inline Json rational_list_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(rational_to_json(v));
  return out;
}

inline std::vector<Rational> rational_list_from_json(const Json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string(field) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const Json& item : j) out.push_back(rational_from_json(item));
  return out;
}

// ---- Function files ----

inline Json function_to_json(const ConvexFunction& f) {
  Json out;
  out["slope"] = rational_to_json(f.slope());
  out["intercept"] = rational_to_json(f.intercept());
  Json knots = Json::array();
  for (const Knot& k : f.knots())
    knots.push_back({{"c", rational_to_json(k.coefficient)}, {"t", rational_to_json(k.location)}});
  out["knots"] = std::move(knots);
  switch (f.builtin()) {
    case Builtin::none:
      out["builtin"] = nullptr;
      break;
    case Builtin::square:
      out["builtin"] = "square";
      break;
    case Builtin::exp:
      out["builtin"] = "exp";
      break;
  }
  return out;
}

inline ConvexFunction function_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("function file must be a JSON object");
  if (j.contains("builtin") && !j.at("builtin").is_null()) {
    std::string name = j.at("builtin").get<std::string>();
    if (name == "square") return ConvexFunction::square();
    if (name == "exp") return ConvexFunction::exponential();
    throw ParseError("unknown builtin '" + name + "'");
  }
  Rational slope = j.contains("slope") ? rational_from_json(j.at("slope")) : Rational(0);
  Rational intercept = j.contains("intercept") ? rational_from_json(j.at("intercept")) : Rational(0);
  std::vector<Knot> knots;
  if (j.contains("knots")) {
    if (!j.at("knots").is_array()) throw ParseError("knots must be an array");
    for (const Json& item : j.at("knots"))
      knots.push_back(Knot{rational_from_json(item.at("c")), rational_from_json(item.at("t"))});
  }
  return ConvexFunction::piecewise(std::move(slope), std::move(intercept), std::move(knots));
}

// ---- Spec files ----

inline Json spec_to_json(const InequalitySpec& spec) {
  Json out;
  out["n"] = spec.n();
  out["a"] = rational_list_to_json(spec.a());
  out["a_mean"] = rational_to_json(spec.a_mean());
  Json terms = Json::array();
  for (const Term& term : spec.terms())
    terms.push_back({{"b", rational_to_json(term.b)}, {"r", rational_list_to_json(term.r)}});
  out["terms"] = std::move(terms);
  return out;
}

inline InequalitySpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("spec file must be a JSON object");
  for (const char* field : {"n", "a", "a_mean", "terms"})
    if (!j.contains(field)) throw ParseError(std::string("spec file is missing '") + field + "'");
  if (!j.at("n").is_number_integer() && !j.at("n").is_number_unsigned())
    throw ParseError("n must be an integer");
  std::size_t n = j.at("n").get<std::size_t>();
  std::vector<Rational> a = rational_list_from_json(j.at("a"), "a");
  Rational a_mean = rational_from_json(j.at("a_mean"));
  if (!j.at("terms").is_array()) throw ParseError("terms must be an array");
  std::vector<Term> terms;
  for (const Json& item : j.at("terms")) {
    if (!item.contains("b") || !item.contains("r"))
      throw ParseError("each term needs fields 'b' and 'r'");
    terms.push_back(Term{rational_from_json(item.at("b")),
                         rational_list_from_json(item.at("r"), "r")});
  }
  return InequalitySpec(n, std::move(a), std::move(a_mean), std::move(terms));
}

// ---- Instance files ----

inline Json instance_to_json(const Instance& inst) {
  return Json{{"x", rational_list_to_json(inst.x)}, {"w", rational_list_to_json(inst.w)}};
}

inline Instance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("w"))
    throw ParseError("instance file needs fields 'x' and 'w'");
  return Instance{rational_list_from_json(j.at("x"), "x"),
                  rational_list_from_json(j.at("w"), "w")};
}

// ---- Report objects (machine-readable CLI output; indices are 1-based) ----

inline Json check_report_to_json(const CheckReport& report) {
  Json out;
  out["mode"] = report.mode == CheckMode::theorem14 ? "theorem14" : "theorem13";
  out["passed"] = report.passed;
  out["equality_residuals"] = rational_list_to_json(report.equality_residuals);
  Json slacks = Json::array();
  for (const auto& [key, value] : report.pair_slacks)
    slacks.push_back({{"i", key.first + 1}, {"j", key.second + 1},
                      {"value", rational_to_json(value)}});
  out["pair_slacks"] = std::move(slacks);
  return out;
}

inline Json symmetric_report_to_json(const SymmetricConditionReport& report) {
  Json out;
  out["passed"] = report.passed;
  out["weight_sum"] = rational_to_json(report.weight_sum);
  Json table = Json::array();
  for (const auto& [t, sum] : report.dominance)
    table.push_back({{"t", rational_to_json(t)}, {"sum", rational_to_json(sum)}});
  out["table"] = std::move(table);
  switch (report.failed) {
    case SymmetricConditionReport::Condition::none:
      out["failed_condition"] = nullptr;
      break;
    case SymmetricConditionReport::Condition::weight_sum:
      out["failed_condition"] = "weight_sum";
      break;
    case SymmetricConditionReport::Condition::pointwise_dominance:
      out["failed_condition"] = "pointwise_dominance";
      out["violating_t"] = rational_to_json(*report.violating_point);
      out["violating_sum"] = rational_to_json(*report.violating_sum);
      break;
  }
  return out;
}

inline Json witness_to_json(const Witness& wit, const Rational& value) {
  Json out;
  out["f"] = function_to_json(wit.f);
  out["x"] = rational_list_to_json(wit.x);
  out["w"] = rational_list_to_json(wit.w);
  out["violated_condition"] = wit.violated_condition;
  out["value"] = rational_to_json(value);
  return out;
}

inline Json certificate_to_json(const KaramataCertificate& cert) {
  Json entries = Json::array();
  for (const MeanPointEntry& e : cert.entries)
    entries.push_back({{"u", rational_to_json(e.weight)}, {"z", rational_to_json(e.point)}});
  return Json{{"entries", std::move(entries)}};
}

inline Json decomposition_to_json(const Decomposition& d) {
  Json pairs = Json::array();
  for (const auto& [key, coefficient] : d.pairs)
    pairs.push_back({{"i", key.first + 1}, {"j", key.second + 1},
                     {"coefficient", rational_to_json(coefficient)}});
  return Json{{"pairs", std::move(pairs)}};
}

// ---- Samples CSV ("x,f" header, one rational pair per row) ----

inline SampleSet samples_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty samples file");
  auto split = [](const std::string& row) -> std::pair<std::string, std::string> {
    std::size_t comma = row.find(',');
    if (comma == std::string::npos) throw ParseError("samples row without a comma: " + row);
    return {row.substr(0, comma), row.substr(comma + 1)};
  };
  auto [hx, hf] = split(line);
  if (std::string(detail::trim(hx)) != "x" || std::string(detail::trim(hf)) != "f")
    throw ParseError("samples file must start with the header 'x,f'");
  std::vector<Sample> samples;
  while (std::getline(in, line)) {
    if (std::string(detail::trim(line)).empty()) continue;
    auto [cx, cf] = split(line);
    samples.push_back(Sample{parse_rational(cx), parse_rational(cf)});
  }
  return SampleSet(std::move(samples));
}

}  // namespace popcert
