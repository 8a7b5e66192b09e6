// popcert: exact certification of Popoviciu-like convexity inequalities.
//
// Exit codes: 0 = pass/certified/holds, 1 = fail/rejected/counterexample,
// 2 = input or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "popcert/popcert.hpp"

namespace {

using popcert::Rational;

struct OutputOptions {
  bool json = false;
  int decimal = -1;  // < 0: render p/q exactly

  std::string fmt(const Rational& q) const {
    if (decimal >= 0) return popcert::decimal_string(q, decimal);
    return popcert::format_rational(q);
  }
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw popcert::ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

popcert::Json parse_json(const std::string& path) {
  try {
    return popcert::Json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw popcert::ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

popcert::InequalitySpec load_spec(const std::string& path) {
  return popcert::spec_from_json(parse_json(path));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string cell =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(popcert::parse_rational(cell));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void emit(const popcert::Json& payload) { std::cout << payload.dump(2) << "\n"; }

int run_check(const std::string& spec_path, int mode_number, const OutputOptions& out) {
  auto spec = load_spec(spec_path);
  auto mode = mode_number == 13 ? popcert::CheckMode::theorem13 : popcert::CheckMode::theorem14;
  auto report = popcert::check_conditions(spec, mode);
  if (out.json) {
    popcert::Json payload = popcert::check_report_to_json(report);
    payload["command"] = "check";
    emit(payload);
  } else {
    std::cout << "mode: " << (mode_number == 13 ? "theorem13" : "theorem14") << "\n";
    for (std::size_t i = 0; i < report.equality_residuals.size(); ++i)
      std::cout << "residual[" << i + 1 << "] = " << out.fmt(report.equality_residuals[i]) << "\n";
    for (const auto& [key, slack] : report.pair_slacks)
      std::cout << "slack[" << key.first + 1 << "," << key.second + 1
                << "] = " << out.fmt(slack) << "\n";
    std::cout << "verdict: " << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return report.passed ? 0 : 1;
}

int run_certify(const std::string& spec_path, int trials, std::uint64_t seed,
                const OutputOptions& out) {
  auto spec = load_spec(spec_path);
  auto result = popcert::certify(spec);

  int violations = 0;
  if (result.certified && trials > 0) {
    for (int trial = 0; trial < trials; ++trial) {
      popcert::Rng rng(popcert::split_seed(seed, static_cast<std::uint64_t>(trial)));
      auto inst = popcert::random_instance(rng, spec, Rational(10));
      auto f = popcert::random_convex(popcert::split_seed(seed, 1'000'000 + trial), 5, Rational(10));
      if (popcert::evaluate_instance(spec, inst, f) < 0) ++violations;
    }
  }

  if (out.json) {
    popcert::Json payload;
    payload["command"] = "certify";
    payload["certified"] = result.certified;
    payload["report"] = popcert::check_report_to_json(result.report);
    if (result.certified && trials > 0)
      payload["probes"] = {{"trials", trials}, {"seed", seed}, {"violations", violations}};
    emit(payload);
  } else {
    std::cout << (result.certified ? "certified" : "rejected") << "\n";
    if (!result.certified) {
      for (std::size_t i = 0; i < result.report.equality_residuals.size(); ++i)
        if (result.report.equality_residuals[i] != 0)
          std::cout << "  residual[" << i + 1
                    << "] = " << out.fmt(result.report.equality_residuals[i]) << "\n";
      for (const auto& [key, slack] : result.report.pair_slacks)
        if (slack < 0)
          std::cout << "  slack[" << key.first + 1 << "," << key.second + 1
                    << "] = " << out.fmt(slack) << "\n";
    } else if (trials > 0) {
      std::cout << "probes: " << trials - violations << "/" << trials
                << " nonnegative (seed " << seed << ")\n";
    }
  }
  return result.certified && violations == 0 ? 0 : 1;
}

int run_evaluate(const std::string& spec_path, const std::string& instance_path,
                 const std::string& function_path, const OutputOptions& out) {
  auto spec = load_spec(spec_path);
  auto inst = popcert::instance_from_json(parse_json(instance_path));
  auto f = popcert::function_from_json(parse_json(function_path));

  if (f.exact()) {
    Rational value = popcert::evaluate_instance(spec, inst, f);
    if (out.json)
      emit({{"command", "evaluate"},
            {"exact", true},
            {"value", popcert::rational_to_json(value)},
            {"holds", value >= 0}});
    else
      std::cout << out.fmt(value) << "\n";
    return value >= 0 ? 0 : 1;
  }

  auto approx = popcert::evaluate_instance_approx(spec, inst, f);
  // Float path: the declared relative tolerance for the nonnegativity verdict.
  bool holds = approx.value >= -1e-9 * std::max(1.0, approx.magnitude);
  std::ostringstream rendered;
  rendered << std::setprecision(17) << approx.value;
  if (out.json)
    emit({{"command", "evaluate"}, {"exact", false}, {"value", rendered.str()}, {"holds", holds}});
  else
    std::cout << rendered.str() << "\n";
  return holds ? 0 : 1;
}

int run_falsify(const std::string& spec_path, const OutputOptions& out) {
  auto spec = load_spec(spec_path);
  auto witness = popcert::falsify(spec);
  if (!witness) {
    if (out.json)
      emit({{"command", "falsify"}, {"certified", true}});
    else
      std::cout << "certified\n";
    return 0;
  }
  Rational value = popcert::verify_witness(spec, *witness);
  if (out.json) {
    popcert::Json payload;
    payload["command"] = "falsify";
    payload["certified"] = false;
    payload["witness"] = popcert::witness_to_json(*witness, value);
    emit(payload);
  } else {
    std::cout << "witness found\n";
    std::cout << "violated: " << witness->violated_condition << "\n";
    std::cout << "f: slope " << out.fmt(witness->f.slope()) << ", intercept "
              << out.fmt(witness->f.intercept());
    if (witness->f.knots().empty()) {
      std::cout << ", knots: (none)\n";
    } else {
      std::cout << ", knots:";
      for (const auto& k : witness->f.knots())
        std::cout << " " << out.fmt(k.coefficient) << "*|t-" << out.fmt(k.location) << "|";
      std::cout << "\n";
    }
    auto print_list = [&out](const char* label, const std::vector<Rational>& values) {
      std::cout << label << ":";
      for (const Rational& v : values) std::cout << " " << out.fmt(v);
      std::cout << "\n";
    };
    print_list("x", witness->x);
    print_list("w", witness->w);
    std::cout << "evaluates to: " << out.fmt(value) << "\n";
  }
  return 1;
}

int run_meanpoints(const std::string& spec_path, const std::string& instance_path,
                   const OutputOptions& out) {
  auto spec = load_spec(spec_path);
  auto inst = popcert::instance_from_json(parse_json(instance_path));
  auto cert = popcert::mean_point_system(spec, inst);
  auto check = popcert::check_symmetric_condition(cert.as_system());

  Rational weight_sum = 0;
  Rational moment_sum = 0;
  for (const auto& e : cert.entries) {
    weight_sum += e.weight;
    moment_sum += e.weight * e.point;
  }

  if (out.json) {
    popcert::Json payload = popcert::certificate_to_json(cert);
    payload["command"] = "meanpoints";
    payload["weight_sum"] = popcert::rational_to_json(weight_sum);
    payload["moment_sum"] = popcert::rational_to_json(moment_sum);
    payload["symmetric_check"] = popcert::symmetric_report_to_json(check);
    emit(payload);
  } else {
    std::cout << "k\tu_k\tz_k\n";
    for (std::size_t k = 0; k < cert.entries.size(); ++k)
      std::cout << k + 1 << "\t" << out.fmt(cert.entries[k].weight) << "\t"
                << out.fmt(cert.entries[k].point) << "\n";
    std::cout << "sum u = " << out.fmt(weight_sum) << ", sum u*z = " << out.fmt(moment_sum)
              << "\n";
    std::cout << "symmetric condition: " << (check.passed ? "PASS" : "FAIL") << "\n";
  }
  return 0;
}

int run_family(const popcert::FamilyId& id, const std::string& output_path) {
  auto spec = popcert::family_spec(id);
  auto payload = popcert::spec_to_json(spec);
  if (output_path.empty()) {
    emit(payload);
  } else {
    std::ofstream file(output_path);
    if (!file) throw popcert::ParseError("cannot write '" + output_path + "'");
    file << payload.dump(2) << "\n";
  }
  return 0;
}

int run_decompose(const std::string& coords_text, const OutputOptions& out) {
  popcert::ZeroSumVector vec(parse_rational_list(coords_text));
  auto d = popcert::decompose(vec);
  if (out.json) {
    popcert::Json payload = popcert::decomposition_to_json(d);
    payload["command"] = "decompose";
    payload["coords"] = popcert::rational_list_to_json(vec.coords());
    emit(payload);
  } else {
    if (d.pairs.empty()) {
      std::cout << "(none)\n";
    } else {
      bool first = true;
      for (const auto& [key, coefficient] : d.pairs) {
        if (!first) std::cout << ", ";
        std::cout << "e" << key.first + 1 << "-e" << key.second + 1 << ": "
                  << out.fmt(coefficient);
        first = false;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_interpolate(const std::string& samples_path) {
  std::istringstream in(read_text(samples_path));
  auto samples = popcert::samples_from_csv(in);
  auto interpolant = popcert::interpolate_abs(samples);
  emit(popcert::function_to_json(popcert::to_function(interpolant, samples)));
  return 0;
}

int run_karamata(const std::string& z_text, const std::string& w_text,
                 const OutputOptions& out) {
  popcert::WeightedPointSystem sys(parse_rational_list(z_text), parse_rational_list(w_text));
  auto report = popcert::check_symmetric_condition(sys);
  if (out.json) {
    popcert::Json payload = popcert::symmetric_report_to_json(report);
    payload["command"] = "karamata";
    emit(payload);
  } else {
    std::cout << "weight sum: " << out.fmt(report.weight_sum) << "\n";
    std::cout << "t\tsum\n";
    for (const auto& [t, sum] : report.dominance)
      std::cout << out.fmt(t) << "\t" << out.fmt(sum) << "\n";
    if (report.failed == popcert::SymmetricConditionReport::Condition::pointwise_dominance)
      std::cout << "violated at t = " << out.fmt(*report.violating_point)
                << " with sum " << out.fmt(*report.violating_sum) << "\n";
    std::cout << "verdict: " << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic checks and certificates for Popoviciu-like convexity inequalities"};
  app.require_subcommand(1);
  app.fallthrough();

  OutputOptions out;
  app.add_flag("--json", out.json, "machine-readable output");
  app.add_option("--decimal", out.decimal, "render rationals as decimals with this many digits");

  std::string spec_path;
  std::string instance_path;
  std::string function_path;
  std::string coords_text;
  std::string samples_path;
  std::string z_text;
  std::string w_text;
  std::string output_path;
  int mode_number = 14;
  int trials = 0;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "evaluate the finite conditions of a spec");
  check->add_option("spec", spec_path, "spec file (JSON), or - for stdin")->required();
  check->add_option("--mode", mode_number, "13 or 14 (default 14)")
      ->check(CLI::IsMember({13, 14}));

  auto* certify = app.add_subcommand("certify", "certify a spec (theorem-14 mode)");
  certify->add_option("spec", spec_path, "spec file (JSON), or - for stdin")->required();
  certify->add_option("--trials", trials, "random nonnegativity probes after certification");
  certify->add_option("--seed", seed, "seed for the probe sweep");

  auto* evaluate = app.add_subcommand("evaluate", "evaluate LHS - RHS on an instance");
  evaluate->add_option("spec", spec_path, "spec file (JSON), or - for stdin")->required();
  evaluate->add_option("--instance", instance_path, "instance file (JSON)")->required();
  evaluate->add_option("--function", function_path, "function file (JSON)")->required();

  auto* falsify = app.add_subcommand("falsify", "construct a counterexample to a rejected spec");
  falsify->add_option("spec", spec_path, "spec file (JSON), or - for stdin")->required();

  auto* meanpoints = app.add_subcommand("meanpoints", "print the mean-point certificate");
  meanpoints->add_option("spec", spec_path, "spec file (JSON), or - for stdin")->required();
  meanpoints->add_option("--instance", instance_path, "instance file (JSON)")->required();

  auto* family = app.add_subcommand("family", "generate a named inequality family spec");
  std::string family_name;
  family->add_option("name", family_name, "jensen | popoviciu | zhao | cyclic")->required();
  std::int64_t family_n = 0;
  std::int64_t family_m = 0;
  std::int64_t family_r = 0;
  auto* opt_n = family->add_option("--n", family_n, "dimension");
  auto* opt_m = family->add_option("--m", family_m, "subset size (zhao)");
  auto* opt_r = family->add_option("--r", family_r, "cyclic shift");
  family->add_option("-o,--output", output_path, "write the spec here instead of stdout");

  auto* decompose = app.add_subcommand("decompose", "decompose a zero-sum vector");
  decompose->add_option("coords", coords_text, "comma-separated rationals")->required();

  auto* interpolate = app.add_subcommand("interpolate", "interpolate convex samples");
  interpolate->add_option("samples", samples_path, "CSV file with header x,f, or - for stdin")
      ->required();

  auto* karamata = app.add_subcommand("karamata", "symmetric weighted Karamata check");
  karamata->add_option("--z", z_text, "comma-separated points")->required();
  karamata->add_option("--w", w_text, "comma-separated weights")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(spec_path, mode_number, out);
    if (certify->parsed()) return run_certify(spec_path, trials, seed, out);
    if (evaluate->parsed()) return run_evaluate(spec_path, instance_path, function_path, out);
    if (falsify->parsed()) return run_falsify(spec_path, out);
    if (meanpoints->parsed()) return run_meanpoints(spec_path, instance_path, out);
    if (family->parsed()) {
      popcert::FamilyId id;
      if (family_name == "jensen") {
        id.kind = popcert::FamilyId::Kind::jensen;
        if (!*opt_n) throw popcert::ParseError("family jensen needs --n");
      } else if (family_name == "popoviciu") {
        id.kind = popcert::FamilyId::Kind::popoviciu;
      } else if (family_name == "zhao") {
        id.kind = popcert::FamilyId::Kind::zhao;
        if (!*opt_n || !*opt_m) throw popcert::ParseError("family zhao needs --n and --m");
      } else if (family_name == "cyclic") {
        id.kind = popcert::FamilyId::Kind::cyclic;
        if (!*opt_n || !*opt_r) throw popcert::ParseError("family cyclic needs --n and --r");
      } else {
        throw popcert::ParseError("unknown family '" + family_name + "'");
      }
      if (family_n < 0) throw popcert::ParseError("--n must be nonnegative");
      id.n = static_cast<std::size_t>(family_n);
      id.m = family_m;
      id.shift = family_r;
      return run_family(id, output_path);
    }
    if (decompose->parsed()) return run_decompose(coords_text, out);
    if (interpolate->parsed()) return run_interpolate(samples_path);
    if (karamata->parsed()) return run_karamata(z_text, w_text, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
