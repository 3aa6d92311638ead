// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "holodyn/dynamics.hpp"
#include "holodyn/errors.hpp"
#include "holodyn/io.hpp"
#include "holodyn/presets.hpp"
#include "holodyn/property_suites.hpp"
#include "holodyn/symbol.hpp"

namespace {

using namespace holodyn;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitConfig = 4;
constexpr int kMaxHorizon = 1000000;

/// Flag values supplied on the command line; unset optionals fall back to the
/// config entry and then to per-command defaults.
struct CliOverrides {
  std::optional<std::string> command, op, function, generators, radii, out;
  std::optional<int> horizon, seed, cases, count;
  std::optional<double> eps, delta;
  bool strict = false;
};

/// One fully resolved experiment.
struct Experiment {
  std::string command;
  std::string op = "d1";
  std::string function = "gap:1";
  std::string generators = "z1;z2";
  std::vector<Radius> radii{Radius(1.0), Radius(2.0)};
  int horizon = -1;  // -1 = per-command default
  int seed = 42;
  int cases = 100;
  int count = 10;
  double eps = 1e-6;
  double delta = 0.9;
  std::string out;  // empty = stdout summary only
};

[[noreturn]] void config_error(const std::string& message) {
  throw Error(ErrorCode::ConfigError, message);
}

std::vector<Radius> radii_from_json(const Json& value) {
  if (value.is_string()) return parse_radius_list(value.get<std::string>());
  if (value.is_array()) {
    std::vector<Radius> radii;
    for (const Json& r : value) {
      if (!r.is_number()) config_error("radii entries must be numbers");
      radii.emplace_back(r.get<double>());
    }
    if (radii.empty()) config_error("radii must be non-empty");
    return radii;
  }
  if (value.is_number()) return {Radius(value.get<double>())};
  config_error("radii must be a list or a comma-separated string");
}

Experiment resolve(const Json& entry, const CliOverrides& cli) {
  if (!entry.is_object()) config_error("each config entry must be a JSON object");
  for (const auto& [key, value] : entry.items()) {
    static const std::vector<std::string> known{
        "command", "operator", "function", "generators", "radii", "horizon",
        "seed",    "cases",    "count",    "eps",        "delta", "out"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      config_error("unknown config field '" + key + "'");
    }
    (void)value;
  }

  Experiment exp;
  exp.command = cli.command.value_or(entry.value("command", ""));
  if (exp.command.empty()) config_error("missing field 'command'");
  exp.op = cli.op.value_or(entry.value("operator", exp.op));
  exp.function = cli.function.value_or(entry.value("function", exp.function));
  exp.generators = cli.generators.value_or(entry.value("generators", exp.generators));
  if (cli.radii) {
    exp.radii = parse_radius_list(*cli.radii);
  } else if (entry.contains("radii")) {
    exp.radii = radii_from_json(entry["radii"]);
  }
  exp.horizon = cli.horizon.value_or(entry.value("horizon", exp.horizon));
  exp.seed = cli.seed.value_or(entry.value("seed", exp.seed));
  exp.cases = cli.cases.value_or(entry.value("cases", exp.cases));
  exp.count = cli.count.value_or(entry.value("count", exp.count));
  exp.eps = cli.eps.value_or(entry.value("eps", exp.eps));
  exp.delta = cli.delta.value_or(entry.value("delta", exp.delta));
  exp.out = cli.out.value_or(entry.value("out", exp.out));

  if (exp.horizon > kMaxHorizon) {
    config_error("horizon exceeds the supported maximum " + std::to_string(kMaxHorizon));
  }
  if (exp.seed < 0 || exp.cases < 1) config_error("seed must be >= 0 and cases >= 1");
  return exp;
}

int default_horizon(const std::string& command) {
  if (command == "orbit") return 32;
  return 50;
}

/// Emission sink: files under the out directory (with an entry prefix when
/// running a batch) or nothing when no out directory was requested.
class Sink {
 public:
  Sink(std::string out_dir, std::string prefix)
      : out_dir_(std::move(out_dir)), prefix_(std::move(prefix)) {}

  void emit(const std::string& name, const std::string& content) const {
    if (out_dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(out_dir_, ec);
    if (ec) {
      throw Error(ErrorCode::IoError, "cannot create directory " + out_dir_);
    }
    std::string path = out_dir_ + "/" + prefix_ + name;
    write_text_file(path, content);
    std::cout << "  wrote " << path << "\n";
  }

  void emit_json(const std::string& name, const Json& j) const {
    emit(name, j.dump(2) + "\n");
  }

 private:
  std::string out_dir_;
  std::string prefix_;
};

std::string radii_text(const std::vector<Radius>& radii) {
  std::string text;
  for (const Radius& r : radii) {
    if (!text.empty()) text.push_back(',');
    text += format_double(r.value);
  }
  return text;
}

// ---------------------------------------------------------------------------
// Command implementations. Each returns the non-strict exit contribution 0
// and fills `strict_code` with the code a --strict run must report.

int run_orbit(const Experiment& exp, const Sink& sink, int* strict_code) {
  ConvolutionSymbol L = parse_operator_spec(exp.op);
  Series f = parse_function_spec(exp.function);
  int horizon = exp.horizon < 0 ? default_horizon(exp.command) : exp.horizon;
  OrbitTrace trace = orbit_trace(L, f, horizon, exp.radii);
  std::cout << "  operator " << L.label() << ", horizon " << horizon << ", radii "
            << radii_text(exp.radii) << "\n";
  const OrbitRecord& last = trace.records.back();
  std::cout << "  final iterate: essential_dim " << last.essential_dim
            << ", |eval0| " << format_double(std::abs(last.eval_at_zero)) << "\n";
  sink.emit_json("orbit.json", orbit_trace_to_json(trace));
  sink.emit("orbit.csv", trace_to_csv(trace));
  *strict_code = kExitOk;
  return kExitOk;
}

int run_certify_noncyclic(const Experiment& exp, const Sink& sink, int* strict_code) {
  ConvolutionSymbol L = parse_operator_spec(exp.op);
  Series f = parse_function_spec(exp.function);
  int horizon = exp.horizon < 0 ? default_horizon(exp.command) : exp.horizon;
  NonCyclicityCertificate cert = non_cyclicity_certificate(L, f, horizon);
  bool valid = cert.max_abs_functional_on_orbit == 0.0 &&
               cert.functional_on_witness == Complex(1.0, 0.0);
  std::cout << "  orbit confined to cylinder " << cert.n << " for k <= "
            << cert.horizon_checked << "; functional max "
            << format_double(cert.max_abs_functional_on_orbit) << " on orbit, 1 on z"
            << cert.n + 1 << "\n";
  std::cout << "  certificate " << (valid ? "valid" : "INVALID") << "\n";
  sink.emit_json("noncyclic.json", non_cyclicity_to_json(cert));
  *strict_code = valid ? kExitOk : kExitValidation;
  return kExitOk;
}

int run_certify_nonsupercyclic(const Experiment& exp, const Sink& sink,
                               int* strict_code) {
  ConvolutionSymbol L = parse_operator_spec(exp.op);
  std::vector<Series> generators = parse_generator_list(exp.generators);
  int horizon = exp.horizon < 0 ? default_horizon(exp.command) : exp.horizon;
  SubspaceConfinementCertificate cert =
      subspace_orbit_certificate(L, generators, horizon);
  bool valid = cert.max_abs_functional_on_orbit == 0.0 &&
               cert.max_iterate_dimension <= cert.m;
  std::cout << "  subspace of dimension " << cert.generator_count
            << " confined to cylinder " << cert.m << " for k <= "
            << cert.horizon_checked << "\n";
  std::cout << "  certificate " << (valid ? "valid" : "INVALID") << "\n";
  sink.emit_json("nonsupercyclic.json", subspace_confinement_to_json(cert));
  *strict_code = valid ? kExitOk : kExitValidation;
  return kExitOk;
}

/// Witness construction shared by liyorke and demo-gap: the function spec must
/// name a gap series; a non-derivative operator is accepted when its
/// associated operator on the witness cylinder matches (lifting).
SemiIrregularityWitness build_gap_witness(const Experiment& exp) {
  std::string spec = exp.function;
  int variable = 1;
  std::vector<int> blocks = default_gap_blocks();
  if (spec.rfind("gap:", 0) == 0) {
    Series probe = parse_function_spec(spec);  // validates the whole spec
    std::string rest = spec.substr(4);
    std::size_t colon = rest.find(':');
    variable = std::atoi(rest.substr(0, colon).c_str());
    if (colon != std::string::npos) {
      blocks.clear();
      for (const auto& [alpha, c] : probe.terms()) {
        blocks.push_back(alpha.degree());
      }
    }
  } else {
    config_error("this command needs a gap:<j>[:blocks] function, got '" + spec + "'");
  }
  SemiIrregularityWitness w =
      semi_irregular_gap_witness(variable, blocks, exp.radii, exp.eps, exp.delta);
  ConvolutionSymbol L = parse_operator_spec(exp.op);
  if (L == w.op) {
    return w;
  }
  return lift_semi_irregular(w, L, CylinderIndex(variable));
}

int run_liyorke(const Experiment& exp, const Sink& sink, int* strict_code) {
  SemiIrregularityWitness w = build_gap_witness(exp);
  ScrambledFamily family = scrambled_family(w, exp.count);
  int valid_pairs = 0;
  for (const LiYorkePairCertificate& pair : family.pairs) {
    if (witness_invariants_hold(pair.witness)) ++valid_pairs;
  }
  bool valid = valid_pairs == static_cast<int>(family.pairs.size());
  std::cout << "  scrambled sample of " << family.scalars.size() << " scalars, "
            << family.pairs.size() << " pairs, " << valid_pairs << " valid\n";
  std::cout << "  every distinct pair is proximal-not-asymptotic by the scaled "
               "gap witness\n";
  sink.emit_json("liyorke.json", scrambled_family_to_json(family));
  *strict_code = valid ? kExitOk : kExitValidation;
  return kExitOk;
}

int run_lemmas(const Experiment& exp, const Sink& sink, int* strict_code) {
  SuiteOptions options;
  options.seed = static_cast<std::uint64_t>(exp.seed);
  options.cases = exp.cases;
  std::vector<SuiteResult> results = run_all_suites(options);
  bool all_ok = true;
  Json j;
  j["kind"] = "property_suites";
  j["seed"] = exp.seed;
  j["cases"] = exp.cases;
  Json list = Json::array();
  for (const SuiteResult& r : results) {
    std::cout << "  " << r.name << ": " << r.passed << "/" << r.total << "\n";
    for (const std::string& failure : r.failures) {
      std::cout << "    " << failure << "\n";
    }
    all_ok = all_ok && r.ok();
    Json entry;
    entry["name"] = r.name;
    entry["passed"] = r.passed;
    entry["total"] = r.total;
    entry["failures"] = r.failures;
    list.push_back(std::move(entry));
  }
  j["suites"] = std::move(list);
  sink.emit_json("lemmas.json", j);
  // A failing identity suite is a hard failure, strict or not.
  *strict_code = all_ok ? kExitOk : kExitValidation;
  return all_ok ? kExitOk : kExitValidation;
}

int run_eigen_search(const Experiment& exp, const Sink& sink, int* strict_code) {
  ConvolutionSymbol L = parse_operator_spec(exp.op);
  DichotomyResult result = find_dichotomy_points(L);
  if (result.found) {
    std::cout << "  |phi| = " << format_double(result.small_value)
              << " (< 1) and |phi| = " << format_double(result.big_value)
              << " (> 1) found\n";
  } else {
    std::cout << "  search exhausted its budget without witnessing the "
                 "dichotomy (see log)\n";
  }
  sink.emit_json("eigen.json", dichotomy_to_json(result));
  *strict_code = result.found ? kExitOk : kExitNotFound;
  return kExitOk;
}

int run_demo_gap(const Experiment& exp, const Sink& sink, int* strict_code) {
  SemiIrregularityWitness w = build_gap_witness(exp);
  std::cout << "  gap witness for " << w.operator_label << ", radii "
            << radii_text(exp.radii) << "\n";
  std::cout << "  big checkpoints (|orbit(0)| >= "
            << format_double(w.big_checkpoints.front().lower_bound) << "):";
  for (const BigCheckpoint& b : w.big_checkpoints) std::cout << " " << b.k;
  std::cout << "\n";
  for (const SmallCheckpoint& s : w.small_checkpoints) {
    std::cout << "  small checkpoint k=" << s.k << ": bounds";
    for (double b : s.upper_bounds) std::cout << " " << format_double(b);
    std::cout << "\n";
  }
  std::cout << "  horizon evidence plus closed-form tail bounds: a proof for "
               "the derivative operator\n";
  bool valid = witness_invariants_hold(w);
  sink.emit_json("witness.json", witness_to_json(w));
  *strict_code = valid ? kExitOk : kExitValidation;
  return kExitOk;
}

int run_experiment(const Experiment& exp, const Sink& sink, bool strict) {
  std::cout << "[" << exp.command << "]\n";
  int strict_code = kExitOk;
  int code;
  if (exp.command == "orbit") {
    code = run_orbit(exp, sink, &strict_code);
  } else if (exp.command == "certify-noncyclic") {
    code = run_certify_noncyclic(exp, sink, &strict_code);
  } else if (exp.command == "certify-nonsupercyclic") {
    code = run_certify_nonsupercyclic(exp, sink, &strict_code);
  } else if (exp.command == "liyorke") {
    code = run_liyorke(exp, sink, &strict_code);
  } else if (exp.command == "lemmas") {
    code = run_lemmas(exp, sink, &strict_code);
  } else if (exp.command == "eigen-search") {
    code = run_eigen_search(exp, sink, &strict_code);
  } else if (exp.command == "demo-gap") {
    code = run_demo_gap(exp, sink, &strict_code);
  } else {
    config_error("unknown command '" + exp.command + "'");
  }
  if (strict) return std::max(code, strict_code);
  if (strict_code != kExitOk) {
    std::cout << "  note: exit " << strict_code << " under --strict\n";
  }
  return code;
}

int run_all(const Json& config, const CliOverrides& cli) {
  std::vector<Json> entries;
  if (config.is_array()) {
    for (const Json& entry : config) entries.push_back(entry);
    if (entries.empty()) config_error("batch config array is empty");
  } else {
    entries.push_back(config);
  }

  int exit_code = kExitOk;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Experiment exp = resolve(entries[i], cli);
    std::string prefix =
        entries.size() > 1 ? std::to_string(i + 1) + "_" : std::string{};
    Sink sink(exp.out, prefix);
    try {
      exit_code = std::max(exit_code, run_experiment(exp, sink, cli.strict));
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::ConfigError:
        case ErrorCode::IoError:
          throw;  // always fatal, handled by main
        case ErrorCode::NotFound:
          std::cout << "  " << e.what() << "\n";
          if (cli.strict) exit_code = std::max(exit_code, kExitNotFound);
          break;
        default:
          // Library validation failures (trivial operator, dependent
          // generators, mismatched lift, ...) fail the certificate, not the
          // whole process.
          std::cout << "  validation failure: " << e.what() << "\n";
          if (cli.strict) exit_code = std::max(exit_code, kExitValidation);
          break;
      }
    }
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "holodyn: orbit traces and machine-checkable certificates for "
      "convolution-operator dynamics on entire functions"};

  CliOverrides cli;
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON experiment config (object, or array for a batch)");
  app.add_option("--command", cli.command,
                 "orbit | certify-noncyclic | certify-nonsupercyclic | liyorke "
                 "| lemmas | eigen-search | demo-gap");
  app.add_option("--operator", cli.op,
                 "operator spec: d1, 2*id+d1, translation:1[@cutoff], or JSON");
  app.add_option("--function", cli.function,
                 "function spec: gap:1, exp:1:10, z1^2, or JSON");
  app.add_option("--generators", cli.generators,
                 "semicolon-separated function specs (certify-nonsupercyclic)");
  app.add_option("--horizon", cli.horizon, "orbit horizon K");
  app.add_option("--radii", cli.radii, "comma-separated polydisc radii");
  app.add_option("--eps", cli.eps, "smallness threshold");
  app.add_option("--delta", cli.delta, "bigness threshold");
  app.add_option("--seed", cli.seed, "seed for the property suites");
  app.add_option("--cases", cli.cases, "cases per property suite");
  app.add_option("--count", cli.count, "scrambled family size (liyorke)");
  app.add_option("--out", cli.out, "output directory for JSON/CSV artifacts");
  app.add_flag("--strict", cli.strict,
               "exit 2 on validation failure, 3 on search NotFound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    Json config = Json::object();
    if (!config_path.empty()) {
      config = parse_json_text(read_text_file(config_path));
    } else if (!cli.command) {
      config_error("either --config or --command is required");
    }
    return run_all(config, cli);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::IoError)
               ? kExitConfig
               : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
