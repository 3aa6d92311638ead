// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include "holodyn/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "holodyn/errors.hpp"

namespace holodyn {

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

Json multi_index_to_json(const MultiIndex& alpha) {
  Json j = Json::object();
  for (const auto& [var, exp] : alpha.entries()) {
    j[std::to_string(var)] = exp;
  }
  return j;
}

MultiIndex multi_index_from_json(const Json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::ConfigError, "multi-index must be a JSON object");
  }
  std::vector<MultiIndex::Entry> pairs;
  for (const auto& [key, value] : j.items()) {
    int var = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), var);
    if (ec != std::errc{} || ptr != key.data() + key.size()) {
      throw Error(ErrorCode::ConfigError, "bad variable key '" + key + "'");
    }
    if (!value.is_number_integer()) {
      throw Error(ErrorCode::ConfigError, "exponent for '" + key + "' must be an integer");
    }
    pairs.emplace_back(var, value.get<int>());
  }
  try {
    return MultiIndex::from_pairs(pairs);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
}

Json complex_to_json(Complex z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_object() || !j.contains("re")) {
    throw Error(ErrorCode::ConfigError, "complex value needs {\"re\", \"im\"}");
  }
  return Complex(j["re"].get<double>(), j.value("im", 0.0));
}

namespace {

Json terms_to_json(const Series::TermMap& terms) {
  Json list = Json::array();
  for (const auto& [alpha, c] : terms) {
    Json term;
    term["exp"] = multi_index_to_json(alpha);
    term["re"] = c.real();
    term["im"] = c.imag();
    list.push_back(std::move(term));
  }
  return list;
}

Series::TermMap terms_from_json(const Json& list) {
  if (!list.is_array()) {
    throw Error(ErrorCode::ConfigError, "term list must be a JSON array");
  }
  Series::TermMap terms;
  for (const Json& term : list) {
    if (!term.is_object() || !term.contains("exp")) {
      throw Error(ErrorCode::ConfigError, "each term needs an \"exp\" object");
    }
    MultiIndex alpha = multi_index_from_json(term["exp"]);
    Complex c(term.value("re", 0.0), term.value("im", 0.0));
    terms[alpha] += c;
  }
  return terms;
}

}  // namespace

Json series_to_json(const Series& f) {
  Json j;
  j["truncation_degree"] = f.truncation_degree();
  j["terms"] = terms_to_json(f.terms());
  return j;
}

Series series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) {
    throw Error(ErrorCode::ConfigError, "series needs {\"truncation_degree\", \"terms\"}");
  }
  Series::TermMap terms = terms_from_json(j["terms"]);
  int degree = j.value("truncation_degree", -1);
  if (degree < 0) {
    for (const auto& [alpha, c] : terms) degree = std::max(degree, alpha.degree());
    if (degree < 0) degree = 0;
  }
  try {
    return Series::from_terms(std::move(terms), degree);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
}

Json symbol_to_json(const ConvolutionSymbol& L) {
  Json j;
  j["label"] = L.label();
  j["symbol"] = terms_to_json(L.coefficients());
  return j;
}

ConvolutionSymbol symbol_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("symbol")) {
    throw Error(ErrorCode::ConfigError, "symbol needs {\"label\", \"symbol\"}");
  }
  return ConvolutionSymbol::from_coefficients(terms_from_json(j["symbol"]),
                                              j.value("label", ""));
}

Json orbit_trace_to_json(const OrbitTrace& trace) {
  Json j;
  j["kind"] = "orbit_trace";
  j["operator"] = trace.operator_label;
  j["radii"] = trace.radii;
  j["horizon"] = trace.horizon;
  j["samples_per_axis"] = trace.samples_per_axis;
  Json records = Json::array();
  for (const OrbitRecord& rec : trace.records) {
    Json r;
    r["k"] = rec.k;
    r["essential_dim"] = rec.essential_dim;
    r["eval_at_zero"] = complex_to_json(rec.eval_at_zero);
    r["majorants"] = rec.majorants;
    r["grid_sups"] = rec.grid_sups;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  return j;
}

Json confinement_to_json(const ConfinementCertificate& cert) {
  Json j;
  j["kind"] = "confinement";
  j["operator"] = cert.operator_label;
  j["symbol_operator"] = cert.symbol_operator;
  j["horizon"] = cert.horizon;
  j["uniform_bound"] = cert.uniform_bound;
  j["per_iterate_dim"] = cert.per_iterate_dim;
  j["per_horizon_bound"] = cert.per_horizon_bound;
  j["uniform"] = cert.uniform;
  return j;
}

Json non_cyclicity_to_json(const NonCyclicityCertificate& cert) {
  Json j;
  j["kind"] = "non_cyclicity";
  j["operator"] = cert.operator_label;
  j["n"] = cert.n;
  j["annihilator_index"] = multi_index_to_json(cert.annihilator_index);
  j["witness"] = series_to_json(cert.witness);
  j["horizon_checked"] = cert.horizon_checked;
  j["max_abs_functional_on_orbit"] = cert.max_abs_functional_on_orbit;
  j["functional_on_witness"] = complex_to_json(cert.functional_on_witness);
  return j;
}

Json subspace_confinement_to_json(const SubspaceConfinementCertificate& cert) {
  Json j;
  j["kind"] = "subspace_confinement";
  j["operator"] = cert.operator_label;
  j["generator_count"] = cert.generator_count;
  j["m"] = cert.m;
  j["annihilator_index"] = multi_index_to_json(cert.annihilator_index);
  j["witness"] = series_to_json(cert.witness);
  j["horizon_checked"] = cert.horizon_checked;
  j["max_abs_functional_on_orbit"] = cert.max_abs_functional_on_orbit;
  j["max_iterate_dimension"] = cert.max_iterate_dimension;
  j["justification"] = cert.justification;
  return j;
}

Json witness_to_json(const SemiIrregularityWitness& w) {
  Json j;
  j["kind"] = "semi_irregularity_witness";
  j["operator"] = symbol_to_json(w.op.with_label(w.operator_label));
  j["function"] = series_to_json(w.function);
  j["radii"] = w.radii;
  j["eps"] = w.eps;
  j["delta"] = w.delta;
  Json smalls = Json::array();
  for (const SmallCheckpoint& s : w.small_checkpoints) {
    smalls.push_back(Json{{"k", s.k}, {"upper_bounds", s.upper_bounds}});
  }
  j["small_checkpoints"] = std::move(smalls);
  Json bigs = Json::array();
  for (const BigCheckpoint& b : w.big_checkpoints) {
    bigs.push_back(Json{{"k", b.k}, {"lower_bound", b.lower_bound}});
  }
  j["big_checkpoints"] = std::move(bigs);
  return j;
}

SemiIrregularityWitness witness_from_json(const Json& j) {
  if (!j.is_object() || j.value("kind", "") != "semi_irregularity_witness") {
    throw Error(ErrorCode::ConfigError, "not a semi_irregularity_witness document");
  }
  SemiIrregularityWitness w;
  w.op = symbol_from_json(j.at("operator"));
  w.operator_label = w.op.label();
  w.function = series_from_json(j.at("function"));
  w.radii = j.at("radii").get<std::vector<double>>();
  w.eps = j.at("eps").get<double>();
  w.delta = j.at("delta").get<double>();
  for (const Json& s : j.at("small_checkpoints")) {
    w.small_checkpoints.push_back(SmallCheckpoint{
        s.at("k").get<int>(), s.at("upper_bounds").get<std::vector<double>>()});
  }
  for (const Json& b : j.at("big_checkpoints")) {
    w.big_checkpoints.push_back(
        BigCheckpoint{b.at("k").get<int>(), b.at("lower_bound").get<double>()});
  }
  return w;
}

Json li_yorke_pair_to_json(const LiYorkePairCertificate& cert) {
  Json j;
  j["kind"] = "li_yorke_pair";
  j["alpha"] = complex_to_json(cert.alpha);
  j["lambda"] = complex_to_json(cert.lambda);
  j["scale"] = cert.scale;
  j["base_function"] = series_to_json(cert.base_function);
  j["witness"] = witness_to_json(cert.witness);
  return j;
}

Json scrambled_family_to_json(const ScrambledFamily& family) {
  Json j;
  j["kind"] = "scrambled_family";
  j["scalars"] = family.scalars;
  Json pairs = Json::array();
  for (const LiYorkePairCertificate& cert : family.pairs) {
    pairs.push_back(li_yorke_pair_to_json(cert));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json proximal_asymptotic_to_json(const ProximalAsymptoticResult& result) {
  Json j;
  j["kind"] = "proximal_asymptotic";
  j["proximal_observed"] = result.proximal_observed;
  j["proximal_ks"] = result.proximal_ks;
  j["asymptotic_observed"] = result.asymptotic_observed;
  if (result.first_stable_k) {
    j["first_stable_k"] = *result.first_stable_k;
  } else {
    j["first_stable_k"] = nullptr;
  }
  j["asymptotic_refuted"] = result.asymptotic_refuted;
  if (result.refutation_k) {
    j["refutation_k"] = *result.refutation_k;
  } else {
    j["refutation_k"] = nullptr;
  }
  j["horizon"] = result.horizon;
  j["note"] = result.note;
  return j;
}

Json detector_verdict_to_json(const DetectorVerdict& verdict) {
  Json j;
  j["kind"] = "detector_verdict";
  j["observed"] = verdict.observed;
  j["small_ks"] = verdict.small_ks;
  j["big_ks"] = verdict.big_ks;
  j["diagnostics"] = verdict.diagnostics;
  return j;
}

Json dichotomy_to_json(const DichotomyResult& result) {
  Json j;
  j["kind"] = "dichotomy";
  j["found"] = result.found;
  Json small = Json::array(), big = Json::array();
  for (Complex z : result.lambda_small) small.push_back(complex_to_json(z));
  for (Complex z : result.lambda_big) big.push_back(complex_to_json(z));
  j["lambda_small"] = std::move(small);
  j["lambda_big"] = std::move(big);
  j["small_value"] = result.small_value;
  j["big_value"] = result.big_value;
  j["log"] = result.log;
  return j;
}

std::string trace_to_csv(const OrbitTrace& trace) {
  std::ostringstream os;
  os << "k,essential_dim,eval0_re,eval0_im";
  for (double r : trace.radii) {
    os << ",majorant_r" << format_double(r) << ",gridsup_r" << format_double(r);
  }
  os << "\n";
  for (const OrbitRecord& rec : trace.records) {
    os << rec.k << "," << rec.essential_dim << ","
       << format_double(rec.eval_at_zero.real()) << ","
       << format_double(rec.eval_at_zero.imag());
    for (std::size_t i = 0; i < trace.radii.size(); ++i) {
      os << "," << format_double(rec.majorants[i]) << ","
         << format_double(rec.grid_sups[i]);
    }
    os << "\n";
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot read " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path);
  }
  out << content;
  if (!out) {
    throw Error(ErrorCode::IoError, "short write to " + path);
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("JSON parse failure: ") + e.what());
  }
}

}  // namespace holodyn
