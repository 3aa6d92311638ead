// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HOLODYN_IO_HPP_
#define HOLODYN_IO_HPP_

#include <string>

#include "json.hpp"

#include "holodyn/dynamics.hpp"
#include "holodyn/series.hpp"
#include "holodyn/symbol.hpp"

namespace holodyn {

/// Key order is part of every schema here, so the ordered variant is used
/// throughout (and doubles serialize via the shortest round-trip form, which
/// makes emitted files byte-stable).
using Json = nlohmann::ordered_json;

std::string format_double(double value);  // shortest round-trip decimal

Json multi_index_to_json(const MultiIndex& alpha);    // {"1": 2, "3": 1}
MultiIndex multi_index_from_json(const Json& j);

Json complex_to_json(Complex z);  // {"re": x, "im": y}
Complex complex_from_json(const Json& j);

/// {"truncation_degree": D, "terms": [{"exp": {...}, "re": x, "im": y}, ...]}
/// with terms in graded-lex order. Tail descriptors are in-memory metadata
/// only and do not persist.
Json series_to_json(const Series& f);
Series series_from_json(const Json& j);

/// {"label": ..., "symbol": [term, ...]} with the series term schema.
Json symbol_to_json(const ConvolutionSymbol& L);
ConvolutionSymbol symbol_from_json(const Json& j);

// Certificates and verdicts, each under a "kind" tag.
Json orbit_trace_to_json(const OrbitTrace& trace);
Json confinement_to_json(const ConfinementCertificate& cert);
Json non_cyclicity_to_json(const NonCyclicityCertificate& cert);
Json subspace_confinement_to_json(const SubspaceConfinementCertificate& cert);
Json witness_to_json(const SemiIrregularityWitness& w);
SemiIrregularityWitness witness_from_json(const Json& j);
Json li_yorke_pair_to_json(const LiYorkePairCertificate& cert);
Json scrambled_family_to_json(const ScrambledFamily& family);
Json proximal_asymptotic_to_json(const ProximalAsymptoticResult& result);
Json detector_verdict_to_json(const DetectorVerdict& verdict);
Json dichotomy_to_json(const DichotomyResult& result);

/// CSV per the orbit-trace schema: k, essential_dim, eval0_re, eval0_im, then
/// one majorant_r{r}, gridsup_r{r} column pair per radius.
std::string trace_to_csv(const OrbitTrace& trace);

/// File plumbing; failures raise IoError. Parsing failures raise ConfigError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json parse_json_text(const std::string& text);

}  // namespace holodyn

#endif  // HOLODYN_IO_HPP_
