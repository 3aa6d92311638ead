// Copyright (c) the holodyn developers
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "holodyn/cylinder.hpp"
#include "holodyn/dynamics.hpp"
#include "holodyn/errors.hpp"
#include "holodyn/io.hpp"
#include "holodyn/presets.hpp"
#include "holodyn/property_suites.hpp"
#include "holodyn/series.hpp"
#include "holodyn/symbol.hpp"

namespace py = pybind11;

namespace {

using namespace holodyn;

/// Certificates and traces cross into python as plain dicts with exactly the
/// schema the CLI emits; the JSON text is the single source of truth.
py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<Radius> to_radii(const std::vector<double>& values) {
  std::vector<Radius> radii;
  radii.reserve(values.size());
  for (double v : values) radii.emplace_back(v);
  return radii;
}

MultiIndex to_multi_index(const py::dict& d) {
  std::vector<MultiIndex::Entry> pairs;
  for (auto item : d) {
    pairs.emplace_back(py::cast<int>(item.first), py::cast<int>(item.second));
  }
  return MultiIndex::from_pairs(pairs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Convolution-operator dynamics on entire functions of infinitely many "
      "variables: truncated series calculus, orbit traces, confinement and "
      "non-cyclicity certificates, semi-irregular gap witnesses, Li-Yorke "
      "machinery, and the spectral dichotomy search.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "HolodynError");

  py::class_<Series>(m, "Series",
                     "Truncated sparse power series with optional tail bound.")
      .def_static("parse", &parse_function_spec, py::arg("spec"),
                  "Parses a function spec: 'gap:1', 'exp:1:10', 'z1^2*z2', "
                  "'2*z1+1', 'zero', 'one', or inline JSON.")
      .def_static(
          "from_json",
          [](const py::object& obj) {
            std::string text =
                py::cast<std::string>(py::module_::import("json").attr("dumps")(obj));
            return series_from_json(parse_json_text(text));
          },
          py::arg("obj"), "Rebuilds a series from its dict form.")
      .def_static("zero", &Series::zero, py::arg("truncation_degree") = 0)
      .def_static("constant", &Series::constant, py::arg("c"))
      .def_static("variable", &Series::variable, py::arg("j"))
      .def_static(
          "monomial",
          [](const py::dict& alpha, Complex c) {
            return Series::monomial(to_multi_index(alpha), c);
          },
          py::arg("alpha"), py::arg("c"),
          "Monomial c*z^alpha with alpha a dict {variable: exponent}.")
      .def_property_readonly("truncation_degree", &Series::truncation_degree)
      .def_property_readonly("term_count", &Series::term_count)
      .def_property_readonly("essential_dimension",
                             [](const Series& f) { return essential_dimension(f); })
      .def(
          "coefficient",
          [](const Series& f, const py::dict& alpha) {
            return f.coefficient(to_multi_index(alpha));
          },
          py::arg("alpha"))
      .def(
          "evaluate",
          [](const Series& f, const std::vector<Complex>& point) {
            return evaluate(f, point);
          },
          py::arg("point"), "Evaluates the stored polynomial part at the point.")
      .def(
          "majorant",
          [](const Series& f, double r, bool include_tail) {
            return majorant_seminorm(f, Radius(r), include_tail);
          },
          py::arg("r"), py::arg("include_tail") = false,
          "p_r(f): sum of |coefficient| * r^degree over the stored terms.")
      .def(
          "grid_sup",
          [](const Series& f, double r, int samples_per_axis) {
            return grid_sup_estimate(f, Radius(r), samples_per_axis);
          },
          py::arg("r"), py::arg("samples_per_axis") = 8,
          "Max |f| over a deterministic polytorus grid; a lower bound for the "
          "polydisc sup.")
      .def(
          "partial_derivative",
          [](const Series& f, int variable) { return partial_derivative(f, variable); },
          py::arg("variable"))
      .def(
          "restrict_to",
          [](const Series& f, int n) { return restrict_to(f, CylinderIndex(n)); },
          py::arg("n"), "Sets z_{n+1}, z_{n+2}, ... to zero.")
      .def(
          "embed", [](const Series& f, int n) { return embed(f, CylinderIndex(n)); },
          py::arg("n"))
      .def("to_dict", [](const Series& f) { return to_py(series_to_json(f)); })
      .def("__add__", [](const Series& f, const Series& g) { return f + g; })
      .def("__sub__", [](const Series& f, const Series& g) { return f - g; })
      .def("__mul__", [](const Series& f, const Series& g) { return f * g; })
      .def("__rmul__", [](const Series& f, Complex a) { return a * f; })
      .def("__eq__", [](const Series& f, const Series& g) { return f == g; })
      .def("__repr__", [](const Series& f) {
        return "Series(" + series_to_json(f).dump() + ")";
      });

  py::class_<ConvolutionSymbol>(m, "Operator",
                                "Finite-order convolution operator sum_beta "
                                "c_beta d^beta.")
      .def_static("parse", &parse_operator_spec, py::arg("spec"),
                  py::arg("translation_cutoff") = 60,
                  "Parses an operator spec: 'd1', '2*id+d1', 'd1^2*d2', "
                  "'translation:1[,xi2,...][@cutoff]', or inline JSON.")
      .def_static("identity", &ConvolutionSymbol::identity,
                  py::arg("scale") = Complex(1.0, 0.0))
      .def_static("derivative", &ConvolutionSymbol::derivative, py::arg("variable"))
      .def_property_readonly("label", &ConvolutionSymbol::label)
      .def_property_readonly("order", &ConvolutionSymbol::order)
      .def_property_readonly("variable_span", &ConvolutionSymbol::variable_span)
      .def_property_readonly("is_trivial", &ConvolutionSymbol::is_trivial)
      .def(
          "apply",
          [](const ConvolutionSymbol& L, const Series& f) { return apply(L, f); },
          py::arg("f"))
      .def(
          "iterate",
          [](const ConvolutionSymbol& L, const Series& f, int k) {
            return iterate_apply(L, f, k);
          },
          py::arg("f"), py::arg("k"), "L^k f.")
      .def(
          "associated", [](const ConvolutionSymbol& L,
                           int n) { return associated_operator(L, CylinderIndex(n)); },
          py::arg("n"),
          "The operator L_n induced on functions of z_1..z_n alone.")
      .def(
          "symbol_value",
          [](const ConvolutionSymbol& L, const std::vector<Complex>& lambda) {
            return symbol_value(L, lambda);
          },
          py::arg("lam"), "phi(lambda) = sum_beta c_beta lambda^beta.")
      .def(
          "eigen_consistency_bound",
          [](const ConvolutionSymbol& L, const std::vector<Complex>& lambda,
             int truncation_degree, double r) {
            return eigen_consistency_bound(L, lambda, truncation_degree, Radius(r));
          },
          py::arg("lam"), py::arg("truncation_degree"), py::arg("r"),
          "Upper bound on p_r(L e_lambda - phi(lambda) e_lambda) at the given "
          "truncation degree.")
      .def("to_dict", [](const ConvolutionSymbol& L) { return to_py(symbol_to_json(L)); })
      .def("__eq__", [](const ConvolutionSymbol& a,
                        const ConvolutionSymbol& b) { return a == b; })
      .def("__repr__", [](const ConvolutionSymbol& L) {
        return "Operator(" + symbol_to_json(L).dump() + ")";
      });

  py::class_<SemiIrregularityWitness>(
      m, "Witness",
      "Semi-irregularity witness: big checkpoints with exact lower bounds on "
      "|(L^k f)(0)| and small checkpoints with closed-form upper bounds on "
      "p_r(L^k f).")
      .def_property_readonly(
          "operator_label",
          [](const SemiIrregularityWitness& w) { return w.operator_label; })
      .def_property_readonly("function",
                             [](const SemiIrregularityWitness& w) { return w.function; })
      .def_property_readonly(
          "big_ks",
          [](const SemiIrregularityWitness& w) {
            std::vector<int> ks;
            for (const auto& b : w.big_checkpoints) ks.push_back(b.k);
            return ks;
          })
      .def_property_readonly(
          "small_ks",
          [](const SemiIrregularityWitness& w) {
            std::vector<int> ks;
            for (const auto& s : w.small_checkpoints) ks.push_back(s.k);
            return ks;
          })
      .def("invariants_hold",
           [](const SemiIrregularityWitness& w) {
             std::string why;
             bool ok = witness_invariants_hold(w, &why);
             return py::make_tuple(ok, why);
           })
      .def("to_dict",
           [](const SemiIrregularityWitness& w) { return to_py(witness_to_json(w)); })
      .def("__repr__", [](const SemiIrregularityWitness& w) {
        return "Witness(" + witness_to_json(w).dump() + ")";
      });

  m.def("gap_series", &gap_series, py::arg("blocks"), py::arg("variable") = 1,
        "sum_m z_variable^m / m! over the block degrees m.");
  m.def("default_gap_blocks", &default_gap_blocks, py::arg("max_power") = 7);
  m.def("exp_function", &exp_function, py::arg("lam"), py::arg("truncation_degree"),
        "Truncated e_lambda = exp(sum lambda_j z_j) with an exact tail bound.");
  m.def(
      "translate",
      [](const Series& f, const std::vector<Complex>& xi) {
        return translate(f, TranslationVector{xi});
      },
      py::arg("f"), py::arg("xi"), "tau_xi f = f(. - xi), exact binomial expansion.");
  m.def(
      "translation_operator",
      [](const std::vector<Complex>& xi, int cutoff) {
        return translation_expansion(TranslationVector{xi}, cutoff);
      },
      py::arg("xi"), py::arg("cutoff"),
      "tau_xi as a truncated derivative expansion sum (-xi)^beta/beta! d^beta.");

  m.def(
      "orbit_trace",
      [](const ConvolutionSymbol& L, const Series& f, int horizon,
         const std::vector<double>& radii, int samples_per_axis) {
        return to_py(
            orbit_trace_to_json(orbit_trace(L, f, horizon, to_radii(radii), samples_per_axis)));
      },
      py::arg("op"), py::arg("f"), py::arg("horizon"),
      py::arg("radii") = std::vector<double>{1.0, 2.0}, py::arg("samples_per_axis") = 8,
      "Per-iterate record of L^k f: evaluation at 0, essential dimension, "
      "majorants and grid sups per radius.");
  m.def(
      "confinement_certificate",
      [](const ConvolutionSymbol& L, const Series& f, int horizon) {
        return to_py(confinement_to_json(confinement_certificate(L, f, horizon)));
      },
      py::arg("op"), py::arg("f"), py::arg("horizon"),
      "Essential dimension of every iterate up to the horizon, with the "
      "uniform symbol bound when the operator provides one.");
  m.def(
      "non_cyclicity_certificate",
      [](const ConvolutionSymbol& L, const Series& f, int horizon) {
        return to_py(non_cyclicity_to_json(non_cyclicity_certificate(L, f, horizon)));
      },
      py::arg("op"), py::arg("f"), py::arg("horizon"),
      "Coefficient functional that vanishes on the checked orbit of f but not "
      "on z_{n+1}: f cannot be cyclic.");
  m.def(
      "subspace_orbit_certificate",
      [](const ConvolutionSymbol& L, const std::vector<Series>& generators,
         int horizon) {
        return to_py(
            subspace_confinement_to_json(subspace_orbit_certificate(L, generators, horizon)));
      },
      py::arg("op"), py::arg("generators"), py::arg("horizon"),
      "Same mechanism for the orbit of span(generators).");

  m.def(
      "gap_witness",
      [](int variable, const std::vector<int>& blocks, const std::vector<double>& radii,
         double eps, double delta) {
        return semi_irregular_gap_witness(variable, blocks, to_radii(radii), eps, delta);
      },
      py::arg("variable") = 1, py::arg("blocks") = default_gap_blocks(7),
      py::arg("radii") = std::vector<double>{1.0, 2.0}, py::arg("eps") = 1e-6,
      py::arg("delta") = 0.9,
      "Semi-irregularity witness for the derivative operator on the gap "
      "series: |orbit(0)| = 1 at every block, closed-form small bounds at the "
      "checkpoints the eps filter keeps.");
  m.def(
      "lift_witness",
      [](const SemiIrregularityWitness& w, const ConvolutionSymbol& L, int n) {
        return lift_semi_irregular(w, L, CylinderIndex(n));
      },
      py::arg("witness"), py::arg("op"), py::arg("n"),
      "Transfers a cylinder-n witness to a full-space operator whose "
      "associated operator on cylinder n matches.");
  m.def(
      "li_yorke_pair",
      [](const SemiIrregularityWitness& base, Complex alpha, Complex lambda) {
        return to_py(li_yorke_pair_to_json(li_yorke_pair_certificate(base, alpha, lambda)));
      },
      py::arg("witness"), py::arg("alpha"), py::arg("lam"),
      "Proximal-not-asymptotic certificate for the pair (alpha f, lambda f).");
  m.def(
      "scrambled_family",
      [](const SemiIrregularityWitness& base, int count) {
        return to_py(scrambled_family_to_json(scrambled_family(base, count)));
      },
      py::arg("witness"), py::arg("count"),
      "count scalars, all count*(count-1)/2 pair certificates.");
  m.def(
      "proximal_asymptotic_check",
      [](const ConvolutionSymbol& L, const Series& x, const Series& y, int horizon,
         const std::vector<double>& radii, double eps, double delta) {
        return to_py(proximal_asymptotic_to_json(
            proximal_asymptotic_check(L, x, y, horizon, to_radii(radii), eps, delta)));
      },
      py::arg("op"), py::arg("x"), py::arg("y"), py::arg("horizon"),
      py::arg("radii") = std::vector<double>{1.0, 2.0}, py::arg("eps") = 1e-6,
      py::arg("delta") = 0.9,
      "Horizon-bounded reading of the orbit of x - y: proximal visits and the "
      "asymptotic-refutation checkpoint.");
  m.def(
      "semi_irregularity_detector",
      [](const ConvolutionSymbol& L, const Series& f, int horizon,
         const std::vector<double>& radii, double eps, double delta,
         int samples_per_axis) {
        return to_py(detector_verdict_to_json(semi_irregularity_detector(
            L, f, horizon, to_radii(radii), eps, delta, samples_per_axis)));
      },
      py::arg("op"), py::arg("f"), py::arg("horizon"),
      py::arg("radii") = std::vector<double>{1.0, 2.0}, py::arg("eps") = 1e-6,
      py::arg("delta") = 0.9, py::arg("samples_per_axis") = 8,
      "Empirical scan; a heuristic, never a disproof.");

  m.def(
      "find_dichotomy_points",
      [](const ConvolutionSymbol& L) { return to_py(dichotomy_to_json(find_dichotomy_points(L))); },
      py::arg("op"),
      "Deterministic search for |phi(lambda)| < 1 < |phi(mu)|, with the full "
      "per-ray log.");

  m.def(
      "run_suites",
      [](std::uint64_t seed, int cases) {
        SuiteOptions options;
        options.seed = seed;
        options.cases = cases;
        py::list out;
        for (const SuiteResult& r : run_all_suites(options)) {
          py::dict d;
          d["name"] = r.name;
          d["total"] = r.total;
          d["passed"] = r.passed;
          d["failures"] = r.failures;
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("seed") = 42, py::arg("cases") = 100,
      "Runs the seven seeded property suites; returns per-suite tallies.");
}
