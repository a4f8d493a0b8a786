#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dutchdraw/baseline.hpp"
#include "dutchdraw/combinatorics.hpp"
#include "dutchdraw/measures.hpp"
#include "dutchdraw/theorem.hpp"

namespace py = pybind11;
using namespace dutchdraw;

namespace {

py::object fraction(const Rational& r) {
  static py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(r.num_str() + "/" + r.den_str());
}

const Measure& require_measure(const std::string& name) {
  return MeasureRegistry::builtin().require(name);
}

py::dict baseline_py(std::size_t m, std::size_t positives,
                     const std::string& measure, const std::string& objective) {
  Objective obj = parse_objective(objective);
  BaselineResult r = dd_baseline(m, positives, require_measure(measure), obj);
  py::dict out;
  out["M"] = m;
  out["P"] = positives;
  out["measure"] = measure;
  out["objective"] = objective_name(obj);
  out["j_opt"] = r.j_opt;
  py::list theta;
  for (const auto& t : r.theta_opt) theta.append(fraction(t));
  out["theta_opt"] = theta;
  out["score"] = fraction(r.score);
  py::list sweep;
  for (const auto& s : r.sweep) sweep.append(fraction(s));
  out["sweep"] = sweep;
  out["c_undef"] = r.c_undef ? fraction(*r.c_undef) : py::object(py::none());
  out["c_undef_substituted"] = r.c_undef_substituted;
  return out;
}

py::dict verify_py(std::size_t m, std::size_t positives,
                   const std::string& measure, const std::string& objective,
                   std::uint64_t seed) {
  Objective obj = parse_objective(objective);
  TheoremReport r = verify_theorem(m, positives, require_measure(measure), obj, seed);
  py::dict out;
  out["M"] = m;
  out["P"] = positives;
  out["measure"] = measure;
  out["objective"] = objective_name(obj);
  out["dd_score"] = fraction(r.dd_score);
  out["best_ii_score"] = fraction(r.best_ii_score);
  out["witness"] = r.witness ? py::object(py::str(r.witness->to_string()))
                             : py::object(py::none());
  out["bound_holds"] = r.bound_holds;
  out["group_identity_holds"] = r.group_identity_holds;
  out["mixtures_within_bound"] = r.mixtures_within_bound;
  out["ok"] = r.ok();
  return out;
}

py::list measures_py() {
  py::list out;
  for (const auto& m : MeasureRegistry::builtin().all()) {
    py::dict d;
    d["name"] = m.name;
    d["formula"] = m.formula;
    d["domain"] = m.domain;
    d["decimal_is_signed_sqrt"] = m.decimal_is_signed_sqrt;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_dutchdraw, mod) {
  mod.doc() = "Exact Dutch Draw baselines for binary classification measures";

  mod.def("baseline", &baseline_py, py::arg("m"), py::arg("p"),
          py::arg("measure"), py::arg("objective") = "max",
          "Exact Dutch Draw baseline: extremal expected score, tie set, and "
          "the full sweep over group sizes, all as fractions.Fraction.");

  mod.def(
      "expected_group_score",
      [](std::size_t m, std::size_t p, std::size_t j, const std::string& measure,
         const std::string& objective) {
        return fraction(expected_group_score(m, p, j, require_measure(measure),
                                             parse_objective(objective)));
      },
      py::arg("m"), py::arg("p"), py::arg("j"), py::arg("measure"),
      py::arg("objective") = "max",
      "Exact expected score of the uniform draw with j positives.");

  mod.def(
      "hypergeom_pmf",
      [](std::size_t m, std::size_t p, std::size_t j, std::size_t tp) {
        return fraction(hypergeom_pmf({m, p, j}, tp));
      },
      py::arg("m"), py::arg("p"), py::arg("j"), py::arg("tp"),
      "P[TP = tp] for a uniform draw of j positives against P actual ones.");

  mod.def("verify_theorem", &verify_py, py::arg("m"), py::arg("p"),
          py::arg("measure"), py::arg("objective") = "max", py::arg("seed") = 0,
          "Brute-force optimality check over all deterministic predictions.");

  mod.def("measures", &measures_py, "The built-in measure registry.");

  mod.def(
      "dd_sample",
      [](std::size_t m, std::size_t j, std::uint64_t seed) {
        return dd_sample(m, j, seed).to_string();
      },
      py::arg("m"), py::arg("j"), py::arg("seed") = 0,
      "A uniformly random 0/1 string of length m with exactly j ones.");

  mod.def(
      "theta_to_j",
      [](std::size_t m, const std::string& theta) {
        return theta_to_j(m, Rational::parse(theta));
      },
      py::arg("m"), py::arg("theta"),
      "Nearest group size to m*theta (halves round away from zero).");
}
