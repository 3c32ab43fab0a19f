#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybx/affine.hpp"
#include "ybx/catalog.hpp"
#include "ybx/constructions.hpp"
#include "ybx/enumerate.hpp"
#include "ybx/error.hpp"
#include "ybx/integer_matrix.hpp"
#include "ybx/json_io.hpp"
#include "ybx/presentation.hpp"
#include "ybx/symmetric_engine.hpp"

namespace py = pybind11;
using namespace ybx;

namespace {

SolutionFilter parse_filter(const std::string& f) {
  if (f == "all") return SolutionFilter::all;
  if (f == "involutive") return SolutionFilter::involutive;
  if (f == "symmetric") return SolutionFilter::symmetric;
  throw py::value_error("filter must be all, involutive or symmetric");
}

PresentationKind parse_kind(const std::string& k) {
  if (k == "standard") return PresentationKind::standard;
  if (k == "cycle_form") return PresentationKind::cycle_form;
  if (k == "derived") return PresentationKind::derived;
  throw py::value_error("kind must be standard, cycle_form or derived");
}

py::dict report_dict(const SolutionReport& r) {
  py::dict d;
  d["is_bijective"] = r.is_bijective;
  d["is_non_degenerate"] = r.is_non_degenerate;
  if (r.ybe_checked) d["is_ybe"] = r.is_ybe;
  d["is_involutive"] = r.is_involutive;
  d["is_symmetric"] = r.is_symmetric;
  if (r.failure) {
    d["failed_condition"] = std::string(to_string(r.failure->condition));
    d["witness"] = r.failure->witness;
  }
  return d;
}

py::object big(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

Word as_word(const py::object& w, int n) {
  if (py::isinstance<py::str>(w)) return parse_word(w.cast<std::string>(), n);
  return w.cast<Word>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite set-theoretic solutions of the Yang-Baxter equation";

  // Messages start with the error kind, e.g. "not-symmetric: ...".
  py::register_exception<Error>(m, "YbxError", PyExc_ValueError);

  py::class_<FiniteSolution>(m, "Solution")
      .def(py::init(&FiniteSolution::from_rows), py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("n", &FiniteSolution::size)
      .def_property_readonly("alpha", &FiniteSolution::alpha_rows)
      .def_property_readonly("beta", &FiniteSolution::beta_rows)
      .def("__call__", &FiniteSolution::operator(), py::arg("x"), py::arg("y"))
      .def("to_json", [](const FiniteSolution& s) { return dump(to_json(s)); })
      .def_static("from_json", [](const std::string& t) { return solution_from_json(parse_json(t)); })
      .def("__eq__", [](const FiniteSolution& a, const FiniteSolution& b) { return a == b; })
      .def("__hash__", [](const FiniteSolution& s) { return std::hash<std::string>{}(dump(to_json(s))); })
      .def("__repr__", [](const FiniteSolution& s) { return "Solution(" + dump(to_json(s)) + ")"; });

  m.def("trivial_solution", &trivial_solution, py::arg("n"));
  m.def("validate", [](const FiniteSolution& s) { return report_dict(validate(s)); });
  m.def("check_ybe", [](const FiniteSolution& s, const std::string& method) {
    if (method != "braid" && method != "lemma") throw py::value_error("method must be braid or lemma");
    return report_dict(check_ybe(s, method == "lemma" ? YbeMethod::lemma : YbeMethod::braid));
  }, py::arg("s"), py::arg("method") = "braid");
  m.def("is_ybe_solution", &is_ybe_solution);
  m.def("is_symmetric_solution", &is_symmetric_solution);
  m.def("phi", &phi, py::arg("s"), py::arg("x"), py::arg("y"));
  m.def("psi", &psi, py::arg("s"), py::arg("x"), py::arg("y"));
  m.def("dual", &dual);
  m.def("derived", [](const FiniteSolution& s, const std::string& side) {
    if (side != "right" && side != "left") throw py::value_error("side must be right or left");
    return derived(s, side == "left" ? DerivedSide::left : DerivedSide::right);
  }, py::arg("s"), py::arg("side") = "right");
  m.def("canonical_form", &canonical_form);
  m.def("find_isomorphism", [](const FiniteSolution& a, const FiniteSolution& b) -> std::optional<std::vector<int>> {
    if (auto p = find_isomorphism(a, b)) return p->images();
    return std::nullopt;
  });
  m.def("enumerate_solutions", [](int n, const std::string& filter, int jobs) {
    py::gil_scoped_release release;
    return enumerate_solutions(n, {parse_filter(filter), EnumerationOptions{}.budget, jobs}).solutions;
  }, py::arg("n"), py::arg("filter") = "all", py::arg("jobs") = 1);

  py::class_<CycleSet>(m, "CycleSet")
      .def(py::init(&CycleSet::from_rows), py::arg("table"))
      .def_property_readonly("n", &CycleSet::size)
      .def_property_readonly("table", &CycleSet::rows)
      .def("__call__", &CycleSet::operator())
      .def("__eq__", [](const CycleSet& a, const CycleSet& b) { return a == b; });
  m.def("to_cycle_set", &to_cycle_set);
  m.def("from_cycle_set", &from_cycle_set);
  m.def("semidirect_solution", [](const CycleSet& x, const CycleSet& s, const std::vector<std::vector<int>>& pi) {
    return semidirect_solution(CycleAction{x, s, pi});
  }, py::arg("X"), py::arg("S"), py::arg("pi"));
  m.def("pi_check", [](const CycleSet& x, const CycleSet& s, const std::vector<std::vector<int>>& pi) {
    const auto r = check_pi_homomorphism(CycleAction{x, s, pi});
    py::dict d;
    d["extends"] = r.extends();
    d["rank_source"] = r.rank_source;
    d["rank_target"] = r.rank_target;
    return d;
  }, py::arg("X"), py::arg("S"), py::arg("pi"));

  m.def("structure_relators", [](const FiniteSolution& s, const std::string& kind) {
    return structure_presentation(s, parse_kind(kind)).relators;
  }, py::arg("s"), py::arg("kind") = "standard");
  m.def("abelianization", [](const FiniteSolution& s, const std::string& kind) {
    return abelianization(structure_presentation(s, parse_kind(kind))).to_string();
  }, py::arg("s"), py::arg("kind") = "standard");
  m.def("smith_normal_form", [](const std::vector<std::vector<long long>>& rows) {
    py::list out;
    for (const auto& d : smith_normal_form(IntegerMatrix::from_rows(rows))) out.append(big(d));
    return out;
  });

  py::class_<SymmetricEngine>(m, "SymmetricEngine")
      .def(py::init<FiniteSolution>(), py::arg("s"))
      .def_property_readonly("n", &SymmetricEngine::size)
      .def("lambda_of", [](const SymmetricEngine& e, const Vec& v) { return e.lambda_of(v).images(); })
      .def("cocycle_vector", [](const SymmetricEngine& e, const py::object& w) {
        const LatticeElement l = e.cocycle_vector(as_word(w, e.size()));
        return py::make_tuple(l.v, l.lam.images());
      })
      .def("equal_in_group", [](const SymmetricEngine& e, const py::object& a, const py::object& b) {
        return e.equal_in_group(as_word(a, e.size()), as_word(b, e.size()));
      })
      .def("extend", [](const SymmetricEngine& e, const Vec& v, const Vec& w) { return e.extend(v, w); });

  m.def("affine_to_solution", [](const std::string& t) { return affine_to_solution(affine_from_json(parse_json(t))); });
  m.def("f4_action_json", [] { return dump(to_json(f4_action())); });
  m.def("compatible_pair_count", [](int order) { return enumerate_compatible_pairs(cyclic_group(order)).size(); });

  m.def("classify", [](int n, const std::string& filter, int jobs) {
    py::gil_scoped_release release;
    return format_catalog(classify(n, parse_filter(filter), jobs));
  }, py::arg("n"), py::arg("filter") = "all", py::arg("jobs") = 1);
}
