#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sympspin/action_verify.hpp"
#include "sympspin/curvature.hpp"
#include "sympspin/errors.hpp"
#include "sympspin/sampling.hpp"
#include "sympspin/serialize.hpp"
#include "sympspin/spinor_form.hpp"
#include "sympspin/suite.hpp"

namespace py = pybind11;
using namespace sympspin;

// Values cross the boundary as JSON text in the CLI's serialization format; the Python
// package decodes them.

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Projector projector_from_name(const std::string& name) {
  for (Projector p : {Projector::P10, Projector::P11, Projector::P20, Projector::P21, Projector::P22})
    if (projector_name(p) == name) return p;
  throw InvalidArgument("unknown projector \"" + name + "\"");
}

std::string run(int l, int max_degree, int pad, int trials, std::uint64_t seed, std::vector<std::string> suites) {
  RunConfig c;
  c.l = l;
  c.max_degree = max_degree;
  c.pad = pad;
  c.trials = trials;
  c.seed = seed;
  c.suites = std::move(suites);
  SuiteReport report;
  {
    py::gil_scoped_release release;
    report = run_suite(c);
  }
  return report_to_json(report).dump();
}

}  // namespace

PYBIND11_MODULE(_sympspin, m) {
  m.doc() = "Exact symplectic spinor and curvature computations";

  // Later registrations are tried first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<SingularMatrix>(m, "SingularMatrix", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SymmetryViolation>(m, "SymmetryViolation", PyExc_ValueError);
  py::register_exception<DegreeOverflow>(m, "DegreeOverflow", PyExc_OverflowError);

  m.def("known_suites", &known_suites);
  m.def("run_suite", &run, py::arg("l") = 2, py::arg("max_degree") = 6, py::arg("pad") = 6, py::arg("trials") = 20,
        py::arg("seed") = 42, py::arg("suites") = std::vector<std::string>{"all"});
  m.def("replay", [](const std::string& document) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : replay(parse(document))) out.emplace_back(r.check, r.result.passed, r.result.detail);
    return out;
  });

  m.def("sample_rational_vector", [](std::size_t dim, std::uint64_t seed, std::int64_t bound) {
    std::vector<std::string> out;
    for (const auto& z : sample_rational_vector(dim, seed, bound)) out.push_back(z.to_string());
    return out;
  });
  m.def("symplectic_form", [](int l) {
    const SymplecticSpace s = standard_symplectic_form(l);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(s.dim()));
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < s.dim(); ++j) out[static_cast<std::size_t>(i)].push_back(static_cast<int>(s.omega_lower(i, j).get_num().get_si()));
    return out;
  });

  m.def("clifford_basis", [](int i, const std::string& spinor) {
    return to_json(clifford_basis(i, poly_spinor_from_json(parse(spinor)))).dump();
  });
  m.def("random_spinor", [](int l, int max_degree, int cap, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return to_json(random_spinor(l, max_degree, cap, rng)).dump();
  });
  m.def("random_form", [](int l, int degree, int max_spinor_degree, int cap, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return to_json(random_form(l, degree, max_spinor_degree, cap, rng)).dump();
  });
  m.def("op_X", [](const std::string& form) { return to_json(op_X(spinor_form_from_json(parse(form)))).dump(); });
  m.def("op_Y", [](const std::string& form) { return to_json(op_Y(spinor_form_from_json(parse(form)))).dump(); });
  m.def("project", [](const std::string& name, const std::string& form) {
    return to_json(project(projector_from_name(name), spinor_form_from_json(parse(form)))).dump();
  });

  m.def("curvature_space_dimension", [](int l) { return curvature_space(l).dimension(); });
  m.def("weyl_space_dimension", [](int l) { return weyl_space(l).dimension(); });
  m.def("random_curvature", [](int l, std::uint64_t seed) { return rank4_to_json(random_curvature(l, seed).tensor()).dump(); });
  m.def("check_symmetries", [](const std::string& tensor) {
    const SymmetryReport r = check_symmetries(rank4_from_json(parse(tensor)));
    return std::map<std::string, bool>{{"antisymmetry", r.antisymmetry.holds},
                                       {"bianchi", r.bianchi.holds},
                                       {"symmetry", r.symmetry.holds},
                                       {"extended_bianchi", r.extended_bianchi.holds}};
  });
  m.def("ricci_of", [](const std::string& tensor) { return rank2_to_json(ricci_of(rank4_from_json(parse(tensor))).tensor()).dump(); });
  m.def("weyl_of", [](const std::string& tensor) {
    return rank4_to_json(weyl_of(CurvatureTensor(rank4_from_json(parse(tensor)))).tensor()).dump();
  });
  m.def("sigma_tilde_of", [](const std::string& sigma) {
    return rank4_to_json(sigma_tilde_of(RicciTensor(rank2_from_json(parse(sigma)))).tensor()).dump();
  });
  m.def("curvature_action", [](const std::string& tensor, const std::string& spinor) {
    return to_json(spinor_curvature_action(rank4_from_json(parse(tensor)), poly_spinor_from_json(parse(spinor)))).dump();
  });
}
