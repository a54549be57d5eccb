// Python module exposing the main operations through a JSON-string API;
// the package wrapper turns these into dict-in / dict-out functions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "algebroid/cohomology.hpp"
#include "algebroid/errors.hpp"
#include "algebroid/gallery.hpp"
#include "algebroid/wire.hpp"

namespace py = pybind11;
using namespace algebroid;

namespace {

Json parse(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const std::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

LieAlgebroid alg(const std::string& s) { return algebroid_from_json(parse(s)); }

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Lie algebroid computations (JSON-string surface)";

  // later registrations translate first, so the base class goes first
  py::register_exception<error>(m, "AlgebroidError", PyExc_RuntimeError);
  py::register_exception<slice_error>(m, "SliceError", PyExc_ValueError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  m.def("list_examples", []() { return list_examples(); });
  m.def("load_example", [](const std::string& name) {
    return dump(algebroid_to_json(load_example(name)));
  });
  m.def("run_example", [](const std::string& name) {
    return dump(example_report_to_json(run_expectations(name)));
  });

  m.def("validate", [](const std::string& a) {
    return dump(validation_to_json(alg(a).validate()));
  });

  m.def("bracket", [](const std::string& a, const std::string& x,
                      const std::string& y) {
    LieAlgebroid g = alg(a);
    return dump(section_to_json(
        g.bracket(section_from_json(parse(x), g), section_from_json(parse(y), g))));
  });

  m.def("anchor_apply", [](const std::string& a, const std::string& x) {
    LieAlgebroid g = alg(a);
    PolyVectorField v = g.anchor_apply(section_from_json(parse(x), g));
    Json out = Json::array();
    for (const auto& p : v.comp) out.push_back(poly_to_json(p));
    return dump(out);
  });

  m.def(
      "cohomology",
      [](const std::string& a, int kmax, int slice_degree, int jobs) {
        LieAlgebroid g = alg(a);
        Json rows = Json::array();
        for (const auto& r :
             cohomology_dims(g, kmax, SliceSpec::uniform(slice_degree), jobs)) {
          Json e;
          e["k"] = r.k;
          e["dim_c"] = r.dim_c;
          e["dim_z"] = r.dim_z;
          e["dim_b"] = r.dim_b;
          e["dim_h"] = r.dim_h;
          rows.push_back(std::move(e));
        }
        return dump(rows);
      },
      py::arg("algebroid"), py::arg("kmax"), py::arg("slice_degree") = 0,
      py::arg("jobs") = 1);

  m.def("delta", [](const std::string& a, const std::string& d) {
    LieAlgebroid g = alg(a);
    return dump(cochain_to_json(delta(g, cochain_from_json(parse(d), g))));
  });

  m.def("evaluate_cochain",
        [](const std::string& a, const std::string& d, const std::string& args) {
          LieAlgebroid g = alg(a);
          MultiDerivation md = cochain_from_json(parse(d), g);
          Json list = parse(args);
          std::vector<Section> xs;
          for (const auto& x : list) xs.push_back(section_from_json(x, g));
          return dump(section_to_json(evaluate(g, md, xs)));
        });

  m.def("check_cocycle", [](const std::string& a, const std::string& d) {
    LieAlgebroid g = alg(a);
    return cocycle_check(g, cochain_from_json(parse(d), g));
  });

  m.def(
      "find_primitive",
      [](const std::string& a, const std::string& d, int slice_degree, int jobs) {
        LieAlgebroid g = alg(a);
        auto prim = coboundary_check(g, cochain_from_json(parse(d), g),
                                     SliceSpec::uniform(slice_degree), jobs);
        Json out;
        out["exact_in_slice"] = prim.has_value();
        if (prim) out["primitive"] = cochain_to_json(*prim);
        return dump(out);
      },
      py::arg("algebroid"), py::arg("cochain"), py::arg("slice_degree") = 0,
      py::arg("jobs") = 1);

  m.def("deform", [](const std::string& a, const std::string& d) {
    LieAlgebroid g = alg(a);
    return dump(
        algebroid_to_json(deform(g, cochain_from_json(parse(d), g)).algebroid));
  });

  m.def("family_check", [](const std::string& family) {
    LieAlgebroid g = alg(family);
    if (!g.has_param()) throw parse_error("family must carry \"t_extended\": true");
    return dump(family_report_to_json(is_lie_family(DeformedFamily{g})));
  });

  m.def("family_cocycle", [](const std::string& family) {
    LieAlgebroid g = alg(family);
    if (!g.has_param()) throw parse_error("family must carry \"t_extended\": true");
    return dump(cochain_to_json(family_cocycle(DeformedFamily{g})));
  });

  m.def("mc_check", [](const std::string& a, const std::string& d) {
    LieAlgebroid g = alg(a);
    return dump(mc_report_to_json(
        mc_check(g, to_jet_cochain(cochain_from_json(parse(d), g)))));
  });

  m.def("nijenhuis", [](const std::string& a, const std::string& n) {
    LieAlgebroid g = alg(a);
    auto nm = endomorphism_from_json(parse(n), g);
    TrivialityReport rep = triviality_check(g, nm);
    Json out;
    out["torsion_zero"] = rep.torsion_zero;
    out["identity_holds"] = rep.identity_holds;
    out["cochain"] = cochain_to_json(nijenhuis_cochain(g, nm));
    return dump(out);
  });

  m.def("schouten", [](const std::string& p, const std::string& q) {
    return dump(multivector_to_json(
        schouten(multivector_from_json(parse(p)), multivector_from_json(parse(q)))));
  });

  m.def("cotangent_algebroid", [](const std::string& pi) {
    return dump(algebroid_to_json(cotangent_algebroid(multivector_from_json(parse(pi)))));
  });

  m.def("pi_rep", [](const std::string& a, const std::string& jet) {
    LieAlgebroid g = alg(a);
    return dump(cochain_to_json(pi_rep(g, jet_from_json(parse(jet), g))));
  });

  m.def("jet_bracket", [](const std::string& a, const std::string& m1,
                          const std::string& m2) {
    LieAlgebroid g = alg(a);
    return dump(jet_to_json(jet_bracket(g, jet_from_json(parse(m1), g),
                                        jet_from_json(parse(m2), g))));
  });

  m.def("jet_pairing", [](const std::string& a, const std::string& jet,
                          const std::string& op) {
    LieAlgebroid g = alg(a);
    return dump(section_to_json(jet_pairing(g, jet_from_json(parse(jet), g),
                                            cochain_from_json(parse(op), g))));
  });

  m.def("jet_lie_derivative", [](const std::string& a, const std::string& op,
                                 const std::string& jet) {
    LieAlgebroid g = alg(a);
    return dump(jet_to_json(jet_lie_derivative(
        g, cochain_from_json(parse(op), g), jet_from_json(parse(jet), g))));
  });

  m.def("d_jet", [](const std::string& a, const std::string& d) {
    LieAlgebroid g = alg(a);
    JetCochain c = to_jet_cochain(cochain_from_json(parse(d), g));
    return dump(cochain_to_json(d_jet(g, c).body, true));
  });

  m.def("jacobiator", [](const std::string& a, const std::string& d) {
    LieAlgebroid g = alg(a);
    Json out = Json::array();
    for (const auto& [t, v] : jacobiator(g, cochain_from_json(parse(d), g))) {
      Json e;
      Json idx = Json::array();
      for (int i : t) idx.push_back(i + 1);
      e["idx"] = std::move(idx);
      e["value"] = section_to_json(v);
      out.push_back(std::move(e));
    }
    return dump(out);
  });

  m.def("jet_eval", [](const std::string& a, const std::string& d,
                       const std::string& jets) {
    LieAlgebroid g = alg(a);
    JetCochain c = to_jet_cochain(cochain_from_json(parse(d), g));
    Json list = parse(jets);
    std::vector<JetSection> args;
    for (const auto& j : list) args.push_back(jet_from_json(j, g));
    return dump(section_to_json(jet_evaluate(g, c, args)));
  });

  m.def(
      "h0",
      [](const std::string& a, int slice_degree) {
        LieAlgebroid g = alg(a);
        auto r = h0(g, SliceSpec::uniform(slice_degree));
        Json out;
        out["dim"] = r.dim;
        Json basis = Json::array();
        for (const auto& s : r.basis) basis.push_back(section_to_json(s));
        out["basis"] = std::move(basis);
        return dump(out);
      },
      py::arg("algebroid"), py::arg("slice_degree") = 0);

  m.def(
      "h1",
      [](const std::string& a, int slice_degree, int jobs) {
        LieAlgebroid g = alg(a);
        auto r = h1(g, SliceSpec::uniform(slice_degree), jobs);
        Json out;
        out["der_dim"] = r.der_dim;
        out["inn_dim"] = r.inn_dim;
        out["h1_dim"] = r.h1_dim;
        out["anchor_identity_ok"] = r.anchor_identity_ok;
        return dump(out);
      },
      py::arg("algebroid"), py::arg("slice_degree") = 0, py::arg("jobs") = 1);
}
