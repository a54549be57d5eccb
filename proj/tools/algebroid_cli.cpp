// Command-line access to the library: canonical JSON in, JSON reports out.
// Exit codes: 0 = computed and the property holds (or the computation is
// pure), 1 = computed and the property fails (witness included), 2 =
// malformed input, arity errors, or slices that are not closed.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "algebroid/cohomology.hpp"
#include "algebroid/errors.hpp"
#include "algebroid/gallery.hpp"
#include "algebroid/wire.hpp"

using namespace algebroid;

namespace {

struct Output {
  std::string path;  // empty = stdout
  bool pretty = false;
};

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw parse_error(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

// Renders nested reports as indented key/value lines; polynomial term arrays
// are shown in human form.
bool looks_like_poly(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!e.is_object() || !e.contains("e") || !e.contains("c")) return false;
  return true;
}

void pretty_lines(const Json& j, const std::string& prefix, std::ostream& out) {
  if (looks_like_poly(j)) {
    if (j.empty()) {
      out << prefix << "0\n";
      return;
    }
    int nvars = static_cast<int>(j[0]["e"].size());
    out << prefix << poly_from_json(j, nvars).pretty() << "\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                !value[0].is_number() && !looks_like_poly(value))) {
        out << prefix << key << ":\n";
        pretty_lines(value, prefix + "  ", out);
      } else if (looks_like_poly(value)) {
        out << prefix << key << ": ";
        pretty_lines(value, "", out);
      } else {
        out << prefix << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      out << prefix << "-\n";
      pretty_lines(item, prefix + "  ", out);
    }
  } else {
    out << prefix << j.dump() << "\n";
  }
}

void write_out(const Output& o, const Json& payload) {
  std::ostringstream body;
  if (o.pretty)
    pretty_lines(payload, "", body);
  else
    body << payload.dump(2) << "\n";
  if (o.path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(o.path);
    if (!f) throw error("cannot write " + o.path);
    f << body.str();
  }
}

int emit(const Output& o, const std::string& verb, const std::string& status,
         Json data, Json witness = Json()) {
  Json rep;
  rep["verb"] = verb;
  rep["status"] = status;
  rep["data"] = std::move(data);
  if (!witness.is_null()) rep["witness"] = std::move(witness);
  write_out(o, rep);
  return status == "ok" ? 0 : (status == "fail" ? 1 : 2);
}

struct AlgebroidSource {
  std::string example;
  std::string input;

  LieAlgebroid load() const {
    if (!example.empty() && !input.empty())
      throw parse_error("choose either --example or --input, not both");
    if (!example.empty()) return load_example(example);
    if (!input.empty()) return algebroid_from_json(read_json_file(input));
    throw parse_error("an algebroid is required (--example NAME or --input PATH)");
  }
};

void add_source(CLI::App* cmd, AlgebroidSource& src) {
  cmd->add_option("--example", src.example, "gallery algebroid name");
  cmd->add_option("--input", src.input, "algebroid JSON file");
}

Json witness_from_validation(const ValidationReport& rep) {
  Json w = Json::array();
  for (const auto& c : rep.checks)
    for (const auto& wit : c.witnesses) {
      Json e;
      e["axiom"] = c.axiom;
      Json idx = Json::array();
      for (int i : wit.indices) idx.push_back(i + 1);
      e["indices"] = std::move(idx);
      e["residual"] = poly_to_json(wit.residual);
      w.push_back(std::move(e));
    }
  return w;
}

// Every polynomial in a standalone payload must agree on the ring arity.
void scan_arity(const Json& j, int& nvars) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key == "e" && value.is_array()) {
        int len = static_cast<int>(value.size());
        if (nvars >= 0 && nvars != len)
          throw parse_error("mixed exponent-vector lengths in one payload");
        nvars = len;
      } else {
        scan_arity(value, nvars);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) scan_arity(v, nvars);
  }
}

// Cochains and jet sections canonicalize structurally, without an ambient
// algebroid: indices are checked for form, duplicates are merged, zero
// entries dropped, and entries sorted.
Json canonicalize_cochain(const Json& j) {
  int k = get_int(j, "k");
  if (k < 0) throw parse_error("cochain degree must be >= 0");
  int nvars = -1;
  scan_arity(j, nvars);
  if (nvars < 0) nvars = 0;
  bool jet_kind = j.contains("kind") && j["kind"] == "jet";

  auto collect = [&](const char* field, const char* slot_key, size_t idx_len) {
    std::map<std::pair<std::vector<int>, int>, Poly> acc;
    if (!j.contains(field)) return acc;
    if (!j[field].is_array())
      throw parse_error(std::string("\"") + field + "\" must be an array");
    for (const auto& e : j[field]) {
      if (!e.contains("idx") || !e["idx"].is_array() || e["idx"].size() != idx_len)
        throw parse_error("index tuple has wrong length");
      std::vector<int> idx;
      for (const auto& v : e["idx"]) {
        if (!v.is_number_integer())
          throw parse_error("index tuple entries must be integers");
        int i = v.get<int>();
        if (i < 1 || (!idx.empty() && i <= idx.back()))
          throw parse_error("index tuple must be strictly increasing and 1-based");
        idx.push_back(i);
      }
      int slot = get_int(e, slot_key);
      if (slot < 1) throw parse_error("component index must be 1-based");
      if (!e.contains("poly")) throw parse_error("entry needs \"poly\"");
      Poly p = poly_from_json(e["poly"], nvars);
      auto key = std::make_pair(idx, slot);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, p);
      else
        it->second += p;
    }
    return acc;
  };
  auto coeffs = collect("coeffs", "m", static_cast<size_t>(k));
  auto symbol = collect("symbol", "mu", static_cast<size_t>(std::max(k - 1, 0)));
  if (k == 0 && !symbol.empty())
    throw parse_error("degree-0 cochains carry no symbol");

  Json out;
  if (jet_kind) out["kind"] = "jet";
  out["k"] = k;
  auto emit = [](const std::map<std::pair<std::vector<int>, int>, Poly>& acc,
                 const char* slot_key) {
    Json arr = Json::array();
    for (const auto& [key, p] : acc) {
      if (p.is_zero()) continue;
      Json e;
      Json idx = Json::array();
      for (int i : key.first) idx.push_back(i);
      e["idx"] = std::move(idx);
      e[slot_key] = key.second;
      e["poly"] = poly_to_json(p);
      arr.push_back(std::move(e));
    }
    return arr;
  };
  out["coeffs"] = emit(coeffs, "m");
  out["symbol"] = emit(symbol, "mu");
  return out;
}

Json canonicalize_jet(const Json& j) {
  int nvars = -1;
  scan_arity(j, nvars);
  if (nvars < 0) nvars = 0;
  if (!j["u"].is_array()) throw parse_error("\"u\" must be an array of polynomials");
  Json out;
  Json u = Json::array();
  for (const auto& pj : j["u"]) u.push_back(poly_to_json(poly_from_json(pj, nvars)));
  out["u"] = std::move(u);
  std::map<std::pair<int, int>, Poly> acc;
  if (j.contains("theta")) {
    if (!j["theta"].is_array()) throw parse_error("\"theta\" must be an array");
    for (const auto& e : j["theta"]) {
      int k = get_int(e, "k"), mu = get_int(e, "mu");
      if (k < 1 || mu < 1) throw parse_error("theta indices must be 1-based");
      if (!e.contains("poly")) throw parse_error("theta entry needs \"poly\"");
      Poly p = poly_from_json(e["poly"], nvars);
      auto key = std::make_pair(k, mu);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, p);
      else
        it->second += p;
    }
  }
  Json theta = Json::array();
  for (const auto& [key, p] : acc) {
    if (p.is_zero()) continue;
    Json e;
    e["k"] = key.first;
    e["mu"] = key.second;
    e["poly"] = poly_to_json(p);
    theta.push_back(std::move(e));
  }
  out["theta"] = std::move(theta);
  return out;
}

// Detects the payload kind of a standalone file for `convert`.
Json canonicalize(const Json& j) {
  if (j.is_object() && j.contains("base_dim") && j.contains("rank"))
    return algebroid_to_json(algebroid_from_json(j));
  if (j.is_object() && j.contains("n") && j.contains("degree"))
    return multivector_to_json(multivector_from_json(j));
  if (j.is_object() && j.contains("k") && (j.contains("coeffs") || j.contains("symbol")))
    return canonicalize_cochain(j);
  if (j.is_object() && j.contains("u"))
    return canonicalize_jet(j);
  if (j.is_array()) {
    if (j.empty()) return Json::array();
    if (j[0].is_object())  // a bare polynomial
      return poly_to_json(poly_from_json(j, static_cast<int>(j[0]["e"].size())));
    throw parse_error("cannot canonicalize: unrecognized array payload");
  }
  throw parse_error(
      "cannot canonicalize: expected an algebroid, a cochain, a jet section, "
      "a multivector, or a polynomial");
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations with Lie algebroids given by polynomial structure data"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--output", out.path, "write the report to a file");
  app.add_flag("--pretty", out.pretty, "render tables instead of JSON");
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for slice computations");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check the algebroid axioms");
  AlgebroidSource vsrc;
  add_source(validate_cmd, vsrc);
  std::string vpos;
  validate_cmd->add_option("file", vpos, "algebroid JSON file");
  validate_cmd->callback([&]() {
    AlgebroidSource src = vsrc;
    if (!vpos.empty()) src.input = vpos;
    LieAlgebroid a = src.load();
    ValidationReport rep = a.validate();
    int code = emit(out, "validate", rep.ok ? "ok" : "fail",
                    validation_to_json(rep),
                    rep.ok ? Json() : witness_from_validation(rep));
    std::exit(code);
  });

  // bracket
  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two sections");
  AlgebroidSource bsrc;
  add_source(bracket_cmd, bsrc);
  std::string xpath, ypath;
  bracket_cmd->add_option("--x", xpath, "first section JSON file")->required();
  bracket_cmd->add_option("--y", ypath, "second section JSON file")->required();
  bracket_cmd->callback([&]() {
    LieAlgebroid a = bsrc.load();
    Section x = section_from_json(read_json_file(xpath), a);
    Section y = section_from_json(read_json_file(ypath), a);
    Json data;
    data["result"] = section_to_json(a.bracket(x, y));
    std::exit(emit(out, "bracket", "ok", std::move(data)));
  });

  // cohomology
  auto* coh_cmd = app.add_subcommand("cohomology", "graded cohomology dimensions");
  AlgebroidSource csrc;
  add_source(coh_cmd, csrc);
  int kmax = 2, slice_degree = 0;
  std::string slice_file;
  coh_cmd->add_option("--kmax", kmax, "highest cochain degree");
  coh_cmd->add_option("--slice-degree", slice_degree, "polynomial degree cap");
  coh_cmd->add_option("--slice", slice_file,
                      "slice JSON file {\"max_poly_degree\": d}");
  coh_cmd->callback([&]() {
    LieAlgebroid a = csrc.load();
    SliceSpec slice = slice_file.empty()
                          ? SliceSpec::uniform(slice_degree)
                          : slice_from_json(read_json_file(slice_file));
    slice_degree = slice.cap_for(0);
    auto rows = cohomology_dims(a, kmax, slice, jobs);
    Json data;
    data["algebroid"] = a.name();
    data["slice_degree"] = slice_degree;
    Json rj = Json::array();
    for (const auto& r : rows) {
      Json e;
      e["k"] = r.k;
      e["dim_c"] = r.dim_c;
      e["dim_z"] = r.dim_z;
      e["dim_b"] = r.dim_b;
      e["dim_h"] = r.dim_h;
      rj.push_back(std::move(e));
    }
    data["rows"] = std::move(rj);
    std::exit(emit(out, "cohomology", "ok", std::move(data)));
  });

  // check-cocycle
  auto* cc_cmd = app.add_subcommand("check-cocycle", "is delta(D) = 0?");
  AlgebroidSource ccsrc;
  add_source(cc_cmd, ccsrc);
  std::string cc_cochain;
  cc_cmd->add_option("--cochain", cc_cochain, "cochain JSON file")->required();
  cc_cmd->callback([&]() {
    LieAlgebroid a = ccsrc.load();
    MultiDerivation d = cochain_from_json(read_json_file(cc_cochain), a);
    MultiDerivation dd = delta(a, d);
    Json data;
    data["cocycle"] = dd.is_zero();
    if (dd.is_zero()) std::exit(emit(out, "check-cocycle", "ok", std::move(data)));
    std::exit(emit(out, "check-cocycle", "fail", std::move(data), cochain_to_json(dd)));
  });

  // find-primitive
  auto* fp_cmd = app.add_subcommand("find-primitive", "solve delta(T) = D in a slice");
  AlgebroidSource fpsrc;
  add_source(fp_cmd, fpsrc);
  std::string fp_cochain, fp_slice_file;
  int fp_slice = 0;
  fp_cmd->add_option("--cochain", fp_cochain, "cochain JSON file")->required();
  fp_cmd->add_option("--slice-degree", fp_slice, "polynomial degree cap");
  fp_cmd->add_option("--slice", fp_slice_file,
                     "slice JSON file {\"max_poly_degree\": d}");
  fp_cmd->callback([&]() {
    LieAlgebroid a = fpsrc.load();
    MultiDerivation d = cochain_from_json(read_json_file(fp_cochain), a);
    SliceSpec slice = fp_slice_file.empty()
                          ? SliceSpec::uniform(fp_slice)
                          : slice_from_json(read_json_file(fp_slice_file));
    auto prim = coboundary_check(a, d, slice, jobs);
    Json data;
    data["exact_in_slice"] = prim.has_value();
    if (prim) {
      data["primitive"] = cochain_to_json(*prim);
      std::exit(emit(out, "find-primitive", "ok", std::move(data)));
    }
    std::exit(emit(out, "find-primitive", "fail", std::move(data),
                   Json("not exact within slice")));
  });

  // deform
  auto* def_cmd = app.add_subcommand("deform", "first-order deformation family");
  AlgebroidSource dsrc;
  add_source(def_cmd, dsrc);
  std::string def_cochain;
  def_cmd->add_option("--cochain", def_cochain, "degree-2 cochain JSON file")->required();
  def_cmd->callback([&]() {
    LieAlgebroid a = dsrc.load();
    MultiDerivation d = cochain_from_json(read_json_file(def_cochain), a);
    DeformedFamily f = deform(a, d);
    Json data;
    data["family"] = algebroid_to_json(f.algebroid);
    std::exit(emit(out, "deform", "ok", std::move(data)));
  });

  // family-check
  auto* fam_cmd = app.add_subcommand("family-check", "axioms of a t-family, by t power");
  std::string fam_input;
  fam_cmd->add_option("--input", fam_input, "t-extended algebroid JSON file")->required();
  fam_cmd->callback([&]() {
    LieAlgebroid a = algebroid_from_json(read_json_file(fam_input));
    if (!a.has_param())
      throw parse_error("family-check expects \"t_extended\": true");
    FamilyReport rep = is_lie_family(DeformedFamily{a});
    Json data = family_report_to_json(rep);
    std::exit(emit(out, "family-check", rep.lie_for_all_t ? "ok" : "fail",
                   std::move(data)));
  });

  // nijenhuis
  auto* nij_cmd = app.add_subcommand("nijenhuis", "torsion and deformation triviality");
  AlgebroidSource nsrc;
  add_source(nij_cmd, nsrc);
  std::string nmat;
  nij_cmd->add_option("--matrix", nmat, "endomorphism JSON file")->required();
  nij_cmd->callback([&]() {
    LieAlgebroid a = nsrc.load();
    auto n = endomorphism_from_json(read_json_file(nmat), a);
    TrivialityReport rep = triviality_check(a, n);
    Json data;
    data["torsion_zero"] = rep.torsion_zero;
    data["identity_holds"] = rep.identity_holds;
    data["cochain"] = cochain_to_json(nijenhuis_cochain(a, n));
    bool ok = rep.torsion_zero && rep.identity_holds;
    Json w;
    if (!ok) {
      w = Json::array();
      for (const auto& wit : rep.witnesses) {
        Json e;
        e["kind"] = wit.axiom;
        Json idx = Json::array();
        for (int i : wit.indices) idx.push_back(i + 1);
        e["indices"] = std::move(idx);
        e["residual"] = poly_to_json(wit.residual);
        w.push_back(std::move(e));
      }
    }
    std::exit(emit(out, "nijenhuis", ok ? "ok" : "fail", std::move(data), std::move(w)));
  });

  // mc-check
  auto* mc_cmd = app.add_subcommand("mc-check", "Maurer-Cartan equation for a 2-cochain");
  AlgebroidSource mcsrc;
  add_source(mc_cmd, mcsrc);
  std::string mc_cochain;
  mc_cmd->add_option("--cochain", mc_cochain, "degree-2 cochain JSON file")->required();
  mc_cmd->callback([&]() {
    LieAlgebroid a = mcsrc.load();
    MultiDerivation d = cochain_from_json(read_json_file(mc_cochain), a);
    McReport rep = mc_check(a, to_jet_cochain(d));
    std::exit(emit(out, "mc-check", rep.mc_holds ? "ok" : "fail",
                   mc_report_to_json(rep)));
  });

  // schouten
  auto* sch_cmd = app.add_subcommand("schouten", "Schouten bracket of multivectors");
  std::string ppath, qpath;
  sch_cmd->add_option("--p", ppath, "multivector JSON file")->required();
  sch_cmd->add_option("--q", qpath, "multivector JSON file")->required();
  sch_cmd->callback([&]() {
    Multivector p = multivector_from_json(read_json_file(ppath));
    Multivector q = multivector_from_json(read_json_file(qpath));
    Multivector r = schouten(p, q);
    Json data;
    data["result"] = multivector_to_json(r);
    data["zero"] = r.is_zero();
    std::exit(emit(out, "schouten", "ok", std::move(data)));
  });

  // jet-eval
  auto* je_cmd = app.add_subcommand("jet-eval", "evaluate a jet cochain on jet sections");
  AlgebroidSource jesrc;
  add_source(je_cmd, jesrc);
  std::string je_cochain, je_jets;
  je_cmd->add_option("--cochain", je_cochain, "cochain JSON file")->required();
  je_cmd->add_option("--jets", je_jets, "JSON array of jet sections")->required();
  je_cmd->callback([&]() {
    LieAlgebroid a = jesrc.load();
    JetCochain c = to_jet_cochain(cochain_from_json(read_json_file(je_cochain), a));
    Json jets = read_json_file(je_jets);
    if (!jets.is_array()) throw parse_error("--jets must hold a JSON array");
    std::vector<JetSection> args;
    for (const auto& jj : jets) args.push_back(jet_from_json(jj, a));
    Json data;
    data["result"] = section_to_json(jet_evaluate(a, c, args));
    if (a.rank() == 1) data["rank1_extension"] = true;
    std::exit(emit(out, "jet-eval", "ok", std::move(data)));
  });

  // example
  auto* ex_cmd = app.add_subcommand("example", "gallery access");
  auto* ex_list = ex_cmd->add_subcommand("list", "list example names");
  ex_list->callback([&]() {
    Json data;
    Json names = Json::array();
    for (const auto& n : list_examples()) names.push_back(n);
    data["examples"] = std::move(names);
    std::exit(emit(out, "example", "ok", std::move(data)));
  });
  auto* ex_show = ex_cmd->add_subcommand("show", "canonical form of an example");
  std::string show_name;
  ex_show->add_option("name", show_name)->required();
  ex_show->callback([&]() {
    const ExampleEntry& e = find_example(show_name);
    Json data;
    data["algebroid"] = algebroid_to_json(e.make());
    Json exps = Json::array();
    for (const auto& ex : e.expectations) {
      Json ej;
      ej["name"] = ex.name;
      ej["provenance"] = ex.provenance;
      exps.push_back(std::move(ej));
    }
    data["expectations"] = std::move(exps);
    std::exit(emit(out, "example", "ok", std::move(data)));
  });
  auto* ex_run = ex_cmd->add_subcommand("run", "run the expectations of an example");
  std::string run_name;
  ex_run->add_option("name", run_name)->required();
  ex_run->callback([&]() {
    ExampleReport rep = run_expectations(run_name);
    std::exit(emit(out, "example", rep.all_pass ? "ok" : "fail",
                   example_report_to_json(rep)));
  });
  ex_cmd->require_subcommand(1);

  // convert
  auto* conv_cmd = app.add_subcommand("convert", "canonicalize a JSON payload");
  std::string conv_input, conv_pos;
  conv_cmd->add_option("--input", conv_input, "payload JSON file");
  conv_cmd->add_option("file", conv_pos, "payload JSON file");
  conv_cmd->callback([&]() {
    std::string path = !conv_input.empty() ? conv_input : conv_pos;
    if (path.empty()) throw parse_error("convert needs an input file");
    write_out(out, canonicalize(read_json_file(path)));
    std::exit(0);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error& e) {
    Json rep;
    rep["verb"] = "error";
    rep["status"] = "error";
    rep["message"] = e.what();
    std::cout << rep.dump(2) << "\n";
    return 2;
  } catch (const slice_error& e) {
    Json rep;
    rep["verb"] = "error";
    rep["status"] = "error";
    rep["message"] = e.what();
    std::cout << rep.dump(2) << "\n";
    return 2;
  } catch (const error& e) {
    Json rep;
    rep["verb"] = "error";
    rep["status"] = "error";
    rep["message"] = e.what();
    std::cout << rep.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
