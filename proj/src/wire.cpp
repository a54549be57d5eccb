#include "algebroid/wire.hpp"

#include "algebroid/errors.hpp"

namespace algebroid {

namespace {

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw parse_error(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

std::vector<int> get_index_tuple(const Json& j, size_t expect, int bound,
                                 bool strict_increasing) {
  if (!j.is_array() || j.size() != expect)
    throw parse_error("index tuple has wrong length");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw parse_error("index tuple entries must be integers");
    int i = v.get<int>() - 1;  // wire is 1-based
    if (i < 0 || i >= bound) throw parse_error("index out of range");
    if (strict_increasing && !out.empty() && i <= out.back())
      throw parse_error("index tuple must be strictly increasing");
    out.push_back(i);
  }
  return out;
}

}  // namespace

Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  const auto& m = p.terms();
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    Json term;
    term["e"] = it->first.e;
    term["c"] = it->second.to_string();
    terms.push_back(std::move(term));
  }
  return terms;
}

Poly poly_from_json(const Json& j, int nvars) {
  if (!j.is_array()) throw parse_error("polynomial must be an array of terms");
  Poly p = Poly::zero(nvars);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("e") || !term.contains("c"))
      throw parse_error("polynomial term needs \"e\" and \"c\"");
    const auto& ej = term["e"];
    if (!ej.is_array() || static_cast<int>(ej.size()) != nvars)
      throw parse_error("exponent vector has wrong length (expected " +
                        std::to_string(nvars) + " variables)");
    Monomial m{std::vector<int>()};
    for (const auto& e : ej) {
      if (!e.is_number_integer() || e.get<int>() < 0)
        throw parse_error("exponents must be non-negative integers");
      m.e.push_back(e.get<int>());
    }
    if (!term["c"].is_string()) throw parse_error("coefficient must be a string");
    Rational c = Rational::from_string(term["c"].get<std::string>());
    if (c.is_zero()) throw parse_error("zero coefficients must be omitted");
    p += Poly::term(nvars, m, c);
  }
  return p;
}

Json section_to_json(const Section& s) {
  Json out = Json::array();
  for (const auto& p : s.comp) out.push_back(poly_to_json(p));
  return out;
}

Section section_from_json(const Json& j, const LieAlgebroid& a) {
  if (!j.is_array() || static_cast<int>(j.size()) != a.rank())
    throw parse_error("section must be an array of rank polynomials");
  Section s;
  for (const auto& pj : j) s.comp.push_back(poly_from_json(pj, a.nvars()));
  return s;
}

Json algebroid_to_json(const LieAlgebroid& a) {
  Json out;
  out["name"] = a.name();
  out["base_dim"] = a.base_dim();
  out["rank"] = a.rank();
  if (a.has_param()) out["t_extended"] = true;
  Json bracket = Json::array();
  for (int i = 0; i < a.rank(); ++i)
    for (int j = i + 1; j < a.rank(); ++j) {
      Json entries = Json::array();
      for (int k = 0; k < a.rank(); ++k) {
        const Poly& p = a.structure(i, j)[k];
        if (p.is_zero()) continue;
        Json e;
        e["k"] = k + 1;
        e["poly"] = poly_to_json(p);
        entries.push_back(std::move(e));
      }
      if (entries.empty()) continue;
      Json row;
      row["i"] = i + 1;
      row["j"] = j + 1;
      row["out"] = std::move(entries);
      bracket.push_back(std::move(row));
    }
  out["bracket"] = std::move(bracket);
  Json anchor = Json::array();
  for (int i = 0; i < a.rank(); ++i) {
    Json entries = Json::array();
    for (int mu = 0; mu < a.base_dim(); ++mu) {
      const Poly& p = a.anchor_row(i)[mu];
      if (p.is_zero()) continue;
      Json e;
      e["mu"] = mu + 1;
      e["poly"] = poly_to_json(p);
      entries.push_back(std::move(e));
    }
    if (entries.empty()) continue;
    Json row;
    row["i"] = i + 1;
    row["out"] = std::move(entries);
    anchor.push_back(std::move(row));
  }
  out["anchor"] = std::move(anchor);
  return out;
}

LieAlgebroid algebroid_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("algebroid must be a JSON object");
  int base_dim = get_int(j, "base_dim");
  int rank = get_int(j, "rank");
  if (base_dim < 0 || rank < 1) throw parse_error("bad base_dim/rank");
  bool has_param = j.contains("t_extended") && j["t_extended"].is_boolean() &&
                   j["t_extended"].get<bool>();
  int nvars = base_dim + (has_param ? 1 : 0);
  std::string name = j.contains("name") && j["name"].is_string()
                         ? j["name"].get<std::string>()
                         : "anonymous";

  std::vector<std::vector<std::vector<Poly>>> c(
      rank, std::vector<std::vector<Poly>>(rank, std::vector<Poly>(rank, Poly::zero(nvars))));
  if (j.contains("bracket")) {
    if (!j["bracket"].is_array()) throw parse_error("\"bracket\" must be an array");
    for (const auto& row : j["bracket"]) {
      int i = get_int(row, "i") - 1;
      int jj = get_int(row, "j") - 1;
      if (i < 0 || jj < 0 || i >= rank || jj >= rank)
        throw parse_error("bracket index out of range");
      if (i >= jj)
        throw parse_error("bracket entries must have i < j (skew completion is implied)");
      if (!row.contains("out") || !row["out"].is_array())
        throw parse_error("bracket entry needs \"out\"");
      for (const auto& e : row["out"]) {
        int k = get_int(e, "k") - 1;
        if (k < 0 || k >= rank) throw parse_error("bracket output index out of range");
        if (!e.contains("poly")) throw parse_error("bracket entry needs \"poly\"");
        Poly p = poly_from_json(e["poly"], nvars);
        c[i][jj][k] += p;
        c[jj][i][k] -= p;
      }
    }
  }
  std::vector<std::vector<Poly>> av(rank, std::vector<Poly>(base_dim, Poly::zero(nvars)));
  if (j.contains("anchor")) {
    if (!j["anchor"].is_array()) throw parse_error("\"anchor\" must be an array");
    for (const auto& row : j["anchor"]) {
      int i = get_int(row, "i") - 1;
      if (i < 0 || i >= rank) throw parse_error("anchor index out of range");
      if (!row.contains("out") || !row["out"].is_array())
        throw parse_error("anchor entry needs \"out\"");
      for (const auto& e : row["out"]) {
        int mu = get_int(e, "mu") - 1;
        if (mu < 0 || mu >= base_dim) throw parse_error("anchor coordinate out of range");
        if (!e.contains("poly")) throw parse_error("anchor entry needs \"poly\"");
        av[i][mu] += poly_from_json(e["poly"], nvars);
      }
    }
  }
  return LieAlgebroid(name, base_dim, rank, std::move(c), std::move(av), has_param);
}

Json cochain_to_json(const MultiDerivation& d, bool jet_kind) {
  Json out;
  if (jet_kind) out["kind"] = "jet";
  out["k"] = d.degree();
  Json coeffs = Json::array();
  for (const auto& [t, v] : d.coeffs())
    for (int m = 0; m < d.rank(); ++m) {
      if (v[m].is_zero()) continue;
      Json e;
      Json idx = Json::array();
      for (int i : t) idx.push_back(i + 1);
      e["idx"] = std::move(idx);
      e["m"] = m + 1;
      e["poly"] = poly_to_json(v[m]);
      coeffs.push_back(std::move(e));
    }
  out["coeffs"] = std::move(coeffs);
  Json symbol = Json::array();
  for (const auto& [t, v] : d.symbol())
    for (int mu = 0; mu < d.base_dim(); ++mu) {
      if (v[mu].is_zero()) continue;
      Json e;
      Json idx = Json::array();
      for (int i : t) idx.push_back(i + 1);
      e["idx"] = std::move(idx);
      e["mu"] = mu + 1;
      e["poly"] = poly_to_json(v[mu]);
      symbol.push_back(std::move(e));
    }
  out["symbol"] = std::move(symbol);
  return out;
}

MultiDerivation cochain_from_json(const Json& j, const LieAlgebroid& a) {
  if (!j.is_object()) throw parse_error("cochain must be a JSON object");
  int k = get_int(j, "k");
  if (k < 0) throw parse_error("cochain degree must be >= 0");
  MultiDerivation d = MultiDerivation::zero(a, k);
  if (j.contains("coeffs")) {
    if (!j["coeffs"].is_array()) throw parse_error("\"coeffs\" must be an array");
    for (const auto& e : j["coeffs"]) {
      if (!e.contains("idx")) throw parse_error("coefficient entry needs \"idx\"");
      auto t = get_index_tuple(e["idx"], k, a.rank(), true);
      int m = get_int(e, "m") - 1;
      if (m < 0 || m >= a.rank()) throw parse_error("component index out of range");
      if (!e.contains("poly")) throw parse_error("coefficient entry needs \"poly\"");
      d.set_coeff(t, m, d.coeff(t)[m] + poly_from_json(e["poly"], a.nvars()));
    }
  }
  if (j.contains("symbol")) {
    if (!j["symbol"].is_array()) throw parse_error("\"symbol\" must be an array");
    for (const auto& e : j["symbol"]) {
      if (k == 0) throw parse_error("degree-0 cochains carry no symbol");
      if (a.base_dim() == 0)
        throw parse_error("symbols require a positive-dimensional base");
      if (!e.contains("idx")) throw parse_error("symbol entry needs \"idx\"");
      auto t = get_index_tuple(e["idx"], k - 1, a.rank(), true);
      int mu = get_int(e, "mu") - 1;
      if (mu < 0 || mu >= a.base_dim()) throw parse_error("symbol coordinate out of range");
      if (!e.contains("poly")) throw parse_error("symbol entry needs \"poly\"");
      d.set_symbol(t, mu, d.symbol_at(t)[mu] + poly_from_json(e["poly"], a.nvars()));
    }
  }
  return d;
}

Json multivector_to_json(const Multivector& m) {
  Json out;
  out["n"] = m.dim();
  out["degree"] = m.degree();
  Json comps = Json::array();
  for (const auto& [idx, p] : m.components()) {
    Json e;
    Json ij = Json::array();
    for (int i : idx) ij.push_back(i + 1);
    e["idx"] = std::move(ij);
    e["poly"] = poly_to_json(p);
    comps.push_back(std::move(e));
  }
  out["components"] = std::move(comps);
  return out;
}

Multivector multivector_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("multivector must be a JSON object");
  int n = get_int(j, "n");
  int degree = get_int(j, "degree");
  if (n < 0 || degree < 0 || degree > n) throw parse_error("bad multivector shape");
  Multivector m(n, degree);
  if (j.contains("components")) {
    if (!j["components"].is_array())
      throw parse_error("\"components\" must be an array");
    for (const auto& e : j["components"]) {
      if (!e.contains("idx")) throw parse_error("component needs \"idx\"");
      auto idx = get_index_tuple(e["idx"], degree, n, true);
      if (!e.contains("poly")) throw parse_error("component needs \"poly\"");
      m.set_component(idx, m.component(idx) + poly_from_json(e["poly"], n));
    }
  }
  return m;
}

Json jet_to_json(const JetSection& m) {
  Json out;
  out["u"] = section_to_json(m.u);
  Json theta = Json::array();
  for (size_t k = 0; k < m.theta.size(); ++k)
    for (size_t mu = 0; mu < m.theta[k].size(); ++mu) {
      if (m.theta[k][mu].is_zero()) continue;
      Json e;
      e["k"] = static_cast<int>(k) + 1;
      e["mu"] = static_cast<int>(mu) + 1;
      e["poly"] = poly_to_json(m.theta[k][mu]);
      theta.push_back(std::move(e));
    }
  out["theta"] = std::move(theta);
  return out;
}

JetSection jet_from_json(const Json& j, const LieAlgebroid& a) {
  if (!j.is_object() || !j.contains("u"))
    throw parse_error("jet section needs \"u\"");
  JetSection m = jet_zero(a);
  m.u = section_from_json(j["u"], a);
  if (j.contains("theta")) {
    if (!j["theta"].is_array()) throw parse_error("\"theta\" must be an array");
    for (const auto& e : j["theta"]) {
      int k = get_int(e, "k") - 1;
      int mu = get_int(e, "mu") - 1;
      if (k < 0 || k >= a.rank() || mu < 0 || mu >= a.base_dim())
        throw parse_error("theta index out of range");
      if (!e.contains("poly")) throw parse_error("theta entry needs \"poly\"");
      m.theta[k][mu] += poly_from_json(e["poly"], a.nvars());
    }
  }
  return m;
}

Json endomorphism_to_json(const std::vector<std::vector<Poly>>& n) {
  Json out = Json::array();
  for (const auto& row : n) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(poly_to_json(p));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<Poly>> endomorphism_from_json(const Json& j,
                                                      const LieAlgebroid& a) {
  if (!j.is_array() || static_cast<int>(j.size()) != a.rank())
    throw parse_error("endomorphism must be a rank x rank array of polynomials");
  std::vector<std::vector<Poly>> n;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != a.rank())
      throw parse_error("endomorphism must be a rank x rank array of polynomials");
    n.emplace_back();
    for (const auto& pj : row) n.back().push_back(poly_from_json(pj, a.nvars()));
  }
  return n;
}

namespace {
Json indices_1based(const std::vector<int>& v) {
  Json out = Json::array();
  for (int i : v) out.push_back(i + 1);
  return out;
}
}  // namespace

Json validation_to_json(const ValidationReport& rep) {
  Json out;
  out["ok"] = rep.ok;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["axiom"] = c.axiom;
    cj["ok"] = c.ok;
    Json ws = Json::array();
    for (const auto& w : c.witnesses) {
      Json wj;
      wj["indices"] = indices_1based(w.indices);
      wj["residual"] = poly_to_json(w.residual);
      ws.push_back(std::move(wj));
    }
    cj["witnesses"] = std::move(ws);
    checks.push_back(std::move(cj));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json family_report_to_json(const FamilyReport& rep) {
  Json out;
  out["lie_for_all_t"] = rep.lie_for_all_t;
  out["linear_in_t"] = rep.linear_in_t;
  out["t0_ok"] = rep.t0_ok;
  out["t1_cocycle_ok"] = rep.t1_cocycle_ok;
  out["t2_jacobiator_ok"] = rep.t2_jacobiator_ok;
  out["t1_matches_first_order_equation"] = rep.t1_matches_eq111;
  if (rep.linear_in_t)
    out["t2_matches_jacobiator"] = rep.t2_matches_jacobiator;
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) {
    Json wj;
    wj["axiom"] = w.axiom;
    wj["t_power"] = w.t_power;
    wj["indices"] = indices_1based(w.indices);
    wj["residual"] = poly_to_json(w.residual);
    ws.push_back(std::move(wj));
  }
  out["witnesses"] = std::move(ws);
  return out;
}

Json mc_report_to_json(const McReport& rep) {
  Json out;
  out["mc_holds"] = rep.mc_holds;
  out["cocycle_ok"] = rep.cocycle_ok;
  out["quadratic_ok"] = rep.quadratic_ok;
  if (rep.rank1_extension) out["rank1_extension"] = true;
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) {
    Json wj;
    wj["kind"] = w.kind;
    wj["indices"] = indices_1based(w.indices);
    wj["residual"] = poly_to_json(w.residual);
    ws.push_back(std::move(wj));
  }
  out["witnesses"] = std::move(ws);
  return out;
}

Json example_report_to_json(const ExampleReport& rep) {
  Json out;
  out["name"] = rep.name;
  out["all_pass"] = rep.all_pass;
  Json rs = Json::array();
  for (const auto& r : rep.results) {
    Json rj;
    rj["name"] = r.name;
    rj["provenance"] = r.provenance;
    rj["pass"] = r.pass;
    rj["detail"] = r.detail;
    rs.push_back(std::move(rj));
  }
  out["results"] = std::move(rs);
  return out;
}

SliceSpec slice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("max_poly_degree"))
    throw parse_error("slice needs \"max_poly_degree\"");
  int d = get_int(j, "max_poly_degree");
  if (d < 0) throw parse_error("slice degree must be >= 0");
  return SliceSpec::uniform(d);
}

}  // namespace algebroid
