#include "algebroid/multiderivation.hpp"

#include <algorithm>

#include "algebroid/errors.hpp"

namespace algebroid {

namespace {

bool all_zero(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

// Determinant of the small matrix M[s][t] = rows[s]->comp[tuple[t]]; this is
// the fully skew multilinear coefficient product over one stored tuple.
Poly arg_det(const std::vector<const Section*>& rows,
             const std::vector<int>& tuple, int nvars) {
  size_t k = rows.size();
  if (k == 0) return Poly::constant(nvars, Rational(1));
  // Laplace expansion along the first row.
  if (k == 1) return rows[0]->comp[tuple[0]];
  Poly det = Poly::zero(nvars);
  std::vector<const Section*> sub_rows(rows.begin() + 1, rows.end());
  for (size_t t = 0; t < k; ++t) {
    const Poly& head = rows[0]->comp[tuple[t]];
    if (head.is_zero()) continue;
    std::vector<int> sub_tuple;
    for (size_t u = 0; u < k; ++u)
      if (u != t) sub_tuple.push_back(tuple[u]);
    Poly minor = arg_det(sub_rows, sub_tuple, nvars);
    if (minor.is_zero()) continue;
    Poly term = head * minor;
    det += (t % 2 == 0) ? term : -term;
  }
  return det;
}

std::vector<const Section*> pointers(const std::vector<Section>& args) {
  std::vector<const Section*> p;
  p.reserve(args.size());
  for (const auto& s : args) p.push_back(&s);
  return p;
}

void increasing_tuples(int r, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      fn(t);
      return;
    }
    for (int v = start; v < r; ++v) {
      t[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

MultiDerivation::MultiDerivation(int degree, int rank, int base_dim, int nvars)
    : degree_(degree), rank_(rank), base_dim_(base_dim), nvars_(nvars) {
  if (degree < 0) throw shape_error("cochain degree must be >= 0");
}

MultiDerivation MultiDerivation::zero(const LieAlgebroid& a, int degree) {
  return MultiDerivation(degree, a.rank(), a.base_dim(), a.nvars());
}

MultiDerivation MultiDerivation::bracket_cochain(const LieAlgebroid& a) {
  MultiDerivation d = zero(a, 2);
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = i + 1; j < a.rank(); ++j)
      for (int k = 0; k < a.rank(); ++k)
        d.set_coeff({i, j}, k, a.structure(i, j)[k]);
    for (int mu = 0; mu < a.base_dim(); ++mu)
      d.set_symbol({i}, mu, a.anchor_row(i)[mu]);
  }
  return d;
}

MultiDerivation MultiDerivation::from_section(const LieAlgebroid& a,
                                              const Section& x) {
  MultiDerivation d = zero(a, 0);
  for (int m = 0; m < a.rank(); ++m) d.set_coeff({}, m, x.comp[m]);
  return d;
}

MultiDerivation MultiDerivation::from_endomorphism(
    const LieAlgebroid& a, const std::vector<std::vector<Poly>>& n) {
  if (static_cast<int>(n.size()) != a.rank())
    throw shape_error("endomorphism matrix must have rank columns");
  MultiDerivation d = zero(a, 1);
  for (int i = 0; i < a.rank(); ++i) {
    if (static_cast<int>(n[i].size()) != a.rank())
      throw shape_error("endomorphism matrix must be rank x rank");
    // n[i] holds the components of N(e_i)
    for (int m = 0; m < a.rank(); ++m) d.set_coeff({i}, m, n[i][m]);
  }
  return d;
}

void MultiDerivation::check_tuple(const std::vector<int>& tuple, size_t len) const {
  if (tuple.size() != len) throw shape_error("index tuple has wrong length");
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= rank_)
      throw shape_error("frame index out of range");
    if (i > 0 && tuple[i] <= tuple[i - 1])
      throw shape_error("index tuple must be strictly increasing");
  }
}

std::vector<Poly> MultiDerivation::coeff(const std::vector<int>& tuple) const {
  auto it = coeffs_.find(tuple);
  if (it != coeffs_.end()) return it->second;
  return std::vector<Poly>(rank_, Poly::zero(nvars_));
}

std::vector<Poly> MultiDerivation::symbol_at(const std::vector<int>& tuple) const {
  auto it = symbol_.find(tuple);
  if (it != symbol_.end()) return it->second;
  return std::vector<Poly>(base_dim_, Poly::zero(nvars_));
}

void MultiDerivation::set_coeff(const std::vector<int>& tuple, int m,
                                const Poly& p) {
  check_tuple(tuple, degree_);
  if (m < 0 || m >= rank_) throw shape_error("component index out of range");
  if (p.nvars() != nvars_) throw ring_mismatch_error("cochain polynomial arity");
  auto it = coeffs_.find(tuple);
  if (it == coeffs_.end()) {
    if (p.is_zero()) return;
    it = coeffs_.emplace(tuple, std::vector<Poly>(rank_, Poly::zero(nvars_))).first;
  }
  it->second[m] = p;
  if (all_zero(it->second)) coeffs_.erase(it);
}

void MultiDerivation::set_symbol(const std::vector<int>& tuple, int mu,
                                 const Poly& p) {
  if (degree_ == 0) throw shape_error("degree-0 cochains carry no symbol");
  check_tuple(tuple, degree_ - 1);
  if (mu < 0 || mu >= base_dim_) throw shape_error("symbol index out of range");
  if (p.nvars() != nvars_) throw ring_mismatch_error("cochain polynomial arity");
  auto it = symbol_.find(tuple);
  if (it == symbol_.end()) {
    if (p.is_zero()) return;
    it = symbol_.emplace(tuple, std::vector<Poly>(base_dim_, Poly::zero(nvars_))).first;
  }
  it->second[mu] = p;
  if (all_zero(it->second)) symbol_.erase(it);
}

Section MultiDerivation::as_section() const {
  if (degree_ != 0) throw shape_error("not a degree-0 cochain");
  return Section{coeff({})};
}

PolyVectorField MultiDerivation::symbol_field() const {
  if (degree_ != 1) throw shape_error("not a degree-1 cochain");
  return PolyVectorField{symbol_at({})};
}

bool MultiDerivation::operator==(const MultiDerivation& o) const {
  return degree_ == o.degree_ && rank_ == o.rank_ && coeffs_ == o.coeffs_ &&
         symbol_ == o.symbol_;
}

MultiDerivation MultiDerivation::operator-() const {
  MultiDerivation r(degree_, rank_, base_dim_, nvars_);
  for (const auto& [t, v] : coeffs_) {
    auto& slot = r.coeffs_[t];
    for (const auto& p : v) slot.push_back(-p);
  }
  for (const auto& [t, v] : symbol_) {
    auto& slot = r.symbol_[t];
    for (const auto& p : v) slot.push_back(-p);
  }
  return r;
}

MultiDerivation& MultiDerivation::operator+=(const MultiDerivation& o) {
  if (degree_ != o.degree_ || rank_ != o.rank_ || nvars_ != o.nvars_)
    throw shape_error("cochain shape mismatch");
  for (const auto& [t, v] : o.coeffs_)
    for (int m = 0; m < rank_; ++m)
      if (!v[m].is_zero()) set_coeff(t, m, coeff(t)[m] + v[m]);
  for (const auto& [t, v] : o.symbol_)
    for (int mu = 0; mu < base_dim_; ++mu)
      if (!v[mu].is_zero()) set_symbol(t, mu, symbol_at(t)[mu] + v[mu]);
  return *this;
}

MultiDerivation MultiDerivation::operator-(const MultiDerivation& o) const {
  MultiDerivation r = *this;
  r += -o;
  return r;
}

MultiDerivation MultiDerivation::scaled(const Rational& c) const {
  MultiDerivation r(degree_, rank_, base_dim_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [t, v] : coeffs_) {
    auto& slot = r.coeffs_[t];
    for (const auto& p : v) slot.push_back(p.scaled(c));
  }
  for (const auto& [t, v] : symbol_) {
    auto& slot = r.symbol_[t];
    for (const auto& p : v) slot.push_back(p.scaled(c));
  }
  return r;
}

TmCochain::TmCochain(int degree, int rank, int base_dim, int nvars)
    : degree_(degree), rank_(rank), base_dim_(base_dim), nvars_(nvars) {
  if (degree < 0) throw shape_error("cochain degree must be >= 0");
}

TmCochain TmCochain::zero(const LieAlgebroid& a, int degree) {
  return TmCochain(degree, a.rank(), a.base_dim(), a.nvars());
}

TmCochain TmCochain::symbol_of(const MultiDerivation& d) {
  if (d.degree() == 0) throw shape_error("degree-0 cochains carry no symbol");
  TmCochain s(d.degree() - 1, d.rank(), d.base_dim(), d.nvars());
  for (const auto& [t, v] : d.symbol())
    for (int mu = 0; mu < d.base_dim(); ++mu)
      if (!v[mu].is_zero()) s.set(t, mu, v[mu]);
  return s;
}

TmCochain TmCochain::anchor_compose(const LieAlgebroid& a,
                                    const MultiDerivation& d) {
  TmCochain s(d.degree(), d.rank(), d.base_dim(), d.nvars());
  auto fill = [&](const std::vector<int>& t) {
    std::vector<Poly> comps = d.coeff(t);
    PolyVectorField v = a.anchor_apply(Section{comps});
    for (int mu = 0; mu < a.base_dim(); ++mu)
      if (!v.comp[mu].is_zero()) s.set(t, mu, v.comp[mu]);
  };
  increasing_tuples(a.rank(), d.degree(), fill);
  return s;
}

std::vector<Poly> TmCochain::at(const std::vector<int>& tuple) const {
  auto it = comp_.find(tuple);
  if (it != comp_.end()) return it->second;
  return std::vector<Poly>(base_dim_, Poly::zero(nvars_));
}

void TmCochain::set(const std::vector<int>& tuple, int mu, const Poly& p) {
  if (static_cast<int>(tuple.size()) != degree_)
    throw shape_error("index tuple has wrong length");
  if (mu < 0 || mu >= base_dim_) throw shape_error("component index out of range");
  auto it = comp_.find(tuple);
  if (it == comp_.end()) {
    if (p.is_zero()) return;
    it = comp_.emplace(tuple, std::vector<Poly>(base_dim_, Poly::zero(nvars_))).first;
  }
  it->second[mu] = p;
  if (all_zero(it->second)) comp_.erase(it);
}

bool TmCochain::operator==(const TmCochain& o) const {
  return degree_ == o.degree_ && comp_ == o.comp_;
}

TmCochain TmCochain::operator-(const TmCochain& o) const {
  if (degree_ != o.degree_ || base_dim_ != o.base_dim_)
    throw shape_error("cochain shape mismatch");
  TmCochain r = *this;
  for (const auto& [t, v] : o.comp_)
    for (int mu = 0; mu < base_dim_; ++mu)
      if (!v[mu].is_zero()) r.set(t, mu, r.at(t)[mu] - v[mu]);
  return r;
}

TmCochain TmCochain::scaled(const Rational& c) const {
  TmCochain r(degree_, rank_, base_dim_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [t, v] : comp_)
    for (int mu = 0; mu < base_dim_; ++mu)
      if (!v[mu].is_zero()) r.set(t, mu, v[mu].scaled(c));
  return r;
}

Section evaluate(const LieAlgebroid& a, const MultiDerivation& d,
                 const std::vector<Section>& args) {
  if (static_cast<int>(args.size()) != d.degree())
    throw shape_error("evaluate: argument count must equal the degree");
  const int k = d.degree();
  Section out = a.zero_section();

  auto rows = pointers(args);
  for (const auto& [tuple, vals] : d.coeffs()) {
    Poly det = arg_det(rows, tuple, a.nvars());
    if (det.is_zero()) continue;
    for (int m = 0; m < a.rank(); ++m)
      if (!vals[m].is_zero()) out.comp[m] += det * vals[m];
  }

  if (a.base_dim() == 0 || d.symbol().empty()) return out;
  for (int s = 0; s < k; ++s) {
    std::vector<Section> rest;
    rest.reserve(k - 1);
    for (int u = 0; u < k; ++u)
      if (u != s) rest.push_back(args[u]);
    PolyVectorField w = symbol_contract(a, d, rest);
    if (w.is_zero()) continue;
    bool negate = (k - 1 - s) % 2 != 0;  // (-1)^{k-s}, slots 1-based
    for (int m = 0; m < a.rank(); ++m) {
      Poly term = w.apply(args[s].comp[m]);
      if (term.is_zero()) continue;
      out.comp[m] += negate ? -term : term;
    }
  }
  return out;
}

PolyVectorField symbol_contract(const LieAlgebroid& a, const MultiDerivation& d,
                                const std::vector<Section>& args) {
  if (static_cast<int>(args.size()) != d.degree() - 1)
    throw shape_error("symbol contraction needs degree-1 arguments");
  PolyVectorField out = a.zero_field();
  auto rows = pointers(args);
  for (const auto& [tuple, vals] : d.symbol()) {
    Poly det = arg_det(rows, tuple, a.nvars());
    if (det.is_zero()) continue;
    for (int mu = 0; mu < a.base_dim(); ++mu)
      if (!vals[mu].is_zero()) out.comp[mu] += det * vals[mu];
  }
  return out;
}

PolyVectorField tm_contract(const LieAlgebroid& a, const TmCochain& s,
                            const std::vector<Section>& args) {
  if (static_cast<int>(args.size()) != s.degree())
    throw shape_error("contraction arity mismatch");
  PolyVectorField out = a.zero_field();
  auto rows = pointers(args);
  for (const auto& [tuple, vals] : s.components()) {
    Poly det = arg_det(rows, tuple, a.nvars());
    if (det.is_zero()) continue;
    for (int mu = 0; mu < a.base_dim(); ++mu)
      if (!vals[mu].is_zero()) out.comp[mu] += det * vals[mu];
  }
  return out;
}

Section delta_eval(const LieAlgebroid& a, const MultiDerivation& d,
                   const std::vector<Section>& args) {
  const int k = d.degree();
  if (static_cast<int>(args.size()) != k + 1)
    throw shape_error("delta takes degree+1 arguments");
  Section out = a.zero_section();
  for (int i = 0; i <= k; ++i) {
    std::vector<Section> rest;
    for (int u = 0; u <= k; ++u)
      if (u != i) rest.push_back(args[u]);
    Section term = a.bracket(args[i], evaluate(a, d, rest));
    out += (i % 2 == 0) ? term : -term;
  }
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      std::vector<Section> rest;
      rest.push_back(a.bracket(args[i], args[j]));
      for (int u = 0; u <= k; ++u)
        if (u != i && u != j) rest.push_back(args[u]);
      Section term = evaluate(a, d, rest);
      out += ((i + j) % 2 == 0) ? term : -term;
    }
  return out;
}

PolyVectorField delta_tm_eval(const LieAlgebroid& a, int in_degree,
                              const TmMapFn& fn,
                              const std::vector<Section>& args) {
  if (static_cast<int>(args.size()) != in_degree + 1)
    throw shape_error("delta takes degree+1 arguments");
  PolyVectorField out = a.zero_field();
  for (int i = 0; i <= in_degree; ++i) {
    std::vector<Section> rest;
    for (int u = 0; u <= in_degree; ++u)
      if (u != i) rest.push_back(args[u]);
    PolyVectorField term = vf_bracket(a.anchor_apply(args[i]), fn(rest));
    out += (i % 2 == 0) ? term : -term;
  }
  for (int i = 0; i <= in_degree; ++i)
    for (int j = i + 1; j <= in_degree; ++j) {
      std::vector<Section> rest;
      rest.push_back(a.bracket(args[i], args[j]));
      for (int u = 0; u <= in_degree; ++u)
        if (u != i && u != j) rest.push_back(args[u]);
      PolyVectorField term = fn(rest);
      out += ((i + j) % 2 == 0) ? term : -term;
    }
  return out;
}

MultiDerivation delta(const LieAlgebroid& a, const MultiDerivation& d) {
  const int k = d.degree();
  MultiDerivation out = MultiDerivation::zero(a, k + 1);

  increasing_tuples(a.rank(), k + 1, [&](const std::vector<int>& t) {
    std::vector<Section> frames;
    for (int i : t) frames.push_back(a.frame(i));
    Section val = delta_eval(a, d, frames);
    for (int m = 0; m < a.rank(); ++m)
      if (!val.comp[m].is_zero()) out.set_coeff(t, m, val.comp[m]);
  });

  if (a.base_dim() == 0) return out;

  // sigma_{delta D} = delta(sigma_D) + (-1)^{k+1} a o D
  TmCochain sig = k > 0 ? TmCochain::symbol_of(d) : TmCochain::zero(a, 0);
  TmMapFn sig_fn = [&](const std::vector<Section>& xs) {
    return tm_contract(a, sig, xs);
  };
  increasing_tuples(a.rank(), k, [&](const std::vector<int>& t) {
    std::vector<Section> frames;
    for (int i : t) frames.push_back(a.frame(i));
    PolyVectorField w =
        k > 0 ? delta_tm_eval(a, k - 1, sig_fn, frames) : a.zero_field();
    PolyVectorField ad = a.anchor_apply(evaluate(a, d, frames));
    if ((k + 1) % 2 == 0)
      w += ad;
    else
      w += -ad;
    for (int mu = 0; mu < a.base_dim(); ++mu)
      if (!w.comp[mu].is_zero()) out.set_symbol(t, mu, w.comp[mu]);
  });
  return out;
}

TmCochain delta_on_symbol(const LieAlgebroid& a, const TmCochain& s) {
  TmCochain out = TmCochain::zero(a, s.degree() + 1);
  TmMapFn fn = [&](const std::vector<Section>& xs) {
    return tm_contract(a, s, xs);
  };
  increasing_tuples(a.rank(), s.degree() + 1, [&](const std::vector<int>& t) {
    std::vector<Section> frames;
    for (int i : t) frames.push_back(a.frame(i));
    PolyVectorField w = delta_tm_eval(a, s.degree(), fn, frames);
    for (int mu = 0; mu < a.base_dim(); ++mu)
      if (!w.comp[mu].is_zero()) out.set(t, mu, w.comp[mu]);
  });
  return out;
}

TmCochain delta_symbol_by_probe(const LieAlgebroid& a, const MultiDerivation& d) {
  const int k = d.degree();
  TmCochain out = TmCochain::zero(a, k);
  increasing_tuples(a.rank(), k, [&](const std::vector<int>& t) {
    // delta(d)(e_{t...}, f e_0) - f delta(d)(e_{t...}, e_0)
    //   = sigma_{delta(d)}(e_{t...})(f) e_0
    std::vector<Section> args;
    for (int i : t) args.push_back(a.frame(i));
    args.push_back(a.frame(0));
    Section base = delta_eval(a, d, args);
    for (int nu = 0; nu < a.base_dim(); ++nu) {
      Poly xnu = Poly::variable(a.nvars(), nu);
      std::vector<Section> probe = args;
      probe.back() = probe.back().scaled(xnu);
      Section defect = delta_eval(a, d, probe) - base.scaled(xnu);
      for (int m = 1; m < a.rank(); ++m)
        if (!defect.comp[m].is_zero())
          throw error("Leibniz defect of delta is not concentrated on the probed frame");
      if (!defect.comp[0].is_zero()) out.set(t, nu, defect.comp[0]);
    }
  });
  return out;
}

std::map<std::vector<int>, Section> jacobiator(const LieAlgebroid& a,
                                               const MultiDerivation& d) {
  if (d.degree() != 2) throw shape_error("jacobiator needs a degree-2 cochain");
  std::map<std::vector<int>, Section> out;
  increasing_tuples(a.rank(), 3, [&](const std::vector<int>& t) {
    Section x = a.frame(t[0]), y = a.frame(t[1]), z = a.frame(t[2]);
    Section val = evaluate(a, d, {evaluate(a, d, {x, y}), z}) +
                  evaluate(a, d, {evaluate(a, d, {y, z}), x}) +
                  evaluate(a, d, {evaluate(a, d, {z, x}), y});
    out.emplace(t, std::move(val));
  });
  return out;
}

bool cocycle_check(const LieAlgebroid& a, const MultiDerivation& d) {
  return delta(a, d).is_zero();
}

}  // namespace algebroid
