#include "algebroid/jet.hpp"

#include <functional>

#include "algebroid/errors.hpp"

namespace algebroid {

namespace {

void increasing_tuples(int r, int k,
                       const std::function<void(const std::vector<int>&)>& fn) {
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

bool theta_zero(const std::vector<std::vector<Poly>>& theta) {
  for (const auto& row : theta)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

// theta contracted with a vector field: sum_mu theta^k_mu V^mu e_k.
Section theta_apply(const LieAlgebroid& a,
                    const std::vector<std::vector<Poly>>& theta,
                    const PolyVectorField& v) {
  Section out = a.zero_section();
  for (int k = 0; k < a.rank(); ++k)
    for (int mu = 0; mu < a.base_dim(); ++mu) {
      if (theta[k][mu].is_zero() || v.comp[mu].is_zero()) continue;
      out.comp[k] += theta[k][mu] * v.comp[mu];
    }
  return out;
}

void check_jet(const LieAlgebroid& a, const JetSection& m) {
  if (static_cast<int>(m.u.comp.size()) != a.rank())
    throw shape_error("jet section rank mismatch");
  if (static_cast<int>(m.theta.size()) != a.rank())
    throw shape_error("jet section theta must have rank rows");
  for (const auto& row : m.theta)
    if (static_cast<int>(row.size()) != a.base_dim())
      throw shape_error("jet section theta must have base_dim columns");
}

}  // namespace

bool JetSection::is_zero() const { return u.is_zero() && theta_zero(theta); }

JetSection JetSection::operator-() const {
  JetSection r;
  r.u = -u;
  for (const auto& row : theta) {
    r.theta.emplace_back();
    for (const auto& p : row) r.theta.back().push_back(-p);
  }
  return r;
}

JetSection& JetSection::operator+=(const JetSection& o) {
  u += o.u;
  if (theta.size() != o.theta.size()) throw shape_error("jet shape mismatch");
  for (size_t k = 0; k < theta.size(); ++k) {
    if (theta[k].size() != o.theta[k].size())
      throw shape_error("jet shape mismatch");
    for (size_t mu = 0; mu < theta[k].size(); ++mu)
      theta[k][mu] += o.theta[k][mu];
  }
  return *this;
}

JetSection JetSection::operator-(const JetSection& o) const {
  JetSection r = *this;
  r += -o;
  return r;
}

JetSection jet_zero(const LieAlgebroid& a) {
  JetSection m;
  m.u = a.zero_section();
  m.theta.assign(a.rank(), std::vector<Poly>(a.base_dim(), a.zero_poly()));
  return m;
}

JetSection prolong(const LieAlgebroid& a, const Section& x) {
  JetSection m = jet_zero(a);
  m.u = x;
  return m;
}

JetSection theta_jet(const LieAlgebroid& a, int k, int mu, const Poly& f) {
  JetSection m = jet_zero(a);
  if (k < 0 || k >= a.rank() || mu < 0 || mu >= a.base_dim())
    throw shape_error("theta index out of range");
  m.theta[k][mu] = f;
  return m;
}

JetSection jet_scale(const LieAlgebroid& a, const Poly& f, const JetSection& m) {
  check_jet(a, m);
  JetSection r = jet_zero(a);
  r.u = m.u.scaled(f);
  for (int k = 0; k < a.rank(); ++k)
    for (int mu = 0; mu < a.base_dim(); ++mu)
      r.theta[k][mu] = f * m.theta[k][mu] - f.partial(mu) * m.u.comp[k];
  return r;
}

Section jet_pairing(const LieAlgebroid& a, const JetSection& m,
                    const DerivationOp& d) {
  check_jet(a, m);
  if (d.degree() != 1) throw shape_error("pairing needs a degree-1 operator");
  Section out = evaluate(a, d, {m.u});
  out += theta_apply(a, m.theta, PolyVectorField{d.symbol_at({})});
  return out;
}

DerivationOp pi_rep(const LieAlgebroid& a, const JetSection& m) {
  check_jet(a, m);
  DerivationOp d = MultiDerivation::zero(a, 1);
  for (int j = 0; j < a.rank(); ++j) {
    Section val = a.bracket(m.u, a.frame(j)) -
                  theta_apply(a, m.theta, a.anchor_apply(a.frame(j)));
    for (int k = 0; k < a.rank(); ++k)
      if (!val.comp[k].is_zero()) d.set_coeff({j}, k, val.comp[k]);
  }
  PolyVectorField au = a.anchor_apply(m.u);
  for (int mu = 0; mu < a.base_dim(); ++mu)
    if (!au.comp[mu].is_zero()) d.set_symbol({}, mu, au.comp[mu]);
  return d;
}

JetSection jet_bracket(const LieAlgebroid& a, const JetSection& m,
                       const JetSection& n) {
  check_jet(a, m);
  check_jet(a, n);
  JetSection out = jet_zero(a);
  out.u = a.bracket(m.u, n.u);

  PolyVectorField au = a.anchor_apply(m.u);
  PolyVectorField av = a.anchor_apply(n.u);

  // [j u, omega (x) e] terms and their mirror with the roles swapped.
  auto one_sided = [&](const Section& u, const PolyVectorField& anchor_u,
                       const std::vector<std::vector<Poly>>& om, int sign) {
    for (int l = 0; l < a.rank(); ++l) {
      Section bul = a.bracket(u, a.frame(l));
      for (int nu = 0; nu < a.base_dim(); ++nu) {
        const Poly& c = om[l][nu];
        if (c.is_zero()) continue;
        // L_{a(u)} dx^nu (x) e_l = d(a(u)^nu) (x) e_l
        for (int beta = 0; beta < a.base_dim(); ++beta) {
          Poly term = c * anchor_u.comp[nu].partial(beta);
          if (term.is_zero()) continue;
          out.theta[l][beta] += sign > 0 ? term : -term;
        }
        // dx^nu (x) [u, e_l]
        for (int k = 0; k < a.rank(); ++k) {
          Poly term = c * bul.comp[k];
          if (term.is_zero()) continue;
          out.theta[k][nu] += sign > 0 ? term : -term;
        }
        // Leibniz on the coefficient: a(u)(c) dx^nu (x) e_l
        Poly lc = anchor_u.apply(c);
        if (!lc.is_zero()) out.theta[l][nu] += sign > 0 ? lc : -lc;
      }
    }
  };
  one_sided(m.u, au, n.theta, +1);
  one_sided(n.u, av, m.theta, -1);

  // [omega (x) e_k, eta (x) e_l] = <a(e_k), eta> omega (x) e_l
  //                               - <a(e_l), omega> eta (x) e_k
  for (int k = 0; k < a.rank(); ++k)
    for (int mu = 0; mu < a.base_dim(); ++mu) {
      const Poly& th = m.theta[k][mu];
      if (th.is_zero()) continue;
      for (int l = 0; l < a.rank(); ++l)
        for (int nu = 0; nu < a.base_dim(); ++nu) {
          const Poly& om = n.theta[l][nu];
          if (om.is_zero()) continue;
          Poly prod = th * om;
          Poly t1 = prod * a.anchor_row(k)[nu];
          if (!t1.is_zero()) out.theta[l][mu] += t1;
          Poly t2 = prod * a.anchor_row(l)[mu];
          if (!t2.is_zero()) out.theta[k][nu] -= t2;
        }
    }
  return out;
}

JetSection jet_lie_derivative(const LieAlgebroid& a, const DerivationOp& d,
                              const JetSection& m) {
  check_jet(a, m);
  if (d.degree() != 1) throw shape_error("Lie derivative needs a degree-1 operator");
  JetSection out = jet_zero(a);
  out.u = evaluate(a, d, {m.u});
  PolyVectorField s{d.symbol_at({})};
  for (int l = 0; l < a.rank(); ++l) {
    Section del = evaluate(a, d, {a.frame(l)});
    for (int mu = 0; mu < a.base_dim(); ++mu) {
      const Poly& c = m.theta[l][mu];
      if (c.is_zero()) continue;
      // dx^mu (x) d(e_l)
      for (int k = 0; k < a.rank(); ++k) {
        Poly term = c * del.comp[k];
        if (!term.is_zero()) out.theta[k][mu] += term;
      }
      // d(jd(d) x^mu) (x) e_l
      for (int beta = 0; beta < a.base_dim(); ++beta) {
        Poly term = c * s.comp[mu].partial(beta);
        if (!term.is_zero()) out.theta[l][beta] += term;
      }
      // jd(d)(c) dx^mu (x) e_l
      Poly lc = s.apply(c);
      if (!lc.is_zero()) out.theta[l][mu] += lc;
    }
  }
  return out;
}

DerivationOp op_commutator(const LieAlgebroid& a, const DerivationOp& d1,
                           const DerivationOp& d2) {
  DerivationOp out = MultiDerivation::zero(a, 1);
  for (int i = 0; i < a.rank(); ++i) {
    Section val = evaluate(a, d1, {evaluate(a, d2, {a.frame(i)})}) -
                  evaluate(a, d2, {evaluate(a, d1, {a.frame(i)})});
    for (int m = 0; m < a.rank(); ++m)
      if (!val.comp[m].is_zero()) out.set_coeff({i}, m, val.comp[m]);
  }
  if (a.base_dim() > 0) {
    PolyVectorField s = vf_bracket(PolyVectorField{d1.symbol_at({})},
                                   PolyVectorField{d2.symbol_at({})});
    for (int mu = 0; mu < a.base_dim(); ++mu)
      if (!s.comp[mu].is_zero()) out.set_symbol({}, mu, s.comp[mu]);
  }
  return out;
}

JetCochain to_jet_cochain(const MultiDerivation& d) { return JetCochain{d}; }

MultiDerivation to_multiderivation(const LieAlgebroid& a, const JetCochain& c) {
  const int k = c.degree();
  MultiDerivation out = MultiDerivation::zero(a, k);
  increasing_tuples(a.rank(), k, [&](const std::vector<int>& t) {
    std::vector<JetSection> args;
    for (int i : t) args.push_back(prolong(a, a.frame(i)));
    Section val = jet_evaluate(a, c, args);
    for (int m = 0; m < a.rank(); ++m)
      if (!val.comp[m].is_zero()) out.set_coeff(t, m, val.comp[m]);
  });
  if (k >= 1 && a.base_dim() > 0) {
    Poly one = Poly::constant(a.nvars(), Rational(1));
    increasing_tuples(a.rank(), k - 1, [&](const std::vector<int>& t) {
      std::vector<JetSection> args;
      for (int i : t) args.push_back(prolong(a, a.frame(i)));
      args.push_back(jet_zero(a));
      for (int nu = 0; nu < a.base_dim(); ++nu) {
        args.back() = theta_jet(a, 0, nu, one);
        Section val = jet_evaluate(a, c, args);
        for (int m = 1; m < a.rank(); ++m)
          if (!val.comp[m].is_zero())
            throw error("jet cochain does not factor through the symbol slot");
        if (!val.comp[0].is_zero()) out.set_symbol(t, nu, val.comp[0]);
      }
    });
  }
  return out;
}

Section jet_evaluate(const LieAlgebroid& a, const JetCochain& c,
                     const std::vector<JetSection>& args) {
  const int k = c.degree();
  if (static_cast<int>(args.size()) != k)
    throw shape_error("jet evaluation arity mismatch");
  for (const auto& m : args) check_jet(a, m);

  std::vector<Section> us;
  us.reserve(k);
  for (const auto& m : args) us.push_back(m.u);
  Section out = evaluate(a, c.body, us);

  for (int s = 0; s < k; ++s) {
    if (theta_zero(args[s].theta)) continue;
    std::vector<Section> rest;
    for (int i = 0; i < k; ++i)
      if (i != s) rest.push_back(args[i].u);
    PolyVectorField w = symbol_contract(a, c.body, rest);
    if (w.is_zero()) continue;
    Section tw = theta_apply(a, args[s].theta, w);
    bool negate = (k - 1 - s) % 2 != 0;  // (-1)^{k-s}, slots 1-based
    out += negate ? -tw : tw;
  }
  return out;
}

JetCochain d_jet(const LieAlgebroid& a, const JetCochain& c) {
  return JetCochain{delta(a, c.body)};
}

Section d_jet_direct_eval(const LieAlgebroid& a, const JetCochain& c,
                          const std::vector<JetSection>& args) {
  const int k = c.degree();
  if (static_cast<int>(args.size()) != k + 1)
    throw shape_error("coboundary takes degree+1 arguments");
  Section out = a.zero_section();
  for (int i = 0; i <= k; ++i) {
    std::vector<JetSection> rest;
    for (int u = 0; u <= k; ++u)
      if (u != i) rest.push_back(args[u]);
    Section term = evaluate(a, pi_rep(a, args[i]), {jet_evaluate(a, c, rest)});
    out += (i % 2 == 0) ? term : -term;
  }
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      std::vector<JetSection> rest;
      rest.push_back(jet_bracket(a, args[i], args[j]));
      for (int u = 0; u <= k; ++u)
        if (u != i && u != j) rest.push_back(args[u]);
      Section term = jet_evaluate(a, c, rest);
      out += ((i + j) % 2 == 0) ? term : -term;
    }
  return out;
}

JetCochain d_jet_direct(const LieAlgebroid& a, const JetCochain& c) {
  const int k = c.degree();
  MultiDerivation out = MultiDerivation::zero(a, k + 1);
  increasing_tuples(a.rank(), k + 1, [&](const std::vector<int>& t) {
    std::vector<JetSection> args;
    for (int i : t) args.push_back(prolong(a, a.frame(i)));
    Section val = d_jet_direct_eval(a, c, args);
    for (int m = 0; m < a.rank(); ++m)
      if (!val.comp[m].is_zero()) out.set_coeff(t, m, val.comp[m]);
  });
  if (a.base_dim() > 0) {
    Poly one = Poly::constant(a.nvars(), Rational(1));
    increasing_tuples(a.rank(), k, [&](const std::vector<int>& t) {
      std::vector<JetSection> args;
      for (int i : t) args.push_back(prolong(a, a.frame(i)));
      args.push_back(jet_zero(a));
      for (int nu = 0; nu < a.base_dim(); ++nu) {
        args.back() = theta_jet(a, 0, nu, one);
        Section val = d_jet_direct_eval(a, c, args);
        for (int m = 1; m < a.rank(); ++m)
          if (!val.comp[m].is_zero())
            throw error("direct coboundary does not factor through the symbol slot");
        if (!val.comp[0].is_zero()) out.set_symbol(t, nu, val.comp[0]);
      }
    });
  }
  return JetCochain{out};
}

JetCochain embed_hom(const MultiDerivation& phi) {
  if (!phi.symbol().empty())
    throw shape_error("embed_hom expects a symbol-free cochain");
  return JetCochain{phi};
}

TmCochain symbol_of(const JetCochain& c) { return TmCochain::symbol_of(c.body); }

JetCochain lift_symbol(const LieAlgebroid& a, const TmCochain& lambda) {
  MultiDerivation d = MultiDerivation::zero(a, lambda.degree() + 1);
  for (const auto& [t, v] : lambda.components())
    for (int mu = 0; mu < a.base_dim(); ++mu)
      if (!v[mu].is_zero()) d.set_symbol(t, mu, v[mu]);
  return JetCochain{d};
}

McReport mc_check(const LieAlgebroid& a, const JetCochain& c) {
  if (c.degree() != 2) throw shape_error("Maurer-Cartan check needs degree 2");
  McReport rep;
  rep.rank1_extension = a.rank() == 1;

  // First-order residual: D([X,Y],Z) + [D(X,Y),Z] + c.p. on frame triples,
  // plus the symbol of delta(D); both vanish exactly when D is a cocycle.
  const MultiDerivation& d = c.body;
  increasing_tuples(a.rank(), 3, [&](const std::vector<int>& t) {
    Section x = a.frame(t[0]), y = a.frame(t[1]), z = a.frame(t[2]);
    auto cyc = [&](const Section& u, const Section& v, const Section& w) {
      return evaluate(a, d, {a.bracket(u, v), w}) +
             a.bracket(evaluate(a, d, {u, v}), w);
    };
    Section val = cyc(x, y, z) + cyc(y, z, x) + cyc(z, x, y);
    for (int m = 0; m < a.rank(); ++m)
      if (!val.comp[m].is_zero()) {
        rep.cocycle_ok = false;
        rep.witnesses.push_back(
            McWitness{"cocycle", {t[0], t[1], t[2], m}, val.comp[m]});
      }
  });
  if (a.base_dim() > 0) {
    MultiDerivation dd = delta(a, d);
    for (const auto& [t, v] : dd.symbol())
      for (int mu = 0; mu < a.base_dim(); ++mu)
        if (!v[mu].is_zero()) {
          rep.cocycle_ok = false;
          rep.witnesses.push_back(
              McWitness{"cocycle_symbol", {t[0], t[1], mu}, v[mu]});
        }
  }

  for (const auto& [t, val] : jacobiator(a, d))
    for (int m = 0; m < a.rank(); ++m)
      if (!val.comp[m].is_zero()) {
        rep.quadratic_ok = false;
        rep.witnesses.push_back(
            McWitness{"quadratic", {t[0], t[1], t[2], m}, val.comp[m]});
      }
  rep.mc_holds = rep.cocycle_ok && rep.quadratic_ok;
  return rep;
}

CenterResult h0(const LieAlgebroid& a, const SliceSpec& slice) {
  auto atoms = slice_basis(a, 0, slice.cap_for(0));
  // Row space: components of [u, e_i] for every frame, plus a(u).
  using RowKey = std::tuple<int, int, int, std::vector<int>>;
  std::map<RowKey, int> rows;
  std::vector<std::map<RowKey, Rational>> cols(atoms.size());
  for (size_t ci = 0; ci < atoms.size(); ++ci) {
    Section u =
        atom_cochain(a, 0, atoms[ci]).as_section();
    for (int i = 0; i < a.rank(); ++i) {
      Section b = a.bracket(u, a.frame(i));
      for (int m = 0; m < a.rank(); ++m)
        for (const auto& [mono, cf] : b.comp[m].terms())
          cols[ci][RowKey{0, i, m, mono.e}] = cf;
    }
    PolyVectorField av = a.anchor_apply(u);
    for (int mu = 0; mu < a.base_dim(); ++mu)
      for (const auto& [mono, cf] : av.comp[mu].terms())
        cols[ci][RowKey{1, 0, mu, mono.e}] = cf;
  }
  for (const auto& col : cols)
    for (const auto& [key, cf] : col) rows.emplace(key, 0);
  int ri = 0;
  for (auto& [key, idx] : rows) idx = ri++;

  QMatrix m(ri, static_cast<int>(atoms.size()));
  for (size_t ci = 0; ci < atoms.size(); ++ci)
    for (const auto& [key, cf] : cols[ci]) m.at(rows.at(key), static_cast<int>(ci)) = cf;

  auto rk = m.rank_kernel();
  CenterResult out;
  out.dim = static_cast<int>(rk.kernel.size());
  for (const auto& vec : rk.kernel) {
    Section s = a.zero_section();
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (vec[i].is_zero()) continue;
      s += atom_cochain(a, 0, atoms[i]).as_section().scaled(vec[i]);
    }
    out.basis.push_back(std::move(s));
  }
  return out;
}

OutResult h1(const LieAlgebroid& a, const SliceSpec& slice, int jobs) {
  OutResult out;
  DeltaMatrix d1 = delta_matrix(a, 1, slice, true, jobs);
  auto rk = d1.m.rank_kernel();
  out.der_dim = static_cast<int>(rk.kernel.size());
  for (const auto& vec : rk.kernel) {
    MultiDerivation d = MultiDerivation::zero(a, 1);
    for (size_t i = 0; i < d1.domain.size(); ++i) {
      if (vec[i].is_zero()) continue;
      d += atom_cochain(a, 1, d1.domain[i]).scaled(vec[i]);
    }
    out.derivations.push_back(std::move(d));
  }
  DeltaMatrix d0 = delta_matrix(a, 0, slice, true, jobs);
  out.inn_dim = d0.m.rank();
  out.h1_dim = out.der_dim - out.inn_dim;

  for (const auto& d : out.derivations) {
    PolyVectorField s{d.symbol_at({})};
    for (int i = 0; i < a.rank(); ++i) {
      PolyVectorField res =
          a.anchor_apply(evaluate(a, d, {a.frame(i)})) +
          vf_bracket(a.anchor_apply(a.frame(i)), s);
      if (!res.is_zero()) out.anchor_identity_ok = false;
    }
  }
  return out;
}

}  // namespace algebroid
