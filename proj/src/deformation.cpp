#include "algebroid/deformation.hpp"

#include <random>

#include "algebroid/errors.hpp"

namespace algebroid {

namespace {

std::vector<std::vector<std::vector<Poly>>> structure_copy(const LieAlgebroid& a) {
  std::vector<std::vector<std::vector<Poly>>> c;
  for (int i = 0; i < a.rank(); ++i) {
    c.emplace_back();
    for (int j = 0; j < a.rank(); ++j) c.back().push_back(a.structure(i, j));
  }
  return c;
}

std::vector<std::vector<Poly>> anchor_copy(const LieAlgebroid& a) {
  std::vector<std::vector<Poly>> v;
  for (int i = 0; i < a.rank(); ++i) v.push_back(a.anchor_row(i));
  return v;
}

}  // namespace

LieAlgebroid DeformedFamily::at_zero() const {
  auto c = structure_copy(algebroid);
  for (auto& row : c)
    for (auto& cell : row)
      for (auto& p : cell) p = p.at_last_var_zero();
  auto a = anchor_copy(algebroid);
  for (auto& row : a)
    for (auto& p : row) p = p.at_last_var_zero();
  return LieAlgebroid(algebroid.name() + "@t=0", algebroid.base_dim(),
                      algebroid.rank(), std::move(c), std::move(a));
}

bool DeformedFamily::linear_in_t() const {
  int tvar = algebroid.nvars() - 1;
  for (int i = 0; i < algebroid.rank(); ++i) {
    for (int j = 0; j < algebroid.rank(); ++j)
      for (const auto& p : algebroid.structure(i, j))
        if (p.max_power(tvar) > 1) return false;
    for (const auto& p : algebroid.anchor_row(i))
      if (p.max_power(tvar) > 1) return false;
  }
  return true;
}

DeformedFamily deform(const LieAlgebroid& a, const MultiDerivation& d) {
  if (d.degree() != 2) throw shape_error("deform needs a degree-2 cochain");
  if (a.has_param()) throw shape_error("algebroid already carries t");
  LieAlgebroid ext = a.extended_with_param();
  Poly t = Poly::variable(ext.nvars(), ext.nvars() - 1);

  auto c = structure_copy(ext);
  for (const auto& [tuple, vals] : d.coeffs()) {
    int i = tuple[0], j = tuple[1];
    for (int k = 0; k < a.rank(); ++k) {
      if (vals[k].is_zero()) continue;
      Poly shift = t * vals[k].extended(ext.nvars());
      c[i][j][k] += shift;
      c[j][i][k] -= shift;
    }
  }
  auto av = anchor_copy(ext);
  for (const auto& [tuple, vals] : d.symbol()) {
    int i = tuple[0];
    for (int mu = 0; mu < a.base_dim(); ++mu) {
      if (vals[mu].is_zero()) continue;
      av[i][mu] += t * vals[mu].extended(ext.nvars());
    }
  }
  return DeformedFamily{LieAlgebroid(a.name() + "[t]", a.base_dim(), a.rank(),
                                     std::move(c), std::move(av), true)};
}

Section apply_endomorphism(const std::vector<std::vector<Poly>>& n,
                           const Section& x) {
  size_t r = x.comp.size();
  if (n.size() != r) throw shape_error("endomorphism shape mismatch");
  Section out;
  out.comp.assign(r, Poly::zero(x.comp[0].nvars()));
  for (size_t i = 0; i < r; ++i) {
    if (n[i].size() != r) throw shape_error("endomorphism shape mismatch");
    if (x.comp[i].is_zero()) continue;
    for (size_t m = 0; m < r; ++m) out.comp[m] += x.comp[i] * n[i][m];
  }
  return out;
}

bool FamilyReport::power_ok(const std::string& axiom, int power) const {
  for (const auto& w : witnesses)
    if (w.axiom == axiom && w.t_power == power) return false;
  return true;
}

FamilyReport is_lie_family(const DeformedFamily& f) {
  const LieAlgebroid& ft = f.algebroid;
  if (!ft.has_param()) throw shape_error("family must carry the parameter t");
  const int tvar = ft.nvars() - 1;
  FamilyReport rep;
  rep.linear_in_t = f.linear_in_t();

  ValidationReport val = ft.validate();
  for (const auto& check : val.checks)
    for (const auto& wit : check.witnesses) {
      int top = wit.residual.max_power(tvar);
      for (int p = 0; p <= top; ++p) {
        Poly part = wit.residual.coeff_of_power(tvar, p);
        if (part.is_zero()) continue;
        rep.witnesses.push_back(FamilyWitness{check.axiom, p, wit.indices, part});
      }
    }
  rep.lie_for_all_t = rep.witnesses.empty();
  rep.t0_ok = rep.power_ok("jacobi", 0) && rep.power_ok("anchor_morphism", 0) &&
              rep.power_ok("skewness", 0);
  rep.t1_cocycle_ok = rep.power_ok("jacobi", 1) && rep.power_ok("anchor_morphism", 1);
  rep.t2_jacobiator_ok = rep.power_ok("jacobi", 2);

  // Compare the t^1 jacobi residual with the literal first-order deformation
  // equation D([X,Y],Z) + [D(X,Y),Z] + c.p. of the extracted cocycle.
  LieAlgebroid base = f.at_zero();
  MultiDerivation d0 = family_cocycle(f);
  for (int i = 0; i < base.rank() && rep.t1_matches_eq111; ++i)
    for (int j = i + 1; j < base.rank() && rep.t1_matches_eq111; ++j)
      for (int k = j + 1; k < base.rank(); ++k) {
        Section x = base.frame(i), y = base.frame(j), z = base.frame(k);
        auto cyc = [&](const Section& u, const Section& v, const Section& w) {
          return evaluate(base, d0, {base.bracket(u, v), w}) +
                 base.bracket(evaluate(base, d0, {u, v}), w);
        };
        Section eq111 = cyc(x, y, z) + cyc(y, z, x) + cyc(z, x, y);
        Section t1 = base.zero_section();
        for (const auto& w : rep.witnesses) {
          if (w.axiom != "jacobi" || w.t_power != 1) continue;
          if (w.indices[0] != i || w.indices[1] != j || w.indices[2] != k) continue;
          t1.comp[w.indices[3]] += w.residual;
        }
        if (!(t1 - eq111).is_zero()) {
          rep.t1_matches_eq111 = false;
          break;
        }
      }

  if (rep.linear_in_t) {
    auto jac = jacobiator(base, d0);
    for (const auto& [tuple, val] : jac) {
      Section t2 = base.zero_section();
      for (const auto& w : rep.witnesses) {
        if (w.axiom != "jacobi" || w.t_power != 2) continue;
        if (w.indices[0] != tuple[0] || w.indices[1] != tuple[1] ||
            w.indices[2] != tuple[2])
          continue;
        t2.comp[w.indices[3]] += w.residual;
      }
      if (!(t2 - val).is_zero()) {
        rep.t2_matches_jacobiator = false;
        break;
      }
    }
  }
  return rep;
}

MultiDerivation family_cocycle(const DeformedFamily& f) {
  const LieAlgebroid& ft = f.algebroid;
  const int tvar = ft.nvars() - 1;
  LieAlgebroid base = f.at_zero();
  MultiDerivation d = MultiDerivation::zero(base, 2);
  for (int i = 0; i < ft.rank(); ++i) {
    for (int j = i + 1; j < ft.rank(); ++j)
      for (int k = 0; k < ft.rank(); ++k) {
        Poly c1 = ft.structure(i, j)[k].coeff_of_power(tvar, 1);
        if (!c1.is_zero()) d.set_coeff({i, j}, k, c1);
      }
    for (int mu = 0; mu < ft.base_dim(); ++mu) {
      Poly a1 = ft.anchor_row(i)[mu].coeff_of_power(tvar, 1);
      if (!a1.is_zero()) d.set_symbol({i}, mu, a1);
    }
  }
  return d;
}

MultiDerivation nijenhuis_cochain(const LieAlgebroid& a,
                                  const std::vector<std::vector<Poly>>& n) {
  MultiDerivation d = MultiDerivation::zero(a, 2);
  for (int i = 0; i < a.rank(); ++i) {
    Section nei = apply_endomorphism(n, a.frame(i));
    for (int j = i + 1; j < a.rank(); ++j) {
      Section nej = apply_endomorphism(n, a.frame(j));
      Section val = a.bracket(a.frame(i), nej) + a.bracket(nei, a.frame(j)) -
                    apply_endomorphism(n, a.bracket(a.frame(i), a.frame(j)));
      for (int m = 0; m < a.rank(); ++m)
        if (!val.comp[m].is_zero()) d.set_coeff({i, j}, m, val.comp[m]);
    }
    PolyVectorField an = a.anchor_apply(nei);
    for (int mu = 0; mu < a.base_dim(); ++mu)
      if (!an.comp[mu].is_zero()) d.set_symbol({i}, mu, an.comp[mu]);
  }
  return d;
}

std::map<std::vector<int>, Section> nijenhuis_torsion(
    const LieAlgebroid& a, const std::vector<std::vector<Poly>>& n) {
  std::map<std::vector<int>, Section> out;
  for (int i = 0; i < a.rank(); ++i)
    for (int j = i + 1; j < a.rank(); ++j) {
      Section u = a.frame(i), v = a.frame(j);
      Section nu = apply_endomorphism(n, u), nv = apply_endomorphism(n, v);
      Section inner = a.bracket(u, nv) + a.bracket(nu, v) -
                      apply_endomorphism(n, a.bracket(u, v));
      Section t = a.bracket(nu, nv) - apply_endomorphism(n, inner);
      out.emplace(std::vector<int>{i, j}, std::move(t));
    }
  return out;
}

TrivialityReport triviality_check(const LieAlgebroid& a,
                                  const std::vector<std::vector<Poly>>& n) {
  TrivialityReport rep;
  for (const auto& [tuple, val] : nijenhuis_torsion(a, n)) {
    for (int m = 0; m < a.rank(); ++m)
      if (!val.comp[m].is_zero()) {
        rep.torsion_zero = false;
        rep.witnesses.push_back(
            FamilyWitness{"torsion", 0, {tuple[0], tuple[1], m}, val.comp[m]});
      }
  }

  DeformedFamily fam = deform(a, nijenhuis_cochain(a, n));
  LieAlgebroid ext = a.extended_with_param();
  Poly t = Poly::variable(ext.nvars(), ext.nvars() - 1);
  // Id + tN over the extended ring
  std::vector<std::vector<Poly>> id_tn(
      a.rank(), std::vector<Poly>(a.rank(), Poly::zero(ext.nvars())));
  for (int i = 0; i < a.rank(); ++i) {
    id_tn[i][i] = Poly::constant(ext.nvars(), Rational(1));
    for (int m = 0; m < a.rank(); ++m)
      id_tn[i][m] += t * n[i][m].extended(ext.nvars());
  }
  for (int i = 0; i < a.rank(); ++i)
    for (int j = i + 1; j < a.rank(); ++j) {
      Section lhs = apply_endomorphism(
          id_tn, fam.algebroid.bracket(fam.algebroid.frame(i),
                                       fam.algebroid.frame(j)));
      Section rhs = ext.bracket(apply_endomorphism(id_tn, ext.frame(i)),
                                apply_endomorphism(id_tn, ext.frame(j)));
      Section diff = lhs - rhs;
      for (int m = 0; m < a.rank(); ++m)
        if (!diff.comp[m].is_zero()) {
          rep.identity_holds = false;
          rep.witnesses.push_back(
              FamilyWitness{"triviality", 0, {i, j, m}, diff.comp[m]});
        }
    }
  return rep;
}

MultiDerivation seeded_random_cochain(const LieAlgebroid& a, int degree,
                                      int poly_degree_cap, unsigned long seed) {
  std::mt19937_64 rng(seed);
  auto draw_int = [&rng](int lo, int hi) {  // uniform-ish small range
    return lo + static_cast<int>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  auto draw_poly = [&](int nvars) {
    Poly p = Poly::zero(nvars);
    int nterms = draw_int(0, 2);
    for (int t = 0; t < nterms; ++t) {
      Monomial m{std::vector<int>(nvars, 0)};
      int deg = draw_int(0, poly_degree_cap);
      for (int d = 0; d < deg && nvars > 0; ++d) ++m.e[draw_int(0, nvars - 1)];
      int c = draw_int(-2, 2);
      if (c != 0) p += Poly::term(nvars, m, Rational(c));
    }
    return p;
  };

  MultiDerivation d = MultiDerivation::zero(a, degree);
  std::vector<int> tuple(degree);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == degree) {
      for (int m = 0; m < a.rank(); ++m) {
        Poly p = draw_poly(a.nvars());
        if (!p.is_zero()) d.set_coeff(tuple, m, p);
      }
      return;
    }
    for (int v = start; v < a.rank(); ++v) {
      tuple[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  if (degree >= 1 && a.base_dim() > 0) {
    std::vector<int> st(degree - 1);
    std::function<void(int, int)> rec2 = [&](int pos, int start) {
      if (pos == degree - 1) {
        for (int mu = 0; mu < a.base_dim(); ++mu) {
          Poly p = draw_poly(a.nvars());
          if (!p.is_zero()) d.set_symbol(st, mu, p);
        }
        return;
      }
      for (int v = start; v < a.rank(); ++v) {
        st[pos] = v;
        rec2(pos + 1, v + 1);
      }
    };
    rec2(0, 0);
  }
  return d;
}

}  // namespace algebroid
