#include "algebroid/cohomology.hpp"

#include <set>
#include <thread>

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

// All monomials of total degree <= cap, grlex ascending.
std::vector<Monomial> monomials_up_to(int nvars, int cap) {
  std::vector<Monomial> out;
  Monomial m{std::vector<int>(nvars, 0)};
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m.e[var] = e;
      rec(var + 1, remaining - e);
    }
    m.e[var] = 0;
  };
  if (nvars == 0) {
    out.push_back(Monomial{{}});
  } else {
    rec(0, cap);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return GrlexLess{}(a, b);
  });
  return out;
}

std::string atom_str(const CochainAtom& at) {
  std::string s = at.symbol_part ? "symbol[" : "coeff[";
  for (size_t i = 0; i < at.tuple.size(); ++i)
    s += (i ? "," : "") + std::to_string(at.tuple[i] + 1);
  s += "]/" + std::to_string(at.slot + 1) + " * ";
  s += Poly::term(static_cast<int>(at.mono.e.size()), at.mono, Rational(1)).pretty();
  return s;
}

}  // namespace

int SliceSpec::cap_for(int k) const {
  if (caps.empty()) throw shape_error("empty slice specification");
  if (k < static_cast<int>(caps.size())) return caps[k];
  return caps.back();
}

std::vector<CochainAtom> slice_basis(const LieAlgebroid& a, int k, int cap) {
  std::vector<CochainAtom> atoms;
  auto monos = monomials_up_to(a.nvars(), cap);
  increasing_tuples(a.rank(), k, [&](const std::vector<int>& t) {
    for (int m = 0; m < a.rank(); ++m)
      for (const auto& mono : monos)
        atoms.push_back(CochainAtom{false, t, m, mono});
  });
  if (k >= 1 && a.base_dim() > 0) {
    increasing_tuples(a.rank(), k - 1, [&](const std::vector<int>& t) {
      for (int mu = 0; mu < a.base_dim(); ++mu)
        for (const auto& mono : monos)
          atoms.push_back(CochainAtom{true, t, mu, mono});
    });
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

MultiDerivation atom_cochain(const LieAlgebroid& a, int k, const CochainAtom& atom) {
  MultiDerivation d = MultiDerivation::zero(a, k);
  Poly p = Poly::term(a.nvars(), atom.mono, Rational(1));
  if (atom.symbol_part)
    d.set_symbol(atom.tuple, atom.slot, p);
  else
    d.set_coeff(atom.tuple, atom.slot, p);
  return d;
}

std::map<CochainAtom, Rational> coordinates(const MultiDerivation& d) {
  std::map<CochainAtom, Rational> out;
  for (const auto& [t, v] : d.coeffs())
    for (size_t m = 0; m < v.size(); ++m)
      for (const auto& [mono, c] : v[m].terms())
        out.emplace(CochainAtom{false, t, static_cast<int>(m), mono}, c);
  for (const auto& [t, v] : d.symbol())
    for (size_t mu = 0; mu < v.size(); ++mu)
      for (const auto& [mono, c] : v[mu].terms())
        out.emplace(CochainAtom{true, t, static_cast<int>(mu), mono}, c);
  return out;
}

namespace {

// Per-column coordinates of delta over the slice basis.
std::vector<std::map<CochainAtom, Rational>> delta_columns(
    const LieAlgebroid& a, int k, const std::vector<CochainAtom>& domain,
    int jobs) {
  std::vector<std::map<CochainAtom, Rational>> cols(domain.size());
  auto work = [&](size_t begin, size_t step) {
    for (size_t i = begin; i < domain.size(); i += step)
      cols[i] = coordinates(delta(a, atom_cochain(a, k, domain[i])));
  };
  int threads = std::max(1, jobs);
  if (threads == 1 || domain.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& t : pool) t.join();
  }
  return cols;
}

}  // namespace

DeltaMatrix delta_matrix(const LieAlgebroid& a, int k, const SliceSpec& slice,
                         bool enforce_closure, int jobs) {
  DeltaMatrix out;
  out.domain = slice_basis(a, k, slice.cap_for(k));
  auto cols = delta_columns(a, k, out.domain, jobs);

  int out_cap = slice.cap_for(k + 1);
  std::set<CochainAtom> rows;
  for (size_t i = 0; i < cols.size(); ++i) {
    for (const auto& [atom, c] : cols[i]) {
      if (enforce_closure && atom.mono.total_degree() > out_cap)
        throw slice_error("slice not closed under delta: basis element " +
                          atom_str(out.domain[i]) + " maps onto " +
                          atom_str(atom) + " beyond degree cap " +
                          std::to_string(out_cap));
      rows.insert(atom);
    }
  }
  out.codomain.assign(rows.begin(), rows.end());

  std::map<CochainAtom, int> row_of;
  for (size_t r = 0; r < out.codomain.size(); ++r)
    row_of.emplace(out.codomain[r], static_cast<int>(r));

  out.m = QMatrix(static_cast<int>(out.codomain.size()),
                  static_cast<int>(out.domain.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [atom, val] : cols[c])
      out.m.at(row_of.at(atom), static_cast<int>(c)) = val;
  return out;
}

std::vector<MultiDerivation> cocycle_basis(const LieAlgebroid& a, int k,
                                           const SliceSpec& slice, int jobs) {
  DeltaMatrix dm = delta_matrix(a, k, slice, true, jobs);
  auto rk = dm.m.rank_kernel();
  std::vector<MultiDerivation> out;
  for (const auto& vec : rk.kernel) {
    MultiDerivation d = MultiDerivation::zero(a, k);
    for (size_t i = 0; i < dm.domain.size(); ++i) {
      if (vec[i].is_zero()) continue;
      d += atom_cochain(a, k, dm.domain[i]).scaled(vec[i]);
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::optional<MultiDerivation> coboundary_check(const LieAlgebroid& a,
                                                const MultiDerivation& d,
                                                const SliceSpec& slice,
                                                int jobs) {
  const int k = d.degree();
  if (k == 0) return std::nullopt;  // nothing below degree 0
  DeltaMatrix dm;
  dm.domain = slice_basis(a, k - 1, slice.cap_for(k - 1));
  auto cols = delta_columns(a, k - 1, dm.domain, jobs);

  int out_cap = slice.cap_for(k);
  std::set<CochainAtom> rows;
  for (size_t i = 0; i < cols.size(); ++i)
    for (const auto& [atom, c] : cols[i]) {
      if (atom.mono.total_degree() > out_cap)
        throw slice_error("slice not closed under delta: basis element " +
                          atom_str(dm.domain[i]) + " maps onto " +
                          atom_str(atom) + " beyond degree cap " +
                          std::to_string(out_cap));
      rows.insert(atom);
    }
  auto target = coordinates(d);
  for (const auto& [atom, c] : target) rows.insert(atom);
  dm.codomain.assign(rows.begin(), rows.end());

  std::map<CochainAtom, int> row_of;
  for (size_t r = 0; r < dm.codomain.size(); ++r)
    row_of.emplace(dm.codomain[r], static_cast<int>(r));
  dm.m = QMatrix(static_cast<int>(dm.codomain.size()),
                 static_cast<int>(dm.domain.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [atom, val] : cols[c])
      dm.m.at(row_of.at(atom), static_cast<int>(c)) = val;

  std::vector<Rational> rhs(dm.codomain.size(), Rational(0));
  for (const auto& [atom, val] : target) rhs[row_of.at(atom)] = val;

  auto sol = dm.m.solve(rhs);
  if (!sol) return std::nullopt;
  MultiDerivation t = MultiDerivation::zero(a, k - 1);
  for (size_t i = 0; i < dm.domain.size(); ++i) {
    if ((*sol)[i].is_zero()) continue;
    t += atom_cochain(a, k - 1, dm.domain[i]).scaled((*sol)[i]);
  }
  return t;
}

std::vector<CohomologyRow> cohomology_dims(const LieAlgebroid& a, int k_max,
                                           const SliceSpec& slice, int jobs) {
  std::vector<int> dims(k_max + 1), ranks(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    DeltaMatrix dm = delta_matrix(a, k, slice, true, jobs);
    dims[k] = static_cast<int>(dm.domain.size());
    ranks[k] = dm.m.rank();
  }
  std::vector<CohomologyRow> out;
  for (int k = 0; k <= k_max; ++k) {
    CohomologyRow row;
    row.k = k;
    row.dim_c = dims[k];
    row.dim_z = dims[k] - ranks[k];
    row.dim_b = k == 0 ? 0 : ranks[k - 1];
    row.dim_h = row.dim_z - row.dim_b;
    out.push_back(row);
  }
  return out;
}

}  // namespace algebroid
