#include "algebroid/gallery.hpp"

#include <sstream>

#include "algebroid/errors.hpp"

namespace algebroid {

namespace {

ExpectationResult result(const Expectation& e, bool pass, std::string detail) {
  return ExpectationResult{e.name, e.provenance, pass, std::move(detail)};
}

Expectation expect_validate(const std::string& provenance) {
  return Expectation{"validate", provenance,
                     [](const LieAlgebroid& a) -> ExpectationResult {
                       auto rep = a.validate();
                       return {"validate", "", rep.ok,
                               rep.ok ? "all axioms hold" : "axiom failure"};
                     }};
}

Expectation expect_cohomology(const std::string& provenance, int kmax, int cap,
                              std::vector<int> h_expected) {
  return Expectation{
      "cohomology_dims", provenance,
      [kmax, cap, h_expected](const LieAlgebroid& a) -> ExpectationResult {
        auto rows = cohomology_dims(a, kmax, SliceSpec::uniform(cap));
        std::ostringstream got;
        bool pass = true;
        for (int k = 0; k <= kmax; ++k) {
          got << (k ? "," : "") << rows[k].dim_h;
          pass = pass && rows[k].dim_h == h_expected[k];
        }
        return {"cohomology_dims", "", pass, "dim H = [" + got.str() + "]"};
      }};
}

Expectation expect_h0_h1(const std::string& provenance, int center_dim,
                         int der_dim, int inn_dim) {
  return Expectation{
      "h0_h1", provenance,
      [center_dim, der_dim, inn_dim](const LieAlgebroid& a) -> ExpectationResult {
        auto c = h0(a, SliceSpec::uniform(0));
        auto o = h1(a, SliceSpec::uniform(0));
        bool pass = c.dim == center_dim && o.der_dim == der_dim &&
                    o.inn_dim == inn_dim &&
                    o.h1_dim == der_dim - inn_dim && o.anchor_identity_ok;
        std::ostringstream d;
        d << "center=" << c.dim << " der=" << o.der_dim << " inn=" << o.inn_dim
          << " h1=" << o.h1_dim;
        return {"h0_h1", "", pass, d.str()};
      }};
}

Expectation expect_delta_squared(const std::string& provenance, int cap,
                                 int kmax) {
  return Expectation{
      "delta_squared_zero", provenance,
      [cap, kmax](const LieAlgebroid& a) -> ExpectationResult {
        int checked = 0;
        for (int k = 0; k <= kmax; ++k)
          for (const auto& atom : slice_basis(a, k, cap)) {
            MultiDerivation d = atom_cochain(a, k, atom);
            if (!delta(a, delta(a, d)).is_zero())
              return {"delta_squared_zero", "", false,
                      "delta^2 != 0 at degree " + std::to_string(k)};
            ++checked;
          }
        return {"delta_squared_zero", "", true,
                std::to_string(checked) + " basis cochains"};
      }};
}

Expectation expect_slice_rigidity(const std::string& provenance, int cap) {
  return Expectation{
      "slice_rigidity", provenance,
      [cap](const LieAlgebroid& a) -> ExpectationResult {
        SliceSpec slice = SliceSpec::uniform(cap);
        auto cocycles = cocycle_basis(a, 2, slice);
        for (const auto& z : cocycles) {
          auto prim = coboundary_check(a, z, slice);
          if (!prim)
            return {"slice_rigidity", "", false, "closed 2-cochain with no primitive"};
          if (!(delta(a, *prim) - z).is_zero())
            return {"slice_rigidity", "", false, "primitive does not reproduce the cocycle"};
        }
        return {"slice_rigidity", "", true,
                std::to_string(cocycles.size()) + " closed 2-cochains, all exact"};
      }};
}

Expectation expect_symbol_identity(const std::string& provenance, int count) {
  return Expectation{
      "symbol_identity", provenance,
      [count](const LieAlgebroid& a) -> ExpectationResult {
        for (int i = 0; i < count; ++i) {
          int k = 1 + (i % 2);
          MultiDerivation d = seeded_random_cochain(a, k, 2, 7000 + i);
          // sigma_{delta D} = delta(sigma_D) + (-1)^{k+1} a o D
          TmCochain probed = delta_symbol_by_probe(a, d);
          TmCochain rhs = delta_on_symbol(a, TmCochain::symbol_of(d));
          TmCochain ad = TmCochain::anchor_compose(a, d);
          TmCochain corr = (k + 1) % 2 == 0 ? ad : ad.scaled(Rational(-1));
          if (!((probed - rhs) - corr).is_zero())
            return {"symbol_identity", "", false, "identity failed at degree " + std::to_string(k)};
        }
        return {"symbol_identity", "", true, std::to_string(count) + " seeded cochains"};
      }};
}

Expectation expect_conjugation(const std::string& provenance, int count) {
  return Expectation{
      "jet_conjugation", provenance,
      [count](const LieAlgebroid& a) -> ExpectationResult {
        for (int i = 0; i < count; ++i) {
          int k = i % 3;
          MultiDerivation d = seeded_random_cochain(a, k, 1, 9100 + i);
          MultiDerivation via_jet =
              to_multiderivation(a, d_jet_direct(a, to_jet_cochain(d)));
          if (!(via_jet - delta(a, d)).is_zero())
            return {"jet_conjugation", "", false, "direct coboundary disagrees with delta"};
        }
        return {"jet_conjugation", "", true, std::to_string(count) + " seeded cochains"};
      }};
}

Expectation expect_omega_criterion(const std::string& provenance) {
  return Expectation{
      "central_pair_criterion", provenance,
      [](const LieAlgebroid& h4) -> ExpectationResult {
        LieAlgebroid g = lie_algebra("so3", 3, so3_constants());
        int agree = 0, closed = 0;
        for (const auto& dmat : endomorphism_grid3()) {
          MultiDerivation omega = central_pair_cochain(h4, dmat);
          bool is_closed = cocycle_check(h4, omega);
          std::vector<std::vector<Poly>> n(3, std::vector<Poly>(3, Poly::zero(0)));
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) n[i][j] = Poly::constant(0, dmat[i][j]);
          bool is_der =
              delta(g, MultiDerivation::from_endomorphism(g, n)).is_zero();
          if (is_closed != is_der)
            return {"central_pair_criterion", "", false,
                    "closedness disagrees with the derivation property"};
          ++agree;
          if (is_closed) ++closed;
        }
        std::ostringstream d;
        d << agree << " endomorphisms, " << closed << " closed";
        return {"central_pair_criterion", "", true, d.str()};
      }};
}

Expectation expect_nijenhuis_scalar(const std::string& provenance) {
  return Expectation{
      "scalar_nijenhuis_trivial", provenance,
      [](const LieAlgebroid& a) -> ExpectationResult {
        std::vector<std::vector<Poly>> n(
            a.rank(), std::vector<Poly>(a.rank(), a.zero_poly()));
        for (int i = 0; i < a.rank(); ++i)
          n[i][i] = Poly::constant(a.nvars(), Rational(2));
        auto rep = triviality_check(a, n);
        MultiDerivation d = nijenhuis_cochain(a, n);
        bool scaled_bracket =
            (d - MultiDerivation::bracket_cochain(a).scaled(Rational(2))).is_zero();
        bool pass = rep.torsion_zero && rep.identity_holds && scaled_bracket &&
                    cocycle_check(a, d);
        return {"scalar_nijenhuis_trivial", "", pass,
                pass ? "torsion 0; deformation trivialized by Id+tN" : "failed"};
      }};
}

Expectation expect_quadratic_equivalence(const std::string& provenance) {
  return Expectation{
      "quadratic_poisson_equivalence", provenance,
      [](const LieAlgebroid& arena) -> ExpectationResult {
        Multivector pi1 = lie_poisson_bivector(so3_constants());
        int compatible = 0, poisson = 0, total = 0;
        for (const auto& c : quadratic_candidate_grid()) {
          Multivector pi2 = quadratic_candidate(c);
          LieAlgebroid cot2 = cotangent_algebroid(pi2);
          MultiDerivation omega = MultiDerivation::bracket_cochain(cot2);
          bool closed = cocycle_check(arena, omega);
          bool compat = schouten(pi1, pi2).is_zero();
          bool valid = cot2.validate().ok;
          bool self = schouten(pi2, pi2).is_zero();
          if (closed != compat || valid != self)
            return {"quadratic_poisson_equivalence", "", false,
                    "equivalence broke on a candidate"};
          ++total;
          if (compat) ++compatible;
          if (self) ++poisson;
        }
        std::ostringstream d;
        d << total << " candidates, " << compatible << " compatible, "
          << poisson << " Poisson";
        return {"quadratic_poisson_equivalence", "", true, d.str()};
      }};
}

std::vector<ExampleEntry> build_gallery() {
  std::vector<ExampleEntry> g;

  g.push_back({"abelian(2)",
               [] { return lie_algebra("abelian(2)", 2, abelian_constants(2)); },
               {expect_validate("TRIVIAL"),
                expect_cohomology("TRIVIAL", 2, 0, {2, 4, 2}),
                expect_h0_h1("TRIVIAL", 2, 4, 0)}});

  g.push_back({"abelian(3)",
               [] { return lie_algebra("abelian(3)", 3, abelian_constants(3)); },
               {expect_validate("TRIVIAL"),
                expect_cohomology("TRIVIAL", 3, 0, {3, 9, 9, 3}),
                expect_h0_h1("TRIVIAL", 3, 9, 0)}});

  g.push_back({"sl2", [] { return lie_algebra("sl2", 3, sl2_constants()); },
               {expect_validate("DERIVED"),
                expect_cohomology("DERIVED", 3, 0, {0, 0, 0, 0}),
                expect_h0_h1("DERIVED", 0, 3, 3),
                expect_delta_squared("TRIVIAL", 0, 3)}});

  g.push_back({"so3", [] { return lie_algebra("so3", 3, so3_constants()); },
               {expect_validate("DERIVED"),
                expect_cohomology("DERIVED", 3, 0, {0, 0, 0, 0}),
                expect_h0_h1("DERIVED", 0, 3, 3)}});

  g.push_back(
      {"heisenberg",
       [] { return lie_algebra("heisenberg", 3, heisenberg_constants()); },
       {expect_validate("TRIVIAL"),
        expect_cohomology("DERIVED", 1, 0, {1, 4}),
        expect_h0_h1("DERIVED", 1, 6, 2)}});

  g.push_back({"tangent(1)", [] { return tangent_algebroid(1); },
               {expect_validate("TRIVIAL"),
                expect_delta_squared("TRIVIAL", 1, 3),
                expect_slice_rigidity("PAPER", 1)}});

  g.push_back({"tangent(2)", [] { return tangent_algebroid(2); },
               {expect_validate("TRIVIAL"),
                expect_delta_squared("TRIVIAL", 1, 3),
                expect_slice_rigidity("PAPER", 1)}});

  g.push_back({"lie_poisson(so3)",
               [] { return lie_poisson("so3", so3_constants()); },
               {expect_validate("DERIVED"),
                expect_symbol_identity("DERIVED", 6),
                expect_conjugation("PAPER", 6),
                expect_delta_squared("TRIVIAL", 1, 2)}});

  g.push_back({"h4_central",
               [] {
                 return direct_sum_with_center(
                     lie_algebra("so3", 3, so3_constants()), 1);
               },
               {expect_validate("TRIVIAL"), expect_omega_criterion("PAPER")}});

  g.push_back({"nijenhuis_scalar",
               [] { return lie_algebra("sl2", 3, sl2_constants()); },
               {expect_validate("DERIVED"),
                expect_nijenhuis_scalar("PAPER")}});

  g.push_back({"quadratic_poisson_candidates",
               [] {
                 return cotangent_algebroid(lie_poisson_bivector(so3_constants()))
                     .renamed("cotangent(lie_poisson(so3))");
               },
               {expect_validate("DERIVED"),
                expect_quadratic_equivalence("PAPER")}});

  return g;
}

}  // namespace

const std::vector<ExampleEntry>& gallery() {
  static const std::vector<ExampleEntry> g = build_gallery();
  return g;
}

std::vector<std::string> list_examples() {
  std::vector<std::string> names;
  for (const auto& e : gallery()) names.push_back(e.name);
  return names;
}

const ExampleEntry& find_example(const std::string& name) {
  for (const auto& e : gallery())
    if (e.name == name) return e;
  throw error("unknown example: " + name);
}

LieAlgebroid load_example(const std::string& name) {
  return find_example(name).make();
}

ExampleReport run_expectations(const std::string& name) {
  const ExampleEntry& entry = find_example(name);
  LieAlgebroid a = entry.make();
  ExampleReport rep;
  rep.name = name;
  for (const auto& e : entry.expectations) {
    ExpectationResult r = e.run(a);
    r.name = e.name;
    r.provenance = e.provenance;
    rep.all_pass = rep.all_pass && r.pass;
    rep.results.push_back(std::move(r));
  }
  return rep;
}

Multivector quadratic_candidate(const std::array<int, 9>& c) {
  const int n = 3;
  std::vector<Poly> v(3, Poly::zero(n));
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m) {
      if (c[3 * k + m] == 0) continue;
      Monomial mono{std::vector<int>(n, 0)};
      mono.e[m] = 2;
      v[k] += Poly::term(n, mono, Rational(c[3 * k + m]));
    }
  Multivector pi(n, 2);
  // pi = V_1 d2^d3 - V_2 d1^d3 + V_3 d1^d2
  if (!v[0].is_zero()) pi.set_component({1, 2}, v[0]);
  if (!v[1].is_zero()) pi.set_component({0, 2}, -v[1]);
  if (!v[2].is_zero()) pi.set_component({0, 1}, v[2]);
  return pi;
}

std::vector<std::array<int, 9>> quadratic_candidate_grid() {
  std::vector<std::array<int, 9>> out;
  out.reserve(19683);
  std::array<int, 9> c{};
  std::function<void(int)> rec = [&](int pos) {
    if (pos == 9) {
      out.push_back(c);
      return;
    }
    for (int v = -1; v <= 1; ++v) {
      c[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

MultiDerivation central_pair_cochain(const LieAlgebroid& h4,
                                     const std::vector<std::vector<Rational>>& dmat) {
  if (h4.rank() != 4 || h4.base_dim() != 0)
    throw shape_error("central pair cochain expects a rank-4 Lie algebra");
  MultiDerivation d = MultiDerivation::zero(h4, 2);
  for (int i = 0; i < 3; ++i)
    for (int m = 0; m < 3; ++m)
      if (!dmat[i][m].is_zero())
        d.set_coeff({i, 3}, m, Poly::constant(0, dmat[i][m]));
  return d;
}

std::vector<std::vector<std::vector<Rational>>> endomorphism_grid3() {
  std::vector<std::vector<std::vector<Rational>>> out;
  out.reserve(19683);
  std::vector<std::vector<Rational>> d(3, std::vector<Rational>(3, Rational(0)));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == 9) {
      out.push_back(d);
      return;
    }
    for (int v = -1; v <= 1; ++v) {
      d[pos / 3][pos % 3] = Rational(v);
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace algebroid
