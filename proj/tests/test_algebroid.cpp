#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebroid/errors.hpp"
#include "algebroid/multivector.hpp"
#include "support.hpp"

using namespace algebroid;
using namespace algebroid::testing;

namespace {

LieAlgebroid raw_algebra(int rank, const std::vector<std::vector<std::vector<Rational>>>& c) {
  std::vector<std::vector<std::vector<Poly>>> cp(
      rank, std::vector<std::vector<Poly>>(rank, std::vector<Poly>(rank, Poly::zero(0))));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) cp[i][j][k] = Poly::constant(0, c[i][j][k]);
  return LieAlgebroid("raw", 0, rank, std::move(cp),
                      std::vector<std::vector<Poly>>(rank));
}

}  // namespace

TEST_CASE("validate: abelian and sl2 pass") {
  CHECK(lie_algebra("ab2", 2, abelian_constants(2)).validate().ok);
  CHECK(lie_algebra("sl2", 3, sl2_constants()).validate().ok);
  CHECK(lie_algebra("so3", 3, so3_constants()).validate().ok);
  CHECK(lie_algebra("h3", 3, heisenberg_constants()).validate().ok);
}

TEST_CASE("validate: broken skewness is witnessed") {
  auto c = abelian_constants(3);
  c[0][1][2] = Rational(1);
  c[1][0][2] = Rational(1);  // not skew
  auto rep = raw_algebra(3, c).validate();
  CHECK_FALSE(rep.ok);
  auto* skew = rep.find("skewness");
  REQUIRE(skew != nullptr);
  CHECK_FALSE(skew->ok);
  REQUIRE_FALSE(skew->witnesses.empty());
  CHECK(skew->witnesses[0].indices == std::vector<int>{0, 1, 2});
}

TEST_CASE("validate: broken Jacobi is witnessed") {
  auto c = abelian_constants(3);
  // [e1,e2] = e3 and [e1,e3] = e1 leave the Jacobi cycle with a -e3 residue
  c[0][1][2] = Rational(1);
  c[1][0][2] = Rational(-1);
  c[0][2][0] = Rational(1);
  c[2][0][0] = Rational(-1);
  auto rep = raw_algebra(3, c).validate();
  CHECK_FALSE(rep.ok);
  auto* jac = rep.find("jacobi");
  REQUIRE(jac != nullptr);
  CHECK_FALSE(jac->ok);
  CHECK_THROWS_AS(lie_algebra("bad", 3, c), validation_error);
}

TEST_CASE("bracket on structure constants") {
  LieAlgebroid sl2 = lie_algebra("sl2", 3, sl2_constants());
  // [e, f] = h with basis order (h, e, f)
  Section ef = sl2.bracket(sl2.frame(1), sl2.frame(2));
  CHECK(ef == sl2.frame(0));
  // abelian: everything brackets to zero
  LieAlgebroid ab = lie_algebra("ab", 2, abelian_constants(2));
  PolyGen gen(3);
  CHECK(ab.bracket(gen.section(ab, 0), gen.section(ab, 0)).is_zero());
}

TEST_CASE("bracket on the tangent algebroid") {
  LieAlgebroid t1 = tangent_algebroid(1);
  // [x d, d] = -d
  Section X{{pvar(1, 0)}}, Y{{pconst(1, 1)}};
  CHECK(t1.bracket(X, Y) == Section{{pconst(1, -1)}});
}

TEST_CASE("anchor evaluation") {
  LieAlgebroid ab = lie_algebra("ab", 2, abelian_constants(2));
  CHECK(ab.anchor_apply(ab.frame(0)).comp.empty());

  LieAlgebroid t2 = tangent_algebroid(2);
  PolyVectorField v = t2.anchor_apply(t2.frame(0));
  CHECK(v.comp[0] == pconst(2, 1));
  CHECK(v.comp[1].is_zero());

  LieAlgebroid lp = lie_poisson("so3", so3_constants());
  PolyVectorField w = lp.anchor_apply(lp.frame(0));
  CHECK(w.comp[0].is_zero());
  CHECK(w.comp[1] == pvar(3, 2));
  CHECK(w.comp[2] == -pvar(3, 1));
}

TEST_CASE("bracket properties on random sections") {
  std::vector<LieAlgebroid> algs = {lie_algebra("sl2", 3, sl2_constants()),
                                    tangent_algebroid(2),
                                    lie_poisson("so3", so3_constants())};
  PolyGen gen(11);
  for (const auto& a : algs) {
    for (int trial = 0; trial < 12; ++trial) {
      Section x = gen.section(a, 2), y = gen.section(a, 2), z = gen.section(a, 2);
      // skew
      CHECK((a.bracket(x, y) + a.bracket(y, x)).is_zero());
      // Leibniz: [X, fY] = f [X,Y] + a(X)(f) Y
      Poly f = gen.poly(a.nvars(), 2);
      Section lhs = a.bracket(x, y.scaled(f));
      Section rhs = a.bracket(x, y).scaled(f) +
                    y.scaled(a.anchor_apply(x).apply(f));
      CHECK((lhs - rhs).is_zero());
      // anchor is a morphism
      PolyVectorField am = a.anchor_apply(a.bracket(x, y)) -
                           vf_bracket(a.anchor_apply(x), a.anchor_apply(y));
      CHECK(am.is_zero());
      // Jacobi
      Section jac = a.bracket(a.bracket(x, y), z) +
                    a.bracket(a.bracket(y, z), x) +
                    a.bracket(a.bracket(z, x), y);
      CHECK(jac.is_zero());
    }
  }
}

TEST_CASE("schouten: pinned cases") {
  // constant bivector on R^2: [pi, pi] = 0
  Multivector pi(2, 2);
  pi.set_component({0, 1}, pconst(2, 1));
  CHECK(schouten(pi, pi).is_zero());

  // [v, f] = v(f)
  Multivector v = Multivector::vector_field(
      PolyVectorField{{pvar(2, 1), pconst(2, 0)}});  // x2 d1
  Multivector f = Multivector::function(2, pvar(2, 0) * pvar(2, 0));
  Multivector vf = schouten(v, f);
  CHECK(vf.degree() == 0);
  CHECK(vf.component({}) == (pvar(2, 1) * pvar(2, 0)).scaled(Rational(2)));

  // vector fields: matches the Lie bracket
  PolyVectorField a{{pvar(2, 0), Poly::zero(2)}};
  PolyVectorField b{{pconst(2, 1), pvar(2, 0) * pvar(2, 1)}};
  Multivector sb = schouten(Multivector::vector_field(a), Multivector::vector_field(b));
  PolyVectorField lie = vf_bracket(a, b);
  CHECK(sb == Multivector::vector_field(lie));

  // Lie-Poisson of so3 is Poisson
  CHECK(schouten(lie_poisson_bivector(so3_constants()),
                 lie_poisson_bivector(so3_constants()))
            .is_zero());
}

TEST_CASE("schouten: graded skew and Jacobi on low degrees") {
  PolyGen gen(19);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      auto rand_mv = [&](int deg) {
        Multivector m(n, deg);
        std::vector<int> idx(deg);
        std::function<void(int, int)> rec = [&](int pos, int start) {
          if (pos == deg) {
            Poly p = gen.poly(n, 2);
            if (!p.is_zero()) m.set_component(idx, p);
            return;
          }
          for (int v = start; v < n; ++v) {
            idx[pos] = v;
            rec(pos + 1, v + 1);
          }
        };
        rec(0, 0);
        return m;
      };
      int dp = gen.small_int(1, 2), dq = gen.small_int(1, 2), dr = gen.small_int(0, 1);
      Multivector p = rand_mv(dp), q = rand_mv(dq), r = rand_mv(dr);
      // graded skew-symmetry
      int s = ((dp - 1) * (dq - 1)) % 2 == 0 ? -1 : 1;
      Multivector lhs = schouten(p, q);
      Multivector rhs = schouten(q, p).scaled(Rational(s));
      CHECK(lhs == rhs);
      // graded Jacobi:
      // [p,[q,r]] = [[p,q],r] + (-1)^{(p-1)(q-1)} [q,[p,r]]
      Multivector j1 = schouten(p, schouten(q, r));
      Multivector j2 = schouten(schouten(p, q), r);
      int sg = ((dp - 1) * (dq - 1)) % 2 == 0 ? 1 : -1;
      Multivector j3 = schouten(q, schouten(p, r)).scaled(Rational(sg));
      CHECK(j1 == j2 + j3);
    }
  }
}

TEST_CASE("cotangent algebroid of a bivector") {
  // pi = 0: abelian with zero anchor
  Multivector z(3, 2);
  LieAlgebroid cz = cotangent_algebroid(z);
  CHECK(cz.validate().ok);
  CHECK(cz.bracket(cz.frame(0), cz.frame(1)).is_zero());
  CHECK(cz.anchor_apply(cz.frame(0)).is_zero());

  // Lie-Poisson: frame covector brackets recover the structure constants
  LieAlgebroid lp = lie_poisson("so3", so3_constants());
  Section b = lp.bracket(lp.frame(0), lp.frame(1));
  CHECK(b == lp.frame(2));
  CHECK(lp.validate().ok);

  // a non-Poisson bivector fails Jacobi
  Multivector bad(3, 2);
  bad.set_component({0, 1}, pvar(3, 0));
  bad.set_component({1, 2}, pvar(3, 1));
  bad.set_component({0, 2}, -pvar(3, 2));
  CHECK_FALSE(schouten(bad, bad).is_zero());
  auto rep = cotangent_algebroid(bad).validate();
  CHECK_FALSE(rep.ok);
  auto* jac = rep.find("jacobi");
  REQUIRE(jac != nullptr);
  CHECK_FALSE(jac->ok);
}

TEST_CASE("cotangent validates exactly when the bivector is Poisson") {
  PolyGen gen(29);
  int poisson_seen = 0, non_poisson_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Multivector pi(3, 2);
    for (auto idx : {std::vector<int>{0, 1}, {0, 2}, {1, 2}}) {
      Poly p = gen.poly(3, 1, 2);
      if (!p.is_zero()) pi.set_component(idx, p);
    }
    bool poisson = schouten(pi, pi).is_zero();
    bool valid = cotangent_algebroid(pi).validate().ok;
    CHECK(poisson == valid);
    (poisson ? poisson_seen : non_poisson_seen)++;
  }
  CHECK(poisson_seen > 0);
  CHECK(non_poisson_seen > 0);
}

TEST_CASE("constructors") {
  CHECK(lie_algebra("ab2", 2, abelian_constants(2)).base_dim() == 0);
  CHECK(tangent_algebroid(2).validate().ok);
  CHECK(lie_poisson("so3", so3_constants()).validate().ok);
  LieAlgebroid h4 = direct_sum_with_center(lie_algebra("so3", 3, so3_constants()), 1);
  CHECK(h4.rank() == 4);
  CHECK(h4.validate().ok);
  CHECK(h4.bracket(h4.frame(0), h4.frame(3)).is_zero());
}
