#ifndef ALGEBROID_ALGEBROID_HPP
#define ALGEBROID_ALGEBROID_HPP

#include <string>
#include <vector>

#include "algebroid/poly.hpp"

namespace algebroid {

/// Section of the bundle: r polynomial components on the global frame.
struct Section {
  std::vector<Poly> comp;

  bool is_zero() const;
  bool operator==(const Section& o) const { return comp == o.comp; }
  Section operator-() const;
  Section& operator+=(const Section& o);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  Section operator-(const Section& o) const;
  Section scaled(const Rational& c) const;
  Section scaled(const Poly& f) const;
};

/// Polynomial vector field on the base: n components.
struct PolyVectorField {
  std::vector<Poly> comp;

  bool is_zero() const;
  bool operator==(const PolyVectorField& o) const { return comp == o.comp; }
  PolyVectorField operator-() const;
  PolyVectorField& operator+=(const PolyVectorField& o);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) {
    return a += b;
  }
  PolyVectorField operator-(const PolyVectorField& o) const;
  PolyVectorField scaled(const Poly& f) const;
  /// Directional derivative V(f).
  Poly apply(const Poly& f) const;
};

/// Lie bracket of vector fields, [V,W]^mu = V(W^mu) - W(V^mu).
PolyVectorField vf_bracket(const PolyVectorField& v, const PolyVectorField& w);

struct AxiomWitness {
  std::vector<int> indices;  // 0-based frame/coordinate indices
  Poly residual;
};

struct AxiomCheck {
  std::string axiom;
  bool ok = true;
  std::vector<AxiomWitness> witnesses;
};

struct ValidationReport {
  bool ok = true;
  std::vector<AxiomCheck> checks;

  const AxiomCheck* find(const std::string& axiom) const;
};

/// Lie algebroid over a trivialized rank-r bundle on a polynomial base of
/// dimension n: structure functions c[i][j] (components of [e_i,e_j]) and
/// anchor coefficients a[i] (components of a(e_i)). When `has_param` is set
/// all polynomials live in the t-extended ring (t last); t is never
/// differentiated by anchors.
class LieAlgebroid {
 public:
  LieAlgebroid(std::string name, int base_dim, int rank,
               std::vector<std::vector<std::vector<Poly>>> structure,
               std::vector<std::vector<Poly>> anchor, bool has_param = false);

  const std::string& name() const { return name_; }
  int base_dim() const { return base_dim_; }
  int rank() const { return rank_; }
  bool has_param() const { return has_param_; }
  int nvars() const { return base_dim_ + (has_param_ ? 1 : 0); }

  /// Components of [e_i, e_j].
  const std::vector<Poly>& structure(int i, int j) const { return c_[i][j]; }
  /// Components of a(e_i).
  const std::vector<Poly>& anchor_row(int i) const { return a_[i]; }

  Section zero_section() const;
  Section frame(int i) const;
  PolyVectorField zero_field() const;
  Poly zero_poly() const { return Poly::zero(nvars()); }

  /// Checks skewness, the Jacobi identity on frame triples and the
  /// anchor-morphism identity, with concrete witnesses on failure. Together
  /// with the built-in Leibniz evaluation these certify the axioms on all
  /// polynomial sections.
  ValidationReport validate() const;

  /// Full Leibniz expansion of [X, Y].
  Section bracket(const Section& x, const Section& y) const;
  PolyVectorField anchor_apply(const Section& x) const;

  /// Same structure data embedded in the t-extended ring.
  LieAlgebroid extended_with_param() const;

  LieAlgebroid renamed(std::string name) const {
    LieAlgebroid g = *this;
    g.name_ = std::move(name);
    return g;
  }

 private:
  void check_section(const Section& x) const;

  std::string name_;
  int base_dim_, rank_;
  bool has_param_;
  std::vector<std::vector<std::vector<Poly>>> c_;  // [i][j] -> r components
  std::vector<std::vector<Poly>> a_;               // [i] -> n components
};

/// Thrown by the named constructors when the input data fails validation.
struct validation_error : error {
  validation_error(std::string msg, ValidationReport r)
      : error(std::move(msg)), report(std::move(r)) {}
  ValidationReport report;
};

/// Lie algebra with constant structure coefficients c[i][j][k] (base_dim 0).
LieAlgebroid lie_algebra(const std::string& name, int rank,
                         const std::vector<std::vector<std::vector<Rational>>>& c);
/// Tangent algebroid of R^n: rank n, zero bracket, identity anchor.
LieAlgebroid tangent_algebroid(int n);
/// g extended by an abelian direct summand (central since [g, extra] = 0).
LieAlgebroid direct_sum_with_center(const LieAlgebroid& g, int extra_rank);

/// Structure constants of common Lie algebras, indexed [i][j][k].
std::vector<std::vector<std::vector<Rational>>> sl2_constants();
std::vector<std::vector<std::vector<Rational>>> so3_constants();
std::vector<std::vector<std::vector<Rational>>> heisenberg_constants();
std::vector<std::vector<std::vector<Rational>>> abelian_constants(int rank);

}  // namespace algebroid

#endif
