#ifndef ALGEBROID_MULTIVECTOR_HPP
#define ALGEBROID_MULTIVECTOR_HPP

#include <map>
#include <vector>

#include "algebroid/algebroid.hpp"
#include "algebroid/poly.hpp"

namespace algebroid {

/// Polynomial multivector field on R^n: degree-p skew contravariant tensor,
/// stored on strictly increasing index tuples.
class Multivector {
 public:
  Multivector(int n, int degree);

  static Multivector zero(int n, int degree) { return Multivector(n, degree); }
  /// Degree-0 multivector (a function).
  static Multivector function(int n, const Poly& f);
  static Multivector vector_field(const PolyVectorField& v);

  int dim() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return comp_.empty(); }

  /// Component on a strictly increasing tuple.
  Poly component(const std::vector<int>& idx) const;
  /// Signed lookup on an arbitrary tuple (0 on repeats).
  Poly component_signed(std::vector<int> idx) const;
  void set_component(const std::vector<int>& idx, const Poly& p);
  const std::map<std::vector<int>, Poly>& components() const { return comp_; }

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) {
    return a += b;
  }
  Multivector operator-(const Multivector& o) const;
  Multivector scaled(const Rational& c) const;
  bool operator==(const Multivector& o) const;

 private:
  int n_, degree_;
  std::map<std::vector<int>, Poly> comp_;
};

/// Schouten-Nijenhuis bracket; degree p+q-1 (clamped to n, in which case the
/// result is the zero multivector). Satisfies
/// [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P], extends the Lie bracket of vector
/// fields, and [X,f] = X(f).
Multivector schouten(const Multivector& p, const Multivector& q);

/// Cotangent algebroid of a bivector on R^n: rank n, frame dx^i, Koszul
/// bracket on frame covectors, anchor pi-sharp. Not validated here; the
/// result is a Lie algebroid precisely when schouten(pi, pi) = 0.
LieAlgebroid cotangent_algebroid(const Multivector& pi);

/// The linear bivector on g* dual to a Lie algebra, as a multivector.
Multivector lie_poisson_bivector(
    const std::vector<std::vector<std::vector<Rational>>>& constants);

/// Cotangent algebroid of the Lie-Poisson structure of g; validated.
LieAlgebroid lie_poisson(const std::string& name,
                         const std::vector<std::vector<std::vector<Rational>>>& constants);

}  // namespace algebroid

#endif
