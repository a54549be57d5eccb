#ifndef ALGEBROID_POLY_HPP
#define ALGEBROID_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "algebroid/rational.hpp"

namespace algebroid {

/// Exponent vector. Its length must match the variable count of the owning
/// polynomial.
struct Monomial {
  std::vector<int> e;

  int total_degree() const;
  bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Graded-lexicographic order: total degree first, ties broken by the first
/// differing exponent (x1 > x2 > ...). Fixed globally so serialization is
/// bit-stable.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Degree of the zero polynomial.
inline constexpr int kZeroPolyDegree = -1;

/// Sparse multivariate polynomial over Q. The variable count is part of the
/// value; mixing arities throws ring_mismatch_error. No zero terms are stored.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  static Poly term(int nvars, const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// kZeroPolyDegree for the zero polynomial.
  int degree() const;
  const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  /// Constant term.
  Rational constant_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rational& c) const;

  /// Formal partial derivative. Throws shape_error for an out-of-range index.
  Poly partial(int var) const;

  /// Same polynomial in a ring with extra trailing variables.
  Poly extended(int new_nvars) const;
  /// Coefficient of var^power, as a polynomial in the ring without `var`.
  /// Only the last variable may be extracted.
  Poly coeff_of_power(int var, int power) const;
  /// Largest power of `var` present (0 for the zero polynomial).
  int max_power(int var) const;
  /// Substitutes 0 for the last variable and drops it from the ring.
  Poly at_last_var_zero() const;

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Human-readable form, graded-lex descending. `names` may be empty, in
  /// which case x1..xn is used.
  std::string pretty(const std::vector<std::string>& names = {}) const;

 private:
  void check_ring(const Poly& o) const;
  void add_term(const Monomial& m, const Rational& c);

  int nvars_;
  std::map<Monomial, Rational, GrlexLess> terms_;
};

/// "x1", ..., "xn" plus "t" when the ring carries the deformation parameter.
std::vector<std::string> default_var_names(int base_dim, bool has_param);

}  // namespace algebroid

#endif
