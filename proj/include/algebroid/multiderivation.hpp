#ifndef ALGEBROID_MULTIDERIVATION_HPP
#define ALGEBROID_MULTIDERIVATION_HPP

#include <functional>
#include <map>
#include <vector>

#include "algebroid/algebroid.hpp"

namespace algebroid {

/// Degree-k cochain of the deformation complex: skew coefficient tensor on
/// the frame (value components of D(e_{i1},...,e_{ik})) plus its symbol
/// (vector-field components of sigma_D(e_{i1},...,e_{ik-1})). Evaluation on
/// sections satisfies the Leibniz rule by construction. Degree 0 is a
/// section and carries no symbol; over a 0-dimensional base the symbol is
/// identically absent.
class MultiDerivation {
 public:
  MultiDerivation(int degree, int rank, int base_dim, int nvars);

  static MultiDerivation zero(const LieAlgebroid& a, int degree);
  /// The bracket itself as a 2-cochain: coefficients c, symbol a.
  static MultiDerivation bracket_cochain(const LieAlgebroid& a);
  /// A section as a 0-cochain.
  static MultiDerivation from_section(const LieAlgebroid& a, const Section& x);
  /// A bundle endomorphism as a symbol-free 1-cochain.
  static MultiDerivation from_endomorphism(const LieAlgebroid& a,
                                           const std::vector<std::vector<Poly>>& n);

  int degree() const { return degree_; }
  int rank() const { return rank_; }
  int base_dim() const { return base_dim_; }
  int nvars() const { return nvars_; }

  const std::map<std::vector<int>, std::vector<Poly>>& coeffs() const {
    return coeffs_;
  }
  const std::map<std::vector<int>, std::vector<Poly>>& symbol() const {
    return symbol_;
  }

  /// Value components on a strictly increasing tuple.
  std::vector<Poly> coeff(const std::vector<int>& tuple) const;
  std::vector<Poly> symbol_at(const std::vector<int>& tuple) const;
  void set_coeff(const std::vector<int>& tuple, int m, const Poly& p);
  void set_symbol(const std::vector<int>& tuple, int mu, const Poly& p);

  /// Section view of a degree-0 cochain.
  Section as_section() const;
  /// Symbol of a degree-1 cochain as a single vector field.
  PolyVectorField symbol_field() const;

  bool is_zero() const { return coeffs_.empty() && symbol_.empty(); }
  bool operator==(const MultiDerivation& o) const;
  MultiDerivation operator-() const;
  MultiDerivation& operator+=(const MultiDerivation& o);
  friend MultiDerivation operator+(MultiDerivation a, const MultiDerivation& b) {
    return a += b;
  }
  MultiDerivation operator-(const MultiDerivation& o) const;
  MultiDerivation scaled(const Rational& c) const;

 private:
  void check_tuple(const std::vector<int>& tuple, size_t len) const;

  int degree_, rank_, base_dim_, nvars_;
  std::map<std::vector<int>, std::vector<Poly>> coeffs_;
  std::map<std::vector<int>, std::vector<Poly>> symbol_;
};

/// Hom(wedge^k A, TM)-valued cochain data stored as frame values. A genuine
/// bundle map when produced from a symbol; frame values of an anchor-composed
/// cochain otherwise.
class TmCochain {
 public:
  TmCochain(int degree, int rank, int base_dim, int nvars);

  static TmCochain zero(const LieAlgebroid& a, int degree);
  /// The symbol of D as a degree-(k-1) bundle map.
  static TmCochain symbol_of(const MultiDerivation& d);
  /// Frame values of a(D(...)).
  static TmCochain anchor_compose(const LieAlgebroid& a, const MultiDerivation& d);

  int degree() const { return degree_; }
  const std::map<std::vector<int>, std::vector<Poly>>& components() const {
    return comp_;
  }
  std::vector<Poly> at(const std::vector<int>& tuple) const;
  void set(const std::vector<int>& tuple, int mu, const Poly& p);

  bool is_zero() const { return comp_.empty(); }
  bool operator==(const TmCochain& o) const;
  TmCochain operator-(const TmCochain& o) const;
  TmCochain scaled(const Rational& c) const;

 private:
  int degree_, rank_, base_dim_, nvars_;
  std::map<std::vector<int>, std::vector<Poly>> comp_;
};

/// Multilinear Leibniz evaluation of D on sections: the frame-coefficient
/// determinant term plus, for each slot s (1-based), the symbol acting on
/// that slot's coefficients with sign (-1)^{k-s}.
Section evaluate(const LieAlgebroid& a, const MultiDerivation& d,
                 const std::vector<Section>& args);

/// C-infinity-linear contraction of the symbol with k-1 sections.
PolyVectorField symbol_contract(const LieAlgebroid& a, const MultiDerivation& d,
                                const std::vector<Section>& args);

/// C-infinity-linear contraction of a TM-valued bundle map with k sections.
PolyVectorField tm_contract(const LieAlgebroid& a, const TmCochain& s,
                            const std::vector<Section>& args);

/// The deformation-complex coboundary formula evaluated on k+1 concrete
/// sections (not via the tensor of delta(d)).
Section delta_eval(const LieAlgebroid& a, const MultiDerivation& d,
                   const std::vector<Section>& args);

/// Coboundary of the deformation complex. Coefficients come from frame
/// evaluation of the coboundary formula; the symbol is
/// delta(sigma_D) + (-1)^{k+1} a o D.
MultiDerivation delta(const LieAlgebroid& a, const MultiDerivation& d);

/// Evaluator for TM-valued cochains of a given degree.
using TmMapFn = std::function<PolyVectorField(const std::vector<Section>&)>;

/// The TM-valued coboundary formula
///   sum_i (-1)^i [a(u_i), S(...)] + sum_{i<j} (-1)^{i+j} S([u_i,u_j], ...)
/// evaluated on in_degree+1 sections, with S evaluated honestly by `fn`.
PolyVectorField delta_tm_eval(const LieAlgebroid& a, int in_degree,
                              const TmMapFn& fn,
                              const std::vector<Section>& args);

/// Frame values of the TM-valued coboundary of a bundle map.
TmCochain delta_on_symbol(const LieAlgebroid& a, const TmCochain& s);

/// Symbol of delta(d) recovered independently, by probing the Leibniz defect
/// of the coboundary formula with coordinate functions. Must agree with the
/// symbol stored by delta(); exposed for cross-checking.
TmCochain delta_symbol_by_probe(const LieAlgebroid& a, const MultiDerivation& d);

/// D(D(e_i,e_j),e_l) + c.p. for every frame triple i<j<l; all zero iff the
/// 2-cochain defines a bracket satisfying the Jacobi identity on frames.
std::map<std::vector<int>, Section> jacobiator(const LieAlgebroid& a,
                                               const MultiDerivation& d);

/// delta(d) == 0, exactly.
bool cocycle_check(const LieAlgebroid& a, const MultiDerivation& d);

}  // namespace algebroid

#endif
