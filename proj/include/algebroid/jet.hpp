#ifndef ALGEBROID_JET_HPP
#define ALGEBROID_JET_HPP

#include "algebroid/cohomology.hpp"
#include "algebroid/multiderivation.hpp"

namespace algebroid {

/// Section of the jet bundle in the pair representation: the section part u
/// plus theta[k][mu] (the Hom(TM,A) part, sum of theta^k_mu dx^mu (x) e_k).
/// The module rule is f.(u, theta) = (f u, f theta - df (x) u).
struct JetSection {
  Section u;
  std::vector<std::vector<Poly>> theta;  // rank x base_dim

  bool is_zero() const;
  bool operator==(const JetSection& o) const {
    return u == o.u && theta == o.theta;
  }
  JetSection operator-() const;
  JetSection& operator+=(const JetSection& o);
  friend JetSection operator+(JetSection a, const JetSection& b) {
    return a += b;
  }
  JetSection operator-(const JetSection& o) const;
};

/// First-order differential operators on sections: degree-1 cochains whose
/// symbol is a single vector field.
using DerivationOp = MultiDerivation;

/// Cochain on the jet algebroid with values in A, carried through the
/// jet/multiderivation correspondence: the multiderivation body is the
/// stored form, mixed-argument evaluation is derived.
struct JetCochain {
  MultiDerivation body;

  int degree() const { return body.degree(); }
};

JetSection jet_zero(const LieAlgebroid& a);
/// The prolongation of X in pair form: (X, 0).
JetSection prolong(const LieAlgebroid& a, const Section& x);
/// A single Hom(TM,A) generator f dx^mu (x) e_k.
JetSection theta_jet(const LieAlgebroid& a, int k, int mu, const Poly& f);
/// The module action f.mu.
JetSection jet_scale(const LieAlgebroid& a, const Poly& f, const JetSection& m);

/// <(u,theta), d> = d(u) + theta(jd(d)).
Section jet_pairing(const LieAlgebroid& a, const JetSection& m,
                    const DerivationOp& d);

/// The representation: pi(u,theta)(w) = [u,w] - theta(a(w)), with symbol a(u).
DerivationOp pi_rep(const LieAlgebroid& a, const JetSection& m);

/// Bracket of the jet algebroid in pair form; its anchor is jd o pi.
JetSection jet_bracket(const LieAlgebroid& a, const JetSection& m,
                       const JetSection& n);

/// Lie derivative of a jet section along a first-order operator, defined by
/// <L_d mu, d'> = d<mu,d'> - <mu,[d,d']>.
JetSection jet_lie_derivative(const LieAlgebroid& a, const DerivationOp& d,
                              const JetSection& m);

/// Commutator of two first-order operators (a first-order operator).
DerivationOp op_commutator(const LieAlgebroid& a, const DerivationOp& d1,
                           const DerivationOp& d2);

JetCochain to_jet_cochain(const MultiDerivation& d);
/// Reads the body back through evaluation: coefficients from prolonged
/// frames, symbol from the dx (x) e probe slots.
MultiDerivation to_multiderivation(const LieAlgebroid& a, const JetCochain& c);

/// Evaluation on jet sections: the all-prolonged term is the body
/// evaluation, a single theta slot at position i contributes with sign
/// (-1)^{k-i} through the symbol, two or more theta slots give zero.
Section jet_evaluate(const LieAlgebroid& a, const JetCochain& c,
                     const std::vector<JetSection>& args);

/// Coboundary through the correspondence (the public path).
JetCochain d_jet(const LieAlgebroid& a, const JetCochain& c);

/// Direct Chevalley-Eilenberg formula with pi and the jet bracket on
/// pair-represented arguments; verification path for d_jet.
Section d_jet_direct_eval(const LieAlgebroid& a, const JetCochain& c,
                          const std::vector<JetSection>& args);
/// Reconstructs the full coboundary cochain from direct evaluations.
JetCochain d_jet_direct(const LieAlgebroid& a, const JetCochain& c);

/// Hom(wedge^k A, A) included as the symbol-free cochains.
JetCochain embed_hom(const MultiDerivation& phi);
/// The projection onto Hom(wedge^{k-1} A, TM).
TmCochain symbol_of(const JetCochain& c);
/// Right inverse of symbol_of with zero frame coefficients.
JetCochain lift_symbol(const LieAlgebroid& a, const TmCochain& lambda);

struct McWitness {
  std::string kind;  // "cocycle" | "cocycle_symbol" | "quadratic"
  std::vector<int> indices;
  Poly residual;
};

/// Maurer-Cartan check for a degree-2 cochain, decided through the two
/// deformation equations: the first-order (cocycle) residual and the
/// quadratic (jacobiator) residual.
struct McReport {
  bool cocycle_ok = true;
  bool quadratic_ok = true;
  bool mc_holds = true;
  bool rank1_extension = false;
  std::vector<McWitness> witnesses;
};

McReport mc_check(const LieAlgebroid& a, const JetCochain& c);

struct CenterResult {
  int dim = 0;
  std::vector<Section> basis;
};

/// H^0: sections with [u, e_i] = 0 for all i and a(u) = 0, solved exactly in
/// the slice by its own linear system (independent of the delta machinery).
CenterResult h0(const LieAlgebroid& a, const SliceSpec& slice);

struct OutResult {
  int der_dim = 0;
  int inn_dim = 0;
  int h1_dim = 0;
  std::vector<MultiDerivation> derivations;  // basis of the closed 1-cochains
  /// a(d(u)) + [a(u), jd(d)] = 0 verified on every computed derivation.
  bool anchor_identity_ok = true;
};

/// H^1 = Der/Inn in the slice.
OutResult h1(const LieAlgebroid& a, const SliceSpec& slice, int jobs = 1);

}  // namespace algebroid

#endif
