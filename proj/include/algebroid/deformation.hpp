#ifndef ALGEBROID_DEFORMATION_HPP
#define ALGEBROID_DEFORMATION_HPP

#include "algebroid/multiderivation.hpp"

namespace algebroid {

/// One-parameter family of brackets: an algebroid whose structure data lives
/// in the t-extended ring. Setting t = 0 recovers the original algebroid.
struct DeformedFamily {
  LieAlgebroid algebroid;

  /// The family member at t = 0, back in the base ring.
  LieAlgebroid at_zero() const;
  /// True when structure and anchor are (at most) linear in t.
  bool linear_in_t() const;
};

/// [X,Y]_t = [X,Y] + t D(X,Y), a_t = a + t sigma_D, for a degree-2 cochain.
DeformedFamily deform(const LieAlgebroid& a, const MultiDerivation& d);

/// Applies a bundle endomorphism (n[i] = components of N(e_i)) to a section.
Section apply_endomorphism(const std::vector<std::vector<Poly>>& n,
                           const Section& x);

struct FamilyWitness {
  std::string axiom;  // "skewness" | "jacobi" | "anchor_morphism"
  int t_power = 0;
  std::vector<int> indices;
  Poly residual;  // in the base ring
};

/// Axiom residuals of a family decomposed by powers of t. The t^1 component
/// of (jacobi, anchor_morphism) vanishes exactly when the first-order cocycle
/// is delta-closed; the t^2 jacobi component is the jacobiator of the
/// first-order cocycle when the family is linear in t.
struct FamilyReport {
  bool lie_for_all_t = true;
  bool linear_in_t = true;
  std::vector<FamilyWitness> witnesses;
  bool t0_ok = true;
  bool t1_cocycle_ok = true;      // jacobi + anchor_morphism at t^1
  bool t2_jacobiator_ok = true;   // jacobi at t^2
  bool t1_matches_eq111 = true;   // t^1 jacobi residual equals the literal
                                  // first-order deformation equation
  bool t2_matches_jacobiator = true;  // meaningful when linear_in_t

  bool power_ok(const std::string& axiom, int power) const;
};

FamilyReport is_lie_family(const DeformedFamily& f);

/// d/dt at t=0 of the family: the associated degree-2 cochain.
MultiDerivation family_cocycle(const DeformedFamily& f);

/// D(u,v) = [u,Nv] + [Nu,v] - N[u,v]; symbol a o N. Always delta-exact
/// (it is delta of N as a 1-cochain).
MultiDerivation nijenhuis_cochain(const LieAlgebroid& a,
                                  const std::vector<std::vector<Poly>>& n);

/// Torsion [Nu,Nv] - N([u,Nv] + [Nu,v] - N[u,v]) on frame pairs; zero iff N
/// is a Nijenhuis operator.
std::map<std::vector<int>, Section> nijenhuis_torsion(
    const LieAlgebroid& a, const std::vector<std::vector<Poly>>& n);

struct TrivialityReport {
  bool torsion_zero = true;
  /// (Id + tN)[u,v]_t = [(Id+tN)u, (Id+tN)v] as an exact polynomial identity
  /// in t on all frame pairs.
  bool identity_holds = true;
  std::vector<FamilyWitness> witnesses;
};

TrivialityReport triviality_check(const LieAlgebroid& a,
                                  const std::vector<std::vector<Poly>>& n);

/// Deterministic pseudo-random cochain with small integer data; poly degrees
/// are capped. Uses raw engine draws only, so the stream is portable.
MultiDerivation seeded_random_cochain(const LieAlgebroid& a, int degree,
                                      int poly_degree_cap, unsigned long seed);

}  // namespace algebroid

#endif
