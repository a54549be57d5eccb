#ifndef ALGEBROID_COHOMOLOGY_HPP
#define ALGEBROID_COHOMOLOGY_HPP

#include <optional>

#include "algebroid/multiderivation.hpp"
#include "algebroid/qmatrix.hpp"

namespace algebroid {

/// Polynomial-degree caps per cochain degree. Cohomology is reported only
/// when the coboundary provably maps each slice into the next (closure);
/// escaping terms raise slice_error instead of being truncated.
struct SliceSpec {
  std::vector<int> caps;  // caps[k]; the last entry repeats for larger k

  static SliceSpec uniform(int cap) { return SliceSpec{{cap}}; }
  int cap_for(int k) const;
};

/// One basis element of a graded slice: a single monomial placed in one
/// coefficient slot (symbol_part = false) or one symbol slot.
struct CochainAtom {
  bool symbol_part = false;
  std::vector<int> tuple;
  int slot = 0;  // value component m, or symbol component mu
  Monomial mono;

  friend bool operator<(const CochainAtom& a, const CochainAtom& b) {
    return std::tie(a.symbol_part, a.tuple, a.slot, a.mono.e) <
           std::tie(b.symbol_part, b.tuple, b.slot, b.mono.e);
  }
  friend bool operator==(const CochainAtom& a, const CochainAtom& b) {
    return a.symbol_part == b.symbol_part && a.tuple == b.tuple &&
           a.slot == b.slot && a.mono == b.mono;
  }
};

/// Monomial basis of the degree-k slice, in a fixed deterministic order.
std::vector<CochainAtom> slice_basis(const LieAlgebroid& a, int k, int cap);

MultiDerivation atom_cochain(const LieAlgebroid& a, int k, const CochainAtom& atom);

/// Sparse coordinates of a cochain over atoms.
std::map<CochainAtom, Rational> coordinates(const MultiDerivation& d);

struct DeltaMatrix {
  std::vector<CochainAtom> domain;
  std::vector<CochainAtom> codomain;
  QMatrix m{0, 0};
};

/// Matrix of delta on the degree-k slice basis. With enforce_closure the
/// image must stay inside the degree-(k+1) slice cap. Columns may be
/// evaluated in parallel; the result does not depend on jobs.
DeltaMatrix delta_matrix(const LieAlgebroid& a, int k, const SliceSpec& slice,
                         bool enforce_closure, int jobs = 1);

/// Basis of the delta-closed cochains in the degree-k slice.
std::vector<MultiDerivation> cocycle_basis(const LieAlgebroid& a, int k,
                                           const SliceSpec& slice, int jobs = 1);

/// Solves delta(T) = d inside the slice; nullopt when d is not exact there.
std::optional<MultiDerivation> coboundary_check(const LieAlgebroid& a,
                                                const MultiDerivation& d,
                                                const SliceSpec& slice,
                                                int jobs = 1);

struct CohomologyRow {
  int k = 0;
  int dim_c = 0;  // slice dimension of C^k
  int dim_z = 0;
  int dim_b = 0;
  int dim_h = 0;
};

/// Exact cohomology dimensions of the sliced complex for k = 0..k_max via
/// rank-nullity; requires closure of every involved slice.
std::vector<CohomologyRow> cohomology_dims(const LieAlgebroid& a, int k_max,
                                           const SliceSpec& slice, int jobs = 1);

}  // namespace algebroid

#endif
