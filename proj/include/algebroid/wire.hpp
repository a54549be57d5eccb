#ifndef ALGEBROID_WIRE_HPP
#define ALGEBROID_WIRE_HPP

#include <json.hpp>

#include "algebroid/deformation.hpp"
#include "algebroid/gallery.hpp"
#include "algebroid/jet.hpp"
#include "algebroid/multivector.hpp"

namespace algebroid {

/// Key order is preserved so canonical output is byte-stable.
using Json = nlohmann::ordered_json;

// Polynomials travel as arrays of terms {"e": [exponents], "c": "num/den"},
// sorted graded-lex descending; zero coefficients are never emitted.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int nvars);

Json section_to_json(const Section& s);
Section section_from_json(const Json& j, const LieAlgebroid& a);

// {"name", "base_dim", "rank", "bracket": [{"i","j","out":[{"k","poly"}]}],
//  "anchor": [{"i","out":[{"mu","poly"}]}]} with 1-based indices, i < j only
// (skew completion is implied; i >= j entries are rejected). Families carry
// "t_extended": true and one extra trailing ring variable.
Json algebroid_to_json(const LieAlgebroid& a);
LieAlgebroid algebroid_from_json(const Json& j);

// {"k", "coeffs": [{"idx": [...], "m", "poly"}], "symbol": [...]} with
// 1-based strictly increasing idx. An optional "kind": "jet" tag marks the
// cochain as living on the jet side of the correspondence.
Json cochain_to_json(const MultiDerivation& d, bool jet_kind = false);
MultiDerivation cochain_from_json(const Json& j, const LieAlgebroid& a);

// {"n", "degree", "components": [{"idx": [...], "poly"}]}
Json multivector_to_json(const Multivector& m);
Multivector multivector_from_json(const Json& j);

// {"u": [poly...], "theta": [{"k","mu","poly"}]}
Json jet_to_json(const JetSection& m);
JetSection jet_from_json(const Json& j, const LieAlgebroid& a);

// [[poly ...] ...]: row i holds the components of N(e_i).
Json endomorphism_to_json(const std::vector<std::vector<Poly>>& n);
std::vector<std::vector<Poly>> endomorphism_from_json(const Json& j,
                                                      const LieAlgebroid& a);

Json validation_to_json(const ValidationReport& rep);
Json family_report_to_json(const FamilyReport& rep);
Json mc_report_to_json(const McReport& rep);
Json example_report_to_json(const ExampleReport& rep);

/// Parses a slice cap from {"max_poly_degree": d}.
SliceSpec slice_from_json(const Json& j);

}  // namespace algebroid

#endif
