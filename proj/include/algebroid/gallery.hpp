#ifndef ALGEBROID_GALLERY_HPP
#define ALGEBROID_GALLERY_HPP

#include <array>
#include <functional>
#include <optional>

#include "algebroid/deformation.hpp"
#include "algebroid/jet.hpp"
#include "algebroid/multivector.hpp"

namespace algebroid {

struct ExpectationResult {
  std::string name;
  std::string provenance;  // PAPER | TRIVIAL | DERIVED
  bool pass = false;
  std::string detail;
};

struct Expectation {
  std::string name;
  std::string provenance;
  std::function<ExpectationResult(const LieAlgebroid&)> run;
};

struct ExampleEntry {
  std::string name;
  std::function<LieAlgebroid()> make;
  std::vector<Expectation> expectations;
};

/// Registry of validated example algebroids and deformation scenarios, each
/// bundled with machine-checkable expected properties.
const std::vector<ExampleEntry>& gallery();

std::vector<std::string> list_examples();
/// Throws error for unknown names.
const ExampleEntry& find_example(const std::string& name);
LieAlgebroid load_example(const std::string& name);

struct ExampleReport {
  std::string name;
  bool all_pass = true;
  std::vector<ExpectationResult> results;
};

ExampleReport run_expectations(const std::string& name);

/// The quadratic bivector on R^3 built from nine coefficients in {-1,0,1}:
/// V_k = sum_m c[3k+m] x_m^2 and pi = V_1 d2^d3 - V_2 d1^d3 + V_3 d1^d2.
Multivector quadratic_candidate(const std::array<int, 9>& c);
/// All 3^9 candidates in odometer order.
std::vector<std::array<int, 9>> quadratic_candidate_grid();

/// The 2-cochain on g (+) R e sending (X, e) to D(X) and vanishing on
/// g wedge g, for a rank-3 summand; closed iff D is a derivation of g.
MultiDerivation central_pair_cochain(const LieAlgebroid& h4,
                                     const std::vector<std::vector<Rational>>& dmat);

/// All 3x3 matrices with entries in {-1,0,1} in odometer order.
std::vector<std::vector<std::vector<Rational>>> endomorphism_grid3();

}  // namespace algebroid

#endif
