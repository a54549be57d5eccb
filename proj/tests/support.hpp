#ifndef ALGEBROID_TESTS_SUPPORT_HPP
#define ALGEBROID_TESTS_SUPPORT_HPP

#include <random>

#include "algebroid/algebroid.hpp"

namespace algebroid::testing {

inline Poly pconst(int nvars, long num, long den = 1) {
  return Poly::constant(nvars, Rational(num, den));
}

inline Poly pvar(int nvars, int i) { return Poly::variable(nvars, i); }

inline Poly pmono(int nvars, std::vector<int> e, long num, long den = 1) {
  return Poly::term(nvars, Monomial{std::move(e)}, Rational(num, den));
}

inline Section sec(const LieAlgebroid& a, std::vector<Poly> comps) {
  return Section{std::move(comps)};
}

/// Small deterministic polynomial stream for property tests.
class PolyGen {
 public:
  explicit PolyGen(unsigned long seed) : rng_(seed) {}

  int small_int(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<unsigned long>(hi - lo + 1));
  }

  Poly poly(int nvars, int max_degree, int max_terms = 3) {
    Poly p = Poly::zero(nvars);
    int terms = small_int(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Monomial m{std::vector<int>(nvars, 0)};
      int deg = small_int(0, max_degree);
      for (int d = 0; d < deg && nvars > 0; ++d) ++m.e[small_int(0, nvars - 1)];
      int c = small_int(-3, 3);
      if (c != 0) p += Poly::term(nvars, m, Rational(c));
    }
    return p;
  }

  Section section(const LieAlgebroid& a, int max_degree) {
    Section s = a.zero_section();
    for (int i = 0; i < a.rank(); ++i) s.comp[i] = poly(a.nvars(), max_degree);
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace algebroid::testing

#endif
