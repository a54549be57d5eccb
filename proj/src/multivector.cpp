#include "algebroid/multivector.hpp"

#include <algorithm>

#include "algebroid/errors.hpp"

namespace algebroid {

namespace {

// Sorts idx ascending, returning the permutation sign; 0 on repeats.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

// Merges two ascending tuples into one ascending tuple, with the sign of the
// interleaving permutation; 0 when they overlap.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b,
               std::vector<int>& out) {
  out.clear();
  size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining a-entries
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return sign;
}

}  // namespace

Multivector::Multivector(int n, int degree) : n_(n), degree_(degree) {
  if (n < 0 || degree < 0 || degree > n)
    throw shape_error("multivector degree must lie in [0, n]");
}

Multivector Multivector::function(int n, const Poly& f) {
  Multivector m(n, 0);
  m.set_component({}, f);
  return m;
}

Multivector Multivector::vector_field(const PolyVectorField& v) {
  int n = static_cast<int>(v.comp.size());
  Multivector m(n, 1);
  for (int mu = 0; mu < n; ++mu) m.set_component({mu}, v.comp[mu]);
  return m;
}

Poly Multivector::component(const std::vector<int>& idx) const {
  auto it = comp_.find(idx);
  return it == comp_.end() ? Poly::zero(n_) : it->second;
}

Poly Multivector::component_signed(std::vector<int> idx) const {
  int sign = sort_sign(idx);
  if (sign == 0) return Poly::zero(n_);
  Poly p = component(idx);
  return sign == 1 ? p : -p;
}

void Multivector::set_component(const std::vector<int>& idx, const Poly& p) {
  if (static_cast<int>(idx.size()) != degree_)
    throw shape_error("component tuple length must equal the degree");
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= n_) throw shape_error("component index out of range");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw shape_error("component tuple must be strictly increasing");
  }
  if (p.nvars() != n_) throw ring_mismatch_error("component polynomial arity mismatch");
  if (p.is_zero())
    comp_.erase(idx);
  else
    comp_[idx] = p;
}

Multivector Multivector::operator-() const {
  Multivector r(n_, degree_);
  for (const auto& [i, p] : comp_) r.comp_[i] = -p;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (n_ != o.n_ || degree_ != o.degree_)
    throw shape_error("multivector shape mismatch");
  for (const auto& [i, p] : o.comp_) {
    Poly s = component(i) + p;
    if (s.is_zero())
      comp_.erase(i);
    else
      comp_[i] = s;
  }
  return *this;
}

Multivector Multivector::operator-(const Multivector& o) const {
  Multivector r = *this;
  r += -o;
  return r;
}

Multivector Multivector::scaled(const Rational& c) const {
  Multivector r(n_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [i, p] : comp_) r.comp_[i] = p.scaled(c);
  return r;
}

bool Multivector::operator==(const Multivector& o) const {
  return n_ == o.n_ && degree_ == o.degree_ && comp_ == o.comp_;
}

Multivector schouten(const Multivector& p, const Multivector& q) {
  if (p.dim() != q.dim()) throw shape_error("multivector base dimension mismatch");
  const int n = p.dim();
  const int dp = p.degree(), dq = q.degree();
  const int dr = std::min(dp + dq - 1, n);
  if (dp + dq - 1 < 0) return Multivector::zero(n, 0);
  Multivector r(n, std::max(dr, 0));
  if (dp + dq - 1 > n) return r;  // clamped zero

  // [P,Q] = sum_mu (dP/dxi_mu) (dQ/dx_mu)
  //         - (-1)^{(p-1)(q-1)} sum_mu (dQ/dxi_mu) (dP/dx_mu),
  // with xi the odd frame, right odd derivatives, and products merged with
  // interleaving signs. Rewriting the right derivatives as left ones costs
  // (-1)^{p-1} on the first term and (-1)^{q-1} on the second.
  auto accumulate = [&r](const Multivector& a, const Multivector& b, int outer) {
    for (const auto& [ia, pa] : a.components()) {
      for (int mu = 0; mu < a.dim(); ++mu) {
        // left odd derivative of a w.r.t. xi_mu
        auto pos = std::find(ia.begin(), ia.end(), mu);
        if (pos == ia.end()) continue;
        int dsign = (pos - ia.begin()) % 2 == 0 ? 1 : -1;
        std::vector<int> ia_rest;
        for (int v : ia)
          if (v != mu) ia_rest.push_back(v);
        for (const auto& [ib, pb] : b.components()) {
          Poly db = pb.partial(mu);
          if (db.is_zero()) continue;
          std::vector<int> merged;
          int msign = merge_sign(ia_rest, ib, merged);
          if (msign == 0) continue;
          int s = outer * dsign * msign;
          Poly term = pa * db;
          Poly cur = r.component(merged);
          r.set_component(merged, s == 1 ? cur + term : cur - term);
        }
      }
    }
  };

  int s1 = (dp - 1) % 2 == 0 ? 1 : -1;
  int s2 = ((dp - 1) * (dq - 1) + (dq - 1)) % 2 == 0 ? -1 : 1;
  accumulate(p, q, s1);
  accumulate(q, p, s2);
  return r;
}

LieAlgebroid cotangent_algebroid(const Multivector& pi) {
  if (pi.degree() != 2) throw shape_error("cotangent algebroid needs a bivector");
  const int n = pi.dim();
  // pi~(i,j) with skew extension
  auto ext = [&pi](int i, int j) { return pi.component_signed({i, j}); };

  std::vector<std::vector<std::vector<Poly>>> c(
      n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly::zero(n))));
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly::zero(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // [dx^i, dx^j] = d{x^i, x^j}
      Poly pij = ext(i, j);
      for (int k = 0; k < n; ++k) c[i][j][k] = pij.partial(k);
      a[i][j] = pij;  // anchor = pi-sharp
    }
  }
  return LieAlgebroid("cotangent", n, n, std::move(c), std::move(a));
}

Multivector lie_poisson_bivector(
    const std::vector<std::vector<std::vector<Rational>>>& constants) {
  int n = static_cast<int>(constants.size());
  Multivector pi(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly p = Poly::zero(n);
      for (int k = 0; k < n; ++k)
        p += Poly::variable(n, k).scaled(constants[i][j][k]);
      pi.set_component({i, j}, p);
    }
  return pi;
}

LieAlgebroid lie_poisson(const std::string& name,
                         const std::vector<std::vector<std::vector<Rational>>>& constants) {
  LieAlgebroid g = cotangent_algebroid(lie_poisson_bivector(constants))
                       .renamed("lie_poisson(" + name + ")");
  ValidationReport rep = g.validate();
  if (!rep.ok)
    throw validation_error("constants do not define a Lie-Poisson structure", rep);
  return g;
}

}  // namespace algebroid
