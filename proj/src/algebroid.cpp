#include "algebroid/algebroid.hpp"

#include "algebroid/errors.hpp"

namespace algebroid {

namespace {
bool all_zero(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}
}  // namespace

bool Section::is_zero() const { return all_zero(comp); }

Section Section::operator-() const {
  Section r;
  for (const auto& p : comp) r.comp.push_back(-p);
  return r;
}

Section& Section::operator+=(const Section& o) {
  if (comp.size() != o.comp.size()) throw shape_error("section rank mismatch");
  for (size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
  return *this;
}

Section Section::operator-(const Section& o) const {
  Section r = *this;
  r += -o;
  return r;
}

Section Section::scaled(const Rational& c) const {
  Section r;
  for (const auto& p : comp) r.comp.push_back(p.scaled(c));
  return r;
}

Section Section::scaled(const Poly& f) const {
  Section r;
  for (const auto& p : comp) r.comp.push_back(p * f);
  return r;
}

bool PolyVectorField::is_zero() const { return all_zero(comp); }

PolyVectorField PolyVectorField::operator-() const {
  PolyVectorField r;
  for (const auto& p : comp) r.comp.push_back(-p);
  return r;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (comp.size() != o.comp.size())
    throw shape_error("vector field dimension mismatch");
  for (size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
  return *this;
}

PolyVectorField PolyVectorField::operator-(const PolyVectorField& o) const {
  PolyVectorField r = *this;
  r += -o;
  return r;
}

PolyVectorField PolyVectorField::scaled(const Poly& f) const {
  PolyVectorField r;
  for (const auto& p : comp) r.comp.push_back(p * f);
  return r;
}

Poly PolyVectorField::apply(const Poly& f) const {
  Poly r = Poly::zero(f.nvars());
  for (size_t mu = 0; mu < comp.size(); ++mu)
    r += comp[mu] * f.partial(static_cast<int>(mu));
  return r;
}

PolyVectorField vf_bracket(const PolyVectorField& v, const PolyVectorField& w) {
  if (v.comp.size() != w.comp.size())
    throw shape_error("vector field dimension mismatch");
  PolyVectorField r;
  for (size_t mu = 0; mu < v.comp.size(); ++mu)
    r.comp.push_back(v.apply(w.comp[mu]) - w.apply(v.comp[mu]));
  return r;
}

const AxiomCheck* ValidationReport::find(const std::string& axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

LieAlgebroid::LieAlgebroid(std::string name, int base_dim, int rank,
                           std::vector<std::vector<std::vector<Poly>>> structure,
                           std::vector<std::vector<Poly>> anchor,
                           bool has_param)
    : name_(std::move(name)),
      base_dim_(base_dim),
      rank_(rank),
      has_param_(has_param),
      c_(std::move(structure)),
      a_(std::move(anchor)) {
  if (base_dim_ < 0 || rank_ < 1)
    throw shape_error("algebroid needs base_dim >= 0 and rank >= 1");
  if (static_cast<int>(c_.size()) != rank_)
    throw shape_error("structure array must have rank rows");
  for (const auto& row : c_) {
    if (static_cast<int>(row.size()) != rank_)
      throw shape_error("structure array must be rank x rank");
    for (const auto& cell : row) {
      if (static_cast<int>(cell.size()) != rank_)
        throw shape_error("structure entries must have rank components");
      for (const auto& p : cell)
        if (p.nvars() != nvars())
          throw ring_mismatch_error("structure polynomial has wrong arity");
    }
  }
  if (static_cast<int>(a_.size()) != rank_)
    throw shape_error("anchor array must have rank rows");
  for (const auto& row : a_) {
    if (static_cast<int>(row.size()) != base_dim_)
      throw shape_error("anchor rows must have base_dim components");
    for (const auto& p : row)
      if (p.nvars() != nvars())
        throw ring_mismatch_error("anchor polynomial has wrong arity");
  }
}

Section LieAlgebroid::zero_section() const {
  return Section{std::vector<Poly>(rank_, zero_poly())};
}

Section LieAlgebroid::frame(int i) const {
  if (i < 0 || i >= rank_) throw shape_error("frame index out of range");
  Section s = zero_section();
  s.comp[i] = Poly::constant(nvars(), Rational(1));
  return s;
}

PolyVectorField LieAlgebroid::zero_field() const {
  return PolyVectorField{std::vector<Poly>(base_dim_, zero_poly())};
}

void LieAlgebroid::check_section(const Section& x) const {
  if (static_cast<int>(x.comp.size()) != rank_)
    throw shape_error("section has wrong rank");
  for (const auto& p : x.comp)
    if (p.nvars() != nvars())
      throw ring_mismatch_error("section polynomial has wrong arity");
}

Section LieAlgebroid::bracket(const Section& x, const Section& y) const {
  check_section(x);
  check_section(y);
  Section r = zero_section();
  // [X,Y]^k = sum_ij X^i Y^j c^k_ij + a(X)(Y^k) - a(Y)(X^k)
  for (int i = 0; i < rank_; ++i) {
    if (x.comp[i].is_zero()) continue;
    for (int j = 0; j < rank_; ++j) {
      if (y.comp[j].is_zero()) continue;
      Poly xy = x.comp[i] * y.comp[j];
      for (int k = 0; k < rank_; ++k) {
        if (c_[i][j][k].is_zero()) continue;
        r.comp[k] += xy * c_[i][j][k];
      }
    }
  }
  PolyVectorField ax = anchor_apply(x), ay = anchor_apply(y);
  for (int k = 0; k < rank_; ++k)
    r.comp[k] += ax.apply(y.comp[k]) - ay.apply(x.comp[k]);
  return r;
}

PolyVectorField LieAlgebroid::anchor_apply(const Section& x) const {
  check_section(x);
  PolyVectorField r = zero_field();
  for (int i = 0; i < rank_; ++i) {
    if (x.comp[i].is_zero()) continue;
    for (int mu = 0; mu < base_dim_; ++mu) r.comp[mu] += x.comp[i] * a_[i][mu];
  }
  return r;
}

ValidationReport LieAlgebroid::validate() const {
  ValidationReport rep;

  AxiomCheck skew{"skewness"};
  for (int i = 0; i < rank_; ++i)
    for (int j = i; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k) {
        Poly res = c_[i][j][k] + c_[j][i][k];
        if (!res.is_zero()) {
          skew.ok = false;
          skew.witnesses.push_back({{i, j, k}, res});
        }
      }
  rep.ok = rep.ok && skew.ok;
  rep.checks.push_back(std::move(skew));

  // Jacobi on frame triples, expanded through the Leibniz-aware bracket.
  AxiomCheck jac{"jacobi"};
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      for (int k = j + 1; k < rank_; ++k) {
        Section res = bracket(bracket(frame(i), frame(j)), frame(k)) +
                      bracket(bracket(frame(j), frame(k)), frame(i)) +
                      bracket(bracket(frame(k), frame(i)), frame(j));
        for (int l = 0; l < rank_; ++l)
          if (!res.comp[l].is_zero()) {
            jac.ok = false;
            jac.witnesses.push_back({{i, j, k, l}, res.comp[l]});
          }
      }
  rep.ok = rep.ok && jac.ok;
  rep.checks.push_back(std::move(jac));

  AxiomCheck mor{"anchor_morphism"};
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j) {
      PolyVectorField res =
          anchor_apply(bracket(frame(i), frame(j))) -
          vf_bracket(anchor_apply(frame(i)), anchor_apply(frame(j)));
      for (int mu = 0; mu < base_dim_; ++mu)
        if (!res.comp[mu].is_zero()) {
          mor.ok = false;
          mor.witnesses.push_back({{i, j, mu}, res.comp[mu]});
        }
    }
  rep.ok = rep.ok && mor.ok;
  rep.checks.push_back(std::move(mor));

  return rep;
}

LieAlgebroid LieAlgebroid::extended_with_param() const {
  if (has_param_) return *this;
  int nv = nvars() + 1;
  auto c = c_;
  for (auto& row : c)
    for (auto& cell : row)
      for (auto& p : cell) p = p.extended(nv);
  auto a = a_;
  for (auto& row : a)
    for (auto& p : row) p = p.extended(nv);
  return LieAlgebroid(name_, base_dim_, rank_, std::move(c), std::move(a), true);
}

namespace {

LieAlgebroid from_constants(const std::string& name, int rank,
                            const std::vector<std::vector<std::vector<Rational>>>& c) {
  std::vector<std::vector<std::vector<Poly>>> cp(
      rank, std::vector<std::vector<Poly>>(rank, std::vector<Poly>(rank, Poly::zero(0))));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) cp[i][j][k] = Poly::constant(0, c[i][j][k]);
  LieAlgebroid g(name, 0, rank, std::move(cp), std::vector<std::vector<Poly>>(rank));
  ValidationReport rep = g.validate();
  if (!rep.ok) throw validation_error("constants do not define a Lie algebra", rep);
  return g;
}

}  // namespace

LieAlgebroid lie_algebra(const std::string& name, int rank,
                         const std::vector<std::vector<std::vector<Rational>>>& c) {
  return from_constants(name, rank, c);
}

LieAlgebroid tangent_algebroid(int n) {
  if (n < 1) throw shape_error("tangent algebroid needs n >= 1");
  std::vector<std::vector<std::vector<Poly>>> c(
      n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly::zero(n))));
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly::zero(n)));
  for (int i = 0; i < n; ++i) a[i][i] = Poly::constant(n, Rational(1));
  LieAlgebroid g("tangent(" + std::to_string(n) + ")", n, n, std::move(c),
                 std::move(a));
  ValidationReport rep = g.validate();
  if (!rep.ok) throw validation_error("tangent algebroid failed validation", rep);
  return g;
}

LieAlgebroid direct_sum_with_center(const LieAlgebroid& g, int extra_rank) {
  if (g.base_dim() != 0)
    throw shape_error("central extension constructor expects a Lie algebra");
  int r = g.rank() + extra_rank;
  std::vector<std::vector<std::vector<Poly>>> c(
      r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly::zero(0))));
  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < g.rank(); ++j)
      for (int k = 0; k < g.rank(); ++k) c[i][j][k] = g.structure(i, j)[k];
  LieAlgebroid out(g.name() + "+center(" + std::to_string(extra_rank) + ")", 0,
                   r, std::move(c), std::vector<std::vector<Poly>>(r));
  ValidationReport rep = out.validate();
  if (!rep.ok) throw validation_error("direct sum failed validation", rep);
  return out;
}

namespace {
std::vector<std::vector<std::vector<Rational>>> zero_constants(int r) {
  return std::vector<std::vector<std::vector<Rational>>>(
      r, std::vector<std::vector<Rational>>(r, std::vector<Rational>(r, Rational(0))));
}
}  // namespace

std::vector<std::vector<std::vector<Rational>>> sl2_constants() {
  // Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  auto c = zero_constants(3);
  c[0][1][1] = Rational(2);
  c[1][0][1] = Rational(-2);
  c[0][2][2] = Rational(-2);
  c[2][0][2] = Rational(2);
  c[1][2][0] = Rational(1);
  c[2][1][0] = Rational(-1);
  return c;
}

std::vector<std::vector<std::vector<Rational>>> so3_constants() {
  // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
  auto c = zero_constants(3);
  c[0][1][2] = Rational(1);
  c[1][0][2] = Rational(-1);
  c[1][2][0] = Rational(1);
  c[2][1][0] = Rational(-1);
  c[2][0][1] = Rational(1);
  c[0][2][1] = Rational(-1);
  return c;
}

std::vector<std::vector<std::vector<Rational>>> heisenberg_constants() {
  // [e1,e2] = e3.
  auto c = zero_constants(3);
  c[0][1][2] = Rational(1);
  c[1][0][2] = Rational(-1);
  return c;
}

std::vector<std::vector<std::vector<Rational>>> abelian_constants(int rank) {
  return zero_constants(rank);
}

}  // namespace algebroid
