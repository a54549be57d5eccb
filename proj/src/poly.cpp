#include "algebroid/poly.hpp"

#include <numeric>
#include <sstream>

#include "algebroid/errors.hpp"

namespace algebroid {

int Monomial::total_degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Same degree: a < b when the first differing exponent is smaller in a.
  for (size_t i = 0; i < a.e.size() && i < b.e.size(); ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  }
  return a.e.size() < b.e.size();
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Monomial{std::vector<int>(nvars, 0)}, c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw shape_error("variable index out of range");
  Monomial m{std::vector<int>(nvars, 0)};
  m.e[index] = 1;
  return term(nvars, m, Rational(1));
}

Poly Poly::term(int nvars, const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.e.size()) != nvars)
    throw ring_mismatch_error("monomial arity does not match ring");
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

int Poly::degree() const {
  if (terms_.empty()) return kZeroPolyDegree;
  return terms_.rbegin()->first.total_degree();
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_coeff() const {
  return coeff(Monomial{std::vector<int>(nvars_, 0)});
}

void Poly::check_ring(const Poly& o) const {
  if (nvars_ != o.nvars_)
    throw ring_mismatch_error("polynomial rings differ: " +
                              std::to_string(nvars_) + " vs " +
                              std::to_string(o.nvars_) + " variables");
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Poly Poly::partial(int var) const {
  if (var < 0 || var >= nvars_)
    throw shape_error("partial with respect to variable " +
                      std::to_string(var) + " in a ring with " +
                      std::to_string(nvars_) + " variables");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    --d.e[var];
    r.add_term(d, c * Rational(m.e[var]));
  }
  return r;
}

Poly Poly::extended(int new_nvars) const {
  if (new_nvars < nvars_) throw shape_error("cannot shrink a ring via extend");
  Poly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial x = m;
    x.e.resize(new_nvars, 0);
    r.terms_.emplace(x, c);
  }
  return r;
}

Poly Poly::coeff_of_power(int var, int power) const {
  if (var != nvars_ - 1)
    throw shape_error("only the last variable can be extracted");
  Poly r(nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] != power) continue;
    Monomial x{std::vector<int>(m.e.begin(), m.e.end() - 1)};
    r.add_term(x, c);
  }
  return r;
}

int Poly::max_power(int var) const {
  int p = 0;
  for (const auto& [m, c] : terms_) p = std::max(p, m.e[var]);
  return p;
}

Poly Poly::at_last_var_zero() const { return coeff_of_power(nvars_ - 1, 0); }

std::vector<std::string> default_var_names(int base_dim, bool has_param) {
  std::vector<std::string> names;
  for (int i = 0; i < base_dim; ++i) names.push_back("x" + std::to_string(i + 1));
  if (has_param) names.push_back("t");
  return names;
}

std::string Poly::pretty(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> vars = names;
  if (static_cast<int>(vars.size()) != nvars_)
    vars = default_var_names(nvars_, false);
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.pretty();
    if (!first) {
      out << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) cs = (-c).pretty();
    } else if (c.sign() < 0) {
      out << "-";
      cs = (-c).pretty();
    }
    first = false;
    bool unit = (cs == "1");
    bool any_var = m.total_degree() > 0;
    if (!unit || !any_var) out << cs;
    bool star = !unit && any_var;
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      if (star) out << "*";
      star = true;
      out << vars[i];
      if (m.e[i] > 1) out << "^" << m.e[i];
    }
  }
  return out.str();
}

}  // namespace algebroid
