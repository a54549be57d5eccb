#include "algebroid/qmatrix.hpp"

#include <gmpxx.h>

#include "algebroid/errors.hpp"

namespace algebroid {
namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> m;  // row echelon, integer entries
  std::vector<int> pivot_col;             // per echelon row
};

// Fraction-free Gaussian elimination (Bareiss). Input rows are scaled to
// integers first; row scaling changes neither rank nor null space.
Echelon eliminate(const QMatrix& q) {
  int rows = q.rows(), cols = q.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (int r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (int c = 0; c < cols; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              q.at(r, c).denominator().get_mpz_t());
    for (int c = 0; c < cols; ++c) {
      mpq_class v = q.at(r, c).value() * lcm;
      m[r][c] = v.get_num();
    }
  }

  Echelon e;
  mpz_class prev = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        mpz_class num = m[r][c] * m[row][col] - m[r][col] * m[row][c];
        mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    e.pivot_col.push_back(col);
    ++row;
  }
  m.resize(row);
  e.m = std::move(m);
  return e;
}

}  // namespace

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

int QMatrix::rank() const { return static_cast<int>(eliminate(*this).pivot_col.size()); }

QMatrix::RankKernel QMatrix::rank_kernel() const {
  Echelon e = eliminate(*this);
  RankKernel out;
  out.rank = static_cast<int>(e.pivot_col.size());

  std::vector<bool> is_pivot(cols_, false);
  for (int c : e.pivot_col) is_pivot[c] = true;

  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols_, Rational(0));
    x[free] = Rational(1);
    // Back-substitute through the echelon rows.
    for (int r = out.rank - 1; r >= 0; --r) {
      int pc = e.pivot_col[r];
      mpq_class acc = 0;
      for (int c = pc + 1; c < cols_; ++c) {
        if (x[c].is_zero()) continue;
        acc += mpq_class(e.m[r][c]) * x[c].value();
      }
      x[pc] = Rational(mpq_class(-acc / mpq_class(e.m[r][pc])));
    }
    out.kernel.push_back(std::move(x));
  }
  return out;
}

std::optional<std::vector<Rational>> QMatrix::solve(
    const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw shape_error("solve: right-hand side length mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  Echelon e = eliminate(aug);
  // Inconsistent iff some pivot lands in the augmented column.
  for (int c : e.pivot_col)
    if (c == cols_) return std::nullopt;

  std::vector<Rational> x(cols_, Rational(0));
  for (int r = static_cast<int>(e.pivot_col.size()) - 1; r >= 0; --r) {
    int pc = e.pivot_col[r];
    mpq_class acc = mpq_class(e.m[r][cols_]);
    for (int c = pc + 1; c < cols_; ++c) {
      if (x[c].is_zero()) continue;
      acc -= mpq_class(e.m[r][c]) * x[c].value();
    }
    x[pc] = Rational(mpq_class(acc / mpq_class(e.m[r][pc])));
  }
  return x;
}

bool span_membership(const std::vector<Rational>& v,
                     const std::vector<std::vector<Rational>>& basis) {
  for (const auto& b : basis)
    if (b.size() != v.size())
      throw shape_error("span_membership: vector length mismatch");
  bool vzero = true;
  for (const auto& c : v)
    if (!c.is_zero()) { vzero = false; break; }
  if (vzero) return true;
  if (basis.empty()) return false;

  int n = static_cast<int>(v.size());
  int k = static_cast<int>(basis.size());
  QMatrix m(n, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) m.at(r, c) = basis[c][r];
  return m.solve(v).has_value();
}

}  // namespace algebroid
