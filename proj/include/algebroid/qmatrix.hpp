#ifndef ALGEBROID_QMATRIX_HPP
#define ALGEBROID_QMATRIX_HPP

#include <optional>
#include <vector>

#include "algebroid/rational.hpp"

namespace algebroid {

/// Dense rational matrix with exact rank/kernel/solve. Elimination is
/// fraction-free (Bareiss) on a denominator-cleared integer copy.
class QMatrix {
 public:
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  QMatrix transposed() const;

  struct RankKernel {
    int rank = 0;
    std::vector<std::vector<Rational>> kernel;  // basis of the null space
  };

  /// Exact rank and a kernel basis; rank + kernel.size() == cols.
  RankKernel rank_kernel() const;
  int rank() const;

  /// Exact solution of A x = b (free variables set to 0), or nullopt when
  /// inconsistent. b.size() must equal rows().
  std::optional<std::vector<Rational>> solve(
      const std::vector<Rational>& b) const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// True iff v lies in the rational span of the given vectors. All vectors
/// must share v's length; the empty span contains exactly the zero vector.
bool span_membership(const std::vector<Rational>& v,
                     const std::vector<std::vector<Rational>>& basis);

}  // namespace algebroid

#endif
