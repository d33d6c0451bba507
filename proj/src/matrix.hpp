#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace otwb {

// Dense exact-rational matrix.  Sized for desk-scale work: the largest
// instances are n! x n! group-algebra spans at n = 6 (720 x 720).
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return e_[static_cast<size_t>(r) * cols_ + c];
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  RationalMatrix operator*(const RationalMatrix& o) const;

  // Reduced row echelon form together with the (strictly increasing)
  // pivot column list.  Row space is preserved.
  std::pair<RationalMatrix, std::vector<int>> rref() const;

  int rank() const { return static_cast<int>(rref().second.size()); }

  Rational trace() const;

  // Solves A X = B column-wise; nullopt when some column of B is
  // outside the column space of A.
  std::optional<RationalMatrix> solve(const RationalMatrix& b) const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace otwb
