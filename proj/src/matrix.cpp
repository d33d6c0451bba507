#include "matrix.hpp"

namespace otwb {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

std::pair<RationalMatrix, std::vector<int>> RationalMatrix::rref() const {
  RationalMatrix m = *this;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int r = row; r < rows_; ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = col; c < cols_; ++c) std::swap(m.at(p, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (int c = col; c < cols_; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: non-square matrix");
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::optional<RationalMatrix> RationalMatrix::solve(const RationalMatrix& b) const {
  if (b.rows() != rows_) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(rows_, cols_ + b.cols());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, cols_ + j) = b.at(i, j);
  }
  auto [r, pivots] = aug.rref();
  // A pivot in the augmented block means some column of b is not in
  // the column space.
  for (int p : pivots)
    if (p >= cols_) return std::nullopt;
  RationalMatrix x(cols_, b.cols());
  for (size_t k = 0; k < pivots.size(); ++k)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[k], j) = r.at(static_cast<int>(k), cols_ + j);
  return x;
}

}  // namespace otwb
