#include "charquant/fp_matrix.hpp"

#include <utility>

#include "charquant/error.hpp"
#include "charquant/field.hpp"

namespace charquant {

FpMatrix::FpMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  require_supported_prime(p);
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw Error(ErrorCode::ShapeMismatch, "FpMatrix product");
  FpMatrix r(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) = (r(i, j) + a * o(k, j)) % p_;
    }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(FpMatrix& m) {
  const PrimeField& F = field(m.p());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const int inv = F.inv(m(row, col));
    for (int c = 0; c < m.cols(); ++c) m(row, c) = F.mul(m(row, c), inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const int f = m(r, col);
      for (int c = 0; c < m.cols(); ++c) m(r, c) = F.sub(m(r, c), F.mul(f, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int FpMatrix::rank() const {
  FpMatrix copy = *this;
  return static_cast<int>(rref(copy).size());
}

std::vector<std::vector<int>> FpMatrix::nullspace() const {
  FpMatrix m = *this;
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  const PrimeField& F = field(p_);
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace charquant
