#pragma once

#include <vector>

namespace charquant {

/// Dense matrix over F_p, row-major. Used for fiber algebras, centers and
/// other finite-dimensional linear systems over the prime field.
class FpMatrix {
 public:
  FpMatrix(int p, int rows, int cols);

  int p() const noexcept { return p_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  FpMatrix operator*(const FpMatrix& o) const;
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  int rank() const;
  /// Basis of {v : M v = 0}, one vector per entry.
  std::vector<std::vector<int>> nullspace() const;

 private:
  int p_, rows_, cols_;
  std::vector<int> data_;
};

}  // namespace charquant
