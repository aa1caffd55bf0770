#pragma once

#include <vector>

#include "charquant/fp_matrix.hpp"
#include "charquant/polynomial.hpp"

namespace charquant {

/// Matrix with entries in F_p[t]. Acts on column vectors: a differential
/// C^n -> C^{n+1} has rank(C^{n+1}) rows and rank(C^n) columns.
class PolyMatrix {
 public:
  PolyMatrix(int p, int rows, int cols);

  static PolyMatrix identity(int p, int n);

  int p() const noexcept { return p_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Polynomial& operator()(int r, int c) { return entries_[index(r, c)]; }
  const Polynomial& operator()(int r, int c) const { return entries_[index(r, c)]; }

  bool is_zero() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;
  PolyMatrix transpose() const;
  /// Specialization t -> a.
  FpMatrix evaluate(int a) const;
  /// Determinant by fraction-free elimination; square matrices only.
  Polynomial determinant() const;

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int p_, rows_, cols_;
  std::vector<Polynomial> entries_;
};

}  // namespace charquant
