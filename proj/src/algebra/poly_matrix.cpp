#include "charquant/poly_matrix.hpp"

#include "charquant/error.hpp"

namespace charquant {

PolyMatrix::PolyMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Polynomial(p, Var::t)) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::ShapeMismatch, "negative matrix dimension");
}

PolyMatrix PolyMatrix::identity(int p, int n) {
  PolyMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Polynomial::constant(p, Var::t, 1);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product dimensions");
  if (p_ != o.p_) throw Error(ErrorCode::ModulusMismatch, "matrix product moduli");
  PolyMatrix r(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Polynomial& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Polynomial& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference");
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorCode::ShapeMismatch, "matrix-vector product");
  std::vector<Polynomial> out(rows_, Polynomial(p_, Var::t));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Polynomial& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

FpMatrix PolyMatrix::evaluate(int a) const {
  FpMatrix m(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(a);
  return m;
}

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return Polynomial::constant(p_, Var::t, 1);
  std::vector<std::vector<Polynomial>> a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i].push_back((*this)(i, j));
  Polynomial prev = Polynomial::constant(p_, Var::t, 1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int sel = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a[r][k].is_zero()) {
          sel = r;
          break;
        }
      if (sel < 0) return Polynomial(p_, Var::t);
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace charquant
