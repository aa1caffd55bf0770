#include "charquant/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "charquant/error.hpp"

namespace charquant {

namespace {

using Row = std::vector<Polynomial>;

// Elimination state. U and V are only maintained when Track is true.
template <bool Track>
class Eliminator {
 public:
  explicit Eliminator(const PolyMatrix& M)
      : p_(M.p()), m_(M.rows()), n_(M.cols()), zero_(M.p(), Var::t) {
    a_.assign(m_, Row(n_, zero_));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) a_[i][j] = M(i, j);
    if constexpr (Track) {
      u_.assign(m_, Row(m_, zero_));
      for (int i = 0; i < m_; ++i) u_[i][i] = Polynomial::constant(p_, Var::t, 1);
      v_.assign(n_, Row(n_, zero_));
      for (int i = 0; i < n_; ++i) v_[i][i] = Polynomial::constant(p_, Var::t, 1);
    }
  }

  void run() {
    const int steps = std::min(m_, n_);
    for (int k = 0; k < steps; ++k) {
      auto piv = find_pivot(k);
      if (!piv) break;
      move_to(k, piv->first, piv->second);
      reduce_pivot(k);
      rank_ = k + 1;
    }
  }

  int rank() const { return rank_; }
  const Polynomial& diag(int k) const { return a_[k][k]; }

  SmithForm result() const {
    SmithForm out{PolyMatrix(p_, m_, m_), PolyMatrix(p_, m_, n_), PolyMatrix(p_, n_, n_), rank_, {}};
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) out.D(i, j) = a_[i][j];
    if constexpr (Track) {
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) out.U(i, j) = u_[i][j];
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.V(i, j) = v_[i][j];
    }
    for (int k = 0; k < rank_; ++k) out.invariant_factors.push_back(a_[k][k]);
    return out;
  }

 private:
  // Minimal degree entry in the trailing block; ties to lowest row, then column.
  std::optional<std::pair<int, int>> find_pivot(int k) const {
    std::optional<std::pair<int, int>> best;
    int best_deg = 0;
    for (int i = k; i < m_; ++i)
      for (int j = k; j < n_; ++j) {
        const int d = a_[i][j].degree();
        if (d < 0) continue;
        if (!best || d < best_deg) {
          best = {i, j};
          best_deg = d;
          if (d == 0) return best;
        }
      }
    return best;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    if constexpr (Track) std::swap(u_[i], u_[j]);
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& row : a_) std::swap(row[i], row[j]);
    if constexpr (Track)
      for (auto& row : v_) std::swap(row[i], row[j]);
  }

  void move_to(int k, int i, int j) {
    swap_rows(k, i);
    swap_cols(k, j);
  }

  void scale_row(int k, int s) {
    for (int j = k; j < n_; ++j) a_[k][j] *= s;
    if constexpr (Track)
      for (auto& e : u_[k]) e *= s;
  }

  // row_i -= q * row_k
  void row_axpy(int i, int k, const Polynomial& q, int from) {
    for (int j = from; j < n_; ++j)
      if (!a_[k][j].is_zero()) a_[i][j] -= q * a_[k][j];
    if constexpr (Track)
      for (int j = 0; j < m_; ++j)
        if (!u_[k][j].is_zero()) u_[i][j] -= q * u_[k][j];
  }

  // col_j -= q * col_k
  void col_axpy(int j, int k, const Polynomial& q, int from) {
    for (int i = from; i < m_; ++i)
      if (!a_[i][k].is_zero()) a_[i][j] -= q * a_[i][k];
    if constexpr (Track)
      for (int i = 0; i < n_; ++i)
        if (!v_[i][k].is_zero()) v_[i][j] -= q * v_[i][k];
  }

  void row_add(int k, int i) {
    for (int j = k; j < n_; ++j)
      if (!a_[i][j].is_zero()) a_[k][j] += a_[i][j];
    if constexpr (Track)
      for (int j = 0; j < m_; ++j)
        if (!u_[i][j].is_zero()) u_[k][j] += u_[i][j];
  }

  void reduce_pivot(int k) {
    for (;;) {
      if (!a_[k][k].is_monic()) scale_row(k, field(p_).inv(a_[k][k].leading()));
      const bool unit = a_[k][k].degree() == 0;
      bool clean = true;
      for (int i = k + 1; i < m_; ++i) {
        if (a_[i][k].is_zero()) continue;
        auto [q, r] = a_[i][k].divmod(a_[k][k]);
        row_axpy(i, k, q, k);
        if (!r.is_zero()) clean = false;
      }
      for (int j = k + 1; j < n_; ++j) {
        if (a_[k][j].is_zero()) continue;
        auto [q, r] = a_[k][j].divmod(a_[k][k]);
        col_axpy(j, k, q, k);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) {
        // A remainder of smaller degree survived in row k or column k.
        int bi = k, bj = k, bd = a_[k][k].degree();
        for (int i = k + 1; i < m_; ++i) {
          const int d = a_[i][k].degree();
          if (d >= 0 && d < bd) bi = i, bj = k, bd = d;
        }
        for (int j = k + 1; j < n_; ++j) {
          const int d = a_[k][j].degree();
          if (d >= 0 && d < bd) bi = k, bj = j, bd = d;
        }
        move_to(k, bi, bj);
        continue;
      }
      if (unit) return;
      // Divisibility: every trailing entry must be a multiple of the pivot.
      int offender = -1;
      for (int i = k + 1; i < m_ && offender < 0; ++i)
        for (int j = k + 1; j < n_; ++j)
          if (!a_[i][j].is_zero() && !(a_[i][j] % a_[k][k]).is_zero()) {
            offender = i;
            break;
          }
      if (offender < 0) return;
      row_add(k, offender);
    }
  }

  int p_, m_, n_;
  Polynomial zero_;
  int rank_ = 0;
  std::vector<Row> a_, u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& M) {
  Eliminator<true> e(M);
  e.run();
  return e.result();
}

std::vector<Polynomial> invariant_factors(const PolyMatrix& M) {
  Eliminator<false> e(M);
  e.run();
  std::vector<Polynomial> out;
  for (int k = 0; k < e.rank(); ++k) out.push_back(e.diag(k));
  return out;
}

std::vector<Polynomial> solve_in_span(const SmithForm& smith, const std::vector<Polynomial>& b,
                                      bool* solvable) {
  const std::vector<Polynomial> ub = smith.U.apply(b);
  const int n = smith.V.rows();
  const int p = smith.D.p();
  std::vector<Polynomial> y(n, Polynomial(p, Var::t));
  for (int i = 0; i < static_cast<int>(ub.size()); ++i) {
    if (i < smith.rank) {
      auto [q, r] = ub[i].divmod(smith.invariant_factors[i]);
      if (!r.is_zero()) {
        if (solvable) *solvable = false;
        return {};
      }
      y[i] = q;
    } else if (!ub[i].is_zero()) {
      if (solvable) *solvable = false;
      return {};
    }
  }
  if (solvable) *solvable = true;
  return smith.V.apply(y);
}

std::vector<std::vector<Polynomial>> kernel_basis(const SmithForm& smith) {
  std::vector<std::vector<Polynomial>> basis;
  const int n = smith.V.rows();
  for (int j = smith.rank; j < n; ++j) {
    std::vector<Polynomial> col;
    col.reserve(n);
    for (int i = 0; i < n; ++i) col.push_back(smith.V(i, j));
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace charquant
