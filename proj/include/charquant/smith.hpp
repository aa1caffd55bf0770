#pragma once

#include <vector>

#include "charquant/poly_matrix.hpp"

namespace charquant {

/// U * M * V = D with U, V unimodular and D diagonal; the nonzero diagonal
/// entries are monic and each divides the next.
struct SmithForm {
  PolyMatrix U, D, V;
  int rank = 0;
  /// Nonzero diagonal entries of D in order.
  std::vector<Polynomial> invariant_factors;
};

/// Full decomposition with transforms. Pivots are chosen by minimal degree,
/// ties going to the lowest row index, then the lowest column index.
SmithForm smith_normal_form(const PolyMatrix& M);

/// Same pivoting, but only the diagonal is tracked.
std::vector<Polynomial> invariant_factors(const PolyMatrix& M);

/// Returns some x with M x = b, or an empty vector if b is not in the
/// F_p[t]-span of the columns of M.
std::vector<Polynomial> solve_in_span(const SmithForm& smith, const std::vector<Polynomial>& b,
                                      bool* solvable);

/// Columns spanning {v : M v = 0} (a basis of the kernel as free module).
std::vector<std::vector<Polynomial>> kernel_basis(const SmithForm& smith);

}  // namespace charquant
