#pragma once

#include <vector>

#include "charquant/poly_matrix.hpp"

namespace charquant {

/// Cohomology of a complex of free F_p[t]-modules in one degree.
struct HomologySummary {
  int degree = 0;
  int free_rank = 0;
  /// Monic non-unit invariant factors, each dividing the next.
  std::vector<Polynomial> torsion;

  bool vanishes() const noexcept { return free_rank == 0 && torsion.empty(); }
};

/// Bounded cochain complex C^0 -> C^1 -> ... of free F_p[t]-modules.
struct CochainMatrixComplex {
  int p = 2;
  std::vector<int> ranks;                 // rank of C^n, n = 0..L
  std::vector<PolyMatrix> differentials;  // C^n -> C^{n+1}, n = 0..L-1
};

/// H^n for every n with a differential out of C^n. Throws ShapeMismatch or
/// CompositionNonzero on malformed input.
std::vector<HomologySummary> complex_cohomology(const std::vector<PolyMatrix>& differentials);
std::vector<HomologySummary> complex_cohomology(const CochainMatrixComplex& complex);

/// Validates shapes and d o d = 0 without computing cohomology.
void check_complex(const std::vector<PolyMatrix>& differentials);

}  // namespace charquant
