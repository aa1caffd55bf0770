#pragma once

#include <vector>

#include "charquant/fp_matrix.hpp"
#include "charquant/poly_matrix.hpp"
#include "charquant/weyl.hpp"

namespace charquant {

/// Monomial box x-degree <= x_max, d-degree <= d_max (restricted elements
/// are further capped at p-1).
struct MonomialBox {
  int x_max = 0;
  int d_max = 0;
};

/// Default box: x-degree 3p; d-degree p-1 (restricted) or 3p (crystalline).
MonomialBox default_box(Flavor flavor, int p);

/// Basis of {u in box : [u, g] = 0 for every g in generators}, in reduced
/// echelon order (each basis element has a distinguished leading monomial).
std::vector<WeylElement> commutant(Flavor flavor, int p, MonomialBox box,
                                   const std::vector<WeylElement>& generators);

/// Central elements within the box. Throws BoundsTooSmall if x_max < p, or
/// d_max < p for the crystalline algebra; divided-power flavor is unsupported.
std::vector<WeylElement> center(Flavor flavor, int p, MonomialBox box);

/// p x p matrix over F_p[t] of a restricted element acting on k[x], which is
/// free over k[t] = k[x^p] with basis 1, x, ..., x^{p-1}.
using MatrixOverOprime = PolyMatrix;

MatrixOverOprime end_iso(const WeylElement& u);

/// The k[t]-basis x^a d^c (a, c < p) of the restricted algebra.
std::vector<WeylElement> restricted_basis(int p);

/// p^2 x p^2 matrix whose column j is end_iso(restricted_basis(p)[j]) flattened
/// row-major. It is unimodular exactly when end_iso is bijective.
PolyMatrix end_iso_matrix(int p);

/// Specialization of the restricted algebra at t = a, represented on
/// F_p[x]/(x^p - a) = F_p[x]/((x - a)^p).
struct FiberAlgebra {
  int p = 2;
  int point = 0;
  std::vector<WeylMonomial> basis;    // x^i d^j, i, j < p
  std::vector<FpMatrix> images;       // action matrices on 1, x, ..., x^{p-1}
  int dimension = 0;                  // = p^2
  int image_rank = 0;                 // rank of the span of images in M_p(F_p)
  bool multiplicative = false;        // images respect the fiber product
  bool is_matrix_algebra = false;     // dimension == image_rank == p^2
};

FiberAlgebra fiber_at(FieldElement a);

/// Action matrix of u on F_p[x]/(x^p - a).
FpMatrix fiber_action(const WeylElement& u, int a);

}  // namespace charquant
