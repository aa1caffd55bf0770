#pragma once

#include <string>
#include <vector>

#include "charquant/cohomology.hpp"
#include "charquant/tensor_operator.hpp"

namespace charquant {

/// N: complexes are assembled in degrees 0..N, cohomology reported in 0..N-1.
/// M: per-slot (and payload) order bound, crystalline families only.
struct TruncationParams {
  int N = 3;
  int M = 0;
};

enum class Family {
  HH_rel_Oprime,       // O_{X'}-linear polydifferential complex, restricted slots
  HH_rel_Oprime_full,  // crystalline slots, order-truncated
  Reduced,
  Resolution,
  TwoSided,
  Hypersurface,
};

const char* to_string(Family f);

struct ComplexSpec {
  Family family = Family::HH_rel_Oprime;
  Coefficient coeff = Coefficient::O;
  int p = 2;
  TruncationParams truncation;
  bool normalized = true;
};

/// A named boolean outcome inside a report.
struct Check {
  std::string name;
  bool pass = false;
  /// Informational checks are reported but do not enter the verdict.
  bool informational = false;
};

struct VerificationReport {
  std::string suite;
  int p = 2;
  std::vector<HomologySummary> summaries;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  double wall_time_seconds = 0.0;

  void add(std::string name, bool pass, bool informational = false) {
    checks.push_back({std::move(name), pass, informational});
  }
  bool passed() const;
};

/// Complex plus the operator basis of every degree (TensorOperator families).
struct AssembledComplex {
  ComplexSpec spec;
  CochainMatrixComplex complex;
  /// basis[n][j]: the j-th basis element x^a * key of C^n.
  struct BasisElement {
    int a = 0;
    TensorKey key;
  };
  std::vector<std::vector<BasisElement>> basis;
  /// Differential terms that fell outside an order truncation.
  long long dropped_terms = 0;
};

/// Slot flavor and bounds used by the TensorOperator families.
SlotFlavor slot_flavor_of(const ComplexSpec& spec);

/// Basis of C^n for a TensorOperator family.
std::vector<AssembledComplex::BasisElement> cochain_basis(const ComplexSpec& spec, int n);

/// The basis element as a TensorOperator.
TensorOperator basis_operator(const ComplexSpec& spec, const AssembledComplex::BasisElement& e);

/// Coordinates over F_p[t] of T in the basis of C^n; throws NotNormalized if
/// T has terms outside the basis.
std::vector<Polynomial> coordinates(const ComplexSpec& spec, int n, const TensorOperator& T);

/// The operator with the given coordinates in the basis of C^n.
TensorOperator from_coordinates(const ComplexSpec& spec, int n, const std::vector<Polynomial>& v);

/// Throws TruncationTooSmall / UnsupportedCombination.
AssembledComplex build_complex(const ComplexSpec& spec);

VerificationReport hochschild_cohomology(const ComplexSpec& spec);
VerificationReport full_quant_check(int p, TruncationParams truncation);
VerificationReport resolution_check(int p);
VerificationReport reduced_complex(int p, int N);
VerificationReport dhoch_endpoint_check(int p);

enum class HypersurfaceCoefficients { O, End };
std::vector<HomologySummary> hypersurface_oracle(int p, int N, HypersurfaceCoefficients coeff);

/// Alternating d/dx and (d/dx)^{p-1} on k[x] in the basis 1, ..., x^{p-1}.
CochainMatrixComplex reduced_complex_matrices(int p, int N);
/// C5 -> C4 -> ... -> C0 -> Dres, with C_k = D^e free of rank p^3.
CochainMatrixComplex resolution_complex_matrices(int p);
/// Periodic resolution of k[x] over k[x] (x)_{k[t]} k[x], applied to the coefficients.
CochainMatrixComplex hypersurface_complex(int p, int N, HypersurfaceCoefficients coeff);

VerificationReport dold_kan_crosscheck(const ComplexSpec& spec);
VerificationReport fg_composite(int p, int m);
VerificationReport azumaya_suite(int p, const std::vector<int>& points);

/// Degree-1 term of the two-sided complex: restricted operators with
/// coefficient Dres in one argument, i.e. Dres (x)_O Dres.
TensorOperator chi(const WeylElement& u);
/// Product on the degree-1 term: (A * B)(g) = A~(B(g)), with A~ the
/// right-Dres-linear extension of A.
TensorOperator star(const TensorOperator& A, const TensorOperator& B);
/// Differential of the two-sided complex from degree n (operators of arity n+1).
TensorOperator two_sided_differential(const TensorOperator& T);
AssembledComplex build_two_sided(int p, int N);
VerificationReport two_sided_check(int p, int N, int samples = 50, unsigned long long seed = 42);

/// Randomized structural identities of the polydifferential complex.
struct IdentityOptions {
  int p = 2;
  int samples = 100;
  unsigned long long seed = 42;
};
VerificationReport identity_suite(const IdentityOptions& options);

/// Matrix columns against the operator-level differential evaluated on
/// monomial tuples. exhaustive = every basis element; otherwise `samples`.
VerificationReport oracle_coherence(const ComplexSpec& spec, bool exhaustive, int samples,
                                    unsigned long long seed);

}  // namespace charquant
