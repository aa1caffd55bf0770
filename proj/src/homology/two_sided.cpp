#include <chrono>
#include <random>

#include "charquant/azumaya.hpp"
#include "charquant/complexes.hpp"
#include "charquant/error.hpp"
#include "charquant/smith.hpp"

namespace charquant {

namespace {

TensorOperator as_payload(const WeylElement& u) {
  if (u.flavor() != Flavor::restricted || u.is_opposite())
    throw Error(ErrorCode::FlavorMismatch, "expected a restricted operator");
  const int p = u.p();
  TensorOperator T(p, 0, Coefficient::Dres);
  for (const auto& [mono, c] : u.terms()) T.add_term(TensorKey{{}, mono.d}, c, Polynomial::monomial(p, Var::x, mono.x));
  return T;
}

void require_degree_one(const TensorOperator& T) {
  if (T.arity() != 1 || T.coefficient() != Coefficient::Dres || T.slot_flavor() != SlotFlavor::restricted)
    throw Error(ErrorCode::ArityMismatch, "expected a degree-0 two-sided cochain (arity 1, coefficient Dres)");
}

WeylElement random_restricted(std::mt19937_64& rng, int p) {
  WeylElement u(p, Flavor::restricted);
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < terms; ++k)
    u.add_term(static_cast<int>(rng() % (2 * p)), static_cast<int>(rng() % p), static_cast<int>(rng() % p));
  return u;
}

}  // namespace

// u -> (g -> u g): the coface that multiplies the new argument in from the right.
TensorOperator chi(const WeylElement& u) { return coface(as_payload(u), 1); }

TensorOperator star(const TensorOperator& A, const TensorOperator& B) {
  require_degree_one(A);
  require_degree_one(B);
  if (A.p() != B.p()) throw Error(ErrorCode::ModulusMismatch, "operators over different fields");
  const int p = A.p();
  const PrimeField& F = field(p);
  TensorOperator out(p, 1, Coefficient::Dres);
  for (const auto& [ka, fa] : A.terms())
    for (const auto& [kb, fb] : B.terms()) {
      const int b = ka.slots[0];
      for (int j = 0; j <= b; ++j) {
        const int w = F.binomial(b, j);
        if (w == 0) continue;
        const Polynomial f = fa * iterated_derivative(fb, j);
        if (f.is_zero()) continue;
        out.add_term(TensorKey{{b - j + kb.slots[0]}, ka.payload + kb.payload}, w, f);
      }
    }
  return out;
}

TensorOperator two_sided_differential(const TensorOperator& T) {
  if (T.arity() < 1) throw Error(ErrorCode::ArityMismatch, "two-sided cochains have arity at least 1");
  TensorOperator out(T.p(), T.arity() + 1, T.coefficient(), T.slot_flavor());
  for (int k = 1; k <= T.arity() + 1; ++k) {
    if (k % 2 == 1)
      out += coface(T, k);
    else
      out -= coface(T, k);
  }
  return out;
}

VerificationReport two_sided_check(int p, int N, int samples, unsigned long long seed) {
  const auto start = std::chrono::steady_clock::now();
  require_supported_prime(p);
  if (p > 3) throw Error(ErrorCode::UnsupportedCombination, "two-sided complex supports p in {2, 3}");
  if (N < 2) throw Error(ErrorCode::TruncationTooSmall, "two-sided check needs N >= 2");
  VerificationReport rep;
  rep.suite = "two-sided";
  rep.p = p;

  const AssembledComplex K = build_two_sided(p, N);
  bool dd = true;
  for (std::size_t n = 0; n + 1 < K.complex.differentials.size(); ++n)
    dd = dd && (K.complex.differentials[n + 1] * K.complex.differentials[n]).is_zero();
  rep.add("d_squared_zero", dd);
  rep.add("degree_0_rank_p^3", K.complex.ranks[0] == p * p * p);
  rep.summaries = complex_cohomology(K.complex);
  const auto& h = rep.summaries;
  rep.add("H0_free_rank_p^2", h[0].free_rank == p * p && h[0].torsion.empty());
  for (std::size_t n = 1; n < h.size(); ++n) rep.add("H" + std::to_string(n) + "_vanishes", h[n].vanishes());

  // Matrix of chi from the k[t]-basis x^a d^c of Dres into degree 0.
  const auto basis = restricted_basis(p);
  const ComplexSpec& spec = K.spec;
  PolyMatrix X(p, K.complex.ranks[0], static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto col = coordinates(spec, 0, chi(basis[j]));
    for (int r = 0; r < X.rows(); ++r) X(r, static_cast<int>(j)) = col[r];
  }
  rep.add("chi_lands_in_cocycles", (K.complex.differentials[0] * X).is_zero());
  const auto f = invariant_factors(X);
  bool saturated = static_cast<int>(f.size()) == p * p;
  for (const auto& g : f) saturated = saturated && g.is_unit();
  rep.add("chi_injective", static_cast<int>(f.size()) == p * p);
  rep.add("chi_onto_H0", saturated && h[0].free_rank == p * p);

  std::mt19937_64 rng(seed);
  bool mult = true;
  for (int s = 0; s < samples && mult; ++s) {
    const WeylElement u = random_restricted(rng, p), v = random_restricted(rng, p);
    mult = chi(weyl_mul(u, v)) == star(chi(u), chi(v));
  }
  rep.add("chi_multiplicative_on_" + std::to_string(samples) + "_pairs", mult);
  rep.notes.push_back("degree n term: operators in n+1 arguments with values in Dres (left factor glued over O); "
                      "differential drops the first coface");
  rep.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace charquant
