#include <chrono>
#include <functional>
#include <random>

#include "charquant/complexes.hpp"
#include "charquant/error.hpp"
#include "charquant/pol.hpp"

namespace charquant {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Polynomial random_poly(Rng& rng, int p, Var v, int max_degree) {
  Polynomial f(p, v);
  for (int e = 0; e <= max_degree; ++e) f.add_term(e, uniform(rng, 0, p - 1));
  return f;
}

int max_payload(Coefficient c, int p) {
  switch (c) {
    case Coefficient::O: return 0;
    case Coefficient::Dres:
    case Coefficient::DresOp: return p - 1;
    case Coefficient::Dfull: return 2 * p;
  }
  return 0;
}

TensorOperator random_operator(Rng& rng, int p, int arity, Coefficient c, SlotFlavor flavor) {
  TensorOperator T(p, arity, c, flavor);
  const int slot_hi = flavor == SlotFlavor::restricted ? p - 1 : 2 * p;
  const int terms = uniform(rng, 1, 3);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> slots(arity);
    for (int& b : slots) b = uniform(rng, 0, slot_hi);
    Polynomial f = random_poly(rng, p, Var::x, 2 * p);
    if (f.is_zero()) f = Polynomial::constant(p, Var::x, 1);
    T.add_term(TensorKey{slots, uniform(rng, 0, max_payload(c, p))}, f);
  }
  return T;
}

Coefficient random_coefficient(Rng& rng, SlotFlavor* flavor) {
  const int k = uniform(rng, 0, 3);
  *flavor = k == 3 ? SlotFlavor::crystalline : SlotFlavor::restricted;
  return static_cast<Coefficient>(k);
}

std::vector<Polynomial> random_args(Rng& rng, int p, int n) {
  std::vector<Polynomial> args;
  for (int l = 0; l < n; ++l) args.push_back(Polynomial::monomial(p, Var::x, uniform(rng, 0, 2 * p)));
  return args;
}

// Direct evaluation of the k-th coface from the defining formulas.
WeylElement coface_by_formula(const TensorOperator& T, int k, const std::vector<Polynomial>& g) {
  const int i = T.arity();
  const Coefficient c = T.coefficient();
  if (k == 0) return left_action(c, g[0], evaluate(T, std::vector<Polynomial>(g.begin() + 1, g.end())));
  if (k == i + 1) return right_action(c, evaluate(T, std::vector<Polynomial>(g.begin(), g.end() - 1)), g.back());
  std::vector<Polynomial> merged(g.begin(), g.begin() + (k - 1));
  merged.push_back(g[k - 1] * g[k]);
  merged.insert(merged.end(), g.begin() + k + 1, g.end());
  return evaluate(T, merged);
}

// Direct evaluation of a single-insert brace.
WeylElement brace_by_formula(const TensorOperator& A, const TensorOperator& B, const std::vector<Polynomial>& g) {
  const int i = A.arity(), j = B.arity();
  WeylElement out(A.p(), payload_flavor(A.coefficient()));
  for (int s = 0; s < i; ++s) {
    std::vector<Polynomial> args(g.begin(), g.begin() + s);
    args.push_back(evaluate_function(B, std::vector<Polynomial>(g.begin() + s, g.begin() + s + j)));
    args.insert(args.end(), g.begin() + s + j, g.end());
    WeylElement v = evaluate(A, args);
    if (((j - 1) * s) % 2 != 0) v *= -1;
    out += v;
  }
  return out;
}

struct Tally {
  int samples = 0;
  int failures = 0;
  void record(bool ok) {
    ++samples;
    failures += ok ? 0 : 1;
  }
};

void add_tally(VerificationReport& rep, const std::string& name, const Tally& t, bool informational = false) {
  rep.add(name, t.failures == 0 && t.samples > 0, informational);
  rep.notes.push_back(name + ": " + std::to_string(t.samples) + " samples, " + std::to_string(t.failures) +
                      " failures");
}

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

// Global sign relating delta to ad(mu) on the right. Signs are invisible in
// characteristic 2, so the sign is fixed on p = 3 samples.
int calibrated_sign() {
  static const int sigma = [] {
    Rng rng(42);
    for (int s = 0; s < 1000; ++s) {
      const TensorOperator A = random_operator(rng, 3, uniform(rng, 1, 3), Coefficient::O, SlotFlavor::restricted);
      const TensorOperator dA = cochain_differential(A);
      if (dA.is_zero()) continue;
      const TensorOperator br = gerstenhaber(A, TensorOperator::multiplication(3));
      if (dA == br) return 1;
      if (dA == br * -1) return -1;
      return 0;
    }
    return 0;
  }();
  return sigma;
}

}  // namespace

VerificationReport identity_suite(const IdentityOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int p = options.p;
  require_supported_prime(p);
  if (options.samples < 1) throw Error(ErrorCode::IndexOutOfRange, "sample count must be positive");
  Rng rng(options.seed + 1000003ULL * static_cast<unsigned long long>(p));
  VerificationReport rep;
  rep.suite = "identities";
  rep.p = p;

  Tally cosimplicial, coface_oracle, dd, cup_leibniz, cup_oracle, brace_oracle, module_oracle, prelie, ad_right,
      ad_left_global, ad_left_graded, pol_bracket, pol_cochain, pol_braces, pol_cocycle_bracket, pol_cocycle_exact;
  const int sigma = calibrated_sign();

  for (int s = 0; s < options.samples; ++s) {
    SlotFlavor flavor;
    const Coefficient c = random_coefficient(rng, &flavor);

    {
      // Cosimplicial identities on a random operator of arity n <= 2.
      const int n = uniform(rng, 0, 2);
      const TensorOperator T = random_operator(rng, p, n, c, flavor);
      bool ok = true;
      for (int a = 0; a <= n + 1; ++a)
        for (int b = a + 1; b <= n + 2; ++b) ok = ok && coface(coface(T, a), b) == coface(coface(T, b - 1), a);
      for (int i = 0; i <= n + 1; ++i)
        for (int j = 0; j <= n; ++j) {
          const TensorOperator lhs = codegeneracy(coface(T, i), j);
          if (i < j)
            ok = ok && lhs == coface(codegeneracy(T, j - 1), i);
          else if (i == j || i == j + 1)
            ok = ok && lhs == T;
          else
            ok = ok && lhs == coface(codegeneracy(T, j), i - 1);
        }
      if (n >= 2)
        for (int i = 0; i <= n - 2; ++i)
          for (int j = i; j <= n - 2; ++j)
            ok = ok && codegeneracy(codegeneracy(T, j + 1), i) == codegeneracy(codegeneracy(T, i), j);
      cosimplicial.record(ok);

      if (flavor == SlotFlavor::restricted) {
        const int k = uniform(rng, 0, n + 1);
        const auto g = random_args(rng, p, n + 1);
        coface_oracle.record(evaluate(coface(T, k), g) == coface_by_formula(T, k, g));
      }
    }

    {
      const TensorOperator T = random_operator(rng, p, uniform(rng, 0, 3), c, flavor);
      dd.record(cochain_differential(cochain_differential(T)).is_zero());
    }

    {
      const int i = uniform(rng, 0, 2), j = uniform(rng, 0, 2);
      const TensorOperator A = random_operator(rng, p, i, Coefficient::O, flavor);
      const TensorOperator B = random_operator(rng, p, j, c, flavor);
      const TensorOperator lhs = cochain_differential(cup(A, B));
      const TensorOperator rhs = cup(cochain_differential(A), B) * sign_of(j) + cup(A, cochain_differential(B));
      cup_leibniz.record(lhs == rhs);
      if (flavor == SlotFlavor::restricted) {
        const auto g = random_args(rng, p, i + j);
        const Polynomial a = evaluate_function(A, std::vector<Polynomial>(g.begin(), g.begin() + i));
        WeylElement expect = left_action(c, a, evaluate(B, std::vector<Polynomial>(g.begin() + i, g.end())));
        expect *= sign_of(i * j);
        cup_oracle.record(evaluate(cup(A, B), g) == expect);
      }
    }

    {
      // Single inserts against direct substitution; module action with Dres payload.
      const int i = uniform(rng, 1, 3), j = uniform(rng, 0, 2);
      const TensorOperator A = random_operator(rng, p, i, Coefficient::O, SlotFlavor::restricted);
      const TensorOperator B = random_operator(rng, p, j, Coefficient::O, SlotFlavor::restricted);
      const auto g = random_args(rng, p, i + j - 1);
      brace_oracle.record(evaluate(brace(A, {B}), g) == brace_by_formula(A, B, g));
      const TensorOperator P = random_operator(rng, p, i, Coefficient::Dres, SlotFlavor::restricted);
      module_oracle.record(evaluate(brace_module_action(P, {B}), g) == brace_by_formula(P, B, g));
    }

    {
      // (A{B}){C} - A{B{C}} = A{B,C} + (-1)^{(j_B-1)(j_C-1)} A{C,B}
      const int ia = uniform(rng, 2, 3), ib = uniform(rng, 1, 2), ic = uniform(rng, 0, 2);
      const TensorOperator A = random_operator(rng, p, ia, Coefficient::O, flavor);
      const TensorOperator B = random_operator(rng, p, ib, Coefficient::O, flavor);
      const TensorOperator C = random_operator(rng, p, ic, Coefficient::O, flavor);
      const TensorOperator assoc = brace(brace(A, {B}), {C}) - brace(A, {brace(B, {C})});
      const TensorOperator two = brace(A, {B, C}) + brace(A, {C, B}) * sign_of((ib - 1) * (ic - 1));
      prelie.record(assoc == two);
    }

    {
      const int i = uniform(rng, 0, 3);
      const TensorOperator A = random_operator(rng, p, i, Coefficient::O, flavor);
      const TensorOperator mu = TensorOperator::multiplication(p, flavor);
      const TensorOperator dA = cochain_differential(A);
      ad_right.record(sigma != 0 && dA == gerstenhaber(A, mu) * sigma);
      ad_left_global.record(dA == gerstenhaber(mu, A) * sigma);
      ad_left_graded.record(dA == gerstenhaber(mu, A) * sign_of(i - 1));
    }

    {
      // Normalized elements: every fiber variable appears (exponents 1..2).
      auto random_pol = [&](int arity) {
        PolElement m(p, arity);
        const int terms = uniform(rng, 1, 2);
        for (int k = 0; k < terms; ++k) {
          std::vector<int> e(arity);
          for (int& x : e) x = uniform(rng, 1, 2);
          m.add_term(e, 1, random_poly(rng, p, Var::t, 2));
        }
        return m;
      };
      const PolElement a = random_pol(uniform(rng, 0, 2)), b = random_pol(uniform(rng, 0, 2));
      const TensorOperator A = pol_embed(a), B = pol_embed(b);
      pol_bracket.record(gerstenhaber(A, B).is_zero());
      bool braces_vanish = true;
      if (A.arity() >= 1 && !B.is_zero()) braces_vanish = brace(A, {B}).is_zero();
      pol_braces.record(braces_vanish);

      // Cocycles: c(t) times products of primitive powers xi_l^{p^k}.
      auto random_cocycle = [&](int arity) {
        PolElement m(p, arity);
        std::vector<int> e(arity);
        for (int& x : e) x = uniform(rng, 0, 1) == 0 ? 1 : p;
        m.add_term(e, 1, random_poly(rng, p, Var::t, 2));
        return m;
      };
      const TensorOperator Z1 = pol_embed(random_cocycle(uniform(rng, 1, 2)));
      const TensorOperator Z2 = pol_embed(random_cocycle(uniform(rng, 1, 2)));
      const TensorOperator zb = gerstenhaber(Z1, Z2);
      pol_cocycle_bracket.record(cochain_differential(Z1).is_zero() && cochain_differential(Z2).is_zero() &&
                                 zb.is_zero());
      pol_cocycle_exact.record(pol_is_exact(pol_restrict(zb)));

      PolElement small(p, uniform(rng, 0, 2));
      std::vector<int> e(small.arity(), 0);
      for (int budget = uniform(rng, 0, 2); budget > 0 && !e.empty(); --budget) ++e[uniform(rng, 0, small.arity() - 1)];
      small.add_term(e, 1, random_poly(rng, p, Var::t, 2));
      bool ok = true;
      for (int k = 0; k <= small.arity() + 1; ++k) ok = ok && coface(pol_embed(small), k) == pol_embed(pol_coface(small, k));
      pol_cochain.record(ok);
    }
  }

  add_tally(rep, "cosimplicial_identities", cosimplicial);
  add_tally(rep, "coface_matches_evaluation", coface_oracle);
  add_tally(rep, "delta_squared_zero", dd);
  add_tally(rep, "cup_leibniz", cup_leibniz);
  add_tally(rep, "cup_matches_evaluation", cup_oracle);
  add_tally(rep, "brace_matches_evaluation", brace_oracle);
  add_tally(rep, "brace_module_matches_evaluation", module_oracle);
  add_tally(rep, "brace_pre_lie", prelie);
  add_tally(rep, "delta_is_sigma_ad_mu", ad_right);
  add_tally(rep, "delta_is_graded_ad_mu_left", ad_left_graded);
  add_tally(rep, "delta_is_global_multiple_of_ad_mu_left", ad_left_global, true);
  add_tally(rep, "pol_gerstenhaber_vanishes", pol_bracket);
  add_tally(rep, "pol_embed_is_cochain_map", pol_cochain);
  add_tally(rep, "pol_all_braces_vanish", pol_braces, true);
  add_tally(rep, "pol_gerstenhaber_vanishes_on_cocycles", pol_cocycle_bracket, true);
  add_tally(rep, "pol_gerstenhaber_of_cocycles_is_exact", pol_cocycle_exact, true);
  rep.notes.push_back("sigma = " + std::to_string(sigma) + " (delta A = sigma [A, mu], fixed at p = 3)");
  rep.notes.push_back("cup Leibniz form: delta(A.B) = (-1)^j delta(A).B + A.delta(B)");
  rep.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

// The differential of the complex evaluated straight from the coface formulas.
WeylElement differential_by_formula(const ComplexSpec& spec, const TensorOperator& T, const std::vector<Polynomial>& g) {
  WeylElement out(spec.p, payload_flavor(spec.coeff));
  const int first = spec.family == Family::TwoSided ? 1 : 0;
  for (int k = first; k <= T.arity() + 1; ++k) {
    WeylElement v = coface_by_formula(T, k, g);
    if ((k - first) % 2 != 0) v *= -1;
    out += v;
  }
  return out;
}

bool agree_on_monomials(const ComplexSpec& spec, const TensorOperator& T, const TensorOperator& R) {
  const int n = R.arity();
  const int top = spec.p;
  std::vector<int> e(n, 0);
  while (true) {
    std::vector<Polynomial> g;
    for (int x : e) g.push_back(Polynomial::monomial(spec.p, Var::x, x));
    if (!(evaluate(R, g) == differential_by_formula(spec, T, g))) return false;
    int l = 0;
    while (l < n && e[l] == top) e[l++] = 0;
    if (l == n) return true;
    ++e[l];
  }
}

}  // namespace

VerificationReport oracle_coherence(const ComplexSpec& spec, bool exhaustive, int samples, unsigned long long seed) {
  const auto start = std::chrono::steady_clock::now();
  if (spec.family != Family::HH_rel_Oprime && spec.family != Family::TwoSided)
    throw Error(ErrorCode::UnsupportedCombination, "evaluation oracle needs restricted slots");
  const AssembledComplex C = build_complex(spec);
  VerificationReport rep;
  rep.suite = std::string("oracle-coherence/") + to_string(spec.family) + "/" + to_string(spec.coeff) +
              (spec.normalized ? "/normalized" : "/unnormalized");
  rep.p = spec.p;

  std::vector<std::pair<int, int>> picks;
  if (exhaustive) {
    for (int n = 0; n < spec.truncation.N; ++n)
      for (int j = 0; j < C.complex.ranks[n]; ++j) picks.emplace_back(n, j);
  } else {
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
      const int n = uniform(rng, 0, spec.truncation.N - 1);
      picks.emplace_back(n, uniform(rng, 0, C.complex.ranks[n] - 1));
    }
  }
  Tally evaluated, operator_level;
  for (const auto& [n, j] : picks) {
    const PolyMatrix& D = C.complex.differentials[n];
    std::vector<Polynomial> col;
    for (int r = 0; r < D.rows(); ++r) col.push_back(D(r, j));
    const TensorOperator R = from_coordinates(spec, n + 1, col);
    const TensorOperator T = basis_operator(spec, C.basis[n][j]);
    evaluated.record(agree_on_monomials(spec, T, R));
    const TensorOperator direct = spec.family == Family::TwoSided ? two_sided_differential(T) : cochain_differential(T);
    operator_level.record(R == direct);
  }
  add_tally(rep, "matrix_columns_match_evaluation", evaluated);
  add_tally(rep, "matrix_columns_match_operator_differential", operator_level);
  rep.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace charquant
