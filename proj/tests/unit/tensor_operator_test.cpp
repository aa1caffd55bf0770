#include <doctest.h>

#include <vector>

#include "charquant/error.hpp"
#include "charquant/pol.hpp"
#include "charquant/tensor_operator.hpp"
#include "generators.hpp"

using namespace charquant;
using charquant::testing::random_poly;
using charquant::testing::Rng;
using charquant::testing::uniform;

namespace {

constexpr Coefficient O = Coefficient::O;
constexpr SlotFlavor R = SlotFlavor::restricted;
constexpr SlotFlavor C = SlotFlavor::crystalline;

Polynomial X(int p, std::initializer_list<int> c) { return Polynomial(p, Var::x, c); }
Polynomial one(int p) { return X(p, {1}); }
Polynomial xpow(int p, int e) { return Polynomial::monomial(p, Var::x, e); }

TensorOperator op(int p, std::vector<int> slots, const Polynomial& f, SlotFlavor fl = R, Coefficient c = O,
                  int payload = 0) {
  return TensorOperator::monomial(p, c, fl, std::move(slots), payload, f);
}

// All monomial tuples (x^{e_1}, ..., x^{e_n}) with e_l <= top.
std::vector<std::vector<Polynomial>> monomial_tuples(int p, int n, int top) {
  std::vector<std::vector<Polynomial>> out{{}};
  for (int l = 0; l < n; ++l) {
    std::vector<std::vector<Polynomial>> next;
    for (const auto& t : out)
      for (int e = 0; e <= top; ++e) {
        auto u = t;
        u.push_back(xpow(p, e));
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

bool same_on_monomials(const TensorOperator& A, const TensorOperator& B, int top) {
  for (const auto& args : monomial_tuples(A.p(), A.arity(), top))
    if (evaluate(A, args) != evaluate(B, args)) return false;
  return true;
}

TensorOperator random_op(Rng& rng, int p, int arity, SlotFlavor fl) {
  TensorOperator T(p, arity, O, fl);
  const int terms = uniform(rng, 1, 3);
  const int top = fl == R ? p - 1 : p + 1;
  for (int k = 0; k < terms; ++k) {
    TensorKey key;
    for (int s = 0; s < arity; ++s) key.slots.push_back(uniform(rng, 0, top));
    T.add_term(key, random_poly(rng, p, Var::x, 2));
  }
  return T;
}

}  // namespace

TEST_CASE("evaluation") {
  const int p = 5;
  const auto f = X(p, {1, 2}), g = X(p, {0, 3, 1});
  CHECK(evaluate_function(op(p, {1, 1}, one(p)), {f, g}) == f.derivative() * g.derivative());
  CHECK(evaluate_function(TensorOperator::function(g), {}) == g);
  CHECK(evaluate_function(op(p, {0, 1}, one(p)), {xpow(p, 1), xpow(p, 2)}) == X(p, {0, 0, 2}));
  CHECK_THROWS_AS(evaluate(op(p, {1}, one(p)), {f, g}), Error);
}

TEST_CASE("restricted normal form drops high slots") {
  TensorOperator T(3, 1, O, R);
  T.add_term({{3}, 0}, one(3));
  CHECK(T.is_zero());
}

TEST_CASE("cofaces of a derivation") {
  const int p = 3;
  const auto d = op(p, {1}, one(p));
  CHECK(coface(d, 1) == op(p, {1, 0}, one(p)) + op(p, {0, 1}, one(p)));
  CHECK(evaluate_function(coface(d, 1), {xpow(p, 1), xpow(p, 2)}) == X(p, {0, 0, 0, 0}));  // 3x^2 = 0 mod 3
  CHECK_THROWS_AS(coface(d, 3), Error);
  CHECK_THROWS_AS(coface(d, -1), Error);
}

TEST_CASE("codegeneracies") {
  const int p = 3;
  CHECK(codegeneracy(op(p, {1, 0}, one(p)), 0).is_zero());
  const auto A = op(p, {2}, X(p, {0, 1}));
  CHECK(codegeneracy(op(p, {0, 2}, X(p, {0, 1})), 0) == A);
  const auto f = X(p, {2, 1});
  CHECK(codegeneracy(op(p, {0, 0}, f), 0) == op(p, {0}, f));
  CHECK(codegeneracy(op(p, {0}, f), 0) == TensorOperator::function(f));
  CHECK_THROWS_AS(codegeneracy(TensorOperator::function(f), 0), Error);
}

TEST_CASE("cochain differential examples") {
  CHECK(cochain_differential(TensorOperator::function(X(3, {1, 1}))).is_zero());
  for (int p : {2, 3, 5}) CHECK(cochain_differential(op(p, {1}, one(p))).is_zero());
  const int p = 5;
  CHECK(cochain_differential(op(p, {2}, one(p))) == op(p, {1, 1}, one(p)) * (p - 2));
}

TEST_CASE("cup product examples") {
  const int p = 3;
  const auto f = X(p, {1, 1}), g = X(p, {0, 2});
  CHECK(cup(TensorOperator::function(f), TensorOperator::function(g)) == TensorOperator::function(f * g));
  const auto d = op(p, {1}, one(p));
  CHECK(cup(d, d) == op(p, {1, 1}, one(p)) * (p - 1));
  const auto A = op(p, {2, 1}, g);
  CHECK(cup(TensorOperator::function(one(p)), A) == A);
  const auto payload = op(p, {1}, one(p), R, Coefficient::Dres, 2);
  CHECK_THROWS_AS(cup(payload, d), Error);
}

TEST_CASE("brace examples") {
  const int p = 3;
  const auto mu = TensorOperator::multiplication(p);
  const auto d = op(p, {1}, one(p));
  CHECK(brace(mu, {}) == mu);
  CHECK(brace(mu, {d}) == op(p, {1, 0}, one(p)) + op(p, {0, 1}, one(p)));
  const auto f = X(p, {1, 0, 1});
  CHECK(brace(d, {TensorOperator::function(f)}) == TensorOperator::function(f.derivative()));
  CHECK_THROWS_AS(brace(d, {d, d}), Error);
  const auto B = op(p, {1}, one(p), R, Coefficient::Dres, 1);
  CHECK(brace_module_action(B, {}) == B);
  const auto acted = brace_module_action(B, {d});
  CHECK(acted.coefficient() == Coefficient::Dres);
  CHECK(same_on_monomials(acted, op(p, {2}, one(p), R, Coefficient::Dres, 1), p - 1));
}

TEST_CASE("Gerstenhaber bracket examples") {
  const int p = 3;
  const auto f = TensorOperator::function(X(p, {1, 1})), g = TensorOperator::function(X(p, {0, 2}));
  CHECK(gerstenhaber(f, g).is_zero());
  const auto mu = TensorOperator::multiplication(p);
  CHECK(gerstenhaber(mu, mu).is_zero());
  const auto xi = pol_embed(PolMonomial{Polynomial(2, Var::t, {1}), {1}});
  const auto txi = pol_embed(PolMonomial{Polynomial(2, Var::t, {0, 1}), {1}});
  CHECK(gerstenhaber(xi, txi).is_zero());
}

TEST_CASE("brace agrees with evaluation on random samples") {
  Rng rng(13);
  for (int p : {2, 3})
    for (int s = 0; s < 40; ++s) {
      const int i = uniform(rng, 1, 2), j = uniform(rng, 0, 2);
      const auto A = random_op(rng, p, i, R), B = random_op(rng, p, j, R);
      const auto AB = brace(A, {B});
      // A{B}(g_1..g_n) = sum over insertion positions of signed A(.., B(..), ..).
      for (const auto& args : monomial_tuples(p, i + j - 1, p)) {
        Polynomial expect(p, Var::x);
        for (int pos = 0; pos < i; ++pos) {
          std::vector<Polynomial> inner(args.begin() + pos, args.begin() + pos + j);
          std::vector<Polynomial> outer(args.begin(), args.begin() + pos);
          outer.push_back(evaluate_function(B, inner));
          outer.insert(outer.end(), args.begin() + pos + j, args.end());
          const int sign = (pos * (j - 1)) % 2 == 0 ? 1 : p - 1;
          expect += evaluate_function(A, outer) * sign;
        }
        CHECK(evaluate_function(AB, args) == expect);
      }
    }
}

TEST_CASE("delta squared and cup Leibniz on random samples") {
  Rng rng(19);
  for (int p : {2, 3})
    for (int s = 0; s < 30; ++s) {
      const int i = uniform(rng, 0, 2), j = uniform(rng, 0, 2);
      const auto A = random_op(rng, p, i, R), B = random_op(rng, p, j, R);
      CHECK(cochain_differential(cochain_differential(A)).is_zero());
      const auto lhs = cochain_differential(cup(A, B));
      const int s1 = j % 2 == 0 ? 1 : p - 1;
      CHECK(lhs == cup(cochain_differential(A), B) * s1 + cup(A, cochain_differential(B)));
    }
}

TEST_CASE("Pol embedding") {
  for (int p : {2, 3, 5}) {
    const auto xi = pol_embed(PolMonomial{Polynomial(p, Var::t, {1}), {1}});
    CHECK(xi == op(p, {p}, one(p), C));
    const auto t = pol_embed(PolMonomial{Polynomial(p, Var::t, {0, 1}), {}});
    CHECK(t == TensorOperator::function(xpow(p, p), O, C));
    CHECK(pol_restrict(xi) == PolElement(PolMonomial{Polynomial(p, Var::t, {1}), {1}}));
  }
  const int p = 3;
  const auto xi = pol_embed(PolMonomial{Polynomial(p, Var::t, {1}), {1}});
  CHECK(coface(xi, 1) == op(p, {p, 0}, one(p), C) + op(p, {0, p}, one(p), C));
  CHECK_THROWS_AS(pol_restrict(op(p, {1}, one(p), C)), Error);
}

TEST_CASE("Pol differential and exactness") {
  Rng rng(29);
  for (int p : {2, 3})
    for (int s = 0; s < 20; ++s) {
      PolElement m(p, 2);
      m.add_term({uniform(rng, 1, 3), uniform(rng, 1, 3)}, 1, random_poly(rng, p, Var::t, 2));
      CHECK(pol_embed(pol_differential(m)) == cochain_differential(pol_embed(m)));
      CHECK(pol_differential(pol_differential(m)).is_zero());
      CHECK(pol_is_exact(pol_differential(m)));
    }
  // xi_1 xi_2 is a cocycle that is not a coboundary.
  PolElement cocycle(2, 2);
  cocycle.add_term({1, 1}, 1, Polynomial(2, Var::t, {1}));
  CHECK(pol_differential(cocycle).is_zero());
  CHECK_FALSE(pol_is_exact(cocycle));
}
