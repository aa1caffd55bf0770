#include <doctest.h>

#include "charquant/error.hpp"
#include "charquant/field.hpp"
#include "charquant/polynomial.hpp"
#include "generators.hpp"

using namespace charquant;
using charquant::testing::random_poly;
using charquant::testing::Rng;
using charquant::testing::uniform;

namespace {

// Binomials by exact integer Pascal rows, reduced at the end.
long long exact_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Polynomial X(int p, std::initializer_list<int> c) { return Polynomial(p, Var::x, c); }

}  // namespace

TEST_CASE("supported moduli") {
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(14));
  CHECK_THROWS_AS(require_supported_prime(4), Error);
  CHECK_THROWS_AS(require_supported_prime(17), Error);
  try {
    require_supported_prime(9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidModulus);
  }
}

TEST_CASE("field arithmetic and inverses") {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    const PrimeField& F = field(p);
    for (int a = 1; a < p; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(F.inv(0), Error);
    CHECK(F.reduce(-1) == p - 1);
    CHECK(F.factorial(p - 1) == p - 1);  // Wilson
  }
}

TEST_CASE("Lucas binomials agree with exact binomials") {
  for (int p : {2, 3, 5, 7}) {
    const PrimeField& F = field(p);
    for (int n = 0; n <= 30; ++n)
      for (int k = 0; k <= n; ++k) CHECK(F.binomial(n, k) == exact_binomial(n, k) % p);
    CHECK(F.binomial(3, 5) == 0);
  }
}

TEST_CASE("polynomial ring axioms on random triples") {
  Rng rng(7);
  for (int p : {2, 3, 5}) {
    for (int s = 0; s < 60; ++s) {
      const Polynomial a = random_poly(rng, p, Var::x, 6), b = random_poly(rng, p, Var::x, 6),
                       c = random_poly(rng, p, Var::x, 6);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a - a == Polynomial(p, Var::x));
      if (!b.is_zero()) {
        const auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
      }
    }
  }
}

TEST_CASE("division by zero and mixed operands are rejected") {
  const Polynomial f = X(3, {1, 1});
  CHECK_THROWS_AS(f.divmod(Polynomial(3, Var::x)), Error);
  CHECK_THROWS_AS(f + X(5, {1}), Error);
  CHECK_THROWS_AS(f + Polynomial(3, Var::t, {1}), Error);
}

TEST_CASE("gcd and Bezout identity") {
  Rng rng(11);
  for (int s = 0; s < 50; ++s) {
    const int p = s % 2 == 0 ? 3 : 5;
    const Polynomial common = random_poly(rng, p, Var::t, 2);
    const Polynomial a = random_poly(rng, p, Var::t, 4) * common, b = random_poly(rng, p, Var::t, 4) * common;
    const ExtendedGcd e = extended_gcd(a, b);
    CHECK(e.s * a + e.u * b == e.g);
    CHECK(e.g == gcd(a, b));
    if (!e.g.is_zero()) {
      CHECK(e.g.is_monic());
      CHECK((a % e.g).is_zero());
      CHECK((b % e.g).is_zero());
      if (!common.is_zero()) CHECK((e.g % common.monic()).is_zero());
    }
  }
}

TEST_CASE("Hasse derivatives") {
  CHECK(hasse_derivative(X(3, {0, 0, 1}), 1) == X(3, {0, 2}));
  CHECK(hasse_derivative(X(5, {1}), 1).is_zero());
  for (int p : {2, 3, 5, 7}) CHECK(hasse_derivative(Polynomial::monomial(p, Var::x, p), 1).is_zero());
  // Unlike ordinary derivatives, d^[p] x^p = 1.
  CHECK(hasse_derivative(Polynomial::monomial(3, Var::x, 3), 3) == X(3, {1}));

  Rng rng(3);
  for (int p : {2, 3, 5}) {
    const PrimeField& F = field(p);
    for (int s = 0; s < 40; ++s) {
      const Polynomial f = random_poly(rng, p, Var::x, 12);
      const int i = uniform(rng, 0, 5), j = uniform(rng, 0, 5);
      CHECK(hasse_derivative(hasse_derivative(f, j), i) == hasse_derivative(f, i + j) * F.binomial(i + j, i));
      // k! d^[k] = d^k
      CHECK(hasse_derivative(f, i) * F.factorial(i) == iterated_derivative(f, i));
    }
  }
}

TEST_CASE("iterated derivative kills x^p") {
  CHECK(iterated_derivative(Polynomial::monomial(3, Var::x, 4), 3).is_zero());
  CHECK(iterated_derivative(X(5, {0, 0, 1}), 2) == X(5, {2}));
}

TEST_CASE("Frobenius decomposition") {
  auto T = [](int p, std::initializer_list<int> c) { return Polynomial(p, Var::t, c); };
  auto parts = frobenius_decompose(Polynomial::monomial(2, Var::x, 3));
  CHECK(parts[0].is_zero());
  CHECK(parts[1] == T(2, {0, 1}));
  parts = frobenius_decompose(X(2, {0, 1, 1}));
  CHECK(parts[0] == T(2, {0, 1}));
  CHECK(parts[1] == T(2, {1}));
  parts = frobenius_decompose(X(5, {1}));
  CHECK(parts.size() == 5);
  CHECK(parts[0] == T(5, {1}));
  for (int a = 1; a < 5; ++a) CHECK(parts[a].is_zero());

  Rng rng(5);
  for (int p : {2, 3, 5, 7})
    for (int s = 0; s < 30; ++s) {
      const Polynomial f = random_poly(rng, p, Var::x, 25);
      CHECK(frobenius_reassemble(frobenius_decompose(f)) == f);
    }
}

TEST_CASE("coefficient strings") {
  CHECK(Polynomial(3, Var::t).coefficient_string() == "0");
  CHECK(Polynomial(3, Var::t, {1, 0, 2}).coefficient_string() == "1+0*t+2*t^2");
  CHECK(Polynomial(2, Var::t, {0, 1}).coefficient_string() == "0+1*t");
}
