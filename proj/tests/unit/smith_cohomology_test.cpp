#include <doctest.h>

#include <vector>

#include "charquant/cohomology.hpp"
#include "charquant/error.hpp"
#include "charquant/smith.hpp"
#include "generators.hpp"

using namespace charquant;
using charquant::testing::random_matrix;
using charquant::testing::random_poly;
using charquant::testing::Rng;
using charquant::testing::uniform;

namespace {

Polynomial T(int p, std::initializer_list<int> c) { return Polynomial(p, Var::t, c); }

PolyMatrix from_rows(int p, const std::vector<std::vector<Polynomial>>& rows) {
  PolyMatrix m(p, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

bool is_unit_determinant(const PolyMatrix& m) { return m.determinant().is_unit(); }

void check_smith_postconditions(const PolyMatrix& M) {
  const SmithForm s = smith_normal_form(M);
  CHECK(s.U * M * s.V == s.D);
  CHECK(is_unit_determinant(s.U));
  CHECK(is_unit_determinant(s.V));
  for (int r = 0; r < s.D.rows(); ++r)
    for (int c = 0; c < s.D.cols(); ++c)
      if (r != c) CHECK(s.D(r, c).is_zero());
  REQUIRE(static_cast<int>(s.invariant_factors.size()) == s.rank);
  for (int i = 0; i < s.rank; ++i) {
    CHECK(s.D(i, i) == s.invariant_factors[i]);
    CHECK(s.invariant_factors[i].is_monic());
    if (i + 1 < s.rank) CHECK((s.invariant_factors[i + 1] % s.invariant_factors[i]).is_zero());
  }
  for (int i = s.rank; i < std::min(s.D.rows(), s.D.cols()); ++i) CHECK(s.D(i, i).is_zero());
  CHECK(invariant_factors(M) == s.invariant_factors);
}

void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Monic gcd of all k x k minors.
Polynomial minor_gcd(const PolyMatrix& M, int k) {
  std::vector<std::vector<int>> rs, cs;
  std::vector<int> cur;
  choose(M.rows(), k, 0, cur, rs);
  choose(M.cols(), k, 0, cur, cs);
  Polynomial g(M.p(), Var::t);
  for (const auto& r : rs)
    for (const auto& c : cs) {
      PolyMatrix sub(M.p(), k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = M(r[i], c[j]);
      g = gcd(g, sub.determinant());
    }
  return g.is_zero() ? g : g.monic();
}

// Random unimodular matrix together with its inverse, built from elementary
// row operations.
std::pair<PolyMatrix, PolyMatrix> random_unimodular(Rng& rng, int p, int n) {
  PolyMatrix G = PolyMatrix::identity(p, n), Ginv = PolyMatrix::identity(p, n);
  if (n < 2) return {G, Ginv};
  for (int step = 0; step < 3 * n; ++step) {
    const int i = uniform(rng, 0, n - 1);
    int j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    const Polynomial c = random_poly(rng, p, Var::t, 2);
    PolyMatrix E = PolyMatrix::identity(p, n), Einv = PolyMatrix::identity(p, n);
    E(i, j) = c;
    Einv(i, j) = -c;
    G = E * G;
    Ginv = Ginv * Einv;
  }
  return {G, Ginv};
}

// H^n computed literally: coordinates of im d^{n-1} inside a basis of ker d^n.
HomologySummary literal_cohomology(const std::vector<PolyMatrix>& ds, int n) {
  const PolyMatrix& d = ds[n];
  const int p = d.p();
  const auto K = kernel_basis(smith_normal_form(d));
  HomologySummary h;
  h.degree = n;
  const int k = static_cast<int>(K.size());
  if (n == 0 || k == 0) {
    h.free_rank = k;
    return h;
  }
  PolyMatrix Kmat(p, d.cols(), k);
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < d.cols(); ++r) Kmat(r, j) = K[j][r];
  const SmithForm ks = smith_normal_form(Kmat);
  const PolyMatrix& prev = ds[n - 1];
  PolyMatrix coords(p, k, prev.cols());
  for (int c = 0; c < prev.cols(); ++c) {
    std::vector<Polynomial> b;
    for (int r = 0; r < prev.rows(); ++r) b.push_back(prev(r, c));
    bool ok = false;
    const auto x = solve_in_span(ks, b, &ok);
    REQUIRE(ok);
    for (int r = 0; r < k; ++r) coords(r, c) = x[r];
  }
  const auto f = invariant_factors(coords);
  h.free_rank = k - static_cast<int>(f.size());
  for (const auto& g : f)
    if (!g.is_unit()) h.torsion.push_back(g);
  return h;
}

}  // namespace

TEST_CASE("Smith form of a Jordan block") {
  const int p = 3;
  const PolyMatrix M = from_rows(p, {{T(p, {0, 1}), T(p, {1})}, {T(p, {}), T(p, {0, 1})}});
  const SmithForm s = smith_normal_form(M);
  REQUIRE(s.rank == 2);
  CHECK(s.invariant_factors[0] == T(p, {1}));
  CHECK(s.invariant_factors[1] == T(p, {0, 0, 1}));
  check_smith_postconditions(M);
}

TEST_CASE("Smith form of zero and empty matrices") {
  CHECK(smith_normal_form(PolyMatrix(2, 3, 2)).rank == 0);
  CHECK(smith_normal_form(PolyMatrix(2, 0, 4)).rank == 0);
  check_smith_postconditions(PolyMatrix(5, 2, 3));
}

TEST_CASE("Smith postconditions on random matrices") {
  Rng rng(2024);
  for (int s = 0; s < 60; ++s) {
    const int p = std::vector<int>{2, 3, 5}[s % 3];
    const int rows = uniform(rng, 1, s < 50 ? 6 : 12), cols = uniform(rng, 1, s < 50 ? 6 : 12);
    check_smith_postconditions(random_matrix(rng, p, rows, cols, 4));
  }
}

TEST_CASE("Smith postconditions on rank-deficient products") {
  Rng rng(99);
  for (int s = 0; s < 20; ++s) {
    const int p = s % 2 == 0 ? 2 : 3;
    const PolyMatrix A = random_matrix(rng, p, 5, 2, 2), B = random_matrix(rng, p, 2, 6, 2);
    const PolyMatrix M = A * B;
    check_smith_postconditions(M);
    CHECK(smith_normal_form(M).rank <= 2);
  }
}

TEST_CASE("invariant factors are ratios of minor gcds") {
  Rng rng(17);
  for (int s = 0; s < 40; ++s) {
    const int p = s % 2 == 0 ? 2 : 3;
    const PolyMatrix M = random_matrix(rng, p, uniform(rng, 1, 4), uniform(rng, 1, 4), 3);
    const auto f = invariant_factors(M);
    Polynomial prod = T(p, {1});
    for (int k = 1; k <= std::min(M.rows(), M.cols()); ++k) {
      const Polynomial g = minor_gcd(M, k);
      if (k <= static_cast<int>(f.size())) {
        prod = prod * f[k - 1];
        CHECK(g == prod);
      } else {
        CHECK(g.is_zero());
      }
    }
  }
}

TEST_CASE("rank over the fraction field bounds ranks at points") {
  Rng rng(23);
  for (int s = 0; s < 30; ++s) {
    const int p = 5;
    const PolyMatrix M = random_matrix(rng, p, uniform(rng, 1, 6), uniform(rng, 1, 6), 2);
    const SmithForm sf = smith_normal_form(M);
    Polynomial prod = T(p, {1});
    for (const auto& f : sf.invariant_factors) prod = prod * f;
    for (int a = 0; a < p; ++a) {
      const int r = M.evaluate(a).rank();
      CHECK(r <= sf.rank);
      if (prod.evaluate(a) != 0) CHECK(r == sf.rank);
    }
  }
}

TEST_CASE("solve_in_span and kernel_basis") {
  Rng rng(31);
  for (int s = 0; s < 30; ++s) {
    const int p = s % 2 == 0 ? 3 : 5;
    const PolyMatrix M = random_matrix(rng, p, uniform(rng, 1, 5), uniform(rng, 1, 5), 3);
    const SmithForm sf = smith_normal_form(M);
    std::vector<Polynomial> x;
    for (int c = 0; c < M.cols(); ++c) x.push_back(random_poly(rng, p, Var::t, 3));
    const auto b = M.apply(x);
    bool ok = false;
    const auto y = solve_in_span(sf, b, &ok);
    REQUIRE(ok);
    CHECK(M.apply(y) == b);

    const auto K = kernel_basis(sf);
    CHECK(static_cast<int>(K.size()) == M.cols() - sf.rank);
    for (const auto& v : K)
      for (const auto& e : M.apply(v)) CHECK(e.is_zero());
  }
  const int p = 3;
  bool ok = true;
  const PolyMatrix tee = from_rows(p, {{T(p, {0, 1})}});
  CHECK(solve_in_span(smith_normal_form(tee), {T(p, {1})}, &ok).empty());
  CHECK_FALSE(ok);
}

TEST_CASE("cohomology of multiplication by t") {
  const int p = 2;
  const PolyMatrix d0 = from_rows(p, {{T(p, {0, 1})}});
  const auto h = complex_cohomology(std::vector<PolyMatrix>{d0, PolyMatrix(p, 0, 1)});
  REQUIRE(h.size() == 2);
  CHECK(h[0].vanishes());
  CHECK(h[1].free_rank == 0);
  REQUIRE(h[1].torsion.size() == 1);
  CHECK(h[1].torsion[0] == T(p, {0, 1}));
}

TEST_CASE("complexes that are not complexes are rejected") {
  const int p = 3;
  const PolyMatrix one = from_rows(p, {{T(p, {1})}});
  try {
    complex_cohomology(std::vector<PolyMatrix>{one, one});
    FAIL("expected CompositionNonzero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CompositionNonzero);
  }
  CHECK_THROWS_AS(complex_cohomology(std::vector<PolyMatrix>{PolyMatrix(p, 2, 1), PolyMatrix(p, 1, 3)}), Error);
  CochainMatrixComplex bad{p, {1, 2}, {PolyMatrix(p, 3, 1)}};
  CHECK_THROWS_AS(complex_cohomology(bad), Error);
}

TEST_CASE("cohomology agrees with the literal kernel/image computation") {
  Rng rng(4242);
  for (int s = 0; s < 25; ++s) {
    const int p = std::vector<int>{2, 3, 5}[s % 3];
    const int r0 = uniform(rng, 1, 4), r1 = uniform(rng, r0 + 1, 7), r2 = uniform(rng, 1, 4);
    const int k = uniform(rng, 0, r0);
    // A divisibility chain f_1 | f_2 | ... placed on the diagonal.
    std::vector<Polynomial> chain;
    Polynomial f = T(p, {1});
    for (int i = 0; i < k; ++i) {
      if (uniform(rng, 0, 1) == 1) f = f * T(p, {uniform(rng, 0, p - 1), 1});
      chain.push_back(f);
    }
    PolyMatrix d0s(p, r1, r0), d1s(p, r2, r1);
    for (int i = 0; i < k; ++i) d0s(i, i) = chain[i];
    for (int r = 0; r < r2; ++r)
      for (int c = k; c < r1; ++c) d1s(r, c) = random_poly(rng, p, Var::t, uniform(rng, -1, 2));
    const auto [G, Ginv] = random_unimodular(rng, p, r1);
    const auto [Q, Qinv] = random_unimodular(rng, p, r0);
    const auto [R, Rinv] = random_unimodular(rng, p, r2);
    CHECK(G * Ginv == PolyMatrix::identity(p, r1));
    const std::vector<PolyMatrix> ds{G * d0s * Q, R * d1s * Ginv, PolyMatrix(p, 0, r2)};
    const auto h = complex_cohomology(ds);
    REQUIRE(h.size() == 3);
    for (int n = 0; n < 3; ++n) {
      const HomologySummary lit = literal_cohomology(ds, n);
      CHECK(h[n].free_rank == lit.free_rank);
      CHECK(h[n].torsion == lit.torsion);
    }
    std::vector<Polynomial> expected;
    for (const auto& g : chain)
      if (!g.is_unit()) expected.push_back(g);
    CHECK(h[1].torsion == expected);
  }
}
