#include "charquant/azumaya.hpp"

#include <algorithm>

#include "charquant/error.hpp"

namespace charquant {

MonomialBox default_box(Flavor flavor, int p) {
  return {3 * p, flavor == Flavor::restricted ? p - 1 : 3 * p};
}

std::vector<WeylElement> commutant(Flavor flavor, int p, MonomialBox box,
                                   const std::vector<WeylElement>& generators) {
  if (flavor == Flavor::divided)
    throw Error(ErrorCode::UnsupportedCombination, "commutant of divided-power operators");
  const int d_max = flavor == Flavor::restricted ? std::min(box.d_max, p - 1) : box.d_max;
  std::vector<WeylMonomial> monos;
  for (int a = 0; a <= box.x_max; ++a)
    for (int b = 0; b <= d_max; ++b) monos.push_back({a, b});

  // Row index: (generator, output monomial). Outputs are collected first.
  std::vector<std::vector<WeylElement>> images(generators.size());
  std::map<std::pair<std::size_t, WeylMonomial>, int> row_of;
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (const auto& m : monos) {
      WeylElement c = commutator(WeylElement::monomial(p, flavor, m.x, m.d), generators[g]);
      for (const auto& [out, coef] : c.terms()) row_of.try_emplace({g, out}, 0);
      images[g].push_back(std::move(c));
    }
  int r = 0;
  for (auto& [key, idx] : row_of) idx = r++;

  FpMatrix system(p, std::max(r, 1), static_cast<int>(monos.size()));
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (std::size_t j = 0; j < monos.size(); ++j)
      for (const auto& [out, coef] : images[g][j].terms())
        system(row_of.at({g, out}), static_cast<int>(j)) = coef;

  std::vector<WeylElement> basis;
  for (const auto& v : system.nullspace()) {
    WeylElement u(p, flavor);
    for (std::size_t j = 0; j < monos.size(); ++j) u.add_term(monos[j].x, monos[j].d, v[j]);
    basis.push_back(std::move(u));
  }
  return basis;
}

std::vector<WeylElement> center(Flavor flavor, int p, MonomialBox box) {
  require_supported_prime(p);
  if (box.x_max < p || (flavor == Flavor::crystalline && box.d_max < p))
    throw Error(ErrorCode::BoundsTooSmall, "center search box must reach degree p");
  return commutant(flavor, p, box, {WeylElement::x(p, flavor), WeylElement::d(p, flavor)});
}

MatrixOverOprime end_iso(const WeylElement& u) {
  if (u.flavor() != Flavor::restricted || u.is_opposite())
    throw Error(ErrorCode::FlavorMismatch, "end_iso expects a restricted element");
  const int p = u.p();
  MatrixOverOprime m(p, p, p);
  for (int j = 0; j < p; ++j) {
    const auto parts = frobenius_decompose(weyl_act(u, Polynomial::monomial(p, Var::x, j)));
    for (int i = 0; i < p; ++i) m(i, j) = parts[i];
  }
  return m;
}

std::vector<WeylElement> restricted_basis(int p) {
  std::vector<WeylElement> out;
  for (int a = 0; a < p; ++a)
    for (int c = 0; c < p; ++c) out.push_back(WeylElement::monomial(p, Flavor::restricted, a, c));
  return out;
}

PolyMatrix end_iso_matrix(int p) {
  const auto basis = restricted_basis(p);
  PolyMatrix m(p, p * p, p * p);
  for (int j = 0; j < p * p; ++j) {
    const auto img = end_iso(basis[j]);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c) m(r * p + c, j) = img(r, c);
  }
  return m;
}

FpMatrix fiber_action(const WeylElement& u, int a) {
  const int p = u.p();
  Polynomial modulus = Polynomial::monomial(p, Var::x, p) - Polynomial::constant(p, Var::x, a);
  FpMatrix m(p, p, p);
  for (int k = 0; k < p; ++k) {
    const Polynomial img = weyl_act(u, Polynomial::monomial(p, Var::x, k)) % modulus;
    for (int i = 0; i < p; ++i) m(i, k) = img.coeff(i);
  }
  return m;
}

FiberAlgebra fiber_at(FieldElement a) {
  const int p = a.p;
  require_supported_prime(p);
  FiberAlgebra fib;
  fib.p = p;
  fib.point = field(p).reduce(a.value);
  const auto basis = restricted_basis(p);
  for (const auto& b : basis) {
    fib.basis.push_back(b.terms().begin()->first);
    fib.images.push_back(fiber_action(b, fib.point));
  }
  fib.dimension = p * p;

  FpMatrix span(p, p * p, static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c) span(r * p + c, static_cast<int>(j)) = fib.images[j](r, c);
  fib.image_rank = span.rank();

  fib.multiplicative = true;
  for (std::size_t i = 0; i < basis.size() && fib.multiplicative; ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!(fiber_action(weyl_mul(basis[i], basis[j]), fib.point) == fib.images[i] * fib.images[j])) {
        fib.multiplicative = false;
        break;
      }
  fib.is_matrix_algebra = fib.multiplicative && fib.image_rank == fib.dimension;
  return fib;
}

}  // namespace charquant
