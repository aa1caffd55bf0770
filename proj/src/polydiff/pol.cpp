#include "charquant/pol.hpp"

#include "charquant/error.hpp"
#include "charquant/field.hpp"
#include "charquant/fp_matrix.hpp"

#include <functional>
#include <set>

namespace charquant {

PolElement::PolElement(int p, int arity) : p_(p), arity_(arity) {
  require_supported_prime(p);
  if (arity < 0) throw Error(ErrorCode::ArityMismatch, "negative arity");
}

PolElement::PolElement(const PolMonomial& m) : PolElement(m.coefficient.p(), static_cast<int>(m.exponents.size())) {
  add_term(m.exponents, 1, m.coefficient);
}

void PolElement::add_term(const std::vector<int>& exponents, int scalar, const Polynomial& c) {
  if (static_cast<int>(exponents.size()) != arity_) throw Error(ErrorCode::ArityMismatch, "exponent count differs from arity");
  if (c.p() != p_) throw Error(ErrorCode::ModulusMismatch, "coefficient over another field");
  if (c.var() != Var::t) throw Error(ErrorCode::VariableMismatch, "coefficients are polynomials in t");
  Polynomial g = c * scalar;
  if (g.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolElement& PolElement::operator+=(const PolElement& o) {
  if (o.p_ != p_) throw Error(ErrorCode::ModulusMismatch, "elements over different fields");
  if (o.arity_ != arity_) throw Error(ErrorCode::ArityMismatch, "elements of different arity");
  for (const auto& [e, c] : o.terms_) add_term(e, 1, c);
  return *this;
}

PolElement pol_coface(const PolElement& m, int k) {
  const int i = m.arity();
  if (k < 0 || k > i + 1) throw Error(ErrorCode::IndexOutOfRange, "coface index out of range");
  const PrimeField& F = field(m.p());
  PolElement out(m.p(), i + 1);
  for (const auto& [e, c] : m.terms()) {
    if (k == 0 || k == i + 1) {
      std::vector<int> ne = e;
      ne.insert(k == 0 ? ne.begin() : ne.end(), 0);
      out.add_term(ne, 1, c);
      continue;
    }
    const int n = e[k - 1];
    for (int j = 0; j <= n; ++j) {
      const int w = F.binomial(n, j);
      if (w == 0) continue;
      std::vector<int> ne(e.begin(), e.begin() + (k - 1));
      ne.push_back(j);
      ne.push_back(n - j);
      ne.insert(ne.end(), e.begin() + k, e.end());
      out.add_term(ne, w, c);
    }
  }
  return out;
}

namespace {

Polynomial frobenius_pullback(const Polynomial& c) {
  const int p = c.p();
  Polynomial out(p, Var::x);
  for (int e = 0; e <= c.degree(); ++e) out.add_term(p * e, c.coeff(e));
  return out;
}

}  // namespace

TensorOperator pol_embed(const PolElement& m) {
  const int p = m.p();
  TensorOperator out(p, m.arity(), Coefficient::O, SlotFlavor::crystalline);
  for (const auto& [e, c] : m.terms()) {
    std::vector<int> slots(e.size());
    for (std::size_t l = 0; l < e.size(); ++l) slots[l] = p * e[l];
    out.add_term(TensorKey{slots, 0}, frobenius_pullback(c));
  }
  return out;
}

TensorOperator pol_embed(const PolMonomial& m) { return pol_embed(PolElement(m)); }

PolElement pol_restrict(const TensorOperator& T) {
  const int p = T.p();
  if (T.coefficient() != Coefficient::O) throw Error(ErrorCode::CoefficientMismatch, "Pol elements have coefficient O");
  PolElement out(p, T.arity());
  for (const auto& [key, f] : T.terms()) {
    std::vector<int> e;
    for (int b : key.slots) {
      if (b % p != 0) throw Error(ErrorCode::IndexOutOfRange, "slot order is not a multiple of p");
      e.push_back(b / p);
    }
    Polynomial c(p, Var::t);
    for (int k = 0; k <= f.degree(); ++k) {
      if (f.coeff(k) == 0) continue;
      if (k % p != 0) throw Error(ErrorCode::IndexOutOfRange, "coefficient is not a polynomial in x^p");
      c.add_term(k / p, f.coeff(k));
    }
    out.add_term(e, 1, c);
  }
  return out;
}

PolElement pol_differential(const PolElement& m) {
  PolElement out(m.p(), m.arity() + 1);
  for (int k = 0; k <= m.arity() + 1; ++k) {
    const PolElement face = pol_coface(m, k);
    for (const auto& [e, c] : face.terms()) out.add_term(e, k % 2 == 0 ? 1 : -1, c);
  }
  return out;
}

bool pol_is_exact(const PolElement& m) {
  const int p = m.p();
  const int n = m.arity();
  if (m.is_zero()) return true;
  if (n == 0) return false;
  // Candidate primitives: positive exponents of total weight matching m's terms.
  std::set<int> weights;
  for (const auto& [e, c] : m.terms()) {
    int w = 0;
    for (int x : e) w += x;
    weights.insert(w);
  }
  std::vector<std::vector<int>> sources;
  std::vector<int> cur(n - 1);
  std::function<void(int, int)> rec = [&](int l, int left) {
    if (l == n - 1) {
      if (left == 0) sources.push_back(cur);
      return;
    }
    for (int x = 1; x <= left - (n - 2 - l); ++x) {
      cur[l] = x;
      rec(l + 1, left - x);
    }
  };
  for (int w : weights) {
    if (n - 1 == 0) {
      if (w == 0) sources.push_back({});
    } else {
      rec(0, w);
    }
  }
  std::map<std::vector<int>, int> row;
  std::vector<PolElement> images;
  for (const auto& e : sources) {
    images.push_back(pol_differential(PolElement(PolMonomial{Polynomial::constant(p, Var::t, 1), e})));
    for (const auto& [f, c] : images.back().terms()) row.try_emplace(f, 0);
  }
  for (const auto& [f, c] : m.terms()) row.try_emplace(f, 0);
  int r = 0;
  for (auto& [k, v] : row) v = r++;
  int top = 0;
  for (const auto& [f, c] : m.terms()) top = std::max(top, c.degree());
  const int cols = static_cast<int>(sources.size());
  FpMatrix D(p, r, std::max(cols, 1));
  for (int j = 0; j < cols; ++j)
    for (const auto& [f, c] : images[j].terms()) D(row.at(f), j) = c.coeff(0);
  const int base = D.rank();
  // The differential has constant entries, so m is exact iff every t-slice is.
  for (int deg = 0; deg <= top; ++deg) {
    FpMatrix aug(p, r, std::max(cols, 1) + 1);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < std::max(cols, 1); ++j) aug(i, j) = D(i, j);
    for (const auto& [f, c] : m.terms()) aug(row.at(f), std::max(cols, 1)) = c.coeff(deg);
    if (aug.rank() != base) return false;
  }
  return true;
}

}  // namespace charquant
