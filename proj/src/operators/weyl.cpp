#include "charquant/weyl.hpp"

#include <sstream>

#include "charquant/error.hpp"

namespace charquant {

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::crystalline: return "crystalline";
    case Flavor::restricted: return "restricted";
    case Flavor::divided: return "divided";
  }
  return "unknown";
}

WeylElement::WeylElement(int p, Flavor flavor, bool opposite)
    : p_(p), flavor_(flavor), opposite_(opposite) {
  require_supported_prime(p);
}

WeylElement WeylElement::monomial(int p, Flavor flavor, int x_exp, int d_exp, long long c) {
  WeylElement u(p, flavor);
  u.add_term(x_exp, d_exp, c);
  return u;
}

WeylElement WeylElement::function(const Polynomial& f, Flavor flavor) {
  WeylElement u(f.p(), flavor);
  for (int a = 0; a <= f.degree(); ++a) u.add_term(a, 0, f.coeff(a));
  return u;
}

int WeylElement::coeff(int x_exp, int d_exp) const {
  auto it = terms_.find({x_exp, d_exp});
  return it == terms_.end() ? 0 : it->second;
}

int WeylElement::order() const {
  int o = -1;
  for (const auto& [m, c] : terms_) o = std::max(o, m.d);
  return o;
}

void WeylElement::add_term(int x_exp, int d_exp, long long c) {
  if (x_exp < 0 || d_exp < 0) throw Error(ErrorCode::IndexOutOfRange, "negative Weyl exponent");
  if (flavor_ == Flavor::restricted && d_exp >= p_) return;
  const int v = field(p_).reduce(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(WeylMonomial{x_exp, d_exp}, v);
  if (!inserted) {
    it->second = (it->second + v) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

void WeylElement::require_compatible(const WeylElement& o) const {
  if (o.p_ != p_) throw Error(ErrorCode::ModulusMismatch, "Weyl elements over different fields");
  if (o.flavor_ != flavor_ || o.opposite_ != opposite_)
    throw Error(ErrorCode::FlavorMismatch, std::string("cannot combine ") + to_string(flavor_) +
                                               " and " + to_string(o.flavor_) + " elements");
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.d, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.d, p_ - c);
  return *this;
}

WeylElement& WeylElement::operator*=(int scalar) {
  const int s = field(p_).reduce(scalar);
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c = (c * s) % p_;
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b); }

Polynomial WeylElement::coefficient_of(int d_exp) const {
  Polynomial f(p_, Var::x);
  for (const auto& [m, c] : terms_)
    if (m.d == d_exp) f.add_term(m.x, c);
  return f;
}

std::string WeylElement::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (c != 1 || (m.x == 0 && m.d == 0)) {
      os << c;
      wrote = true;
    }
    if (m.x > 0) {
      os << (wrote ? "*" : "") << 'x';
      if (m.x > 1) os << '^' << m.x;
      wrote = true;
    }
    if (m.d > 0) {
      os << (wrote ? "*" : "");
      if (flavor_ == Flavor::divided)
        os << "d^[" << m.d << ']';
      else {
        os << 'd';
        if (m.d > 1) os << '^' << m.d;
      }
    }
  }
  return os.str();
}

namespace {

// Product of basis monomials in the underlying (non-opposite) algebra.
void accumulate_product(WeylElement& out, const WeylMonomial& l, int cl, const WeylMonomial& r,
                        int cr) {
  const PrimeField& F = field(out.p());
  const int c = F.mul(cl, cr);
  // d^b x^c = sum_k C(b,k) (x^c)^{(k)} d^{b-k}; for divided powers
  // d^[b] x^c = sum_k C(c,k) x^{c-k} d^[b-k].
  for (int k = 0; k <= l.d && k <= r.x; ++k) {
    const int xe = l.x + r.x - k;
    const int de = l.d - k + r.d;
    int w;
    if (out.flavor() == Flavor::divided)
      w = F.mul(F.binomial(r.x, k), F.binomial(de, r.d));
    else
      w = F.mul(F.binomial(l.d, k), F.falling_factorial(r.x, k));
    if (w != 0) out.add_term(xe, de, F.mul(c, w));
  }
}

}  // namespace

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) {
  if (u.p() != v.p()) throw Error(ErrorCode::ModulusMismatch, "Weyl product over different fields");
  if (u.flavor() != v.flavor() || u.is_opposite() != v.is_opposite())
    throw Error(ErrorCode::FlavorMismatch, "Weyl product of different flavors");
  const WeylElement& left = u.is_opposite() ? v : u;
  const WeylElement& right = u.is_opposite() ? u : v;
  WeylElement out(u.p(), u.flavor(), u.is_opposite());
  for (const auto& [ml, cl] : left.terms())
    for (const auto& [mr, cr] : right.terms()) accumulate_product(out, ml, cl, mr, cr);
  return out;
}

Polynomial weyl_act(const WeylElement& u, const Polynomial& f) {
  if (u.p() != f.p()) throw Error(ErrorCode::ModulusMismatch, "action over different fields");
  if (f.var() != Var::x) throw Error(ErrorCode::VariableMismatch, "operators act on k[x]");
  Polynomial out(u.p(), Var::x);
  for (const auto& [m, c] : u.terms()) {
    Polynomial g = u.flavor() == Flavor::divided ? hasse_derivative(f, m.d) : iterated_derivative(f, m.d);
    out += Polynomial::monomial(u.p(), Var::x, m.x, c) * g;
  }
  return out;
}

WeylElement commutator(const WeylElement& u, const WeylElement& v) {
  return weyl_mul(u, v) - weyl_mul(v, u);
}

WeylElement restrict(const WeylElement& u) {
  if (u.flavor() != Flavor::crystalline)
    throw Error(ErrorCode::FlavorMismatch, "restrict expects a crystalline element");
  WeylElement out(u.p(), Flavor::restricted, u.is_opposite());
  for (const auto& [m, c] : u.terms()) out.add_term(m.x, m.d, c);
  return out;
}

WeylElement crystalline_to_divided(const WeylElement& u) {
  if (u.flavor() != Flavor::restricted)
    throw Error(ErrorCode::FlavorMismatch, "crystalline_to_divided expects a restricted element");
  const PrimeField& F = field(u.p());
  WeylElement out(u.p(), Flavor::divided, u.is_opposite());
  for (const auto& [m, c] : u.terms()) out.add_term(m.x, m.d, F.mul(c, F.factorial(m.d)));
  return out;
}

WeylElement opposite(const WeylElement& u) {
  WeylElement out(u.p(), u.flavor(), !u.is_opposite());
  for (const auto& [m, c] : u.terms()) out.add_term(m.x, m.d, c);
  return out;
}

}  // namespace charquant
