#include "charquant/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "charquant/error.hpp"

namespace charquant {

namespace {
char var_char(Var v) { return v == Var::x ? 'x' : 't'; }
}  // namespace

Polynomial::Polynomial(int p, Var var) : p_(p), var_(var) { require_supported_prime(p); }

Polynomial::Polynomial(int p, Var var, std::vector<int> coeffs)
    : p_(p), var_(var), coeffs_(std::move(coeffs)) {
  const PrimeField& F = field(p);
  for (int& c : coeffs_) c = F.reduce(c);
  trim();
}

Polynomial::Polynomial(int p, Var var, std::initializer_list<int> coeffs)
    : Polynomial(p, var, std::vector<int>(coeffs)) {}

Polynomial Polynomial::constant(int p, Var var, long long c) {
  return Polynomial(p, var, std::vector<int>{field(p).reduce(c)});
}

Polynomial Polynomial::monomial(int p, Var var, int degree, long long c) {
  std::vector<int> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = field(p).reduce(c);
  return Polynomial(p, var, std::move(v));
}

void Polynomial::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (o.p_ != p_) throw Error(ErrorCode::ModulusMismatch, "polynomials over different fields");
  if (o.var_ != var_) throw Error(ErrorCode::VariableMismatch, "polynomials in different variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    int s = coeffs_[i] + o.coeffs_[i];
    coeffs_[i] = s >= p_ ? s - p_ : s;
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_compatible(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    int s = coeffs_[i] - o.coeffs_[i];
    coeffs_[i] = s < 0 ? s + p_ : s;
  }
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial r(a.p_, a.var_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<long long> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) acc[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.coeffs_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.coeffs_[i] = static_cast<int>(acc[i] % a.p_);
  r.trim();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(int scalar) {
  const int s = field(p_).reduce(scalar);
  for (int& c : coeffs_) c = (c * s) % p_;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (int& c : r.coeffs_) c = c == 0 ? 0 : p_ - c;
  return r;
}

void Polynomial::add_term(int k, long long c) {
  const int v = field(p_).reduce(c);
  if (v == 0) return;
  if (static_cast<int>(coeffs_.size()) <= k) coeffs_.resize(static_cast<std::size_t>(k) + 1, 0);
  coeffs_[k] = (coeffs_[k] + v) % p_;
  trim();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& g) const {
  require_compatible(g);
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const PrimeField& F = field(p_);
  Polynomial r = *this;
  Polynomial q(p_, var_);
  if (r.degree() < g.degree()) return {q, r};
  q.coeffs_.assign(static_cast<std::size_t>(r.degree() - g.degree()) + 1, 0);
  const int lead_inv = F.inv(g.leading());
  const int dg = g.degree();
  for (int k = r.degree(); k >= dg; --k) {
    const int c = F.mul(r.coeffs_[k], lead_inv);
    if (c == 0) continue;
    q.coeffs_[k - dg] = c;
    for (int j = 0; j <= dg; ++j) r.coeffs_[k - dg + j] = F.sub(r.coeffs_[k - dg + j], F.mul(c, g.coeffs_[j]));
  }
  q.trim();
  r.trim();
  return {q, r};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  r *= field(p_).inv(leading());
  return r;
}

int Polynomial::evaluate(int a) const noexcept {
  const PrimeField& F = field(p_);
  int acc = 0;
  const int av = F.reduce(a);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = F.add(F.mul(acc, av), *it);
  return acc;
}

Polynomial Polynomial::derivative() const { return iterated_derivative(*this, 1); }

Polynomial Polynomial::retag(Var v) const {
  Polynomial r = *this;
  r.var_ = v;
  return r;
}

std::string Polynomial::coefficient_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const char v = var_char(var_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) os << '+';
    os << coeffs_[i];
    if (i == 1) os << '*' << v;
    if (i > 1) os << '*' << v << '^' << i;
  }
  return os.str();
}

std::string Polynomial::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const char v = var_char(var_);
  for (int i = degree(); i >= 0; --i) {
    const int c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << v;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a, w = b;
  while (!w.is_zero()) {
    Polynomial r = u % w;
    u = std::move(w);
    w = std::move(r);
  }
  return u.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  const int p = a.p();
  const Var v = a.var();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(p, v, 1), s1(p, v);
  Polynomial u0(p, v), u1 = Polynomial::constant(p, v, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    u0 = std::exchange(u1, u0 - q * u1);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  const int inv = field(p).inv(r0.leading());
  return {r0 * inv, s0 * inv, u0 * inv};
}

Polynomial hasse_derivative(const Polynomial& f, int k) {
  const PrimeField& F = field(f.p());
  std::vector<int> out;
  for (int n = k; n <= f.degree(); ++n) {
    if (out.empty()) out.assign(static_cast<std::size_t>(f.degree() - k) + 1, 0);
    out[n - k] = F.mul(F.binomial(n, k), f.coeff(n));
  }
  return Polynomial(f.p(), f.var(), std::move(out));
}

Polynomial iterated_derivative(const Polynomial& f, int k) {
  const PrimeField& F = field(f.p());
  std::vector<int> out;
  for (int n = k; n <= f.degree(); ++n) {
    if (out.empty()) out.assign(static_cast<std::size_t>(f.degree() - k) + 1, 0);
    out[n - k] = F.mul(F.falling_factorial(n, k), f.coeff(n));
  }
  return Polynomial(f.p(), f.var(), std::move(out));
}

std::vector<Polynomial> frobenius_decompose(const Polynomial& f) {
  const int p = f.p();
  std::vector<std::vector<int>> parts(p);
  for (int n = 0; n <= f.degree(); ++n) {
    if (f.coeff(n) == 0) continue;
    auto& v = parts[n % p];
    const std::size_t e = static_cast<std::size_t>(n / p);
    if (v.size() <= e) v.resize(e + 1, 0);
    v[e] = f.coeff(n);
  }
  std::vector<Polynomial> out;
  out.reserve(p);
  for (auto& v : parts) out.emplace_back(p, Var::t, std::move(v));
  return out;
}

Polynomial frobenius_reassemble(const std::vector<Polynomial>& parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeMismatch, "empty Frobenius decomposition");
  const int p = parts.front().p();
  if (static_cast<int>(parts.size()) != p)
    throw Error(ErrorCode::ShapeMismatch, "Frobenius decomposition needs exactly p parts");
  Polynomial f(p, Var::x);
  for (int a = 0; a < p; ++a)
    for (int e = 0; e <= parts[a].degree(); ++e) f.add_term(e * p + a, parts[a].coeff(e));
  return f;
}

}  // namespace charquant
