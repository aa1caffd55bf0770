#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "charquant/field.hpp"

namespace charquant {

/// Which line a polynomial lives on: x on X, t = x^p on the Frobenius twist.
enum class Var { x, t };

/// Dense univariate polynomial over F_p, always kept trimmed so that equality
/// is coefficientwise.
class Polynomial {
 public:
  Polynomial(int p, Var var);
  Polynomial(int p, Var var, std::vector<int> coeffs);
  Polynomial(int p, Var var, std::initializer_list<int> coeffs);

  static Polynomial constant(int p, Var var, long long c);
  static Polynomial monomial(int p, Var var, int degree, long long c = 1);

  int p() const noexcept { return p_; }
  Var var() const noexcept { return var_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_unit() const noexcept { return coeffs_.size() == 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  int coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  int leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  const std::vector<int>& coeffs() const noexcept { return coeffs_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(int scalar);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, int s) { return a *= s; }
  friend Polynomial operator*(int s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Adds c * x^k.
  void add_term(int k, long long c);

  /// f = q * g + r with deg r < deg g. Throws DivisionByZero if g = 0.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& g) const;
  Polynomial operator%(const Polynomial& g) const { return divmod(g).second; }
  Polynomial operator/(const Polynomial& g) const { return divmod(g).first; }

  Polynomial monic() const;
  int evaluate(int a) const noexcept;
  Polynomial derivative() const;
  /// Same coefficients, other variable tag.
  Polynomial retag(Var v) const;

  /// "c0+c1*t+c2*t^2"; "0" for the zero polynomial.
  std::string coefficient_string() const;
  /// Human-readable, e.g. "x^3 + 2*x + 1".
  std::string pretty() const;

 private:
  void trim() noexcept;
  void require_compatible(const Polynomial& o) const;

  int p_;
  Var var_;
  std::vector<int> coeffs_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Extended gcd: returns (g, s, u) with s*a + u*b = g, g monic (or zero).
struct ExtendedGcd {
  Polynomial g, s, u;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// k-th Hasse derivative: x^n -> C(n, k) x^{n-k}.
Polynomial hasse_derivative(const Polynomial& f, int k);

/// k-th iterated ordinary derivative: x^n -> n(n-1)...(n-k+1) x^{n-k}.
Polynomial iterated_derivative(const Polynomial& f, int k);

/// Writes f(x) = sum_{a<p} g_a(x^p) x^a and returns (g_0, ..., g_{p-1}) in t.
std::vector<Polynomial> frobenius_decompose(const Polynomial& f);

/// Inverse of frobenius_decompose.
Polynomial frobenius_reassemble(const std::vector<Polynomial>& parts);

}  // namespace charquant
