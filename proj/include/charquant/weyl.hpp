#pragma once

#include <map>
#include <string>
#include <utility>

#include "charquant/polynomial.hpp"

namespace charquant {

/// crystalline: the Weyl algebra k<x, d>/(dx - xd - 1).
/// restricted:  its quotient by d^p, normal forms keep d-degree < p.
/// divided:     Grothendieck operators spanned by Hasse derivatives d^[b].
enum class Flavor { crystalline, restricted, divided };

const char* to_string(Flavor f);

/// Exponent pair (a, b) of the normal-form monomial x^a d^b (or x^a d^[b]).
struct WeylMonomial {
  int x = 0;
  int d = 0;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

/// Finite sum of normal-form monomials with coefficients on the left.
/// An opposite element lives in the opposite algebra: same basis, reversed
/// multiplication.
class WeylElement {
 public:
  WeylElement(int p, Flavor flavor, bool opposite = false);

  static WeylElement monomial(int p, Flavor flavor, int x_exp, int d_exp, long long c = 1);
  static WeylElement one(int p, Flavor flavor) { return monomial(p, flavor, 0, 0); }
  static WeylElement x(int p, Flavor flavor) { return monomial(p, flavor, 1, 0); }
  static WeylElement d(int p, Flavor flavor) { return monomial(p, flavor, 0, 1); }
  /// The multiplication operator by a polynomial in x.
  static WeylElement function(const Polynomial& f, Flavor flavor);

  int p() const noexcept { return p_; }
  Flavor flavor() const noexcept { return flavor_; }
  bool is_opposite() const noexcept { return opposite_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<WeylMonomial, int>& terms() const noexcept { return terms_; }
  int coeff(int x_exp, int d_exp) const;
  /// Highest d-exponent, -1 for zero.
  int order() const;

  /// Adds c x^a d^b; restricted elements silently drop b >= p.
  void add_term(int x_exp, int d_exp, long long c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(int scalar);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, int s) { return a *= s; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  /// Coefficient of d^b as a polynomial in x.
  Polynomial coefficient_of(int d_exp) const;

  std::string pretty() const;

 private:
  void require_compatible(const WeylElement& o) const;

  int p_;
  Flavor flavor_;
  bool opposite_;
  std::map<WeylMonomial, int> terms_;
};

/// Normal-form product. Throws FlavorMismatch / ModulusMismatch.
WeylElement weyl_mul(const WeylElement& u, const WeylElement& v);

/// u(f): d acts by differentiation, d^[b] by the b-th Hasse derivative.
Polynomial weyl_act(const WeylElement& u, const Polynomial& f);

WeylElement commutator(const WeylElement& u, const WeylElement& v);

/// Quotient map D -> D/(d^p).
WeylElement restrict(const WeylElement& u);

/// The bimodule identification d^b -> b! d^[b] for b < p.
WeylElement crystalline_to_divided(const WeylElement& u);

/// The same element regarded in the opposite algebra; an involution.
WeylElement opposite(const WeylElement& u);

}  // namespace charquant
