#pragma once

#include <map>
#include <vector>

#include "charquant/polynomial.hpp"
#include "charquant/tensor_operator.hpp"

namespace charquant {

/// c(t) * xi_1^{m_1} ... xi_i^{m_i}: a function on the Frobenius-twisted
/// shifted cotangent bundle, in cosimplicial degree i.
struct PolMonomial {
  Polynomial coefficient;
  std::vector<int> exponents;
};

/// Finite sum of PolMonomials of a fixed arity, keyed by exponents.
class PolElement {
 public:
  PolElement(int p, int arity);
  explicit PolElement(const PolMonomial& m);

  int p() const noexcept { return p_; }
  int arity() const noexcept { return arity_; }
  const std::map<std::vector<int>, Polynomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const std::vector<int>& exponents, int scalar, const Polynomial& c);
  PolElement& operator+=(const PolElement& o);
  friend bool operator==(const PolElement&, const PolElement&) = default;

 private:
  int p_;
  int arity_;
  std::map<std::vector<int>, Polynomial> terms_;
};

/// Cosimplicial coface on the fiber coordinates: k = 0 and k = i+1 insert a
/// zero coordinate, 0 < k < i+1 substitutes xi_k -> xi_k + xi_{k+1}.
PolElement pol_coface(const PolElement& m, int k);

/// t^e xi^m -> x^{pe} d^{p m_1} (x) ... (x) d^{p m_i}, crystalline slots, coefficient O.
TensorOperator pol_embed(const PolMonomial& m);
TensorOperator pol_embed(const PolElement& m);

/// Inverse of pol_embed on its image; throws IndexOutOfRange otherwise.
PolElement pol_restrict(const TensorOperator& T);

/// Alternating sum of pol_coface.
PolElement pol_differential(const PolElement& m);

/// True if m = pol_differential(n) for some n whose fiber exponents are all
/// positive (the normalized part).
bool pol_is_exact(const PolElement& m);

}  // namespace charquant
