#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "charquant/polynomial.hpp"
#include "charquant/weyl.hpp"

namespace charquant {

/// Coefficient bimodule P of the Hochschild complex Diff(O^., P).
///   O      : the structure sheaf k[x]
///   Dres   : restricted operators, payload basis d^c (c < p)
///   DresOp : restricted operators with the opposite bimodule structure
///            (f * u * g = g u f); payload d^c is followed by the
///            x-coefficient, i.e. values are written d^c f
///   Dfull  : crystalline operators, payload d^c with c unbounded
enum class Coefficient { O, Dres, DresOp, Dfull };

const char* to_string(Coefficient c);

/// restricted slots carry d^b with b < p (O_{X'}-linear operators);
/// crystalline slots allow any b.
enum class SlotFlavor { restricted, crystalline };

struct TensorKey {
  std::vector<int> slots;  // d-exponents b_1, ..., b_i
  int payload = 0;         // d-exponent of the payload basis element
  friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
};

/// Normal-form element of D^{(x) i} (x)_O P: a sum of
///   f(x) d^{b_1} (x) ... (x) d^{b_i} (x) payload,
/// which acts on (g_1, ..., g_i) as f * d^{b_1}(g_1) ... d^{b_i}(g_i) * payload
/// (left O-action of P).
class TensorOperator {
 public:
  TensorOperator(int p, int arity, Coefficient coeff, SlotFlavor slots = SlotFlavor::restricted);

  /// Single term f * d^{slots} (x) d^{payload}.
  static TensorOperator monomial(int p, Coefficient coeff, SlotFlavor flavor, std::vector<int> slots,
                                 int payload, const Polynomial& f);
  /// The arity-0 element f (payload d^0).
  static TensorOperator function(const Polynomial& f, Coefficient coeff = Coefficient::O,
                                 SlotFlavor flavor = SlotFlavor::restricted);
  /// Multiplication mu = 1 (x) 1 in arity 2.
  static TensorOperator multiplication(int p, SlotFlavor flavor = SlotFlavor::restricted);

  int p() const noexcept { return p_; }
  int arity() const noexcept { return arity_; }
  Coefficient coefficient() const noexcept { return coeff_; }
  SlotFlavor slot_flavor() const noexcept { return flavor_; }
  const std::map<TensorKey, Polynomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds f * key. Terms outside the normal form (restricted slot or
  /// payload exponent >= p) are zero operators and are dropped.
  void add_term(const TensorKey& key, const Polynomial& f);
  void add_term(const TensorKey& key, int scalar, const Polynomial& f);

  TensorOperator& operator+=(const TensorOperator& o);
  TensorOperator& operator-=(const TensorOperator& o);
  TensorOperator& operator*=(int scalar);
  friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
  friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
  friend TensorOperator operator*(TensorOperator a, int s) { return a *= s; }
  friend TensorOperator operator*(int s, TensorOperator a) { return a *= s; }
  friend bool operator==(const TensorOperator&, const TensorOperator&) = default;

  /// Largest slot exponent appearing (-1 if zero or arity 0).
  int max_slot_order() const;
  /// True if no term has a slot exponent 0 (the degeneracy-free part).
  bool is_normalized() const;

  std::string pretty() const;

 private:
  void require_compatible(const TensorOperator& o) const;

  int p_;
  int arity_;
  Coefficient coeff_;
  SlotFlavor flavor_;
  std::map<TensorKey, Polynomial> terms_;
};

/// Flavor of the values taken in P (O values are returned as d^0 terms).
Flavor payload_flavor(Coefficient c);
/// Maximal payload exponent + 1, or -1 when unbounded.
int payload_bound(Coefficient c, int p);

/// T(g_1, ..., g_i) in P, expanded in Weyl normal form. Throws ArityMismatch.
WeylElement evaluate(const TensorOperator& T, const std::vector<Polynomial>& args);
/// As evaluate, for coefficient O.
Polynomial evaluate_function(const TensorOperator& T, const std::vector<Polynomial>& args);

/// Bimodule structure of P used by the cosimplicial structure.
WeylElement left_action(Coefficient c, const Polynomial& g, const WeylElement& value);
WeylElement right_action(Coefficient c, const WeylElement& value, const Polynomial& g);

/// Coface d_{i,k}, 0 <= k <= i+1. Throws IndexOutOfRange.
TensorOperator coface(const TensorOperator& T, int k);
/// Codegeneracy s_k, 0 <= k <= i-1: inserts the constant 1 as argument k+1.
TensorOperator codegeneracy(const TensorOperator& T, int k);
/// Alternating sum of cofaces.
TensorOperator cochain_differential(const TensorOperator& T);

/// (A.B)(a_1..a_{i+j}) = (-1)^{ij} A(a_1..a_i) B(a_{i+1}..a_{i+j}); A must have
/// coefficient O. Throws CoefficientMismatch / FlavorMismatch.
TensorOperator cup(const TensorOperator& A, const TensorOperator& B);

/// Brace operation A{A_1, ..., A_m}: ordered insertions of the A_l into the
/// argument slots of A with sign exponent sum_l i_l (j_l - 1), where i_l is
/// the number of arguments preceding A_l. A may carry any coefficient (the
/// brace-module action); the inserts must have coefficient O.
TensorOperator brace(const TensorOperator& A, const std::vector<TensorOperator>& inserts);
TensorOperator brace_module_action(const TensorOperator& B, const std::vector<TensorOperator>& inserts);

/// [A, B] = A{B} - (-1)^{(i-1)(j-1)} B{A}.
TensorOperator gerstenhaber(const TensorOperator& A, const TensorOperator& B);

}  // namespace charquant
