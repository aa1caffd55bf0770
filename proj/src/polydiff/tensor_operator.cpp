#include "charquant/tensor_operator.hpp"

#include <sstream>

#include "charquant/error.hpp"

namespace charquant {

const char* to_string(Coefficient c) {
  switch (c) {
    case Coefficient::O: return "O";
    case Coefficient::Dres: return "Dres";
    case Coefficient::DresOp: return "DresOp";
    case Coefficient::Dfull: return "Dfull";
  }
  return "unknown";
}

Flavor payload_flavor(Coefficient c) {
  return c == Coefficient::Dres || c == Coefficient::DresOp ? Flavor::restricted : Flavor::crystalline;
}

int payload_bound(Coefficient c, int p) {
  switch (c) {
    case Coefficient::O: return 1;
    case Coefficient::Dres:
    case Coefficient::DresOp: return p;
    case Coefficient::Dfull: return -1;
  }
  return -1;
}

TensorOperator::TensorOperator(int p, int arity, Coefficient coeff, SlotFlavor slots)
    : p_(p), arity_(arity), coeff_(coeff), flavor_(slots) {
  require_supported_prime(p);
  if (arity < 0) throw Error(ErrorCode::ArityMismatch, "negative arity");
}

TensorOperator TensorOperator::monomial(int p, Coefficient coeff, SlotFlavor flavor,
                                        std::vector<int> slots, int payload, const Polynomial& f) {
  TensorOperator T(p, static_cast<int>(slots.size()), coeff, flavor);
  T.add_term(TensorKey{std::move(slots), payload}, f);
  return T;
}

TensorOperator TensorOperator::function(const Polynomial& f, Coefficient coeff, SlotFlavor flavor) {
  return monomial(f.p(), coeff, flavor, {}, 0, f);
}

TensorOperator TensorOperator::multiplication(int p, SlotFlavor flavor) {
  return monomial(p, Coefficient::O, flavor, {0, 0}, 0, Polynomial::constant(p, Var::x, 1));
}

void TensorOperator::add_term(const TensorKey& key, const Polynomial& f) { add_term(key, 1, f); }

void TensorOperator::add_term(const TensorKey& key, int scalar, const Polynomial& f) {
  if (static_cast<int>(key.slots.size()) != arity_)
    throw Error(ErrorCode::ArityMismatch, "term arity differs from operator arity");
  if (f.p() != p_) throw Error(ErrorCode::ModulusMismatch, "term coefficient over another field");
  if (f.var() != Var::x) throw Error(ErrorCode::VariableMismatch, "term coefficients are polynomials in x");
  if (coeff_ == Coefficient::O && key.payload != 0)
    throw Error(ErrorCode::IndexOutOfRange, "coefficient O has a single payload basis element");
  for (int b : key.slots)
    if (b < 0) throw Error(ErrorCode::IndexOutOfRange, "negative slot exponent");
  if (key.payload < 0) throw Error(ErrorCode::IndexOutOfRange, "negative payload exponent");
  if (flavor_ == SlotFlavor::restricted)
    for (int b : key.slots)
      if (b >= p_) return;
  const int bound = payload_bound(coeff_, p_);
  if (bound > 0 && key.payload >= bound) return;
  Polynomial g = f * scalar;
  if (g.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorOperator::require_compatible(const TensorOperator& o) const {
  if (o.p_ != p_) throw Error(ErrorCode::ModulusMismatch, "operators over different fields");
  if (o.arity_ != arity_) throw Error(ErrorCode::ArityMismatch, "operators of different arity");
  if (o.coeff_ != coeff_) throw Error(ErrorCode::CoefficientMismatch, "operators with different coefficients");
  if (o.flavor_ != flavor_) throw Error(ErrorCode::FlavorMismatch, "operators with different slot flavors");
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& o) {
  require_compatible(o);
  for (const auto& [k, f] : o.terms_) add_term(k, f);
  return *this;
}

TensorOperator& TensorOperator::operator-=(const TensorOperator& o) {
  require_compatible(o);
  for (const auto& [k, f] : o.terms_) add_term(k, -1, f);
  return *this;
}

TensorOperator& TensorOperator::operator*=(int scalar) {
  const int s = field(p_).reduce(scalar);
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, f] : terms_) f *= s;
  return *this;
}

int TensorOperator::max_slot_order() const {
  int m = -1;
  for (const auto& [k, f] : terms_)
    for (int b : k.slots) m = std::max(m, b);
  return m;
}

bool TensorOperator::is_normalized() const {
  for (const auto& [k, f] : terms_)
    for (int b : k.slots)
      if (b == 0) return false;
  return true;
}

std::string TensorOperator::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << f.pretty() << ")*[";
    for (std::size_t l = 0; l < k.slots.size(); ++l) os << (l ? "," : "") << "d^" << k.slots[l];
    os << ']';
    if (coeff_ != Coefficient::O) os << "|d^" << k.payload;
  }
  return os.str();
}

WeylElement left_action(Coefficient c, const Polynomial& g, const WeylElement& value) {
  const WeylElement G = WeylElement::function(g, value.flavor());
  return c == Coefficient::DresOp ? weyl_mul(value, G) : weyl_mul(G, value);
}

WeylElement right_action(Coefficient c, const WeylElement& value, const Polynomial& g) {
  const WeylElement G = WeylElement::function(g, value.flavor());
  return c == Coefficient::DresOp ? weyl_mul(G, value) : weyl_mul(value, G);
}

WeylElement evaluate(const TensorOperator& T, const std::vector<Polynomial>& args) {
  if (static_cast<int>(args.size()) != T.arity())
    throw Error(ErrorCode::ArityMismatch, "evaluate needs exactly arity arguments");
  const int p = T.p();
  const Flavor vf = payload_flavor(T.coefficient());
  WeylElement out(p, vf);
  for (const auto& [key, f] : T.terms()) {
    Polynomial F = f;
    for (std::size_t l = 0; l < args.size() && !F.is_zero(); ++l)
      F *= iterated_derivative(args[l], key.slots[l]);
    if (F.is_zero()) continue;
    const WeylElement fn = WeylElement::function(F, vf);
    const WeylElement pay = WeylElement::monomial(p, vf, 0, key.payload);
    out += T.coefficient() == Coefficient::DresOp ? weyl_mul(pay, fn) : weyl_mul(fn, pay);
  }
  return out;
}

Polynomial evaluate_function(const TensorOperator& T, const std::vector<Polynomial>& args) {
  if (T.coefficient() != Coefficient::O)
    throw Error(ErrorCode::CoefficientMismatch, "evaluate_function needs coefficient O");
  return evaluate(T, args).coefficient_of(0);
}

TensorOperator coface(const TensorOperator& T, int k) {
  const int i = T.arity();
  if (k < 0 || k > i + 1) throw Error(ErrorCode::IndexOutOfRange, "coface index out of range");
  const int p = T.p();
  const PrimeField& F = field(p);
  TensorOperator out(p, i + 1, T.coefficient(), T.slot_flavor());
  for (const auto& [key, f] : T.terms()) {
    if (k == 0) {
      TensorKey nk{{0}, key.payload};
      nk.slots.insert(nk.slots.end(), key.slots.begin(), key.slots.end());
      out.add_term(nk, f);
    } else if (k <= i) {
      // Merging arguments k, k+1: Delta(d^b) = sum_j C(b, j) d^j (x) d^{b-j}.
      const int b = key.slots[k - 1];
      for (int j = 0; j <= b; ++j) {
        const int c = F.binomial(b, j);
        if (c == 0) continue;
        TensorKey nk{{}, key.payload};
        nk.slots.reserve(i + 1);
        nk.slots.insert(nk.slots.end(), key.slots.begin(), key.slots.begin() + (k - 1));
        nk.slots.push_back(j);
        nk.slots.push_back(b - j);
        nk.slots.insert(nk.slots.end(), key.slots.begin() + k, key.slots.end());
        out.add_term(nk, c, f);
      }
    } else {
      // Right action of the last argument on the payload.
      const int c = key.payload;
      for (int j = 0; j <= c; ++j) {
        int w = F.binomial(c, j);
        if (T.coefficient() == Coefficient::DresOp && j % 2 == 1) w = F.neg(w);
        if (w == 0) continue;
        TensorKey nk{key.slots, c - j};
        nk.slots.push_back(j);
        out.add_term(nk, w, f);
      }
    }
  }
  return out;
}

TensorOperator codegeneracy(const TensorOperator& T, int k) {
  const int i = T.arity();
  if (i < 1 || k < 0 || k > i - 1) throw Error(ErrorCode::IndexOutOfRange, "codegeneracy index out of range");
  TensorOperator out(T.p(), i - 1, T.coefficient(), T.slot_flavor());
  for (const auto& [key, f] : T.terms()) {
    if (key.slots[k] != 0) continue;
    TensorKey nk{key.slots, key.payload};
    nk.slots.erase(nk.slots.begin() + k);
    out.add_term(nk, f);
  }
  return out;
}

TensorOperator cochain_differential(const TensorOperator& T) {
  TensorOperator out(T.p(), T.arity() + 1, T.coefficient(), T.slot_flavor());
  for (int k = 0; k <= T.arity() + 1; ++k) {
    if (k % 2 == 0)
      out += coface(T, k);
    else
      out -= coface(T, k);
  }
  return out;
}

TensorOperator cup(const TensorOperator& A, const TensorOperator& B) {
  if (A.p() != B.p()) throw Error(ErrorCode::ModulusMismatch, "cup of operators over different fields");
  if (A.coefficient() != Coefficient::O)
    throw Error(ErrorCode::CoefficientMismatch, "left cup factor must have coefficient O");
  if (A.slot_flavor() != B.slot_flavor()) throw Error(ErrorCode::FlavorMismatch, "cup of different slot flavors");
  const int i = A.arity(), j = B.arity();
  const int sign = (i * j) % 2 == 0 ? 1 : -1;
  TensorOperator out(A.p(), i + j, B.coefficient(), B.slot_flavor());
  for (const auto& [ka, fa] : A.terms())
    for (const auto& [kb, fb] : B.terms()) {
      TensorKey nk{ka.slots, kb.payload};
      nk.slots.insert(nk.slots.end(), kb.slots.begin(), kb.slots.end());
      out.add_term(nk, sign, fa * fb);
    }
  return out;
}

}  // namespace charquant
