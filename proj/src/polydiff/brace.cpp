#include <functional>

#include "charquant/error.hpp"
#include "charquant/tensor_operator.hpp"

namespace charquant {

namespace {

// Distributes b derivatives over j+1 factors: calls visit(e, weight) for
// every e = (e_0, ..., e_j) with sum b and nonzero multinomial weight.
void leibniz_split(const PrimeField& F, int b, int parts, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> e(parts, 0);
  std::function<void(int, int, int)> rec = [&](int pos, int left, int weight) {
    if (pos == parts - 1) {
      e[pos] = left;
      visit(e, weight);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      const int w = F.mul(weight, F.binomial(left, k));
      if (w == 0) continue;
      e[pos] = k;
      rec(pos + 1, left - k, w);
    }
  };
  rec(0, b, 1);
}

// One term of an insert, used while expanding a single choice of slots.
struct Partial {
  std::vector<int> slots;
  Polynomial f;
  int weight;
};

}  // namespace

TensorOperator brace(const TensorOperator& A, const std::vector<TensorOperator>& inserts) {
  const int i = A.arity();
  const int m = static_cast<int>(inserts.size());
  if (m > i) throw Error(ErrorCode::TooManyInserts, "more inserts than arguments");
  const int p = A.p();
  const PrimeField& F = field(p);
  int result_arity = i - m;
  for (const auto& B : inserts) {
    if (B.p() != p) throw Error(ErrorCode::ModulusMismatch, "brace over different fields");
    if (B.coefficient() != Coefficient::O)
      throw Error(ErrorCode::CoefficientMismatch, "brace inserts must have coefficient O");
    if (B.slot_flavor() != A.slot_flavor()) throw Error(ErrorCode::FlavorMismatch, "brace of different slot flavors");
    result_arity += B.arity();
  }
  TensorOperator out(p, result_arity, A.coefficient(), A.slot_flavor());
  if (m == 0) {
    out += A;
    return out;
  }

  std::vector<int> chosen(m);
  auto expand = [&]() {
    int eps = 0;
    int before = 0;
    for (int l = 0; l < m; ++l) {
      eps += (inserts[l].arity() - 1) * (chosen[l] - l + before);
      before += inserts[l].arity();
    }
    const int sign = eps % 2 == 0 ? 1 : F.neg(1);
    for (const auto& [ka, fa] : A.terms()) {
      // Walk A's slots left to right, accumulating partial products.
      std::vector<Partial> acc{{{}, fa, sign}};
      int next = 0;
      for (int s = 0; s < i; ++s) {
        const int b = ka.slots[s];
        if (next < m && chosen[next] == s) {
          const TensorOperator& B = inserts[next];
          std::vector<Partial> grown;
          for (const auto& part : acc)
            for (const auto& [kb, fb] : B.terms())
              leibniz_split(F, b, B.arity() + 1, [&](const std::vector<int>& e, int w) {
                Polynomial g = iterated_derivative(fb, e[0]);
                if (g.is_zero()) return;
                Partial np{part.slots, part.f * g, F.mul(part.weight, w)};
                for (int r = 0; r < B.arity(); ++r) np.slots.push_back(kb.slots[r] + e[r + 1]);
                grown.push_back(std::move(np));
              });
          acc = std::move(grown);
          ++next;
        } else {
          for (auto& part : acc) part.slots.push_back(b);
        }
        if (acc.empty()) break;
      }
      for (auto& part : acc) out.add_term(TensorKey{std::move(part.slots), ka.payload}, part.weight, part.f);
    }
  };

  std::function<void(int, int)> choose = [&](int l, int from) {
    if (l == m) {
      expand();
      return;
    }
    for (int s = from; s <= i - (m - l); ++s) {
      chosen[l] = s;
      choose(l + 1, s + 1);
    }
  };
  choose(0, 0);
  return out;
}

TensorOperator brace_module_action(const TensorOperator& B, const std::vector<TensorOperator>& inserts) {
  return brace(B, inserts);
}

TensorOperator gerstenhaber(const TensorOperator& A, const TensorOperator& B) {
  const int i = A.arity(), j = B.arity();
  // An arity-0 operator has no slot to insert into; that half is zero.
  if (i == 0 && j == 0) return TensorOperator(A.p(), 0, A.coefficient(), A.slot_flavor());
  TensorOperator out = i > 0 ? brace(A, {B}) : TensorOperator(A.p(), j - 1, A.coefficient(), A.slot_flavor());
  if (j == 0) return out;
  const TensorOperator rev = brace(B, {A});
  if (((i - 1) * (j - 1)) % 2 == 0)
    out -= rev;
  else
    out += rev;
  return out;
}

}  // namespace charquant
