#include "charquant/complexes.hpp"

#include <functional>
#include <map>

#include "charquant/error.hpp"
#include "charquant/parallel.hpp"

namespace charquant {

const char* to_string(Family f) {
  switch (f) {
    case Family::HH_rel_Oprime: return "HH_rel_Oprime";
    case Family::HH_rel_Oprime_full: return "HH_rel_Oprime_full";
    case Family::Reduced: return "Reduced";
    case Family::Resolution: return "Resolution";
    case Family::TwoSided: return "TwoSided";
    case Family::Hypersurface: return "Hypersurface";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.informational && !c.pass) return false;
  return true;
}

namespace {

bool is_operator_family(Family f) {
  return f == Family::HH_rel_Oprime || f == Family::HH_rel_Oprime_full || f == Family::TwoSided;
}

void validate(const ComplexSpec& spec) {
  require_supported_prime(spec.p);
  if (spec.truncation.N < 1) throw Error(ErrorCode::TruncationTooSmall, "N must be at least 1");
  switch (spec.family) {
    case Family::HH_rel_Oprime:
      if (spec.coeff == Coefficient::Dfull)
        throw Error(ErrorCode::UnsupportedCombination, "unbounded coefficients need the order-truncated family");
      break;
    case Family::HH_rel_Oprime_full:
      if (spec.coeff != Coefficient::O && spec.coeff != Coefficient::Dfull)
        throw Error(ErrorCode::UnsupportedCombination, "crystalline family takes coefficients O or Dfull");
      if (spec.truncation.M < spec.p) throw Error(ErrorCode::TruncationTooSmall, "order bound M must be at least p");
      break;
    case Family::TwoSided:
      if (spec.coeff != Coefficient::Dres)
        throw Error(ErrorCode::UnsupportedCombination, "two-sided complex has coefficient Dres");
      break;
    default:
      break;
  }
}

// Exponent ranges for slots and payload.
struct Ranges {
  int slot_lo, slot_hi;  // inclusive
  int pay_hi;            // inclusive
};

Ranges ranges_of(const ComplexSpec& spec) {
  const int p = spec.p;
  Ranges r{};
  r.slot_lo = spec.normalized ? 1 : 0;
  r.slot_hi = spec.family == Family::HH_rel_Oprime_full ? spec.truncation.M : p - 1;
  switch (spec.coeff) {
    case Coefficient::O: r.pay_hi = 0; break;
    case Coefficient::Dres:
    case Coefficient::DresOp: r.pay_hi = p - 1; break;
    case Coefficient::Dfull: r.pay_hi = spec.truncation.M; break;
  }
  return r;
}

// Arity of the operators forming C^n.
int arity_of(const ComplexSpec& spec, int n) { return spec.family == Family::TwoSided ? n + 1 : n; }

using IndexMap = std::map<std::pair<TensorKey, int>, int>;

IndexMap index_map(const std::vector<AssembledComplex::BasisElement>& basis) {
  IndexMap m;
  for (std::size_t j = 0; j < basis.size(); ++j) m.emplace(std::make_pair(basis[j].key, basis[j].a), static_cast<int>(j));
  return m;
}

std::vector<Polynomial> coordinates_in(const ComplexSpec& spec, const IndexMap& index, int size,
                                       const TensorOperator& T, long long* dropped) {
  const int p = spec.p;
  const Ranges r = ranges_of(spec);
  std::vector<Polynomial> v(size, Polynomial(p, Var::t));
  for (const auto& [key, f] : T.terms()) {
    bool over = key.payload > r.pay_hi;
    for (int b : key.slots) {
      if (b < r.slot_lo) throw Error(ErrorCode::NotNormalized, "term with a unit slot in the normalized complex");
      over = over || b > r.slot_hi;
    }
    if (over) {
      if (dropped == nullptr) throw Error(ErrorCode::TruncationTooSmall, "term beyond the order truncation");
      ++*dropped;
      continue;
    }
    const auto parts = frobenius_decompose(f);
    for (int a = 0; a < p; ++a) {
      if (parts[a].is_zero()) continue;
      auto it = index.find({key, a});
      if (it == index.end()) throw Error(ErrorCode::IndexOutOfRange, "term outside the cochain basis");
      v[it->second] += parts[a];
    }
  }
  return v;
}

}  // namespace

SlotFlavor slot_flavor_of(const ComplexSpec& spec) {
  return spec.family == Family::HH_rel_Oprime_full ? SlotFlavor::crystalline : SlotFlavor::restricted;
}

std::vector<AssembledComplex::BasisElement> cochain_basis(const ComplexSpec& spec, int n) {
  validate(spec);
  if (!is_operator_family(spec.family))
    throw Error(ErrorCode::UnsupportedCombination, "family has no operator basis");
  const Ranges r = ranges_of(spec);
  const int arity = arity_of(spec, n);
  std::vector<AssembledComplex::BasisElement> out;
  std::vector<int> slots(arity, r.slot_lo);
  std::function<void(int)> rec = [&](int l) {
    if (l == arity) {
      for (int c = 0; c <= r.pay_hi; ++c)
        for (int a = 0; a < spec.p; ++a) out.push_back({a, TensorKey{slots, c}});
      return;
    }
    for (int b = r.slot_lo; b <= r.slot_hi; ++b) {
      slots[l] = b;
      rec(l + 1);
    }
  };
  rec(0);
  return out;
}

TensorOperator basis_operator(const ComplexSpec& spec, const AssembledComplex::BasisElement& e) {
  return TensorOperator::monomial(spec.p, spec.coeff, slot_flavor_of(spec), e.key.slots, e.key.payload,
                                  Polynomial::monomial(spec.p, Var::x, e.a));
}

std::vector<Polynomial> coordinates(const ComplexSpec& spec, int n, const TensorOperator& T) {
  const auto basis = cochain_basis(spec, n);
  return coordinates_in(spec, index_map(basis), static_cast<int>(basis.size()), T, nullptr);
}

TensorOperator from_coordinates(const ComplexSpec& spec, int n, const std::vector<Polynomial>& v) {
  const auto basis = cochain_basis(spec, n);
  if (v.size() != basis.size()) throw Error(ErrorCode::ShapeMismatch, "coordinate vector length differs from rank");
  TensorOperator T(spec.p, arity_of(spec, n), spec.coeff, slot_flavor_of(spec));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (v[j].is_zero()) continue;
    std::vector<Polynomial> parts(spec.p, Polynomial(spec.p, Var::t));
    parts[basis[j].a] = v[j];
    T.add_term(basis[j].key, frobenius_reassemble(parts));
  }
  return T;
}

namespace {

AssembledComplex assemble(const ComplexSpec& spec, TensorOperator (*differential)(const TensorOperator&)) {
  AssembledComplex out;
  out.spec = spec;
  out.complex.p = spec.p;
  const int N = spec.truncation.N;
  for (int n = 0; n <= N; ++n) {
    out.basis.push_back(cochain_basis(spec, n));
    out.complex.ranks.push_back(static_cast<int>(out.basis.back().size()));
  }
  const bool truncated = spec.family == Family::HH_rel_Oprime_full;
  for (int n = 0; n < N; ++n) {
    const auto& src = out.basis[n];
    const IndexMap target = index_map(out.basis[n + 1]);
    const int rows = out.complex.ranks[n + 1];
    PolyMatrix D(spec.p, rows, static_cast<int>(src.size()));
    std::vector<long long> dropped(src.size(), 0);
    parallel_for(src.size(), [&](std::size_t j) {
      const TensorOperator d = differential(basis_operator(spec, src[j]));
      const auto col = coordinates_in(spec, target, rows, d, truncated ? &dropped[j] : nullptr);
      for (int r = 0; r < rows; ++r)
        if (!col[r].is_zero()) D(r, static_cast<int>(j)) = col[r];
    });
    for (long long k : dropped) out.dropped_terms += k;
    out.complex.differentials.push_back(std::move(D));
  }
  return out;
}

}  // namespace

AssembledComplex build_complex(const ComplexSpec& spec) {
  validate(spec);
  if (!is_operator_family(spec.family)) {
    AssembledComplex out;
    out.spec = spec;
    switch (spec.family) {
      case Family::Reduced: out.complex = reduced_complex_matrices(spec.p, spec.truncation.N); break;
      case Family::Resolution: out.complex = resolution_complex_matrices(spec.p); break;
      case Family::Hypersurface:
        if (spec.coeff != Coefficient::O && spec.coeff != Coefficient::Dres)
          throw Error(ErrorCode::UnsupportedCombination, "hypersurface oracle takes coefficients O or Dres");
        out.complex = hypersurface_complex(spec.p, spec.truncation.N,
                                           spec.coeff == Coefficient::O ? HypersurfaceCoefficients::O
                                                                        : HypersurfaceCoefficients::End);
        break;
      default: break;
    }
    return out;
  }
  if (spec.family == Family::TwoSided) return build_two_sided(spec.p, spec.truncation.N);
  return assemble(spec, cochain_differential);
}

AssembledComplex build_two_sided(int p, int N) {
  ComplexSpec spec{Family::TwoSided, Coefficient::Dres, p, {N, 0}, false};
  validate(spec);
  return assemble(spec, two_sided_differential);
}

}  // namespace charquant
