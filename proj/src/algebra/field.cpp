#include "charquant/field.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "charquant/error.hpp"

namespace charquant {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::CompositionNonzero: return "CompositionNonzero";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CoefficientMismatch: return "CoefficientMismatch";
    case ErrorCode::TooManyInserts: return "TooManyInserts";
    case ErrorCode::BoundsTooSmall: return "BoundsTooSmall";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::NotNormalized: return "NotNormalized";
  }
  return "Unknown";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_supported_prime(int p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw Error(ErrorCode::InvalidModulus,
                "p = " + std::to_string(p) + " is not a prime in [2, " +
                    std::to_string(kMaxPrime) + "]");
}

PrimeField::PrimeField(int p) : p_(p) {
  require_supported_prime(p);
  pascal_.assign(p, std::vector<int>(p, 0));
  for (int a = 0; a < p; ++a) {
    pascal_[a][0] = 1;
    for (int b = 1; b <= a; ++b)
      pascal_[a][b] = (pascal_[a - 1][b - 1] + (b <= a - 1 ? pascal_[a - 1][b] : 0)) % p;
  }
}

int PrimeField::inv(int a) const {
  a = reduce(a);
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_p");
  return pow(a, static_cast<unsigned long long>(p_ - 2));
}

int PrimeField::pow(int a, unsigned long long e) const noexcept {
  int base = reduce(a);
  int result = 1 % p_;
  while (e > 0) {
    if (e & 1ULL) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int PrimeField::binomial(long long n, long long k) const noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  int result = 1;
  while (n > 0 || k > 0) {
    const int ni = static_cast<int>(n % p_);
    const int ki = static_cast<int>(k % p_);
    if (ki > ni) return 0;
    result = mul(result, pascal_[ni][ki]);
    n /= p_;
    k /= p_;
  }
  return result;
}

int PrimeField::falling_factorial(long long n, long long k) const noexcept {
  if (k < 0 || k > n) return 0;
  // Any run of p consecutive integers contains a multiple of p.
  if (k >= p_) return 0;
  int result = 1 % p_;
  for (long long i = 0; i < k; ++i) result = mul(result, reduce(n - i));
  return result;
}

const PrimeField& field(int p) {
  static std::array<std::unique_ptr<PrimeField>, kMaxPrime + 1> cache;
  static std::once_flag flags[kMaxPrime + 1];
  require_supported_prime(p);
  std::call_once(flags[p], [p] { cache[p] = std::make_unique<PrimeField>(p); });
  return *cache[p];
}

FieldElement make_element(long long v, int p) { return FieldElement{field(p).reduce(v), p}; }

}  // namespace charquant
