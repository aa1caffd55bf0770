#pragma once

#include <cstdint>
#include <vector>

namespace charquant {

inline constexpr int kMaxPrime = 13;

bool is_prime(int n);

/// Throws InvalidModulus unless p is a prime in [2, kMaxPrime].
void require_supported_prime(int p);

/// Arithmetic in the prime field F_p. Residues are plain ints in [0, p).
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const noexcept { return p_; }

  int reduce(long long v) const noexcept {
    long long r = v % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const noexcept { return (a + b) % p_; }
  int sub(int a, int b) const noexcept { return (a - b + p_) % p_; }
  int neg(int a) const noexcept { return a == 0 ? 0 : p_ - a; }
  int mul(int a, int b) const noexcept { return (a * b) % p_; }
  int inv(int a) const;
  int pow(int a, unsigned long long e) const noexcept;

  /// C(n, k) mod p via Lucas' theorem; zero when k > n or k < 0.
  int binomial(long long n, long long k) const noexcept;
  /// n (n-1) ... (n-k+1) mod p.
  int falling_factorial(long long n, long long k) const noexcept;
  int factorial(long long n) const noexcept { return falling_factorial(n, n); }

 private:
  int p_;
  std::vector<std::vector<int>> pascal_;  // C(a, b) for a, b < p
};

/// Shared per-prime field instance (immutable, thread-safe after first use).
const PrimeField& field(int p);

/// An element of F_p carrying its modulus.
struct FieldElement {
  int value = 0;
  int p = 2;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FieldElement make_element(long long v, int p);

}  // namespace charquant
