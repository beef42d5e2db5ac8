#pragma once

// Arithmetic in the prime field Z/pZ with p < 2^31. Elements are stored as
// their canonical representative in [0, p-1].

#include <cstdint>
#include <stdexcept>

namespace sigbasis {

using Coeff = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Inverse of a modulo p via the extended Euclidean algorithm.
inline Coeff ff_inv(Coeff a, Coeff p) {
  if (p == 0 || a % p == 0) throw std::domain_error("not invertible");
  std::int64_t r0 = p, r1 = a % p;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("not invertible");
  std::int64_t res = s0 % static_cast<std::int64_t>(p);
  if (res < 0) res += p;
  return static_cast<Coeff>(res);
}

class PrimeField {
 public:
  explicit PrimeField(Coeff p) : p_(p) {
    if (p < 2 || p >= (Coeff{1} << 31) || !is_prime(p))
      throw std::invalid_argument("characteristic not prime");
  }

  Coeff characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    const Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff inv(Coeff a) const { return ff_inv(a, p_); }

  /// Reduces an arbitrary signed integer into [0, p-1].
  Coeff from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_symmetric(Coeff a) const {
    return a <= p_ / 2 ? static_cast<std::int64_t>(a)
                       : static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Coeff p_;
};

}  // namespace sigbasis
