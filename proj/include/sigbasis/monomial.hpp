#pragma once

// Monomials as unpacked exponent vectors with cached degree and hash, plus
// the supported ring term orders.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/container/small_vector.hpp>

namespace sigbasis {

using Exponent = std::uint32_t;

class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 16>;

  Monomial() = default;

  /// The monomial 1 in num_vars variables.
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) { rehash(); }

  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { rehash(); }

  explicit Monomial(std::span<const Exponent> exps)
      : exps_(exps.begin(), exps.end()) {
    rehash();
  }

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }
  std::uint64_t degree() const { return degree_; }
  std::uint64_t hash() const { return hash_; }
  bool is_one() const { return degree_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.hash_ == b.hash_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  /// Builds a monomial from exponents produced elementwise by f(i).
  template <class F>
  static Monomial generate(std::size_t num_vars, F&& f) {
    Monomial m;
    m.exps_.resize(num_vars);
    for (std::size_t i = 0; i < num_vars; ++i) m.exps_[i] = f(i);
    m.rehash();
    return m;
  }

 private:
  void rehash() {
    std::uint64_t d = 0;
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const Exponent e : exps_) {
      d += e;
      h ^= e + 0x2545f4914f6cdd1dULL;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 29;
    }
    degree_ = d;
    hash_ = h;
  }

  Storage exps_;
  std::uint64_t degree_ = 0;
  std::uint64_t hash_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return static_cast<std::size_t>(m.hash()); }
};

inline void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomials from different rings");
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  return Monomial::generate(a.num_vars(), [&](std::size_t i) { return a[i] + b[i]; });
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// a / b; requires b | a.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  if (!mono_divides(b, a)) throw std::invalid_argument("not divisible");
  return Monomial::generate(a.num_vars(), [&](std::size_t i) { return a[i] - b[i]; });
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  return Monomial::generate(a.num_vars(), [&](std::size_t i) { return std::min(a[i], b[i]); });
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  return Monomial::generate(a.num_vars(), [&](std::size_t i) { return std::max(a[i], b[i]); });
}

/// lcm(a, b) / a without materializing the lcm.
inline Monomial mono_colon(const Monomial& lcm_side, const Monomial& a) {
  check_same_ring(lcm_side, a);
  return Monomial::generate(a.num_vars(), [&](std::size_t i) {
    return lcm_side[i] > a[i] ? lcm_side[i] - a[i] : 0;
  });
}

inline bool mono_relatively_prime(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Term orders

enum class OrderKind { Grevlex, Lex, Elimination };

struct RingOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t elim_block = 0;  // number of leading variables eliminated

  static RingOrder grevlex() { return {}; }
  static RingOrder lex() { return {OrderKind::Lex, 0}; }
  static RingOrder elimination(std::size_t k) { return {OrderKind::Elimination, k}; }

  friend bool operator==(const RingOrder&, const RingOrder&) = default;

  /// Three-way comparison of exponent vectors with precomputed total degrees.
  /// Works for signed vectors as well, which is how sig-lead ratios
  /// (quotients of monomials) are ordered.
  template <class T>
  std::strong_ordering compare(std::span<const T> a, std::span<const T> b,
                               std::int64_t deg_a, std::int64_t deg_b) const {
    const std::size_t n = a.size();
    switch (kind) {
      case OrderKind::Lex:
        for (std::size_t i = 0; i < n; ++i)
          if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
      case OrderKind::Elimination: {
        std::int64_t ea = 0, eb = 0;
        for (std::size_t i = 0; i < elim_block; ++i) {
          ea += static_cast<std::int64_t>(a[i]);
          eb += static_cast<std::int64_t>(b[i]);
        }
        if (ea != eb) return ea <=> eb;
        [[fallthrough]];
      }
      case OrderKind::Grevlex:
        if (deg_a != deg_b) return deg_a <=> deg_b;
        for (std::size_t i = n; i-- > 0;)
          if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
        return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return compare<Exponent>(a.exponents(), b.exponents(), static_cast<std::int64_t>(a.degree()),
                             static_cast<std::int64_t>(b.degree()));
  }

  std::string to_string() const {
    switch (kind) {
      case OrderKind::Grevlex: return "grevlex";
      case OrderKind::Lex: return "lex";
      case OrderKind::Elimination: return "elim " + std::to_string(elim_block);
    }
    return {};
  }
};

/// -1, 0, +1 comparison in the given order.
inline int mono_cmp(const Monomial& a, const Monomial& b, const RingOrder& order) {
  check_same_ring(a, b);
  const auto c = order.compare(a, b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace sigbasis
