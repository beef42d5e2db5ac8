#pragma once

// Divmasks: 32-bit summaries of monomials. Bit b of mask(a) is set when
// x_{var(b)}^{threshold(b)} divides a, so a | b implies mask(a) is bitwise
// below mask(b) and (mask(a) & ~mask(b)) != 0 proves a does not divide b.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "sigbasis/monomial.hpp"

namespace sigbasis {

using Divmask = std::uint32_t;

inline bool may_divide(Divmask a, Divmask b) { return (a & ~b) == 0; }

struct DivMapBit {
  std::uint32_t var = 0;
  Exponent threshold = 0;
  friend bool operator==(const DivMapBit&, const DivMapBit&) = default;
};

class DivMap {
 public:
  static constexpr std::size_t kBits = 32;

  DivMap() = default;
  explicit DivMap(const std::array<DivMapBit, kBits>& bits) : bits_(bits) {}

  /// Uncalibrated map: variable v's j-th bit tests x_v^(j+1).
  static DivMap standard(std::size_t num_vars) {
    const std::size_t nv = std::min<std::size_t>(kBits, num_vars);
    if (nv == 0) throw std::invalid_argument("divmap needs at least one variable");
    std::array<DivMapBit, kBits> bits{};
    for (std::size_t b = 0; b < kBits; ++b)
      bits[b] = {static_cast<std::uint32_t>(b % nv), static_cast<Exponent>(b / nv + 1)};
    return DivMap(bits);
  }

  /// Distributes the bits round-robin over the first min(32, n) variables and
  /// spaces each variable's thresholds evenly inside [min_v, max_v]. With a
  /// single bit the threshold is the average of min_v and max_v.
  static DivMap from_ranges(std::span<const Exponent> min_exp, std::span<const Exponent> max_exp) {
    const std::size_t nv = std::min<std::size_t>(kBits, min_exp.size());
    if (nv == 0) throw std::invalid_argument("divmap needs at least one variable");
    std::array<DivMapBit, kBits> bits{};
    for (std::size_t b = 0; b < kBits; ++b) {
      const std::size_t v = b % nv;
      const std::size_t count = kBits / nv + (v < kBits % nv ? 1 : 0);
      const std::size_t j = b / nv;
      const std::uint64_t lo = min_exp[v], hi = max_exp[v];
      bits[b] = {static_cast<std::uint32_t>(v),
                 static_cast<Exponent>(lo + (hi - lo) * (j + 1) / (count + 1))};
    }
    return DivMap(bits);
  }

  Divmask mask(const Monomial& m) const {
    Divmask out = 0;
    for (std::size_t b = 0; b < kBits; ++b)
      if (m[bits_[b].var] >= bits_[b].threshold) out |= Divmask{1} << b;
    return out;
  }

  const DivMapBit& bit(std::size_t b) const { return bits_[b]; }
  friend bool operator==(const DivMap&, const DivMap&) = default;

 private:
  std::array<DivMapBit, kBits> bits_{};
};

/// Calibrates a divmap against a nonempty set of monomials.
template <class Range>
DivMap calibrate_divmap(const Range& monomials) {
  std::vector<Exponent> lo, hi;
  bool first = true;
  for (const Monomial& m : monomials) {
    if (first) {
      lo.assign(m.exponents().begin(), m.exponents().end());
      hi = lo;
      first = false;
      continue;
    }
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
      lo[i] = std::min(lo[i], m[i]);
      hi[i] = std::max(hi[i], m[i]);
    }
  }
  if (first) throw std::invalid_argument("cannot calibrate a divmap on an empty set");
  return DivMap::from_ranges(lo, hi);
}

/// Divmask consultation counters. hits: the mask proved non-divisibility;
/// misses: no proof although the monomial does not divide; divisibilities:
/// the monomial divides.
struct DivmaskStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t divisibilities = 0;
  std::uint64_t consultations = 0;

  double hit_rate() const {
    const auto d = hits + misses;
    return d == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(d);
  }
  double effective_hit_rate() const {
    return consultations == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(consultations);
  }
  DivmaskStats& operator+=(const DivmaskStats& o) {
    hits += o.hits;
    misses += o.misses;
    divisibilities += o.divisibilities;
    consultations += o.consultations;
    return *this;
  }
};

}  // namespace sigbasis
