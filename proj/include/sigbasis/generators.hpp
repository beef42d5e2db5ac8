#pragma once

// Standard benchmark systems.

#include <stdexcept>
#include <string>
#include <vector>

#include "sigbasis/io.hpp"

namespace sigbasis {

/// Cyclic-n: for k = 1..n-1 the sums over i of x_i x_{i+1} ... x_{i+k-1}
/// (indices mod n), plus x_1 ... x_n - 1. Homogenizing adds a variable h
/// (the last one) and turns the last generator into x_1 ... x_n - h^n.
inline Ideal gen_cyclic(std::size_t n, bool homogenize = false, Coeff p = 101) {
  if (n < 2) throw std::invalid_argument("cyclic needs n >= 2");
  const std::size_t nv = homogenize ? n + 1 : n;
  Ideal ideal{Ring(p, nv), {}};
  const Ring& r = ideal.ring;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Term> raw;
    for (std::size_t i = 0; i < n; ++i)
      raw.push_back({1, Monomial::generate(nv, [&](std::size_t v) {
                       return v < n && (v + n - i) % n < k ? Exponent{1} : Exponent{0};
                     })});
    ideal.gens.push_back(poly_normalize(r, std::move(raw)));
  }
  std::vector<Term> last{{1, Monomial::generate(nv, [&](std::size_t v) { return v < n ? 1u : 0u; })}};
  if (homogenize)
    last.push_back({r.field().neg(1), r.var(n, static_cast<Exponent>(n))});
  else
    last.push_back({r.field().neg(1), r.one()});
  ideal.gens.push_back(poly_normalize(r, std::move(last)));
  return ideal;
}

enum class KatsuraNaming {
  Variables,   // katsura-n has n variables u_0..u_{n-1} and n equations
  Classic,     // katsura-n has n+1 variables u_0..u_n and n+1 equations
};

/// Katsura system over unknowns u_0..u_{N-1}, u_{-l} = u_l and u_l = 0 for
/// l >= N: for m = 0..N-2, sum_{l=-(N-1)}^{N-1} u_l u_{m-l} - u_m, plus
/// u_0 + 2 sum_{l>0} u_l - 1.
inline Ideal gen_katsura(std::size_t n, KatsuraNaming naming = KatsuraNaming::Variables, Coeff p = 101) {
  if (n < 1) throw std::invalid_argument("katsura needs n >= 1");
  const std::size_t N = naming == KatsuraNaming::Variables ? n : n + 1;
  Ideal ideal{Ring(p, N), {}};
  const Ring& r = ideal.ring;
  const PrimeField& k = r.field();
  auto u = [&](long l) -> long { return l < 0 ? -l : l; };
  for (long m = 0; m + 1 < static_cast<long>(N); ++m) {
    std::vector<Term> raw;
    for (long l = -static_cast<long>(N - 1); l <= static_cast<long>(N - 1); ++l) {
      const long a = u(l), b = u(m - l);
      if (a >= static_cast<long>(N) || b >= static_cast<long>(N)) continue;
      raw.push_back({1, mono_mul(r.var(static_cast<std::size_t>(a)), r.var(static_cast<std::size_t>(b)))});
    }
    raw.push_back({k.neg(1), r.var(static_cast<std::size_t>(m))});
    ideal.gens.push_back(poly_normalize(r, std::move(raw)));
  }
  std::vector<Term> lin{{1, r.var(0)}, {k.neg(1), r.one()}};
  for (std::size_t l = 1; l < N; ++l) lin.push_back({k.from_int(2), r.var(l)});
  ideal.gens.push_back(poly_normalize(r, std::move(lin)));
  return ideal;
}

}  // namespace sigbasis
