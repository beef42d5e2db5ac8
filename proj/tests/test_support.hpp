#pragma once

#include <random>
#include <string>
#include <vector>

#include "sigbasis/io.hpp"

namespace sigbasis::testing {

inline Ring ring3(Coeff p = 101) { return Ring(p, 3); }

/// Parses a polynomial written with x, y, z standing for x1, x2, x3.
inline Polynomial P(const Ring& ring, std::string s) {
  std::string out;
  for (char c : s) {
    if (c == 'x') out += "x1";
    else if (c == 'y') out += "x2";
    else if (c == 'z') out += "x3";
    else out += c;
  }
  return parse_polynomial(ring, out);
}

inline Monomial M(const Ring& ring, const std::string& s) { return P(ring, s).lead_mono(); }

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nv, Exponent max_exp) {
  std::uniform_int_distribution<Exponent> d(0, max_exp);
  return Monomial::generate(nv, [&](std::size_t) { return d(rng); });
}

inline Polynomial random_polynomial(const Ring& ring, std::mt19937_64& rng, std::size_t terms, Exponent max_exp) {
  std::uniform_int_distribution<Coeff> c(1, ring.characteristic() - 1);
  std::vector<Term> raw;
  for (std::size_t i = 0; i < terms; ++i) raw.push_back({c(rng), random_monomial(rng, ring.num_vars(), max_exp)});
  return poly_normalize(ring, std::move(raw));
}

}  // namespace sigbasis::testing
