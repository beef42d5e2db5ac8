#pragma once

// Reduced Groebner basis extraction and Groebner basis checks shared by
// both algorithms.

#include <algorithm>
#include <vector>

#include "sigbasis/classic_reduce.hpp"

namespace sigbasis {

/// Keeps elements with minimal distinct lead monomials, fully interreduces
/// them and returns them monic, sorted by increasing lead monomial. The input
/// must be a Groebner basis for the result to be the reduced one.
inline std::vector<Polynomial> reduce_basis(const Ring& ring, const std::vector<Polynomial>& gb,
                                            const QueueConfig& queue_cfg = {},
                                            LookupKind kind = LookupKind::DivList) {
  std::vector<Polynomial> sorted;
  for (const auto& g : gb)
    if (!g.is_zero()) sorted.push_back(poly_monic(ring, g));
  std::sort(sorted.begin(), sorted.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ring.less(a.lead_mono(), b.lead_mono()); });

  // Smallest leads first: an element is kept iff no kept lead divides it.
  std::vector<Polynomial> minimal;
  auto lookup = make_lookup(kind, ring.num_vars());
  for (auto& g : sorted) {
    if (lookup->find_divisor(g.lead_mono())) continue;
    lookup->insert(g.lead_mono(), static_cast<MonomialLookup::Id>(minimal.size()));
    minimal.push_back(std::move(g));
  }

  auto queue = make_term_queue(ring, queue_cfg);
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    // Lead terms are pairwise non-divisible, so only tails change. Reducing
    // against the original elements gives the unique reduced form.
    const Polynomial& g = minimal[i];
    std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
    auto r = classic_reduce(ring, Polynomial::from_sorted(std::move(tail)), minimal, *lookup, *queue);
    std::vector<Term> terms{g.lead()};
    terms.insert(terms.end(), r.remainder.terms().begin(), r.remainder.terms().end());
    out.push_back(Polynomial::from_sorted(std::move(terms)));
  }
  return out;
}

/// Replaces each generator by its remainder modulo the others until no term
/// of any generator is divisible by another generator's lead monomial.
/// Generates the same ideal; zero remainders are dropped. Returned monic in
/// input order.
inline std::vector<Polynomial> interreduce(const Ring& ring, std::vector<Polynomial> polys) {
  std::erase_if(polys, [](const Polynomial& f) { return f.is_zero(); });
  for (auto& f : polys) f = poly_monic(ring, f);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t o = 0; o < polys.size(); ++o)
        if (o != k) others.push_back(polys[o]);
      Polynomial r = classic_reduce(ring, polys[k], others, {.monic = true}).remainder;
      if (r == polys[k]) continue;
      changed = true;
      if (r.is_zero()) {
        polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(k));
        --k;
      } else {
        polys[k] = std::move(r);
      }
    }
  }
  return polys;
}

/// Interreduced generators ordered by decreasing lead monomial.
inline std::vector<Polynomial> interreduce_sorted(const Ring& ring, std::vector<Polynomial> polys) {
  polys = interreduce(ring, std::move(polys));
  std::stable_sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.lead_mono(), b.lead_mono()) > 0;
  });
  return polys;
}

/// Checks that every S-polynomial of gb reduces to zero by gb.
inline bool is_groebner_basis(const Ring& ring, const std::vector<Polynomial>& gb) {
  std::vector<Polynomial> basis;
  for (const auto& g : gb)
    if (!g.is_zero()) basis.push_back(g);
  auto lookup = make_lookup(LookupKind::DivList, ring.num_vars());
  for (std::size_t i = 0; i < basis.size(); ++i)
    lookup->insert(basis[i].lead_mono(), static_cast<MonomialLookup::Id>(i));
  auto queue = make_term_queue(ring, QueueConfig{});
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Polynomial s = s_polynomial(ring, basis[i], basis[j]);
      if (!classic_reduce(ring, s, basis, *lookup, *queue).remainder.is_zero()) return false;
    }
  return true;
}

/// True when every element of a reduces to zero by the Groebner basis gb.
inline bool ideal_contained_in(const Ring& ring, const std::vector<Polynomial>& a, const std::vector<Polynomial>& gb) {
  for (const auto& f : a)
    if (!classic_reduce(ring, f, gb).remainder.is_zero()) return false;
  return true;
}

}  // namespace sigbasis
