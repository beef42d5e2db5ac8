#pragma once

// Classic polynomial division by a list of basis polynomials whose lead
// monomials are registered in a MonomialLookup under their list index.

#include <optional>
#include <vector>

#include "sigbasis/monomial_lookup.hpp"
#include "sigbasis/term_queue.hpp"

namespace sigbasis {

struct ReduceOptions {
  bool top_only = false;       // stop after the lead term is irreducible
  bool monic = false;          // scale the remainder to lead coefficient 1
  bool track_quotients = false;
};

struct ReduceResult {
  std::vector<Polynomial> quotients;  // per basis index, empty unless tracked
  Polynomial remainder;
  std::size_t steps = 0;
};

/// Picks the reducer with the smallest id among those whose lead monomial
/// divides m, so the outcome does not depend on the lookup structure.
inline std::optional<MonomialLookup::Id> smallest_divisor(MonomialLookup& lookup, const Monomial& m) {
  std::optional<MonomialLookup::Id> best;
  lookup.visit_divisors(m, [&](MonomialLookup::Id id, const Monomial&) {
    if (!best || id < *best) best = id;
    return false;
  });
  return best;
}

/// Divides f by basis. Returns f = sum q_i g_i + r where no term of r (only
/// its lead term when top_only) is divisible by a live lead monomial.
inline ReduceResult classic_reduce(const Ring& ring, const Polynomial& f, const std::vector<Polynomial>& basis,
                                   MonomialLookup& lookup, TermQueue& queue, const ReduceOptions& opt = {}) {
  const PrimeField& k = ring.field();
  ReduceResult res;
  std::vector<std::vector<Term>> quot;
  if (opt.track_quotients) quot.resize(basis.size());
  std::vector<Term> rem;

  queue.clear();
  if (!f.is_zero()) queue.push_product({1, ring.one()}, f);
  while (auto t = queue.pop_max()) {
    if (opt.top_only && !rem.empty()) {
      rem.push_back(std::move(*t));
      continue;
    }
    if (auto id = smallest_divisor(lookup, t->mono)) {
      const Polynomial& g = basis[*id];
      const Coeff c = k.mul(t->coeff, k.inv(g.lead_coeff()));
      Monomial m = mono_div(t->mono, g.lead_mono());
      queue.push_product({k.neg(c), m}, g, 1);
      if (opt.track_quotients) quot[*id].push_back({c, std::move(m)});
      ++res.steps;
    } else {
      rem.push_back(std::move(*t));
    }
  }
  res.remainder = Polynomial::from_sorted(std::move(rem));
  if (opt.monic) res.remainder = poly_monic(ring, res.remainder);
  if (opt.track_quotients) {
    res.quotients.reserve(basis.size());
    for (auto& q : quot) res.quotients.push_back(poly_normalize(ring, std::move(q)));
  }
  return res;
}

/// Convenience overload with a throwaway list lookup and default queue.
inline ReduceResult classic_reduce(const Ring& ring, const Polynomial& f, const std::vector<Polynomial>& basis,
                                   const ReduceOptions& opt = {}) {
  auto lookup = make_lookup(LookupKind::DivList, ring.num_vars());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero()) lookup->insert(basis[i].lead_mono(), static_cast<MonomialLookup::Id>(i));
  auto queue = make_term_queue(ring, QueueConfig{});
  return classic_reduce(ring, f, basis, *lookup, *queue, opt);
}

}  // namespace sigbasis
