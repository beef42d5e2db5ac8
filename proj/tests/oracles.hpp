#pragma once

// Independent reference implementations used by the unit and acceptance
// tests.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "sigbasis/term_queue.hpp"
#include "test_support.hpp"

namespace sigbasis::testing {

/// Sort-and-fold model of a term queue: an ordered map from monomial to
/// accumulated coefficient.
class TermQueueOracle {
 public:
  explicit TermQueueOracle(const Ring& ring)
      : ring_(ring), terms_([&ring](const Monomial& a, const Monomial& b) { return ring.less(a, b); }) {}

  void push_product(const Term& mult, const Polynomial& g, std::size_t from = 0) {
    for (std::size_t i = from; i < g.size(); ++i) {
      auto& c = terms_[mono_mul(mult.mono, g[i].mono)];
      c = ring_.field().add(c, ring_.field().mul(mult.coeff, g[i].coeff));
    }
  }

  std::optional<Term> pop_max() {
    while (!terms_.empty()) {
      auto it = std::prev(terms_.end());
      Term t{it->second, it->first};
      terms_.erase(it);
      if (t.coeff != 0) return t;
    }
    return std::nullopt;
  }

 private:
  using Less = std::function<bool(const Monomial&, const Monomial&)>;
  const Ring& ring_;
  std::map<Monomial, Coeff, Less> terms_;
};

/// Runs one random push/pop script against a queue and the oracle. Returns
/// false at the first divergence.
inline bool run_queue_script(const Ring& ring, TermQueue& queue, std::mt19937_64& rng, std::size_t ops) {
  TermQueueOracle oracle(ring);
  std::deque<Polynomial> keep;  // compressed queues reference pushed polynomials
  std::uniform_int_distribution<Coeff> coeff(1, ring.characteristic() - 1);
  queue.clear();
  for (std::size_t step = 0; step < ops; ++step) {
    if (rng() % 3 != 0) {
      keep.push_back(random_polynomial(ring, rng, 1 + rng() % 6, 3));
      if (keep.back().is_zero()) continue;
      const Term mult{coeff(rng), random_monomial(rng, ring.num_vars(), 2)};
      const std::size_t from = rng() % 4 == 0 ? rng() % keep.back().size() : 0;
      queue.push_product(mult, keep.back(), from);
      oracle.push_product(mult, keep.back(), from);
    } else {
      if (queue.pop_max() != oracle.pop_max()) return false;
    }
  }
  while (true) {
    auto a = queue.pop_max();
    if (a != oracle.pop_max()) return false;
    if (!a) break;
  }
  return queue.empty();
}

}  // namespace sigbasis::testing
