#pragma once

// Classic Buchberger algorithm with the relatively prime criterion, the lcm
// (chain) criterion with its anti-circularity rule and a cache of recent
// eliminators, and Bayer's graph criterion. A triangle of bits records which
// pairs have been eliminated or reduced.
//
// Pairs are created against every earlier basis element. Elements whose lead
// monomial becomes divisible by a newer lead are retired from the reducer
// lookup but remain available as criterion witnesses.

#include <numeric>
#include <vector>

#include "sigbasis/classic_reduce.hpp"
#include "sigbasis/detail/bit_triangle.hpp"
#include "sigbasis/pair_queue.hpp"
#include "sigbasis/reduced_basis.hpp"

namespace sigbasis {

struct BuchbergerConfig {
  QueueConfig reducer;
  LookupKind lookup = LookupKind::DivKdTree;
  PairQueueKind spair_queue = PairQueueKind::TriangleTourTree;
  bool relprime = true;
  bool lcm = true;
  bool lcm_cache = true;
  bool graph = true;
};

struct BuchbergerStats {
  std::uint64_t spairs = 0;
  std::uint64_t rel_prime = 0;
  std::uint64_t lcm_cache_hits = 0;
  std::uint64_t lcm_simple_hits = 0;
  std::uint64_t lcm_graph_hits = 0;
  std::uint64_t reductions = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t basis_size = 0;  // elements ever added, inputs included
  DivmaskStats divmask;

  /// Every constructed pair is eliminated or reduced exactly once.
  bool accounting_holds() const {
    return rel_prime + lcm_cache_hits + lcm_simple_hits + lcm_graph_hits + reductions == spairs;
  }
};

struct BuchbergerResult {
  std::vector<Polynomial> gb;  // reduced
  BuchbergerStats stats;
  std::vector<PairIndex> reduced_pairs;  // pairs that survived all criteria
};

class Buchberger {
 public:
  using Index = std::uint32_t;

  Buchberger(const Ring& ring, BuchbergerConfig cfg = {})
      : ring_(ring),
        cfg_(cfg),
        reducers_(make_lookup(cfg.lookup, ring.num_vars())),
        witnesses_(make_lookup(cfg.lookup, ring.num_vars())),
        queue_(make_term_queue(ring, cfg.reducer)),
        pairs_(make_pair_queue(cfg.spair_queue, PairTraits{this})) {
    cfg_.reducer.validate();
  }

  BuchbergerResult run(const std::vector<Polynomial>& input) {
    for (const auto& f : input)
      if (!f.is_zero()) add_element(poly_monic(ring_, f));
    while (auto p = pairs_->pop_min()) process(*p);
    BuchbergerResult res;
    std::vector<Polynomial> live;
    for (Index k = 0; k < basis_.size(); ++k)
      if (live_[k]) live.push_back(basis_[k]);
    res.gb = reduce_basis(ring_, live, cfg_.reducer, cfg_.lookup);
    stats_.divmask = reducers_->divmask_stats();
    stats_.divmask += witnesses_->divmask_stats();
    res.stats = stats_;
    res.reduced_pairs = reduced_pairs_;
    return res;
  }

  // Criteria, public for testing. Indices refer to basis elements.

  bool relprime_check(Index a, Index b) const { return mono_relatively_prime(lead(a), lead(b)); }

  /// Chain criterion with the anti-circularity rule: c eliminates (a, b) if
  /// hd c | lcm(a, b) and each of (a, c), (b, c) either has a strictly
  /// smaller lcm or is already decided.
  bool lcm_criterion(Index a, Index b, Index c) const {
    if (c == a || c == b) return false;
    const Monomial m = mono_lcm(lead(a), lead(b));
    if (!mono_divides(lead(c), m)) return false;
    if (mono_lcm(lead(a), lead(c)) == m && !tri_.test(a, c)) return false;
    if (mono_lcm(lead(b), lead(c)) == m && !tri_.test(b, c)) return false;
    return true;
  }

  /// Bayer's criterion: a and b connected in the graph on the elements whose
  /// lead divides m = lcm(a, b), with an edge (u, v) when lcm(u, v) != m or
  /// (u, v) is decided.
  bool graph_criterion(Index a, Index b) {
    const Monomial m = mono_lcm(lead(a), lead(b));
    std::vector<MonomialLookup::Id> verts = witnesses_->find_all_divisors(m);
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t u = 0; u < verts.size(); ++u)
      for (std::size_t v = u + 1; v < verts.size(); ++v) {
        if (find(u) == find(v)) continue;
        if (mono_lcm(lead(verts[u]), lead(verts[v])) != m || tri_.test(verts[u], verts[v]))
          parent[find(u)] = find(v);
      }
    std::size_t ia = verts.size(), ib = verts.size();
    for (std::size_t k = 0; k < verts.size(); ++k) {
      if (verts[k] == a) ia = k;
      if (verts[k] == b) ib = k;
    }
    return ia < verts.size() && ib < verts.size() && find(ia) == find(ib);
  }

  /// Adds an element to the basis without reducing it and queues its pairs.
  Index add_element(Polynomial g) {
    const auto j = static_cast<Index>(basis_.size());
    const Monomial& hd = g.lead_mono();
    for (Index k = 0; k < j; ++k)
      if (live_[k] && mono_divides(hd, lead(k))) {
        live_[k] = false;
        reducers_->retire(k);
      }
    const bool minimal = !reducers_->find_divisor(hd).has_value();
    basis_.push_back(std::move(g));
    live_.push_back(minimal);
    cache_.push_back(kNone);
    tri_.grow(basis_.size());
    if (minimal) reducers_->insert(lead(j), j);
    witnesses_->insert(lead(j), j);
    reducers_->maybe_rebuild();
    witnesses_->maybe_rebuild();
    ++stats_.basis_size;
    make_pairs(j);
    return j;
  }

  const std::vector<Polynomial>& basis() const { return basis_; }
  const BuchbergerStats& stats() const { return stats_; }
  bool decided(Index a, Index b) const { return tri_.test(a, b); }

 private:
  static constexpr Index kNone = UINT32_MAX;

  struct PairTraits {
    using Key = Monomial;
    const Buchberger* self;
    std::strong_ordering compare(const Key& a, const Key& b) const {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return self->ring_.compare(a, b);
    }
    Key key(std::uint32_t i, std::uint32_t j) const { return mono_lcm(self->lead(i), self->lead(j)); }
  };

  const Monomial& lead(Index k) const { return basis_[k].lead_mono(); }

  void make_pairs(Index j) {
    std::vector<std::pair<std::uint32_t, Monomial>> survivors;
    for (Index i = 0; i < j; ++i) {
      ++stats_.spairs;
      if (cfg_.relprime && relprime_check(i, j)) {
        ++stats_.rel_prime;
        tri_.set(i, j);
        continue;
      }
      if (cfg_.lcm && lcm_sweep(i, j)) continue;
      survivors.emplace_back(i, mono_lcm(lead(i), lead(j)));
    }
    pairs_->add_column(j, std::move(survivors));
  }

  // Tries the cached eliminators of a and b, then every witness. Counts and
  // records a success.
  bool lcm_sweep(Index a, Index b) {
    if (cfg_.lcm_cache) {
      for (Index c : {cache_[a], cache_[b]})
        if (c != kNone && lcm_criterion(a, b, c)) {
          ++stats_.lcm_cache_hits;
          eliminate_by_lcm(a, b, c);
          return true;
        }
    }
    Index found = kNone;
    witnesses_->visit_divisors(mono_lcm(lead(a), lead(b)), [&](MonomialLookup::Id c, const Monomial&) {
      if (!lcm_criterion(a, b, c)) return false;
      found = c;
      return true;
    });
    if (found == kNone) return false;
    ++stats_.lcm_simple_hits;
    eliminate_by_lcm(a, b, found);
    return true;
  }

  void eliminate_by_lcm(Index a, Index b, Index c) {
    tri_.set(a, b);
    cache_[a] = cache_[b] = c;
  }

  void process(PairIndex p) {
    if (cfg_.lcm && lcm_sweep(p.i, p.j)) return;
    if (cfg_.graph && graph_criterion(p.i, p.j)) {
      ++stats_.lcm_graph_hits;
      tri_.set(p.i, p.j);
      return;
    }
    ++stats_.reductions;
    tri_.set(p.i, p.j);
    reduced_pairs_.push_back(p);
    const Polynomial s = s_polynomial(ring_, basis_[p.i], basis_[p.j]);
    auto r = classic_reduce(ring_, s, basis_, *reducers_, *queue_, {.monic = true});
    if (r.remainder.is_zero()) {
      ++stats_.zero_reductions;
      return;
    }
    add_element(std::move(r.remainder));
  }

  const Ring& ring_;
  BuchbergerConfig cfg_;
  std::vector<Polynomial> basis_;
  std::vector<bool> live_;
  std::vector<Index> cache_;
  detail::BitTriangle tri_;
  std::unique_ptr<MonomialLookup> reducers_;
  std::unique_ptr<MonomialLookup> witnesses_;
  std::unique_ptr<TermQueue> queue_;
  std::unique_ptr<PairQueue<PairTraits>> pairs_;
  BuchbergerStats stats_;
  std::vector<PairIndex> reduced_pairs_;
};

inline BuchbergerResult buchberger_run(const Ring& ring, const std::vector<Polynomial>& input,
                                       const BuchbergerConfig& cfg = {}) {
  return Buchberger(ring, cfg).run(input);
}

}  // namespace sigbasis
