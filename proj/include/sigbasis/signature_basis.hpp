#pragma once

// Signature Groebner basis computation over the module order induced by the
// input generators. Produces the signature basis, the minimal generators of
// the initial syzygy module and the reduced Groebner basis.
//
// S-pair elimination, in the order applied:
//   at creation   non-regular, base divisors (high and low ratio),
//                 signature criterion, optionally the early singular check
//   at pop time   duplicate signature, signature criterion, Koszul,
//                 relatively prime (any pair of the signature group),
//                 singular criterion
// Pairs that survive are regular reduced starting from the element of
// minimal lead term among the multiples of basis elements in that signature.

#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "sigbasis/detail/bit_triangle.hpp"
#include "sigbasis/monomial_lookup.hpp"
#include "sigbasis/pair_queue.hpp"
#include "sigbasis/reduced_basis.hpp"
#include "sigbasis/signature.hpp"
#include "sigbasis/term_queue.hpp"

namespace sigbasis {

/// Which lead-term divisor of a new element serves as its high-ratio base
/// divisor.
enum class HighDivisorChoice { MaxRatio, MinRatio };

inline std::string to_string(HighDivisorChoice c) { return c == HighDivisorChoice::MaxRatio ? "max-ratio" : "min-ratio"; }

struct SigBasisConfig {
  QueueConfig reducer;
  LookupKind lookup = LookupKind::DivKdTree;
  PairQueueKind spair_queue = PairQueueKind::TriangleTourTree;
  ModuleOrderKind module_order = ModuleOrderKind::Schreyer;
  SchreyerTiebreak tiebreak = SchreyerTiebreak::LowGreater;
  /// 0 disables base divisors; otherwise one high-ratio divisor plus
  /// base_divisors - 1 low-ratio divisors of largest ratio.
  unsigned base_divisors = 2;
  HighDivisorChoice high_divisor = HighDivisorChoice::MaxRatio;
  bool early_singular = false;
  bool signature_criterion = true;
  bool koszul = true;
  bool relprime = true;
  /// When off, singular signatures are reduced and a remainder that is
  /// singular top reducible is discarded afterwards.
  bool singular = true;
  std::size_t bit_triangle_cap = std::size_t{1} << 30;  // bytes
  /// Picks regular reducers uniformly at random instead of the first found.
  std::optional<std::uint64_t> reducer_shuffle_seed;
  bool record_reductions = false;
  /// Audits the S-pair triangle after every pop.
  bool audit_pairs = false;
};

struct SigBasisStats {
  std::uint64_t spairs = 0;
  std::uint64_t non_regular = 0;
  std::uint64_t base_divisor = 0;
  std::uint64_t signature_early = 0;
  std::uint64_t singular_early = 0;
  std::uint64_t queued = 0;
  std::uint64_t duplicate = 0;
  std::uint64_t signature_late = 0;
  std::uint64_t koszul = 0;
  std::uint64_t rel_prime = 0;
  std::uint64_t singular_late = 0;
  std::uint64_t need_reduction = 0;
  std::uint64_t to_sb = 0;
  std::uint64_t to_syzygy = 0;
  std::uint64_t singular_discarded = 0;  // only with the singular criterion off

  std::uint64_t inputs = 0;
  std::uint64_t basis_size = 0;
  std::uint64_t basis_monomials = 0;
  std::uint64_t syzygies = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t ratio_rebuilds = 0;
  bool triangle_dropped = false;
  bool monotonic = true;
  std::uint64_t audit_failures = 0;
  std::size_t max_column_bytes = 0;
  DivmaskStats divmask;

  bool identities_hold() const {
    return queued == spairs - (non_regular + base_divisor + signature_early + singular_early) &&
           need_reduction == queued - (duplicate + signature_late + koszul + rel_prime + singular_late) &&
           need_reduction == to_sb + to_syzygy + singular_discarded && basis_size == inputs + to_sb;
  }
};

struct SigBasisEntry {
  Signature sig;
  Polynomial poly;  // monic
  Ratio ratio;
  std::int64_t ratio_id = 0;

  const Monomial& lead() const { return poly.lead_mono(); }
};

struct ReductionRecord {
  Signature sig;
  Polynomial remainder;
};

struct SigBasisResult {
  std::vector<SigBasisEntry> entries;
  std::vector<Signature> syzygies;  // ascending in the module order
  std::vector<Polynomial> gb;       // reduced
  SigBasisStats stats;
  std::vector<ReductionRecord> reductions;
};

// Pair-level signature arithmetic on entries with assigned ratio ids.

/// Signature of the S-pair of a and b, or nullopt when it is singular.
inline std::optional<Signature> spair_signature(const ModuleOrder& order, const SigBasisEntry& a,
                                                const SigBasisEntry& b) {
  if (a.ratio_id == b.ratio_id) return std::nullopt;
  const SigBasisEntry& win = a.ratio_id > b.ratio_id ? a : b;
  const SigBasisEntry& other = a.ratio_id > b.ratio_id ? b : a;
  return order.times(mono_div(other.lead(), mono_gcd(other.lead(), win.lead())), win.sig);
}

/// max(hd b * sig a, hd a * sig b), chosen by ratio.
inline Signature koszul_signature(const ModuleOrder& order, const SigBasisEntry& a, const SigBasisEntry& b) {
  return a.ratio_id > b.ratio_id ? order.times(b.lead(), a.sig) : order.times(a.lead(), b.sig);
}

/// High-ratio base divisor test: a with hd a | hd b eliminates (b, g) when g
/// has the largest ratio of the three and (a, g) is known to be syzygy.
inline bool high_base_divisor_eliminates(const SigBasisEntry& a, const SigBasisEntry& b, const SigBasisEntry& g,
                                         bool bit_ag) {
  if (!mono_divides(a.lead(), b.lead())) return false;
  if (!(g.ratio_id > a.ratio_id && g.ratio_id > b.ratio_id)) return false;
  return bit_ag;
}

/// Exponent bound v of the low-ratio base divisor theorem; kUnbounded marks
/// an infinite entry.
struct LowRatioBound {
  static constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> v;

  bool admits(const Monomial& m) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (m[i] > v[i]) return false;
    return true;
  }
  bool vacuous() const {
    for (auto x : v)
      if (x != kUnbounded) return false;
    return true;
  }
};

/// v from the exponent vectors a = hd a, p = hd a * sig b / sig a, b = hd b.
inline LowRatioBound low_ratio_bound(std::span<const Exponent> a, std::span<const Exponent> p,
                                     std::span<const Exponent> b) {
  LowRatioBound bound;
  bound.v.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    bound.v[i] = b[i] <= p[i] ? LowRatioBound::kUnbounded : std::max<std::uint64_t>(p[i], a[i]);
  return bound;
}

/// For sig a | sig b: with x^p = hd a * sig b / sig a, v_i is unbounded when
/// hd(b)_i <= p_i and max(p_i, hd(a)_i) otherwise.
inline LowRatioBound low_base_divisor_bound(const SigBasisEntry& a, const SigBasisEntry& b) {
  if (a.sig.comp != b.sig.comp || !mono_divides(a.sig.mono, b.sig.mono))
    throw std::invalid_argument("low-ratio base divisor must divide the signature");
  const Monomial p = mono_mul(a.lead(), mono_div(b.sig.mono, a.sig.mono));
  return low_ratio_bound(a.lead().exponents(), p.exponents(), b.lead().exponents());
}

class SignatureBasis {
 public:
  using Index = std::uint32_t;

  SignatureBasis(const Ring& ring, const std::vector<Polynomial>& input, SigBasisConfig cfg = {})
      : ring_(ring),
        cfg_(cfg),
        inputs_(monic_inputs(ring, input)),
        order_(ring, leads_of(inputs_), cfg.module_order, cfg.tiebreak),
        ratio_ids_(order_),
        leads_(make_lookup(cfg.lookup, ring.num_vars())),
        syz_(inputs_.size(), ring.num_vars(), cfg.lookup),
        koszul_(order_),
        queue_(make_term_queue(ring, cfg.reducer)),
        pairs_(make_pair_queue(cfg.spair_queue, PairTraits{this})) {
    cfg_.reducer.validate();
    for (std::size_t k = 0; k < inputs_.size(); ++k) sigs_.push_back(make_lookup(cfg.lookup, ring.num_vars()));
    if (cfg_.reducer_shuffle_seed) rng_.seed(*cfg_.reducer_shuffle_seed);
  }

  /// Adds the inputs as basis elements e_1..e_m and queues their pairs.
  /// run() calls this unless it has already happened.
  void seed_inputs() {
    if (seeded_) return;
    seeded_ = true;
    const auto one = Monomial(ring_.num_vars());
    for (std::uint32_t k = 0; k < inputs_.size(); ++k) {
      add_entry(order_.make(one, k), inputs_[k]);
      ++stats_.inputs;
    }
  }

  SigBasisResult run() {
    seed_inputs();
    while (!pairs_->empty()) {
      process_group();
      if (cfg_.audit_pairs) audit_pairs();
    }
    return finish();
  }

  const ModuleOrder& order() const { return order_; }
  const std::vector<SigBasisEntry>& entries() const { return entries_; }
  const SigBasisStats& stats() const { return stats_; }
  bool bit(Index a, Index b) const { return tri_enabled_ && tri_.test(a, b); }

  /// Basis element whose multiple in signature T has minimal lead term:
  /// maximal ratio among elements whose signature divides T, lowest index on
  /// ties.
  std::optional<Index> champion(const Signature& t) {
    std::optional<Index> best;
    sigs_[t.comp]->visit_divisors(t.mono, [&](MonomialLookup::Id id, const Monomial&) {
      if (!best || entries_[id].ratio_id > entries_[*best].ratio_id ||
          (entries_[id].ratio_id == entries_[*best].ratio_id && id < *best))
        best = id;
      return false;
    });
    return best;
  }

  /// Whether t * entries[k] is regular top reducible.
  bool regular_top_reducible(Index k, const Monomial& t) {
    const Monomial m = mono_mul(t, entries_[k].lead());
    const std::int64_t rid = entries_[k].ratio_id;
    return leads_->visit_divisors(
        m, [&](MonomialLookup::Id id, const Monomial&) { return entries_[id].ratio_id < rid; });
  }

  /// Fully regular reduces t * entries[k] in signature t * sig; the result
  /// is monic.
  Polynomial regular_reduce(Index k, const Monomial& t) {
    const Signature sig = order_.times(t, entries_[k].sig);
    const PrimeField& f = ring_.field();
    std::vector<Term> rem;
    std::vector<MonomialLookup::Id> candidates;
    queue_->clear();
    queue_->push_product({1, t}, entries_[k].poly);
    while (auto term = queue_->pop_max()) {
      const Ratio r = order_.ratio(sig, term->mono);
      std::optional<MonomialLookup::Id> pick;
      if (cfg_.reducer_shuffle_seed) {
        candidates.clear();
        leads_->visit_divisors(term->mono, [&](MonomialLookup::Id id, const Monomial&) {
          if (order_.compare(entries_[id].ratio, r) < 0) candidates.push_back(id);
          return false;
        });
        if (!candidates.empty())
          pick = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng_)];
      } else {
        leads_->visit_divisors(term->mono, [&](MonomialLookup::Id id, const Monomial&) {
          if (order_.compare(entries_[id].ratio, r) >= 0) return false;
          pick = id;
          return true;
        });
      }
      if (!pick) {
        rem.push_back(std::move(*term));
        continue;
      }
      const SigBasisEntry& b = entries_[*pick];
      queue_->push_product({f.neg(term->coeff), mono_div(term->mono, b.lead())}, b.poly, 1);
      ++stats_.reduction_steps;
    }
    return poly_monic(ring_, Polynomial::from_sorted(std::move(rem)));
  }

 private:
  struct PairTraits {
    using Key = Signature;
    const SignatureBasis* self;
    std::strong_ordering compare(const Key& a, const Key& b) const { return self->order_.compare(a, b); }
    Key key(std::uint32_t i, std::uint32_t j) const {
      return *spair_signature(self->order_, self->entries_[i], self->entries_[j]);
    }
  };

  static std::vector<Polynomial> monic_inputs(const Ring& ring, const std::vector<Polynomial>& input) {
    std::vector<Polynomial> out;
    for (const auto& f : input)
      if (!f.is_zero()) out.push_back(poly_monic(ring, f));
    if (out.empty()) throw std::invalid_argument("input must contain a nonzero polynomial");
    return out;
  }

  static std::vector<Monomial> leads_of(const std::vector<Polynomial>& polys) {
    std::vector<Monomial> out;
    for (const auto& f : polys) out.push_back(f.lead_mono());
    return out;
  }

  void set_bit(Index a, Index b) {
    if (tri_enabled_) tri_.set(a, b);
  }

  Index add_entry(Signature sig, Polynomial poly) {
    const auto k = static_cast<Index>(entries_.size());
    SigBasisEntry e;
    e.ratio = order_.ratio(sig, poly.lead_mono());
    bool renumbered = false;
    e.ratio_id = ratio_ids_.assign(e.ratio, &renumbered);
    e.sig = std::move(sig);
    e.poly = std::move(poly);
    if (renumbered) {
      ++stats_.ratio_rebuilds;
      for (auto& old : entries_) old.ratio_id = ratio_ids_.id_of(old.ratio);
    }
    entries_.push_back(std::move(e));
    const SigBasisEntry& ref = entries_.back();
    leads_->insert(ref.lead(), k);
    leads_->maybe_rebuild();
    sigs_[ref.sig.comp]->insert(ref.sig.mono, k);
    sigs_[ref.sig.comp]->maybe_rebuild();
    if (tri_enabled_) {
      if (detail::BitTriangle::bytes_for(entries_.size()) > cfg_.bit_triangle_cap) {
        tri_enabled_ = false;
        tri_.clear();
        stats_.triangle_dropped = true;
      } else {
        tri_.grow(entries_.size());
      }
    }
    make_new_spairs(k);
    return k;
  }

  void make_new_spairs(Index b) {
    const SigBasisEntry& beta = entries_[b];
    std::optional<Index> high;
    std::vector<std::pair<Index, LowRatioBound>> lows;
    if (tri_enabled_ && cfg_.base_divisors >= 1) {
      const bool want_max = cfg_.high_divisor == HighDivisorChoice::MaxRatio;
      for (auto id : leads_->find_all_divisors(beta.lead())) {
        if (id == b) continue;
        if (!high || (entries_[id].ratio_id != entries_[*high].ratio_id
                          ? (entries_[id].ratio_id > entries_[*high].ratio_id) == want_max
                          : id < *high))
          high = id;
      }
    }
    if (tri_enabled_ && cfg_.base_divisors >= 2) {
      std::vector<Index> cands;
      for (auto id : sigs_[beta.sig.comp]->find_all_divisors(beta.sig.mono))
        if (id != b) cands.push_back(id);
      const std::size_t keep = std::min<std::size_t>(cands.size(), cfg_.base_divisors - 1);
      std::partial_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(keep), cands.end(),
                        [&](Index x, Index y) { return better_divisor(x, y); });
      for (std::size_t q = 0; q < keep; ++q) lows.emplace_back(cands[q], low_base_divisor_bound(entries_[cands[q]], beta));
    }

    std::vector<std::pair<std::uint32_t, Signature>> survivors;
    for (Index g = 0; g < b; ++g) {
      const SigBasisEntry& gamma = entries_[g];
      ++stats_.spairs;
      if (gamma.ratio_id == beta.ratio_id) {
        ++stats_.non_regular;
        continue;
      }
      if (tri_enabled_) {
        bool eliminated = high && *high != g &&
                          high_base_divisor_eliminates(entries_[*high], beta, gamma, tri_.test(*high, g));
        for (const auto& [a, bound] : lows) {
          if (eliminated) break;
          eliminated = a != g && gamma.ratio_id < entries_[a].ratio_id && gamma.ratio_id < beta.ratio_id &&
                       tri_.test(a, g) && bound.admits(gamma.lead());
        }
        if (eliminated) {
          ++stats_.base_divisor;
          tri_.set(b, g);
          continue;
        }
      }
      Signature t = *spair_signature(order_, beta, gamma);
      if (cfg_.signature_criterion && syz_.has_divisor(t)) {
        ++stats_.signature_early;
        set_bit(b, g);
        continue;
      }
      if (cfg_.early_singular && early_singular(beta.ratio_id > gamma.ratio_id ? b : g, t)) {
        ++stats_.singular_early;
        continue;
      }
      ++stats_.queued;
      survivors.emplace_back(g, std::move(t));
    }
    pairs_->add_column(b, std::move(survivors));
  }

  // Larger ratio wins, then lower index.
  bool better_divisor(Index x, Index y) const {
    if (entries_[x].ratio_id != entries_[y].ratio_id) return entries_[x].ratio_id > entries_[y].ratio_id;
    return x < y;
  }

  // Some element in signature t has a strictly smaller lead term than the
  // multiple of the pair's signature side w.
  bool early_singular(Index w, const Signature& t) {
    const std::int64_t rid = entries_[w].ratio_id;
    return sigs_[t.comp]->visit_divisors(
        t.mono, [&](MonomialLookup::Id id, const Monomial&) { return entries_[id].ratio_id > rid; });
  }

  void process_group() {
    const Signature t = *pairs_->peek_min_key();
    std::vector<PairIndex> group;
    while (const Signature* k = pairs_->peek_min_key()) {
      if (order_.compare(*k, t) != 0) break;
      group.push_back(*pairs_->pop_min());
    }
    if (last_ && order_.compare(*last_, t) >= 0) stats_.monotonic = false;
    last_ = t;
    stats_.duplicate += group.size() - 1;

    auto mark_syzygy = [&] {
      for (const auto& p : group) set_bit(p.i, p.j);
    };
    if (cfg_.signature_criterion && syz_.has_divisor(t)) {
      ++stats_.signature_late;
      mark_syzygy();
      return;
    }
    if (cfg_.koszul && koszul_.advance_to(t)) {
      ++stats_.koszul;
      mark_syzygy();
      syz_.insert(t);
      return;
    }
    if (cfg_.relprime) {
      for (const auto& p : group)
        if (mono_relatively_prime(entries_[p.i].lead(), entries_[p.j].lead())) {
          ++stats_.rel_prime;
          mark_syzygy();
          syz_.insert(t);
          return;
        }
    }
    if (cfg_.koszul)
      for (const auto& p : group) koszul_.push(koszul_signature(order_, entries_[p.i], entries_[p.j]));

    const Index c = *champion(t);
    const Monomial mult = mono_div(t.mono, entries_[c].sig.mono);
    if (cfg_.singular && !regular_top_reducible(c, mult)) {
      ++stats_.singular_late;
      return;
    }
    ++stats_.need_reduction;
    Polynomial r = regular_reduce(c, mult);
    if (cfg_.record_reductions) records_.push_back({t, r});
    if (r.is_zero()) {
      ++stats_.to_syzygy;
      mark_syzygy();
      syz_.insert(t);
      return;
    }
    if (!cfg_.singular && singular_top_reducible(t, r.lead_mono())) {
      ++stats_.singular_discarded;
      return;
    }
    ++stats_.to_sb;
    add_entry(t, std::move(r));
  }

  // Some basis multiple in signature t has lead term m.
  bool singular_top_reducible(const Signature& t, const Monomial& m) {
    return sigs_[t.comp]->visit_divisors(t.mono, [&](MonomialLookup::Id id, const Monomial& s) {
      return mono_mul(mono_div(t.mono, s), entries_[id].lead()) == m;
    });
  }

  void audit_pairs() {
    const auto visit = [&](const auto* tri) {
      if (!tri) return false;
      if (!tri->audit()) ++stats_.audit_failures;
      stats_.max_column_bytes = std::max(stats_.max_column_bytes, tri->memory().column_bytes);
      return true;
    };
    if (!visit(dynamic_cast<const PairTriangle<PairTraits, TournamentTree>*>(pairs_.get())))
      visit(dynamic_cast<const PairTriangle<PairTraits, Heap>*>(pairs_.get()));
  }

  SigBasisResult finish() {
    SigBasisResult res;
    std::vector<Polynomial> polys;
    for (const auto& e : entries_) polys.push_back(e.poly);
    res.gb = reduce_basis(ring_, polys, cfg_.reducer, cfg_.lookup);
    res.syzygies = syz_.members();
    std::sort(res.syzygies.begin(), res.syzygies.end(),
              [&](const Signature& a, const Signature& b) { return order_.compare(a, b) < 0; });
    stats_.basis_size = entries_.size();
    stats_.basis_monomials = total_terms(polys);
    stats_.syzygies = res.syzygies.size();
    stats_.divmask = leads_->divmask_stats();
    for (const auto& s : sigs_) stats_.divmask += s->divmask_stats();
    stats_.divmask += syz_.divmask_stats();
    res.entries = entries_;
    res.stats = stats_;
    res.reductions = std::move(records_);
    return res;
  }

  const Ring& ring_;
  SigBasisConfig cfg_;
  std::vector<Polynomial> inputs_;
  ModuleOrder order_;
  RatioIds ratio_ids_;
  std::vector<SigBasisEntry> entries_;
  std::unique_ptr<MonomialLookup> leads_;
  std::vector<std::unique_ptr<MonomialLookup>> sigs_;
  SyzygySet syz_;
  KoszulQueue koszul_;
  detail::BitTriangle tri_;
  bool tri_enabled_ = true;
  std::unique_ptr<TermQueue> queue_;
  std::unique_ptr<PairQueue<PairTraits>> pairs_;
  bool seeded_ = false;
  std::optional<Signature> last_;
  std::mt19937_64 rng_;
  SigBasisStats stats_;
  std::vector<ReductionRecord> records_;
};

inline SigBasisResult sb_run(const Ring& ring, const std::vector<Polynomial>& input, const SigBasisConfig& cfg = {}) {
  return SignatureBasis(ring, input, cfg).run();
}

}  // namespace sigbasis
