#pragma once

// Module terms (signatures), module orders, sig-lead ratios with their
// order-embedding integer ids, the set of known syzygy signatures and the
// lazy Koszul signature queue.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "sigbasis/containers/heap.hpp"
#include "sigbasis/io.hpp"
#include "sigbasis/monomial_lookup.hpp"
#include "sigbasis/polynomial.hpp"

namespace sigbasis {

/// mono * e_comp. weighted caches mono * hd(g_comp) for the Schreyer order.
struct Signature {
  Monomial mono;
  std::uint32_t comp = 0;
  Monomial weighted;

  friend bool operator==(const Signature& a, const Signature& b) { return a.comp == b.comp && a.mono == b.mono; }
};

enum class ModuleOrderKind { Schreyer, PositionOverTerm };
enum class SchreyerTiebreak { LowGreater, HighGreater };

inline std::string to_string(ModuleOrderKind k) { return k == ModuleOrderKind::Schreyer ? "schreyer" : "potop"; }
inline std::string to_string(SchreyerTiebreak t) { return t == SchreyerTiebreak::LowGreater ? "low-gt" : "high-gt"; }

/// Formal quotient sig / lead: a signed exponent vector plus the component.
struct Ratio {
  boost::container::small_vector<std::int64_t, 16> exps;
  std::int64_t degree = 0;
  std::uint32_t comp = 0;

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.comp == b.comp && a.exps == b.exps; }
};

/// The module order together with the input lead monomials it is induced by.
class ModuleOrder {
 public:
  ModuleOrder(const Ring& ring, std::vector<Monomial> input_leads, ModuleOrderKind kind = ModuleOrderKind::Schreyer,
              SchreyerTiebreak tiebreak = SchreyerTiebreak::LowGreater)
      : ring_(&ring), leads_(std::move(input_leads)), kind_(kind), tiebreak_(tiebreak) {}

  const Ring& ring() const { return *ring_; }
  ModuleOrderKind kind() const { return kind_; }
  SchreyerTiebreak tiebreak() const { return tiebreak_; }
  std::size_t rank() const { return leads_.size(); }
  const Monomial& input_lead(std::uint32_t comp) const { return leads_[comp]; }

  Signature make(Monomial mono, std::uint32_t comp) const {
    if (comp >= leads_.size()) throw std::out_of_range("signature component out of range");
    Monomial w = mono_mul(mono, leads_[comp]);
    return {std::move(mono), comp, std::move(w)};
  }

  /// t * sig.
  Signature times(const Monomial& t, const Signature& s) const {
    return {mono_mul(t, s.mono), s.comp, mono_mul(t, s.weighted)};
  }

  std::strong_ordering compare(const Signature& a, const Signature& b) const {
    if (kind_ == ModuleOrderKind::PositionOverTerm) {
      if (a.comp != b.comp) return a.comp <=> b.comp;
      return ring_->compare(a.mono, b.mono);
    }
    if (auto c = ring_->compare(a.weighted, b.weighted); c != 0) return c;
    return tie(a.comp, b.comp);
  }

  Ratio ratio(const Signature& s, const Monomial& lead) const {
    Ratio r;
    r.comp = s.comp;
    r.exps.resize(lead.num_vars());
    for (std::size_t i = 0; i < lead.num_vars(); ++i)
      r.exps[i] = static_cast<std::int64_t>(s.weighted[i]) - static_cast<std::int64_t>(lead[i]);
    r.degree = static_cast<std::int64_t>(s.weighted.degree()) - static_cast<std::int64_t>(lead.degree());
    return r;
  }

  /// A/a versus B/b, which orders bA versus aB.
  std::strong_ordering compare(const Ratio& a, const Ratio& b) const {
    if (kind_ == ModuleOrderKind::PositionOverTerm && a.comp != b.comp) return a.comp <=> b.comp;
    const auto c = ring_->order().compare<std::int64_t>({a.exps.data(), a.exps.size()}, {b.exps.data(), b.exps.size()},
                                                         a.degree, b.degree);
    if (c != 0 || kind_ == ModuleOrderKind::PositionOverTerm) return c;
    return tie(a.comp, b.comp);
  }

 private:
  std::strong_ordering tie(std::uint32_t a, std::uint32_t b) const {
    if (a == b) return std::strong_ordering::equal;
    return tiebreak_ == SchreyerTiebreak::LowGreater ? b <=> a : a <=> b;
  }

  const Ring* ring_;
  std::vector<Monomial> leads_;
  ModuleOrderKind kind_;
  SchreyerTiebreak tiebreak_;
};

/// Integers embedding the ratio order: equal ratios share an id, new ids go
/// halfway between their neighbours and everything is respaced when no
/// integer gap is left.
class RatioIds {
 public:
  static constexpr std::int64_t kSpacing = std::int64_t{1} << 20;

  explicit RatioIds(const ModuleOrder& order) : order_(&order) {}

  /// Returns the id for r, registering it if new. Sets renumbered when all
  /// previously returned ids changed.
  std::int64_t assign(const Ratio& r, bool* renumbered = nullptr) {
    if (renumbered) *renumbered = false;
    auto it = std::lower_bound(slots_.begin(), slots_.end(), r,
                               [&](const Slot& s, const Ratio& x) { return order_->compare(s.ratio, x) < 0; });
    if (it != slots_.end() && order_->compare(it->ratio, r) == 0) return it->id;
    std::optional<std::int64_t> id;
    if (slots_.empty()) {
      id = 0;
    } else if (it == slots_.begin()) {
      id = it->id - kSpacing;
    } else if (it == slots_.end()) {
      id = std::prev(it)->id + kSpacing;
    } else {
      const std::int64_t lo = std::prev(it)->id, hi = it->id;
      if (hi - lo >= 2) id = lo + (hi - lo) / 2;
    }
    const auto pos = it - slots_.begin();
    slots_.insert(it, Slot{r, id.value_or(0)});
    if (!id) {
      for (std::size_t k = 0; k < slots_.size(); ++k) slots_[k].id = static_cast<std::int64_t>(k) * kSpacing;
      ++rebuilds_;
      if (renumbered) *renumbered = true;
    }
    return slots_[static_cast<std::size_t>(pos)].id;
  }

  /// Current id of a registered ratio.
  std::int64_t id_of(const Ratio& r) const {
    auto it = std::lower_bound(slots_.begin(), slots_.end(), r,
                               [&](const Slot& s, const Ratio& x) { return order_->compare(s.ratio, x) < 0; });
    if (it == slots_.end() || order_->compare(it->ratio, r) != 0) throw std::out_of_range("unregistered ratio");
    return it->id;
  }

  std::size_t size() const { return slots_.size(); }
  std::size_t rebuilds() const { return rebuilds_; }

  bool audit() const {
    for (std::size_t k = 1; k < slots_.size(); ++k)
      if (!(slots_[k - 1].id < slots_[k].id) || order_->compare(slots_[k - 1].ratio, slots_[k].ratio) >= 0)
        return false;
    return true;
  }

 private:
  struct Slot {
    Ratio ratio;
    std::int64_t id;
  };
  const ModuleOrder* order_;
  std::vector<Slot> slots_;
  std::size_t rebuilds_ = 0;
};

/// Minimal known syzygy signatures, one divisor-query structure per
/// component.
class SyzygySet {
 public:
  SyzygySet(std::size_t rank, std::size_t num_vars, LookupKind kind) : per_comp_(rank) {
    for (auto& c : per_comp_) c.lookup = make_lookup(kind, num_vars);
  }

  bool has_divisor(const Signature& s) { return per_comp_[s.comp].lookup->find_divisor(s.mono).has_value(); }

  /// Adds s unless a known signature divides it; drops known multiples of s.
  /// Returns whether s was added.
  bool insert(const Signature& s) {
    auto& c = per_comp_[s.comp];
    if (c.lookup->find_divisor(s.mono)) return false;
    for (auto& m : c.members)
      if (m.live && mono_divides(s.mono, m.sig.mono)) {
        m.live = false;
        c.lookup->retire(m.id);
        --size_;
      }
    const auto id = static_cast<MonomialLookup::Id>(c.members.size());
    c.members.push_back({s, id, true});
    c.lookup->insert(s.mono, id);
    c.lookup->maybe_rebuild();
    ++size_;
    return true;
  }

  std::size_t size() const { return size_; }

  std::vector<Signature> members() const {
    std::vector<Signature> out;
    for (const auto& c : per_comp_)
      for (const auto& m : c.members)
        if (m.live) out.push_back(m.sig);
    return out;
  }

  /// No member divides another.
  bool is_minimal() const {
    const auto all = members();
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b)
        if (a != b && all[a].comp == all[b].comp && mono_divides(all[a].mono, all[b].mono)) return false;
    return true;
  }

  DivmaskStats divmask_stats() const {
    DivmaskStats s;
    for (const auto& c : per_comp_) s += c.lookup->divmask_stats();
    return s;
  }

 private:
  struct Member {
    Signature sig;
    MonomialLookup::Id id;
    bool live;
  };
  struct Component {
    std::unique_ptr<MonomialLookup> lookup;
    std::vector<Member> members;
  };
  std::vector<Component> per_comp_;
  std::size_t size_ = 0;
};

/// Min-queue of Koszul signatures.
class KoszulQueue {
 public:
  explicit KoszulQueue(const ModuleOrder& order) : heap_(Policy{&order}) {}

  void push(Signature s) { heap_.push(std::move(s)); }

  /// Discards every signature below t and reports whether t itself was
  /// queued; copies of t are discarded too.
  bool advance_to(const Signature& t) {
    const ModuleOrder& order = *heap_.policy().order;
    bool hit = false;
    while (!heap_.empty()) {
      const auto c = order.compare(heap_.top(), t);
      if (c > 0) break;
      if (c == 0) hit = true;
      heap_.pop();
    }
    return hit;
  }

  std::size_t size() const { return heap_.size(); }

 private:
  struct Policy {
    using Entry = Signature;
    const ModuleOrder* order;
    std::strong_ordering compare(const Entry& a, const Entry& b) const { return order->compare(b, a); }
    bool dedup() const { return false; }
    void merge(Entry&, Entry&&) const {}
  };
  Heap<Policy> heap_;
};

inline std::string format_signature(const Signature& s) {
  return format_monomial(s.mono) + "*e_" + std::to_string(s.comp + 1);
}

}  // namespace sigbasis
