#pragma once

// Priority queues over the terms of the polynomial being reduced.
//
// A TermQueue logically holds a multiset of terms. push_product adds all terms
// of m*g; pop_max removes the maximal monomial together with every like term
// and returns their sum, skipping monomials whose coefficients cancel.
//
// Three orthogonal options select the implementation:
//   hashed      a hash table in front of the queue folds like terms on push,
//               so each monomial is queued at most once;
//   dedup       equal keys met during queue comparisons are merged;
//   compressed  a product m*g is queued as one entry keyed by its largest
//               un-emitted term and replaced by its successor on pop.
// hashed and dedup are mutually exclusive.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "sigbasis/containers/geobucket.hpp"
#include "sigbasis/containers/heap.hpp"
#include "sigbasis/containers/tournament_tree.hpp"
#include "sigbasis/detail/monomial_table.hpp"
#include "sigbasis/polynomial.hpp"

namespace sigbasis {

enum class QueueBackend { Heap, Geobucket, TourTree };

struct QueueConfig {
  QueueBackend backend = QueueBackend::Geobucket;
  bool hashed = true;
  bool dedup = false;
  bool compressed = false;

  void validate() const {
    if (hashed && dedup) throw std::invalid_argument("hashed and dedup cannot be combined");
  }

  std::string to_string() const {
    std::string s = backend == QueueBackend::Heap        ? "heap"
                    : backend == QueueBackend::Geobucket ? "geobucket"
                                                         : "tourtree";
    if (hashed) s += "+hashed";
    if (dedup) s += "+dedup";
    if (compressed) s += "+compressed";
    return s;
  }

  /// Every legal combination: 3 backends x 6 flag settings.
  static std::vector<QueueConfig> all() {
    std::vector<QueueConfig> out;
    for (auto b : {QueueBackend::Heap, QueueBackend::Geobucket, QueueBackend::TourTree})
      for (int bits = 0; bits < 8; ++bits) {
        QueueConfig c{b, (bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
        if (!(c.hashed && c.dedup)) out.push_back(c);
      }
    return out;
  }
};

class TermQueue {
 public:
  virtual ~TermQueue() = default;

  /// Adds mult * g[from..] to the queue.
  virtual void push_product(const Term& mult, const Polynomial& g, std::size_t from = 0) = 0;

  virtual std::optional<Term> pop_max() = 0;
  /// True when nothing is queued; a non-empty queue may still pop nothing
  /// if all remaining terms cancel.
  virtual bool empty() const = 0;
  virtual void clear() = 0;
};

namespace detail {

struct Stream {
  Monomial mult;
  Coeff mult_coeff = 0;
  const Polynomial* poly = nullptr;
  std::uint32_t next = 0;  // index of the next un-emitted term of *poly

  bool exhausted() const { return next >= poly->size(); }
};

struct PlainPolicy {
  using Entry = Term;
  const Ring* ring = nullptr;
  bool dedup_ = false;

  std::strong_ordering compare(const Entry& a, const Entry& b) const { return ring->compare(a.mono, b.mono); }
  bool dedup() const { return dedup_; }
  void merge(Entry& into, Entry&& from) const { into.coeff = ring->field().add(into.coeff, from.coeff); }
};

struct StreamEntry {
  Monomial key;
  Coeff coeff = 0;
  boost::container::small_vector<Stream, 1> streams;
};

struct StreamPolicy {
  using Entry = StreamEntry;
  const Ring* ring = nullptr;
  bool dedup_ = false;

  std::strong_ordering compare(const Entry& a, const Entry& b) const { return ring->compare(a.key, b.key); }
  bool dedup() const { return dedup_; }
  void merge(Entry& into, Entry&& from) const {
    into.coeff = ring->field().add(into.coeff, from.coeff);
    for (auto& s : from.streams) into.streams.push_back(std::move(s));
  }
};

struct HashedPlainPolicy {
  using Entry = MonomialTable::NodeId;
  const Ring* ring = nullptr;
  const MonomialTable* table = nullptr;

  std::strong_ordering compare(Entry a, Entry b) const {
    return ring->compare(table->node(a).mono, table->node(b).mono);
  }
  bool dedup() const { return false; }
  void merge(Entry&, Entry&&) const {}
};

struct HashedStreamEntry {
  MonomialTable::NodeId node = 0;
  Stream stream;
};

struct HashedStreamPolicy {
  using Entry = HashedStreamEntry;
  const Ring* ring = nullptr;
  const MonomialTable* table = nullptr;

  std::strong_ordering compare(const Entry& a, const Entry& b) const {
    return ring->compare(table->node(a.node).mono, table->node(b.node).mono);
  }
  bool dedup() const { return false; }
  void merge(Entry&, Entry&&) const {}
};

template <template <class> class Container>
class PlainTermQueue final : public TermQueue {
 public:
  PlainTermQueue(const Ring& ring, bool dedup) : ring_(ring), queue_(PlainPolicy{&ring, dedup}) {}

  void push_product(const Term& mult, const Polynomial& g, std::size_t from) override {
    const PrimeField& k = ring_.field();
    for (std::size_t i = from; i < g.size(); ++i)
      queue_.push(Term{k.mul(mult.coeff, g[i].coeff), mono_mul(mult.mono, g[i].mono)});
  }

  std::optional<Term> pop_max() override {
    const PrimeField& k = ring_.field();
    while (!queue_.empty()) {
      Term t = std::move(queue_.mutable_top());
      queue_.pop();
      while (!queue_.empty() && queue_.top().mono == t.mono) {
        t.coeff = k.add(t.coeff, queue_.top().coeff);
        queue_.pop();
      }
      if (t.coeff != 0) return t;
    }
    return std::nullopt;
  }

  bool empty() const override { return queue_.empty(); }
  void clear() override { queue_.clear(); }

 private:
  const Ring& ring_;
  Container<PlainPolicy> queue_;
};

template <template <class> class Container>
class StreamTermQueue final : public TermQueue {
 public:
  StreamTermQueue(const Ring& ring, bool dedup) : ring_(ring), queue_(StreamPolicy{&ring, dedup}) {}

  void push_product(const Term& mult, const Polynomial& g, std::size_t from) override {
    if (from >= g.size()) return;
    Stream s{mult.mono, mult.coeff, &g, static_cast<std::uint32_t>(from)};
    queue_.push(advance(std::move(s)));
  }

  std::optional<Term> pop_max() override {
    const PrimeField& k = ring_.field();
    while (!queue_.empty()) {
      Monomial key = queue_.top().key;
      Coeff sum = 0;
      do {
        auto& top = queue_.mutable_top();
        sum = k.add(sum, top.coeff);
        auto streams = std::move(top.streams);
        bool replaced = false;
        for (auto& s : streams) {
          if (s.exhausted()) continue;
          if (!replaced) {
            queue_.replace_top(advance(std::move(s)));
            replaced = true;
          } else {
            queue_.push(advance(std::move(s)));
          }
        }
        if (!replaced) queue_.pop();
      } while (!queue_.empty() && queue_.top().key == key);
      if (sum != 0) return Term{sum, std::move(key)};
    }
    return std::nullopt;
  }

  bool empty() const override { return queue_.empty(); }
  void clear() override { queue_.clear(); }

 private:
  StreamEntry advance(Stream s) {
    const Term& t = (*s.poly)[s.next++];
    StreamEntry e;
    e.key = mono_mul(s.mult, t.mono);
    e.coeff = ring_.field().mul(s.mult_coeff, t.coeff);
    e.streams.push_back(std::move(s));
    return e;
  }

  const Ring& ring_;
  Container<StreamPolicy> queue_;
};

template <template <class> class Container>
class HashedPlainTermQueue final : public TermQueue {
 public:
  explicit HashedPlainTermQueue(const Ring& ring)
      : ring_(ring), queue_(HashedPlainPolicy{&ring, &table_}) {}

  void push_product(const Term& mult, const Polynomial& g, std::size_t from) override {
    const PrimeField& k = ring_.field();
    for (std::size_t i = from; i < g.size(); ++i) {
      Monomial m = mono_mul(mult.mono, g[i].mono);
      const Coeff c = k.mul(mult.coeff, g[i].coeff);
      if (auto id = table_.find(m)) {
        auto& n = table_.node(*id);
        n.coeff = k.add(n.coeff, c);
      } else {
        queue_.push(table_.insert(std::move(m), c));
      }
    }
  }

  std::optional<Term> pop_max() override {
    while (!queue_.empty()) {
      const auto id = queue_.top();
      queue_.pop();
      Term t{table_.node(id).coeff, table_.node(id).mono};
      table_.erase(id);
      if (t.coeff != 0) return t;
    }
    return std::nullopt;
  }

  bool empty() const override { return queue_.empty(); }
  void clear() override {
    queue_.clear();
    table_.clear();
  }

 private:
  const Ring& ring_;
  MonomialTable table_;
  Container<HashedPlainPolicy> queue_;
};

template <template <class> class Container>
class HashedStreamTermQueue final : public TermQueue {
 public:
  explicit HashedStreamTermQueue(const Ring& ring)
      : ring_(ring), queue_(HashedStreamPolicy{&ring, &table_}) {}

  void push_product(const Term& mult, const Polynomial& g, std::size_t from) override {
    Stream s{mult.mono, mult.coeff, &g, static_cast<std::uint32_t>(from)};
    if (auto e = advance(std::move(s))) queue_.push(std::move(*e));
  }

  std::optional<Term> pop_max() override {
    while (!queue_.empty()) {
      const auto id = queue_.top().node;
      Term t{table_.node(id).coeff, table_.node(id).mono};
      // The popped monomial stays in the table until its successor is queued;
      // successors are strictly smaller so they never fold into it.
      if (auto next = advance(std::move(queue_.mutable_top().stream)))
        queue_.replace_top(std::move(*next));
      else
        queue_.pop();
      table_.erase(id);
      if (t.coeff != 0) return t;
    }
    return std::nullopt;
  }

  bool empty() const override { return queue_.empty(); }
  void clear() override {
    queue_.clear();
    table_.clear();
  }

 private:
  // Emits terms of the stream until one introduces a new monomial; terms
  // whose monomial is already queued are folded into the table.
  std::optional<HashedStreamEntry> advance(Stream s) {
    const PrimeField& k = ring_.field();
    while (!s.exhausted()) {
      const Term& t = (*s.poly)[s.next++];
      Monomial m = mono_mul(s.mult, t.mono);
      const Coeff c = k.mul(s.mult_coeff, t.coeff);
      if (auto id = table_.find(m)) {
        auto& n = table_.node(*id);
        n.coeff = k.add(n.coeff, c);
        continue;
      }
      return HashedStreamEntry{table_.insert(std::move(m), c), std::move(s)};
    }
    return std::nullopt;
  }

  const Ring& ring_;
  MonomialTable table_;
  Container<HashedStreamPolicy> queue_;
};

template <template <class> class Container>
std::unique_ptr<TermQueue> make_term_queue_with(const Ring& ring, const QueueConfig& cfg) {
  if (cfg.hashed) {
    if (cfg.compressed) return std::make_unique<HashedStreamTermQueue<Container>>(ring);
    return std::make_unique<HashedPlainTermQueue<Container>>(ring);
  }
  if (cfg.compressed) return std::make_unique<StreamTermQueue<Container>>(ring, cfg.dedup);
  return std::make_unique<PlainTermQueue<Container>>(ring, cfg.dedup);
}

}  // namespace detail

inline std::unique_ptr<TermQueue> make_term_queue(const Ring& ring, const QueueConfig& cfg) {
  cfg.validate();
  switch (cfg.backend) {
    case QueueBackend::Heap: return detail::make_term_queue_with<Heap>(ring, cfg);
    case QueueBackend::Geobucket: return detail::make_term_queue_with<Geobucket>(ring, cfg);
    case QueueBackend::TourTree: return detail::make_term_queue_with<TournamentTree>(ring, cfg);
  }
  throw std::invalid_argument("unknown queue backend");
}

}  // namespace sigbasis
