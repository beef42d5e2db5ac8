#pragma once

// Priority queues of S-pairs (i, j), i < j, ordered by a caller-supplied key.
//
// The triangle variant stores, for each column j, the rows i sorted by key
// and keeps only the key of each column's minimum in a small front queue.
// A popped column's successor key is recomputed from (i, j) by the Traits,
// so queued pairs cost one 16-bit (column < 2^16) or 32-bit integer each.
//
// Traits protocol:
//   using Key = ...;
//   std::strong_ordering compare(const Key&, const Key&) const;
//   Key key(std::uint32_t i, std::uint32_t j) const;    // deterministic
//
// Pairs pop in ascending (key, j, i) order in every variant.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sigbasis/containers/heap.hpp"
#include "sigbasis/containers/tournament_tree.hpp"

namespace sigbasis {

enum class PairQueueKind { TriangleTourTree, TriangleHeap, Heap, TourTree };

inline std::string to_string(PairQueueKind k) {
  switch (k) {
    case PairQueueKind::TriangleTourTree: return "triangle-tt";
    case PairQueueKind::TriangleHeap: return "triangle-heap";
    case PairQueueKind::Heap: return "heap";
    case PairQueueKind::TourTree: return "tourtree";
  }
  return {};
}

struct PairIndex {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

template <class Traits>
class PairQueue {
 public:
  using Key = typename Traits::Key;
  virtual ~PairQueue() = default;

  /// Queues the pairs (i, j) for column j; every i must be below j.
  virtual void add_column(std::uint32_t j, std::vector<std::pair<std::uint32_t, Key>> pairs) = 0;
  virtual std::optional<PairIndex> pop_min() = 0;
  virtual const Key* peek_min_key() const = 0;
  virtual std::size_t size() const = 0;
  bool empty() const { return size() == 0; }
};

namespace detail {

template <class Traits>
struct FrontEntry {
  typename Traits::Key key{};
  std::uint32_t j = 0;
  std::uint32_t i = 0;  // used by the flat variants only
};

// Inverts (key, j, i) so the max-containers act as min-queues.
template <class Traits>
struct MinPolicy {
  using Entry = FrontEntry<Traits>;
  const Traits* traits = nullptr;

  std::strong_ordering compare(const Entry& a, const Entry& b) const {
    if (auto c = traits->compare(b.key, a.key); c != 0) return c;
    if (a.j != b.j) return b.j <=> a.j;
    return b.i <=> a.i;
  }
  bool dedup() const { return false; }
  void merge(Entry&, Entry&&) const {}
};

}  // namespace detail

/// Memory accounting snapshot of a triangle.
struct TriangleMemory {
  std::size_t pairs16 = 0;
  std::size_t pairs32 = 0;
  std::size_t column_bytes = 0;   // running counter
  std::size_t nonempty_columns = 0;
  std::size_t front_keys = 0;     // materialized keys
};

template <class Traits, template <class> class Front>
class PairTriangle final : public PairQueue<Traits> {
 public:
  using Key = typename Traits::Key;

  explicit PairTriangle(Traits traits) : traits_(std::move(traits)), front_(detail::MinPolicy<Traits>{&traits_}) {}
  PairTriangle(const PairTriangle&) = delete;
  PairTriangle& operator=(const PairTriangle&) = delete;

  void add_column(std::uint32_t j, std::vector<std::pair<std::uint32_t, Key>> pairs) override {
    if (pairs.empty()) return;
    if (j >= columns_.size()) columns_.resize(j + 1);
    if (column_size(columns_[j]) != 0) throw std::logic_error("column already queued");
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      if (auto c = traits_.compare(a.second, b.second); c != 0) return c < 0;
      return a.first < b.first;
    });
    for (const auto& p : pairs)
      if (p.first >= j) throw std::invalid_argument("pair row must be below its column");
    // Stored descending so the minimum sits at the back.
    if (j < (1u << 16)) {
      std::vector<std::uint16_t> col;
      col.reserve(pairs.size());
      for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) col.push_back(static_cast<std::uint16_t>(it->first));
      columns_[j] = std::move(col);
      column_bytes_ += 2 * pairs.size();
    } else {
      std::vector<std::uint32_t> col;
      col.reserve(pairs.size());
      for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) col.push_back(it->first);
      columns_[j] = std::move(col);
      column_bytes_ += 4 * pairs.size();
    }
    size_ += pairs.size();
    front_.push({std::move(pairs.front().second), j, 0});
  }

  std::optional<PairIndex> pop_min() override {
    if (front_.empty()) return std::nullopt;
    const std::uint32_t j = front_.top().j;
    auto& col = columns_[j];
    const std::uint32_t i = pop_back(col);
    --size_;
    if (column_size(col) == 0) {
      col = std::vector<std::uint16_t>{};
      front_.pop();
    } else {
      front_.replace_top({traits_.key(back(col), j), j, 0});
    }
    return PairIndex{i, j};
  }

  const Key* peek_min_key() const override { return front_.empty() ? nullptr : &front_.top().key; }
  std::size_t size() const override { return size_; }

  TriangleMemory memory() const {
    TriangleMemory m;
    for (const auto& c : columns_) {
      const std::size_t n = column_size(c);
      if (n == 0) continue;
      ++m.nonempty_columns;
      (std::holds_alternative<std::vector<std::uint16_t>>(c) ? m.pairs16 : m.pairs32) += n;
    }
    m.column_bytes = column_bytes_;
    m.front_keys = front_.size();
    return m;
  }

  /// Byte counter within its bound and one front entry per nonempty column.
  bool audit() const {
    const TriangleMemory m = memory();
    return m.column_bytes <= 2 * m.pairs16 + 4 * m.pairs32 && m.front_keys == m.nonempty_columns &&
           m.pairs16 + m.pairs32 == size_;
  }

 private:
  using Column = std::variant<std::vector<std::uint16_t>, std::vector<std::uint32_t>>;

  static std::size_t column_size(const Column& c) {
    return std::visit([](const auto& v) { return v.size(); }, c);
  }
  static std::uint32_t back(const Column& c) {
    return std::visit([](const auto& v) { return static_cast<std::uint32_t>(v.back()); }, c);
  }
  std::uint32_t pop_back(Column& c) {
    return std::visit(
        [&](auto& v) {
          const auto i = static_cast<std::uint32_t>(v.back());
          v.pop_back();
          column_bytes_ -= sizeof(typename std::decay_t<decltype(v)>::value_type);
          return i;
        },
        c);
  }

  Traits traits_;
  std::vector<Column> columns_;
  Front<detail::MinPolicy<Traits>> front_;
  std::size_t size_ = 0;
  std::size_t column_bytes_ = 0;
};

/// Every pair with its key in one priority queue.
template <class Traits, template <class> class Container>
class FlatPairQueue final : public PairQueue<Traits> {
 public:
  using Key = typename Traits::Key;

  explicit FlatPairQueue(Traits traits) : traits_(std::move(traits)), queue_(detail::MinPolicy<Traits>{&traits_}) {}
  FlatPairQueue(const FlatPairQueue&) = delete;
  FlatPairQueue& operator=(const FlatPairQueue&) = delete;

  void add_column(std::uint32_t j, std::vector<std::pair<std::uint32_t, Key>> pairs) override {
    for (auto& [i, key] : pairs) {
      if (i >= j) throw std::invalid_argument("pair row must be below its column");
      queue_.push({std::move(key), j, i});
    }
  }

  std::optional<PairIndex> pop_min() override {
    if (queue_.empty()) return std::nullopt;
    const PairIndex p{queue_.top().i, queue_.top().j};
    queue_.pop();
    return p;
  }

  const Key* peek_min_key() const override { return queue_.empty() ? nullptr : &queue_.top().key; }
  std::size_t size() const override { return queue_.size(); }

 private:
  Traits traits_;
  Container<detail::MinPolicy<Traits>> queue_;
};

template <class Traits>
std::unique_ptr<PairQueue<Traits>> make_pair_queue(PairQueueKind kind, Traits traits) {
  switch (kind) {
    case PairQueueKind::TriangleTourTree:
      return std::make_unique<PairTriangle<Traits, TournamentTree>>(std::move(traits));
    case PairQueueKind::TriangleHeap: return std::make_unique<PairTriangle<Traits, Heap>>(std::move(traits));
    case PairQueueKind::Heap: return std::make_unique<FlatPairQueue<Traits, Heap>>(std::move(traits));
    case PairQueueKind::TourTree: return std::make_unique<FlatPairQueue<Traits, TournamentTree>>(std::move(traits));
  }
  throw std::invalid_argument("unknown pair queue kind");
}

}  // namespace sigbasis
