#pragma once

// Open-addressing hash table from monomials to accumulated coefficients,
// keyed by the cached monomial hash. Linear probing, load factor kept at or
// below 1/2 counting tombstones, capacity doubling.

#include <cstdint>
#include <optional>
#include <vector>

#include "sigbasis/field.hpp"
#include "sigbasis/monomial.hpp"

namespace sigbasis::detail {

class MonomialTable {
 public:
  using NodeId = std::uint32_t;

  struct Node {
    Monomial mono;
    Coeff coeff = 0;
  };

  MonomialTable() { slots_.assign(16, kEmpty); }

  Node& node(NodeId id) { return nodes_[id]; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::size_t size() const { return live_; }

  std::optional<NodeId> find(const Monomial& m) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = m.hash() & mask;; i = (i + 1) & mask) {
      const NodeId s = slots_[i];
      if (s == kEmpty) return std::nullopt;
      if (s != kTomb && nodes_[s].mono == m) return s;
    }
  }

  /// Inserts a monomial known to be absent.
  NodeId insert(Monomial m, Coeff c) {
    if (2 * (live_ + tombs_ + 1) > slots_.size()) rehash();
    NodeId id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      nodes_[id] = {std::move(m), c};
    } else {
      id = static_cast<NodeId>(nodes_.size());
      nodes_.push_back({std::move(m), c});
    }
    place(id);
    ++live_;
    return id;
  }

  void erase(NodeId id) {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = nodes_[id].mono.hash() & mask;; i = (i + 1) & mask) {
      if (slots_[i] == id) {
        slots_[i] = kTomb;
        break;
      }
    }
    ++tombs_;
    --live_;
    free_.push_back(id);
  }

  void clear() {
    slots_.assign(16, kEmpty);
    nodes_.clear();
    free_.clear();
    live_ = tombs_ = 0;
  }

 private:
  static constexpr NodeId kEmpty = UINT32_MAX;
  static constexpr NodeId kTomb = UINT32_MAX - 1;

  void place(NodeId id) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = nodes_[id].mono.hash() & mask;
    while (slots_[i] != kEmpty && slots_[i] != kTomb) i = (i + 1) & mask;
    if (slots_[i] == kTomb) --tombs_;
    slots_[i] = id;
  }

  void rehash() {
    std::size_t cap = slots_.size();
    while (4 * (live_ + 1) > cap) cap *= 2;
    std::vector<NodeId> old = std::move(slots_);
    slots_.assign(cap, kEmpty);
    tombs_ = 0;
    for (const NodeId s : old)
      if (s != kEmpty && s != kTomb) place(s);
  }

  std::vector<NodeId> slots_;
  std::vector<Node> nodes_;
  std::vector<NodeId> free_;
  std::size_t live_ = 0;
  std::size_t tombs_ = 0;
};

}  // namespace sigbasis::detail
