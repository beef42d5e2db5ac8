#pragma once

// Tournament tree: a complete binary tree packed into an array whose leaves
// hold the entries and whose interior nodes hold the leaf index of the
// winner (maximum) of their subtree. Replacing the winner walks a single
// leaf-to-root path with one comparison per level.
//
// Uses the same Policy protocol as Heap.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sigbasis {

template <class Policy>
class TournamentTree {
 public:
  using Entry = typename Policy::Entry;

  explicit TournamentTree(Policy policy = Policy(), std::size_t initial_capacity = 4)
      : policy_(std::move(policy)) {
    std::size_t cap = 1;
    while (cap < initial_capacity) cap *= 2;
    reset(cap);
  }

  bool empty() const { return count_ == 0; }
  std::size_t size() const { return count_; }
  const Entry& top() const { return leaves_[nodes_[1]]; }
  /// The key of the returned entry must not be changed.
  Entry& mutable_top() { return leaves_[nodes_[1]]; }
  const Policy& policy() const { return policy_; }

  void clear() { reset(capacity_); }

  void push(Entry e) {
    if (free_.empty()) grow();
    const std::uint32_t leaf = free_.back();
    free_.pop_back();
    leaves_[leaf] = std::move(e);
    nodes_[capacity_ + leaf] = leaf;
    ++count_;
    replay(leaf, policy_.dedup());
  }

  void pop() {
    if (empty()) throw std::out_of_range("pop on empty tournament tree");
    release(nodes_[1]);
  }

  void replace_top(Entry e) {
    if (empty()) throw std::out_of_range("replace_top on empty tournament tree");
    const std::uint32_t leaf = nodes_[1];
    if (policy_.compare(e, leaves_[leaf]) > 0)
      throw std::logic_error("replace_top key exceeds current maximum");
    leaves_[leaf] = std::move(e);
    replay(leaf, false);
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < capacity_; ++i)
      if (nodes_[capacity_ + i] != kNone) f(leaves_[i]);
  }

  /// Every interior node names the maximum of its two children.
  bool audit() const {
    for (std::size_t k = capacity_ - 1; k >= 1; --k) {
      if (nodes_[k] != winner(nodes_[2 * k], nodes_[2 * k + 1])) {
        const std::uint32_t a = nodes_[k], b = winner(nodes_[2 * k], nodes_[2 * k + 1]);
        if (a == kNone || b == kNone || policy_.compare(leaves_[a], leaves_[b]) != 0) return false;
      }
    }
    return true;
  }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  void reset(std::size_t cap) {
    capacity_ = cap;
    count_ = 0;
    leaves_.assign(cap, Entry());
    nodes_.assign(2 * cap, kNone);
    free_.clear();
    for (std::size_t i = cap; i-- > 0;) free_.push_back(static_cast<std::uint32_t>(i));
  }

  void grow() {
    const std::size_t old = capacity_;
    std::vector<Entry> leaves = std::move(leaves_);
    std::vector<std::uint32_t> occupied;
    for (std::size_t i = 0; i < old; ++i)
      if (nodes_[old + i] != kNone) occupied.push_back(static_cast<std::uint32_t>(i));
    const std::size_t n = count_;
    reset(2 * old);
    for (const auto i : occupied) {
      leaves_[i] = std::move(leaves[i]);
      nodes_[capacity_ + i] = i;
    }
    free_.clear();
    for (std::size_t i = capacity_; i-- > old;) free_.push_back(static_cast<std::uint32_t>(i));
    count_ = n;
    for (std::size_t k = capacity_ - 1; k >= 1; --k) nodes_[k] = winner(nodes_[2 * k], nodes_[2 * k + 1]);
  }

  std::uint32_t winner(std::uint32_t a, std::uint32_t b) const {
    if (a == kNone) return b;
    if (b == kNone) return a;
    return policy_.compare(leaves_[b], leaves_[a]) > 0 ? b : a;
  }

  void release(std::uint32_t leaf) {
    leaves_[leaf] = Entry();
    nodes_[capacity_ + leaf] = kNone;
    free_.push_back(leaf);
    --count_;
    replay(leaf, false);
  }

  // Recomputes the winners on the path from a leaf to the root. With dedup,
  // a freshly pushed entry that ties with the opposing subtree's winner is
  // merged into it instead.
  void replay(std::uint32_t leaf, bool dedup) {
    for (std::size_t k = (capacity_ + leaf) / 2; k >= 1; k /= 2) {
      const std::uint32_t a = nodes_[2 * k], b = nodes_[2 * k + 1];
      if (dedup && a != kNone && b != kNone && (a == leaf || b == leaf)) {
        const std::uint32_t other = a == leaf ? b : a;
        if (policy_.compare(leaves_[a], leaves_[b]) == 0) {
          policy_.merge(leaves_[other], std::move(leaves_[leaf]));
          release(leaf);
          return;
        }
      }
      nodes_[k] = winner(a, b);
    }
  }

  Policy policy_;
  std::size_t capacity_ = 0;
  std::size_t count_ = 0;
  std::vector<Entry> leaves_;
  std::vector<std::uint32_t> nodes_;  // nodes_[capacity_ + i] is leaf i
  std::vector<std::uint32_t> free_;
};

}  // namespace sigbasis
