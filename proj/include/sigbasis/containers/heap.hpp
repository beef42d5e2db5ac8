#pragma once

// Binary max-heap packed into an array with the root at index 1.
//
// The Policy supplies the entry type and ordering:
//   using Entry = ...;                       // default constructible, movable
//   std::strong_ordering compare(const Entry&, const Entry&) const;
//   bool dedup() const;                       // merge equal entries on push
//   void merge(Entry& into, Entry&& from) const;
//
// pop and replace_top move the hole at the root down to a leaf with one
// comparison per level and then sift the replacement value up from there.

#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sigbasis {

template <class Policy>
class Heap {
 public:
  using Entry = typename Policy::Entry;

  explicit Heap(Policy policy = Policy()) : policy_(std::move(policy)) { slots_.emplace_back(); }

  bool empty() const { return slots_.size() == 1; }
  std::size_t size() const { return slots_.size() - 1; }
  const Entry& top() const { return slots_[1]; }
  /// The key of the returned entry must not be changed.
  Entry& mutable_top() { return slots_[1]; }
  const Policy& policy() const { return policy_; }

  void clear() { slots_.resize(1); }

  void push(Entry e) {
    const std::size_t n = slots_.size();
    // Find the final position first so that a merge needs no data movement.
    std::size_t k = n;
    while (k > 1) {
      const auto c = policy_.compare(e, slots_[k / 2]);
      if (c > 0) {
        k /= 2;
        continue;
      }
      if (c == 0 && policy_.dedup()) {
        policy_.merge(slots_[k / 2], std::move(e));
        return;
      }
      break;
    }
    slots_.emplace_back();
    for (std::size_t pos = n; pos > k; pos /= 2) slots_[pos] = std::move(slots_[pos / 2]);
    slots_[k] = std::move(e);
  }

  void pop() {
    const std::size_t n = size();
    if (n == 0) throw std::out_of_range("pop on empty heap");
    const std::size_t hole = hole_to_leaf(n);
    if (hole != n) sift_up(hole, std::move(slots_[n]));
    slots_.pop_back();
  }

  /// Equivalent to pop() followed by push(e) for e no greater than top().
  void replace_top(Entry e) {
    if (empty()) throw std::out_of_range("replace_top on empty heap");
    if (policy_.compare(e, slots_[1]) > 0)
      throw std::logic_error("replace_top key exceeds current maximum");
    sift_up(hole_to_leaf(size()), std::move(e));
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 1; i < slots_.size(); ++i) f(slots_[i]);
  }

  bool audit() const {
    for (std::size_t i = 2; i < slots_.size(); ++i)
      if (policy_.compare(slots_[i], slots_[i / 2]) > 0) return false;
    return true;
  }

 private:
  // Moves the hole at the root down to a leaf among positions [1, n].
  std::size_t hole_to_leaf(std::size_t n) {
    std::size_t k = 1;
    while (2 * k <= n) {
      std::size_t child = 2 * k;
      if (child + 1 <= n && policy_.compare(slots_[child + 1], slots_[child]) > 0) ++child;
      slots_[k] = std::move(slots_[child]);
      k = child;
    }
    return k;
  }

  void sift_up(std::size_t k, Entry e) {
    while (k > 1 && policy_.compare(e, slots_[k / 2]) > 0) {
      slots_[k] = std::move(slots_[k / 2]);
      k /= 2;
    }
    slots_[k] = std::move(e);
  }

  Policy policy_;
  std::vector<Entry> slots_;  // slots_[0] unused
};

}  // namespace sigbasis
