#pragma once

// Geobucket priority queue (Yan). Bucket i is a sorted run holding at most
// kFirstCapacity * kGrowth^i entries; an overflowing bucket is merged into
// the next one. Each bucket keeps its maximum at the back so the overall
// maximum is found by scanning the bucket tails.
//
// Uses the same Policy protocol as Heap.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sigbasis {

template <class Policy>
class Geobucket {
 public:
  using Entry = typename Policy::Entry;
  static constexpr std::size_t kFirstCapacity = 4;
  static constexpr std::size_t kGrowth = 4;

  explicit Geobucket(Policy policy = Policy()) : policy_(std::move(policy)) {}

  static std::size_t bucket_capacity(std::size_t i) {
    std::size_t c = kFirstCapacity;
    while (i-- > 0) c *= kGrowth;
    return c;
  }

  bool empty() const { return count_ == 0; }
  std::size_t size() const { return count_; }
  const Policy& policy() const { return policy_; }
  std::size_t bucket_count() const { return buckets_.size(); }
  std::size_t bucket_size(std::size_t i) const { return buckets_[i].size(); }

  const Entry& top() const {
    locate_max();
    return buckets_[max_bucket_].back();
  }

  /// The key of the returned entry must not be changed.
  Entry& mutable_top() {
    locate_max();
    return buckets_[max_bucket_].back();
  }

  void clear() {
    for (auto& b : buckets_) b.clear();
    count_ = 0;
    max_bucket_ = kUnknown;
  }

  void push(Entry e) {
    if (buckets_.empty()) buckets_.emplace_back();
    auto& b0 = buckets_[0];
    auto it = std::lower_bound(b0.begin(), b0.end(), e,
                               [&](const Entry& x, const Entry& y) { return policy_.compare(x, y) < 0; });
    max_bucket_ = kUnknown;
    if (policy_.dedup() && it != b0.end() && policy_.compare(*it, e) == 0) {
      policy_.merge(*it, std::move(e));
      return;
    }
    b0.insert(it, std::move(e));
    ++count_;
    cascade();
  }

  void pop() {
    if (empty()) throw std::out_of_range("pop on empty geobucket");
    locate_max();
    buckets_[max_bucket_].pop_back();
    --count_;
    max_bucket_ = kUnknown;
  }

  void replace_top(Entry e) {
    if (empty()) throw std::out_of_range("replace_top on empty geobucket");
    if (policy_.compare(e, top()) > 0) throw std::logic_error("replace_top key exceeds current maximum");
    pop();
    push(std::move(e));
  }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& b : buckets_)
      for (const auto& e : b) f(e);
  }

  /// Bucket sizes respect their capacities and every bucket is sorted.
  bool audit() const {
    for (std::size_t i = 0; i < buckets_.size(); ++i) {
      if (buckets_[i].size() > bucket_capacity(i)) return false;
      for (std::size_t k = 1; k < buckets_[i].size(); ++k)
        if (policy_.compare(buckets_[i][k - 1], buckets_[i][k]) > 0) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);

  void locate_max() const {
    if (max_bucket_ != kUnknown) return;
    for (std::size_t i = 0; i < buckets_.size(); ++i) {
      if (buckets_[i].empty()) continue;
      if (max_bucket_ == kUnknown ||
          policy_.compare(buckets_[i].back(), buckets_[max_bucket_].back()) > 0)
        max_bucket_ = i;
    }
  }

  void cascade() {
    for (std::size_t i = 0; buckets_[i].size() > bucket_capacity(i); ++i) {
      if (i + 1 == buckets_.size()) buckets_.emplace_back();
      merge_into(buckets_[i], buckets_[i + 1]);
    }
  }

  void merge_into(std::vector<Entry>& from, std::vector<Entry>& to) {
    std::vector<Entry> out;
    out.reserve(from.size() + to.size());
    std::size_t i = 0, j = 0;
    while (i < from.size() || j < to.size()) {
      if (j == to.size()) {
        out.push_back(std::move(from[i++]));
      } else if (i == from.size()) {
        out.push_back(std::move(to[j++]));
      } else {
        const auto c = policy_.compare(from[i], to[j]);
        if (c == 0 && policy_.dedup()) {
          policy_.merge(to[j], std::move(from[i++]));
          --count_;
        } else if (c < 0) {
          out.push_back(std::move(from[i++]));
        } else {
          out.push_back(std::move(to[j++]));
        }
      }
    }
    from.clear();
    to = std::move(out);
  }

  Policy policy_;
  std::vector<std::vector<Entry>> buckets_;
  std::size_t count_ = 0;
  mutable std::size_t max_bucket_ = kUnknown;
};

}  // namespace sigbasis
