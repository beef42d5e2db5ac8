#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sigbasis::detail {

/// One bit per unordered pair {a, b}, a != b, of indices below size().
class BitTriangle {
 public:
  std::size_t size() const { return n_; }

  /// Extends the triangle to cover indices below n.
  void grow(std::size_t n) {
    if (n <= n_) return;
    n_ = n;
    words_.resize((slot(0, n) + 63) / 64, 0);
  }

  bool test(std::size_t a, std::size_t b) const {
    const std::size_t s = index(a, b);
    return (words_[s / 64] >> (s % 64)) & 1u;
  }

  void set(std::size_t a, std::size_t b) {
    const std::size_t s = index(a, b);
    words_[s / 64] |= std::uint64_t{1} << (s % 64);
  }

  void clear() {
    n_ = 0;
    words_.clear();
    words_.shrink_to_fit();
  }

  std::size_t bytes() const { return words_.size() * sizeof(std::uint64_t); }
  /// Bytes needed to cover indices below n.
  static std::size_t bytes_for(std::size_t n) { return (slot(0, n) + 63) / 64 * sizeof(std::uint64_t); }

 private:
  static std::size_t slot(std::size_t lo, std::size_t hi) { return hi * (hi - 1) / 2 + lo; }

  std::size_t index(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    if (a == b || b >= n_) throw std::out_of_range("bit triangle index");
    return slot(a, b);
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sigbasis::detail
