#pragma once

// Fixed-width bitset over vertex ids used by the branch-and-bound oracles.

#include <bit>
#include <cstdint>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor::detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int bits() const { return bits_; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  /// Lowest set bit, or -1.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }
  /// Lowest set bit strictly greater than i, or -1.
  int next(int i) const {
    ++i;
    if (i >= bits_) return -1;
    std::size_t w = static_cast<std::size_t>(i >> 6);
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return static_cast<int>(w * 64) + std::countr_zero(cur);
      if (++w >= words_.size()) return -1;
      cur = words_[w];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::vector<Bitset> adjacency_bitsets(const Graph& g) {
  std::vector<Bitset> rows(g.order(), Bitset(g.order()));
  for (const Edge& e : g.edges()) {
    rows[e.u].set(e.v);
    rows[e.v].set(e.u);
  }
  return rows;
}

}  // namespace minorcolor::detail
