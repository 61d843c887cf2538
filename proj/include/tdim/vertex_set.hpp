#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

#ifndef TDIM_MAX_ORDER
#define TDIM_MAX_ORDER 128
#endif

namespace tdim {

using VertexId = int;

/// Storage capacity of every graph in the library. Algorithm caps (search
/// limits) are runtime settings and are always <= this value.
inline constexpr int kMaxOrder = TDIM_MAX_ORDER;
static_assert(kMaxOrder > 0 && kMaxOrder % 64 == 0, "TDIM_MAX_ORDER must be a multiple of 64");

/// Fixed-capacity bitset over vertex ids. Used for adjacency rows and for
/// every vertex subset handled by the search code.
class VertexSet {
public:
  static constexpr int kWords = kMaxOrder / 64;

  constexpr VertexSet() = default;

  static VertexSet from(const std::vector<VertexId> &ids) {
    VertexSet s;
    for (VertexId v : ids)
      s.insert(v);
    return s;
  }

  /// {0, ..., n-1}
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  void insert(VertexId v) { words_[v >> 6] |= bit(v); }
  void erase(VertexId v) { words_[v >> 6] &= ~bit(v); }
  [[nodiscard]] bool contains(VertexId v) const { return (words_[v >> 6] & bit(v)) != 0; }

  [[nodiscard]] int size() const {
    int c = 0;
    for (auto w : words_)
      c += std::popcount(w);
    return c;
  }

  [[nodiscard]] bool empty() const {
    for (auto w : words_)
      if (w != 0)
        return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  [[nodiscard]] VertexId first() const { return next(0); }

  /// Smallest member >= from, or -1.
  [[nodiscard]] VertexId next(VertexId from) const {
    if (from >= kMaxOrder)
      return -1;
    int w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur != 0)
        return (w << 6) + std::countr_zero(cur);
      if (++w == kWords)
        return -1;
      cur = words_[w];
    }
  }

  [[nodiscard]] bool is_subset_of(const VertexSet &o) const {
    for (int i = 0; i < kWords; ++i)
      if ((words_[i] & ~o.words_[i]) != 0)
        return false;
    return true;
  }

  [[nodiscard]] bool intersects(const VertexSet &o) const {
    for (int i = 0; i < kWords; ++i)
      if ((words_[i] & o.words_[i]) != 0)
        return true;
    return false;
  }

  [[nodiscard]] std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    for (auto v : *this)
      out.push_back(v);
    return out;
  }

  VertexSet &operator|=(const VertexSet &o) {
    for (int i = 0; i < kWords; ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet &operator&=(const VertexSet &o) {
    for (int i = 0; i < kWords; ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet &operator-=(const VertexSet &o) {
    for (int i = 0; i < kWords; ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }
  friend bool operator==(const VertexSet &, const VertexSet &) = default;

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId *;
    using reference = VertexId;

    iterator() = default;
    iterator(const VertexSet *s, VertexId v) : set_(s), v_(v) {}
    VertexId operator*() const { return v_; }
    iterator &operator++() {
      v_ = set_->next(v_ + 1);
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator &a, const iterator &b) { return a.v_ == b.v_; }

  private:
    const VertexSet *set_ = nullptr;
    VertexId v_ = -1;
  };

  [[nodiscard]] iterator begin() const { return {this, first()}; }
  [[nodiscard]] iterator end() const { return {this, -1}; }

private:
  static constexpr std::uint64_t bit(VertexId v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

} // namespace tdim
