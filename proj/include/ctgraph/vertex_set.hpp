#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace ctgraph {

/// Dynamic bitset over a universe of small non-negative vertex ids.
///
/// Trailing zero words are insignificant: two sets compare equal whenever
/// they contain the same ids, regardless of the universe they were built for.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator() = default;
    const_iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

    int operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe) : words_((universe + 63) / 64, 0) {}
  VertexSet(std::initializer_list<int> ids) {
    for (int v : ids) insert(v);
  }

  template <typename Range>
  static VertexSet of(const Range& ids) {
    VertexSet s;
    for (int v : ids) s.insert(v);
    return s;
  }

  bool contains(int v) const {
    const auto w = static_cast<std::size_t>(v >> 6);
    return v >= 0 && w < words_.size() && ((words_[w] >> (v & 63)) & 1u);
  }

  void insert(int v) {
    const auto w = static_cast<std::size_t>(v >> 6);
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    const auto w = static_cast<std::size_t>(v >> 6);
    if (v >= 0 && w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (v & 63));
  }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest id strictly greater than `after`, or -1.
  int next(int after) const {
    int start = after + 1;
    auto w = static_cast<std::size_t>(start >> 6);
    if (w >= words_.size()) return -1;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (bits) return static_cast<int>(w * 64) + std::countr_zero(bits);
      if (++w >= words_.size()) return -1;
      bits = words_[w];
    }
  }

  int first() const { return next(-1); }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~other) return false;
    }
    return true;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    const auto n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t x = i < a.words_.size() ? a.words_[i] : 0;
      const std::uint64_t y = i < b.words_.size() ? b.words_[i] : 0;
      if (x != y) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace ctgraph
