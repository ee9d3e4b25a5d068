#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace arcfix {

/// Fixed-width set of vertex ids backed by 64-bit words.
class VertexBits {
 public:
  VertexBits() = default;
  explicit VertexBits(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static VertexBits full(int size) {
    VertexBits b(size);
    for (int i = 0; i < size; ++i) b.set(i);
    return b;
  }

  int size() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// First member at or after `from`, or -1.
  int next(int from) const {
    if (from >= size_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }
  int first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexBits& operator&=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexBits& operator|=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexBits& operator-=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexBits operator&(VertexBits a, const VertexBits& b) { return a &= b; }
  friend VertexBits operator|(VertexBits a, const VertexBits& b) { return a |= b; }
  friend VertexBits operator-(VertexBits a, const VertexBits& b) { return a -= b; }

  /// Complement within [0, size).
  VertexBits flipped() const {
    VertexBits r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    if (size_ & 63) r.words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    return r;
  }

  friend bool operator==(const VertexBits& a, const VertexBits& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace arcfix
