#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace grpaudit {

using ElemId = std::uint32_t;

/// Fixed-size bitset over the element ids of an ambient group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool test(ElemId i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(ElemId i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(ElemId i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<ElemId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<ElemId> to_vector() const {
    std::vector<ElemId> out;
    for_each([&](ElemId i) { out.push_back(i); });
    return out;
  }

  /// Stable key for memo tables.
  std::string key() const {
    std::string k(words_.size() * 8, '\0');
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (int b = 0; b < 8; ++b) k[i * 8 + static_cast<std::size_t>(b)] = static_cast<char>((words_[i] >> (8 * b)) & 0xff);
    return k;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic comparison of the sorted member lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t x = a.words_[i] ^ b.words_[i];
      if (!x) continue;
      std::uint64_t low = x & (~x + 1);
      // The set owning the lowest differing element sorts first.
      return (a.words_[i] & low) != 0;
    }
    return false;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace grpaudit
