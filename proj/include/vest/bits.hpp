#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace vest {

// Fixed-size packed bit vector. Bits past size() in the last word stay zero,
// so word-wise equality and hashing coincide with bit-wise equality.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
  void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
  void assign(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }

  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool intersects(const BitVector& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  // Parity of |this ∩ other|: the GF(2) inner product.
  bool dot_parity(const BitVector& other) const noexcept {
    word_type acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
  }

  BitVector& operator|=(const BitVector& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  bool is_superset_of(const BitVector& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((other.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL ^ size_;
    for (auto w : words_) {
      h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& b) const noexcept { return b.hash(); }
};

}  // namespace vest
