#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace interfere {

/// Fixed-universe dynamic bitset over {0, ..., size-1}. Used for vertex sets,
/// edge sets and set labels alike. Bits past size() are always zero.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size);
  Bitset(std::size_t size, std::initializer_list<std::size_t> members);

  static Bitset from_indices(std::size_t size, std::span<const std::size_t> members);
  static Bitset full(std::size_t size);
  /// Low 64 bits from a mask; size must be <= 64.
  static Bitset from_mask(std::size_t size, std::uint64_t mask);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const;
  Bitset& set(std::size_t i);
  Bitset& reset(std::size_t i);

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }

  bool intersects(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;

  /// Smallest member, or npos.
  std::size_t first() const;
  /// Smallest member strictly greater than i, or npos.
  std::size_t next(std::size_t i) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  Bitset& operator^=(const Bitset& other);
  /// Set difference.
  Bitset& operator-=(const Bitset& other);
  Bitset complement() const;

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::vector<std::size_t> to_vector() const;
  /// Low 64 bits (size must be <= 64).
  std::uint64_t to_mask() const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same_size(const Bitset& other) const;
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Orders sets by cardinality, then lexicographically by sorted member list.
bool size_then_lex_less(const Bitset& a, const Bitset& b);

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace interfere
