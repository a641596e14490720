#include "interfere/bitset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "interfere/errors.hpp"

namespace interfere {

namespace {
constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
}  // namespace

Bitset::Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

Bitset::Bitset(std::size_t size, std::initializer_list<std::size_t> members) : Bitset(size) {
  for (auto m : members) set(m);
}

Bitset Bitset::from_indices(std::size_t size, std::span<const std::size_t> members) {
  Bitset b(size);
  for (auto m : members) b.set(m);
  return b;
}

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  std::fill(b.words_.begin(), b.words_.end(), ~std::uint64_t{0});
  b.trim();
  return b;
}

Bitset Bitset::from_mask(std::size_t size, std::uint64_t mask) {
  if (size > 64) throw PreconditionError("Bitset::from_mask: size exceeds 64");
  Bitset b(size);
  if (size > 0) {
    b.words_[0] = mask;
    b.trim();
    if (b.words_[0] != mask) throw PreconditionError("Bitset::from_mask: bit outside universe");
  } else if (mask != 0) {
    throw PreconditionError("Bitset::from_mask: bit outside universe");
  }
  return b;
}

bool Bitset::test(std::size_t i) const {
  if (i >= size_) throw PreconditionError("Bitset index out of range");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

Bitset& Bitset::set(std::size_t i) {
  if (i >= size_) throw PreconditionError("Bitset index out of range");
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
  return *this;
}

Bitset& Bitset::reset(std::size_t i) {
  if (i >= size_) throw PreconditionError("Bitset index out of range");
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  return *this;
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Bitset::intersects(const Bitset& other) const {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::size_t Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return npos;
}

std::size_t Bitset::next(std::size_t i) const {
  std::size_t start = i + 1;
  if (start >= size_) return npos;
  std::size_t w = start / 64;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start % 64));
  while (true) {
    if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w >= words_.size()) return npos;
    bits = words_[w];
  }
}

Bitset& Bitset::operator&=(const Bitset& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::operator^=(const Bitset& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset b(*this);
  for (auto& w : b.words_) w = ~w;
  b.trim();
  return b;
}

std::vector<std::size_t> Bitset::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::uint64_t Bitset::to_mask() const {
  if (size_ > 64) throw PreconditionError("Bitset::to_mask: size exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::size_t Bitset::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ size_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

void Bitset::check_same_size(const Bitset& other) const {
  if (size_ != other.size_) throw PreconditionError("Bitset universe mismatch");
}

void Bitset::trim() {
  if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

bool size_then_lex_less(const Bitset& a, const Bitset& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return va < vb;
}

}  // namespace interfere
