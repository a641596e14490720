#pragma once

#include <bit>
#include <cstdint>

namespace interfere {

/// Smallest k with 2^k >= x; ceil_log2(1) == 0.
constexpr unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

static_assert(ceil_log2(1) == 0);
static_assert(ceil_log2(2) == 1);
static_assert(ceil_log2(5) == 3);
static_assert(ceil_log2(8) == 3);
static_assert(ceil_log2(9) == 4);

}  // namespace interfere
