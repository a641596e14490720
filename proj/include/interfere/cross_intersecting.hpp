#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace interfere {

inline constexpr std::size_t kMaxCrossR = 4;
inline constexpr std::size_t kMaxCrossGround = 6;

/// b_r(m) with a witness: `first` holds r distinct subsets (bitmasks over
/// {0..m-1}), `partners` holds b_value further distinct subsets each meeting
/// every member of `first`.
struct CrossIntersectingResult {
  std::size_t r = 0;
  std::size_t m = 0;
  std::size_t b_value = 0;
  std::vector<std::uint32_t> first;
  std::vector<std::uint32_t> partners;
};

/// Number of subsets Y of {0..m-1}, Y not in `family`, meeting every member.
std::size_t partner_count(const std::vector<std::uint32_t>& family, std::size_t m);

/// Exact b_r(m): maximise partner_count over r-subfamilies, enumerated as
/// sequences whose new ground elements appear in ascending order.
/// Requires 1 <= r, 1 <= m, 2^m - 1 >= r; throws ResourceError past
/// r > kMaxCrossR or m > kMaxCrossGround.
CrossIntersectingResult b_r(std::size_t r, std::size_t m);

/// ceil(log2(r + s + r)).
std::size_t krs_upper_bound(std::size_t r, std::size_t s);

struct KrsIndexReport {
  std::size_t r = 0;  // after swapping so that r <= s
  std::size_t s = 0;
  std::size_t index = 0;
  std::size_t upper_bound = 0;
  /// Equality with the upper bound is claimed for r <= 4.
  bool equality_claimed = false;
  bool matches_upper_bound = false;
};

/// Universal interference index of K_{r,s}: min{m : s <= b_r(m)} for
/// r >= 2, ceil(log2(n + 1)) for r == 1. Arguments are swapped when r > s.
KrsIndexReport krs_index_report(std::size_t r, std::size_t s);
std::size_t krs_index(std::size_t r, std::size_t s);

enum class BipartiteSide { U, W };

/// Index of the single set U (or W) in K_{r,s}: ceil(log2(r + s + 1)).
std::size_t krs_side_index(std::size_t r, std::size_t s, BipartiteSide side);

}  // namespace interfere
