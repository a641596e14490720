#include "interfere/cross_intersecting.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "interfere/bits.hpp"
#include "interfere/errors.hpp"

namespace interfere {

std::size_t partner_count(const std::vector<std::uint32_t>& family, std::size_t m) {
  if (m > 31) throw PreconditionError("partner_count: ground set too large");
  const std::uint32_t subsets = std::uint32_t{1} << m;
  std::size_t count = 0;
  for (std::uint32_t y = 1; y < subsets; ++y) {
    if (std::find(family.begin(), family.end(), y) != family.end()) continue;
    if (std::all_of(family.begin(), family.end(), [y](std::uint32_t z) { return (y & z) != 0; })) ++count;
  }
  return count;
}

namespace {

struct Search {
  std::size_t r;
  std::size_t m;
  std::uint32_t full;
  std::vector<std::uint64_t> meets;  // meets[z]: subsets y (as bits) with y & z != 0
  std::vector<std::uint32_t> current;
  std::vector<std::uint32_t> best;
  std::size_t best_value = 0;
  bool have_best = false;

  std::size_t value() const {
    std::uint64_t common = ~std::uint64_t{0};
    for (auto z : current) common &= meets[z];
    for (auto z : current) common &= ~(std::uint64_t{1} << z);
    return static_cast<std::size_t>(std::popcount(common));
  }

  void run(std::uint32_t used) {
    if (current.size() == r) {
      const auto v = value();
      if (!have_best || v > best_value) {
        best_value = v;
        best = current;
        have_best = true;
      }
      return;
    }
    const std::uint32_t free = full & ~used;
    for (std::uint32_t z = 1; z <= full; ++z) {
      if (std::find(current.begin(), current.end(), z) != current.end()) continue;
      const std::uint32_t fresh = z & free;
      std::uint32_t expected = 0;
      auto remaining = std::popcount(fresh);
      for (std::uint32_t b = free; remaining; b &= b - 1, --remaining) expected |= b & -b;
      if (fresh != expected) continue;
      current.push_back(z);
      run(used | z);
      current.pop_back();
    }
  }
};

}  // namespace

CrossIntersectingResult b_r(std::size_t r, std::size_t m) {
  if (r == 0 || m == 0) throw PreconditionError("b_r: r and m must be positive");
  if (r > kMaxCrossR || m > kMaxCrossGround)
    throw ResourceError("b_r: r <= " + std::to_string(kMaxCrossR) + " and m <= " +
                        std::to_string(kMaxCrossGround) + " supported");
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  if (full < r) throw PreconditionError("b_r: fewer than r nonempty subsets of the ground set");
  Search s{r, m, full, std::vector<std::uint64_t>(full + 1, 0), {}, {}, 0, false};
  for (std::uint32_t z = 0; z <= full; ++z)
    for (std::uint32_t y = 1; y <= full; ++y)
      if (y & z) s.meets[z] |= std::uint64_t{1} << y;
  s.run(0);

  CrossIntersectingResult out{r, m, s.best_value, s.best, {}};
  for (std::uint32_t y = 1; y <= full; ++y) {
    if (std::find(s.best.begin(), s.best.end(), y) != s.best.end()) continue;
    if (std::all_of(s.best.begin(), s.best.end(), [y](std::uint32_t z) { return (y & z) != 0; }))
      out.partners.push_back(y);
  }
  return out;
}

std::size_t krs_upper_bound(std::size_t r, std::size_t s) {
  if (r > s) std::swap(r, s);
  return ceil_log2(r + s + r);
}

KrsIndexReport krs_index_report(std::size_t r, std::size_t s) {
  if (r == 0 || s == 0) throw PreconditionError("K_{r,s} needs r, s >= 1");
  if (r > s) std::swap(r, s);
  KrsIndexReport out;
  out.r = r;
  out.s = s;
  out.upper_bound = krs_upper_bound(r, s);
  out.equality_claimed = r <= 4;
  if (r == 1) {
    out.index = ceil_log2(r + s + 1);
  } else {
    for (std::size_t m = ceil_log2(r + 1);; ++m) {
      if (m > kMaxCrossGround)
        throw ResourceError("krs_index: K_{" + std::to_string(r) + "," + std::to_string(s) +
                            "} needs more than " + std::to_string(kMaxCrossGround) + " ground elements");
      if (s <= b_r(r, m).b_value) {
        out.index = m;
        break;
      }
    }
  }
  out.matches_upper_bound = out.index == out.upper_bound;
  return out;
}

std::size_t krs_index(std::size_t r, std::size_t s) { return krs_index_report(r, s).index; }

std::size_t krs_side_index(std::size_t r, std::size_t s, BipartiteSide side) {
  if (r == 0 || s == 0) throw PreconditionError("K_{r,s} needs r, s >= 1");
  (void)side;
  return ceil_log2(r + s + 1);
}

}  // namespace interfere
