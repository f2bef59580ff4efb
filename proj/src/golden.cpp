#include "qwalk/golden.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bundled_configs.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void require_table(int which) {
  if (which < 1 || which > 3) throw RangeError("table must be 1, 2 or 3, got " + std::to_string(which));
}

Complex unit(double angle) { return std::polar(1.0, angle); }

// Coins are 1-based here so the rows read like the printed tables.
struct Ket {
  std::size_t coin;
  LatticePosition position;
  Complex amplitude;
};

WalkState make(std::size_t d, std::size_t n, std::initializer_list<Ket> kets) {
  std::vector<WalkState::Entry> entries;
  for (const Ket& k : kets) entries.push_back({k.position, k.coin - 1, k.amplitude});
  return WalkState::from_entries(d, n, entries);
}

}  // namespace

std::string_view bundled_config(int which) {
  require_table(which);
  switch (which) {
    case 1: return detail::kTable1Config;
    case 2: return detail::kTable2Config;
    default: return detail::kTable3Config;
  }
}

std::size_t golden_period(int which) {
  require_table(which);
  return which == 1 ? 2 : 3;
}

std::vector<GoldenStep> golden_table(int which) {
  require_table(which);
  constexpr double third = 2.0 * std::numbers::pi / 3.0;
  if (which == 1) {
    const double a = 1.0 / std::sqrt(2.0);
    const WalkState start = make(1, 2, {{1, {1}, a}, {2, {1}, a}});
    return {
        {0, start},
        {1, make(1, 2, {{1, {0}, a * unit(-third)}, {2, {2}, a * unit(third)}})},
        {2, start},
    };
  }
  const double a = 1.0 / std::sqrt(3.0);
  if (which == 2) {
    const WalkState start = make(1, 3, {{1, {3}, a}, {2, {2}, a}, {3, {1}, a}});
    return {
        {0, start},
        {1, make(1, 3, {{1, {-4}, a}, {2, {6}, a * unit(third)}, {3, {4}, a * unit(-third)}})},
        {2, make(1, 3, {{1, {-1}, a * unit(-third)}, {2, {-1}, a * unit(third)}, {3, {8}, a}})},
        {3, start},
    };
  }
  const WalkState start = make(2, 3, {{1, {0, 0}, a}, {2, {0, 0}, a}, {3, {0, 0}, a}});
  return {
      {0, start},
      {1, make(2, 3, {{1, {1, -1}, a}, {2, {1, -1}, a * unit(third)}, {3, {-2, 2}, a * unit(-third)}})},
      {2, make(2, 3, {{1, {-1, 1}, a * unit(-third)}, {2, {2, -2}, a * unit(third)}, {3, {-1, 1}, a}})},
      {3, start},
  };
}

}  // namespace qwalk
