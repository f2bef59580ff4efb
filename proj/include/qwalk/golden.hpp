#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qwalk/lattice_state.hpp"

namespace qwalk {

/// The three reference walks with tabulated states:
///   1: two coin states on a line, period 2;
///   2: three coin states on a line with shifts (-5, 3, 2), period 3;
///   3: three coin states on the square lattice, period 3.
/// Walk 3 moves coin state 3 by (-2, +2), the zero-sum displacement its
/// tabulated states require.
std::string_view bundled_config(int which);

struct GoldenStep {
  std::size_t step;
  WalkState expected;
};

std::vector<GoldenStep> golden_table(int which);

std::size_t golden_period(int which);

}  // namespace qwalk
