#pragma once

#include <cstdint>

#include "qwalk/errors.hpp"

namespace qwalk::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("lattice coordinate overflow");
  return out;
}

}  // namespace qwalk::detail
