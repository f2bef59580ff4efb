#include "qwalk/shift_plan.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "checked_math.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

ShiftTable::ShiftTable(std::size_t d, std::size_t n, std::vector<std::int64_t> displacements)
    : d_(d), n_(n), displacements_(std::move(displacements)), inert_(d, false) {
  for (std::size_t r = 0; r < d_; ++r) {
    const auto row_r = row(r);
    inert_[r] = std::all_of(row_r.begin(), row_r.end(), [](std::int64_t a) { return a == 0; });
  }
}

std::vector<std::vector<std::int64_t>> ShiftTable::rows() const {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t r = 0; r < d_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

std::vector<std::size_t> ShiftTable::inert_dimensions() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < d_; ++r)
    if (inert_[r]) out.push_back(r);
  return out;
}

bool ShiftTable::is_stationary_coin(std::size_t j) const {
  for (std::size_t r = 0; r < d_; ++r)
    if (at(r, j) != 0) return false;
  return true;
}

ShiftTable ShiftTable::negated() const {
  std::vector<std::int64_t> flipped = displacements_;
  for (std::int64_t& a : flipped) {
    if (a == INT64_MIN) throw OverflowError("cannot negate displacement");
    a = -a;
  }
  return ShiftTable(d_, n_, std::move(flipped));
}

ShiftTable build_shift_table(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t d = rows.size();
  if (d == 0) throw DimensionError("shift table needs at least one dimension");
  const std::size_t n = rows.front().size();
  if (n < 2) throw DimensionError("shift table needs at least two coin states");
  std::vector<std::int64_t> flat;
  flat.reserve(d * n);
  for (std::size_t r = 0; r < d; ++r) {
    if (rows[r].size() != n) throw DimensionError("shift table rows must all have length n");
    __extension__ __int128 sum = 0;
    std::size_t nonzero = 0;
    for (std::int64_t a : rows[r]) {
      sum += a;
      if (a != 0) ++nonzero;
    }
    if (sum != 0) {
      std::ostringstream msg;
      msg << "displacements of dimension " << r << " sum to " << static_cast<long double>(sum)
          << ", expected 0";
      throw ZeroSumViolation(msg.str(), r, static_cast<double>(sum));
    }
    // A zero-sum row cannot have exactly one nonzero entry; kept so the
    // two-moving-states requirement is explicit.
    if (nonzero == 1) {
      std::ostringstream msg;
      msg << "dimension " << r << " must move at least two coin states or none";
      throw ConstraintError(msg.str());
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return ShiftTable(d, n, std::move(flat));
}

std::vector<std::int64_t> usual_shift_choice(std::size_t n) {
  if (n < 2) throw DimensionError("usual shift choice needs n >= 2");
  const auto half = static_cast<std::int64_t>(n / 2);
  std::vector<std::int64_t> out;
  out.reserve(n);
  for (std::int64_t a = -half; a <= half; ++a) {
    if (a == 0 && n % 2 == 0) continue;
    out.push_back(a);
  }
  return out;
}

ShiftTable conventional_two_state_shifts() { return build_shift_table({{-1, +1}}); }

WalkState apply_shift(const WalkState& state, const ShiftTable& table) {
  if (state.dimension() != table.dimension() || state.coin_size() != table.coin_size())
    throw DimensionError("shift table does not match the state's dimensions");
  const std::size_t d = state.dimension();
  const std::size_t n = state.coin_size();
  WalkState::AmplitudeMap out;
  std::vector<std::int64_t> target(d);
  for (const auto& [pos, vec] : state.amplitudes()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (vec[j] == Complex{}) continue;
      for (std::size_t r = 0; r < d; ++r) target[r] = detail::checked_add(pos[r], table.at(r, j));
      auto [it, inserted] = out.try_emplace(LatticePosition(target), n);
      it->second[j] = vec[j];
    }
  }
  return WalkState(d, n, std::move(out));
}

}  // namespace qwalk
