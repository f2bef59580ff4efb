#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qwalk/lattice_state.hpp"

namespace qwalk {

/// Integer displacement a_{r,j} applied along spatial dimension r to the
/// amplitude carried by coin state j. Every dimension's row sums to zero;
/// an all-zero row is accepted but flagged inert.
class ShiftTable {
 public:
  std::size_t dimension() const { return d_; }
  std::size_t coin_size() const { return n_; }

  std::int64_t at(std::size_t r, std::size_t j) const { return displacements_[r * n_ + j]; }
  std::span<const std::int64_t> row(std::size_t r) const {
    return std::span<const std::int64_t>(displacements_).subspan(r * n_, n_);
  }
  std::vector<std::vector<std::int64_t>> rows() const;

  bool is_inert(std::size_t r) const { return inert_[r]; }
  std::vector<std::size_t> inert_dimensions() const;
  bool has_warnings() const { return !inert_dimensions().empty(); }

  /// True when coin state j does not move along any dimension.
  bool is_stationary_coin(std::size_t j) const;

  ShiftTable negated() const;

  bool operator==(const ShiftTable&) const = default;

 private:
  ShiftTable(std::size_t d, std::size_t n, std::vector<std::int64_t> displacements);

  std::size_t d_;
  std::size_t n_;
  std::vector<std::int64_t> displacements_;
  std::vector<bool> inert_;

  friend ShiftTable build_shift_table(const std::vector<std::vector<std::int64_t>>&);
};

/// Validates a d x n grid (d >= 1, n >= 2). A row with nonzero sum raises
/// ZeroSumViolation naming the dimension.
ShiftTable build_shift_table(const std::vector<std::vector<std::int64_t>>& rows);

/// n even: -n/2..-1, 1..n/2. n odd: -(n-1)/2..(n-1)/2. Ascending.
std::vector<std::int64_t> usual_shift_choice(std::size_t n);

/// The two-state walk on a line: coin |0> steps left, |1> steps right, i.e.
/// x -> x + (-1)^{c+1}. Table index j = c.
ShiftTable conventional_two_state_shifts();

/// Moves the coin-j amplitude at x to x + (a_{1,j}, ..., a_{d,j}).
/// Throws OverflowError instead of wrapping coordinates.
WalkState apply_shift(const WalkState& state, const ShiftTable& table);

}  // namespace qwalk
