#pragma once

// Seeded generators shared by the property tests and the acceptance suite.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/lattice_state.hpp"
#include "qwalk/shift_plan.hpp"

namespace qwalk::testing {

using Rng = std::mt19937_64;

inline constexpr double kPi = std::numbers::pi;

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline double uniform_angle(Rng& rng) { return std::uniform_real_distribution<double>(-kPi, kPi)(rng); }

/// n - 1 uniform phases completed to a valid cyclic phase set.
inline std::vector<double> random_valid_phases(Rng& rng, std::size_t n) {
  std::vector<double> partial(n - 1);
  for (double& p : partial) p = uniform_angle(rng);
  return complete_phases(partial);
}

inline CoinMatrix random_cyclic_coin(Rng& rng, std::size_t n) { return build_cyclic_coin(random_valid_phases(rng, n)); }

inline Complex random_gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

/// Gram-Schmidt on the rows of a complex Gaussian matrix.
inline DenseMatrix random_unitary(Rng& rng, std::size_t n) {
  std::vector<std::vector<Complex>> rows(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (Complex& z : rows[i]) z = random_gaussian_complex(rng);
    for (std::size_t k = 0; k < i; ++k) {
      Complex proj{};
      for (std::size_t j = 0; j < n; ++j) proj += std::conj(rows[k][j]) * rows[i][j];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= proj * rows[k][j];
    }
    double norm = 0.0;
    for (Complex z : rows[i]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (Complex& z : rows[i]) z /= norm;
  }
  return DenseMatrix::from_rows(rows);
}

/// Zero-sum row whose nonzero entries (at least two) sit on a random subset
/// of the coin states in `movable`.
inline std::vector<std::int64_t> random_zero_sum_row(Rng& rng, std::size_t n, std::int64_t max_abs,
                                                     std::size_t movable) {
  std::vector<std::int64_t> row(n, 0);
  for (;;) {
    std::vector<std::size_t> idx(movable);
    for (std::size_t i = 0; i < movable; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t count = uniform_size(rng, 2, movable);
    std::fill(row.begin(), row.end(), 0);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i + 1 < count; ++i) {
      std::int64_t a = 0;
      while (a == 0) a = uniform_int(rng, -max_abs, max_abs);
      row[idx[i]] = a;
      sum += a;
    }
    row[idx[count - 1]] = -sum;
    if (sum != 0 && std::abs(sum) <= max_abs) return row;
  }
}

inline std::vector<std::vector<std::int64_t>> random_zero_sum_grid(Rng& rng, std::size_t d, std::size_t n,
                                                                   std::int64_t max_abs) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < d; ++r) rows.push_back(random_zero_sum_row(rng, n, max_abs, n));
  return rows;
}

/// Normalized state with `support` random (position, coin) entries inside
/// [-radius, radius]^d.
inline WalkState random_state(Rng& rng, std::size_t d, std::size_t n, std::size_t support, std::int64_t radius) {
  std::vector<WalkState::Entry> entries;
  for (std::size_t s = 0; s < support; ++s) {
    std::vector<std::int64_t> coords(d);
    for (auto& x : coords) x = uniform_int(rng, -radius, radius);
    entries.push_back({LatticePosition(coords), uniform_size(rng, 0, n - 1), random_gaussian_complex(rng)});
  }
  return WalkState::from_entries(d, n, entries).normalized();
}

inline WalkState localized_state(std::size_t d, std::size_t n, const LatticePosition& at, std::size_t coin) {
  const WalkState::Entry e{at, coin, Complex{1.0, 0.0}};
  return WalkState::from_entries(d, n, std::span<const WalkState::Entry>(&e, 1));
}

}  // namespace qwalk::testing
