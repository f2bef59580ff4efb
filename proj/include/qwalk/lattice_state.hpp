#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

inline constexpr double kTolNorm = 1e-12;
inline constexpr double kTolMat = 1e-10;
inline constexpr double kTolRevival = 1e-9;
inline constexpr double kTolPhase = 1e-9;

/// Numerical tolerances shared by the construction, engine and analysis code.
/// `prune_epsilon` = 0 keeps the default of pruning exact zeros only.
struct Tolerances {
  double norm = kTolNorm;
  double mat = kTolMat;
  double revival = kTolRevival;
  double phase = kTolPhase;
  double prune_epsilon = 0.0;

  bool operator==(const Tolerances&) const = default;
};

/// A site of the d-dimensional integer lattice. Ordered lexicographically so it
/// can key a std::map; d >= 1.
class LatticePosition {
 public:
  explicit LatticePosition(std::vector<std::int64_t> coords);
  LatticePosition(std::initializer_list<std::int64_t> coords);

  static LatticePosition origin(std::size_t dimension);

  std::size_t dimension() const { return coords_.size(); }
  std::int64_t operator[](std::size_t r) const { return coords_[r]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  auto operator<=>(const LatticePosition&) const = default;
  bool operator==(const LatticePosition&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Square complex matrix stored row-major.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n);
  DenseMatrix(std::size_t n, std::vector<Complex> row_major);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

  std::size_t size() const { return n_; }
  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  std::span<const Complex> entries() const { return entries_; }

  DenseMatrix adjoint() const;
  std::vector<Complex> apply(std::span<const Complex> v) const;
  double max_abs_diff(const DenseMatrix& other) const;
  bool has_zero_diagonal() const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
};

DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Largest entry magnitude of (A - I).
double deviation_from_identity(const DenseMatrix& a);

/// True iff both A*A^dagger and A^dagger*A are within `tol` of the identity, entrywise.
bool is_unitary(const DenseMatrix& a, double tol = kTolMat);

/// Coin-and-position state of the walker. Positions are stored sparsely, each
/// with a dense amplitude vector of length n (coin index 0-based). Positions
/// whose vector is entirely exact zero are never stored.
///
/// The unit-norm requirement is checked by WalkInstance against its configured
/// tolerance; intermediate values may be built here without it.
class WalkState {
 public:
  using AmplitudeMap = std::map<LatticePosition, std::vector<Complex>>;

  struct Entry {
    LatticePosition position;
    std::size_t coin;
    Complex amplitude;
  };

  WalkState(std::size_t dimension, std::size_t coin_size);
  WalkState(std::size_t dimension, std::size_t coin_size, AmplitudeMap amplitudes);

  /// Sums duplicate (position, coin) entries.
  static WalkState from_entries(std::size_t dimension, std::size_t coin_size,
                                std::span<const Entry> entries);

  std::size_t dimension() const { return d_; }
  std::size_t coin_size() const { return n_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  std::size_t support_size() const { return amplitudes_.size(); }

  Complex amplitude(const LatticePosition& position, std::size_t coin) const;
  double norm_squared() const;
  bool is_normalized(double tol = kTolNorm) const;

  WalkState normalized() const;
  /// Drops amplitudes with modulus <= epsilon (epsilon = 0 drops exact zeros).
  WalkState pruned(double epsilon) const;
  WalkState scaled(Complex factor) const;

  bool operator==(const WalkState&) const = default;

 private:
  std::size_t d_;
  std::size_t n_;
  AmplitudeMap amplitudes_;
};

Complex inner_product(const WalkState& a, const WalkState& b);

/// l2 distance over the union of both supports.
double l2_distance(const WalkState& a, const WalkState& b);

/// Largest |a - b| over all (position, coin) pairs of either support.
double max_abs_deviation(const WalkState& a, const WalkState& b);

/// Multiplies every occupied site's amplitude vector by `coin`.
WalkState apply_coin(const WalkState& state, const DenseMatrix& coin);

}  // namespace qwalk
