#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/lattice_state.hpp"
#include "qwalk/shift_plan.hpp"
#include "qwalk/walk_engine.hpp"

namespace qwalk {

/// Sign of the plane-wave factor exp(sign * i * sum_r a_{r,j} k_r) attached to
/// coin state j. The order and spectrum results do not depend on it.
enum class SignConvention { PlusIK, MinusIK };

std::string_view to_string(SignConvention sign);

using Momentum = std::vector<double>;

/// V_k = D(k) C, where D(k) is diagonal in the coin basis. For cyclic and
/// partial-cycle coins V_k has the coin's nonzero pattern.
class MomentumPropagator {
 public:
  MomentumPropagator(CoinMatrix coin, ShiftTable shifts, SignConvention sign = SignConvention::MinusIK);

  const CoinMatrix& coin() const { return coin_; }
  const ShiftTable& shifts() const { return shifts_; }
  SignConvention sign_convention() const { return sign_; }
  std::size_t dimension() const { return shifts_.dimension(); }

 private:
  CoinMatrix coin_;
  ShiftTable shifts_;
  SignConvention sign_;
};

struct SpectrumReport {
  std::vector<Momentum> k_samples;
  std::vector<std::vector<Complex>> eigenvalue_sets;
  bool k_independent = false;
  bool matches_roots_of_unity = false;
};

/// Wraps an angle into [-pi, pi).
double wrap_momentum(double k);

/// Components outside [-pi, pi) are wrapped.
DenseMatrix evaluate_propagator(const MomentumPropagator& prop, std::span<const double> k);

/// The deterministic points (origin, then -pi on each axis in turn) followed
/// by `random_count` seeded uniform draws from [-pi, pi)^d.
std::vector<Momentum> momentum_samples(std::size_t dimension, std::size_t random_count, std::uint64_t seed);

/// Common matrix order of V_k over the deterministic points plus `k_samples`
/// random momenta. Disagreement between samples throws ConstraintError.
std::optional<std::size_t> propagator_order(const MomentumPropagator& prop, std::size_t k_samples,
                                            std::size_t max_order, std::uint64_t seed = 0,
                                            double tol = kTolMat);

/// Roots of lambda^n = p, p the product of the cycle weights of V_k. Cyclic
/// coins only. Sorted by argument.
std::vector<Complex> characteristic_eigenvalues(const MomentumPropagator& prop, std::span<const double> k);

/// General dense eigenvalues, sorted by argument.
std::vector<Complex> numeric_eigenvalues(const DenseMatrix& matrix);

/// exp(2 pi i m / n) for m = 0..n-1, sorted by argument.
std::vector<Complex> roots_of_unity(std::size_t n);

/// Sorts by principal argument, treating arguments within `tol` of -pi as +pi
/// so that eigenvalues near -1 sort consistently.
void sort_by_argument(std::vector<Complex>& values, double tol = 1e-9);

/// Largest elementwise distance between two argument-sorted sets.
double max_set_deviation(std::span<const Complex> a, std::span<const Complex> b);

/// Eigenvalues over `samples` momenta (deterministic points first). Cyclic
/// coins use the characteristic polynomial; other coins a dense eigensolver.
SpectrumReport spectrum_sweep(const MomentumPropagator& prop, std::size_t samples, std::uint64_t seed = 0,
                              double tol = kTolMat);

/// Smallest half-width per dimension that keeps t steps away from the window edge.
std::vector<std::int64_t> minimum_oracle_window(const WalkInstance& instance, std::size_t t);

/// Brute-force check of the sparse engine: builds the full step matrix on the
/// truncated lattice [-h_r, h_r] per dimension and applies it t times.
/// Refuses (WindowTooSmall) rather than let amplitude reach the boundary.
WalkState dense_oracle_evolve(const WalkInstance& instance, std::size_t t,
                              std::span<const std::int64_t> half_widths);

}  // namespace qwalk
