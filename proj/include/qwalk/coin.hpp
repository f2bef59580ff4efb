#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qwalk/lattice_state.hpp"

namespace qwalk {

enum class CoinKind { Cyclic, PartialCycle, General1D, Custom };

std::string_view to_string(CoinKind kind);

/// A unitary coin operator together with how it was built.
///
/// Coin basis states are labelled 1..n in configs and printed tables and
/// 0..n-1 in code: phase `phases()[j]` is theta_{j+1}. For Cyclic coins the
/// nonzero entries sit at (j, j-1) for j = 1..n-1 with weight exp(i*phases[j])
/// and at (0, n-1) with weight exp(i*phases[0]).
class CoinMatrix {
 public:
  /// Any unitary matrix; no revival guarantee attaches to it.
  static CoinMatrix custom(DenseMatrix matrix, double tol = kTolMat);

  const DenseMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.size(); }
  CoinKind kind() const { return kind_; }
  /// Phases wrapped into (-pi, pi]; present for Cyclic and PartialCycle.
  const std::optional<std::vector<double>>& phases() const { return phases_; }
  /// Present for PartialCycle.
  std::optional<std::size_t> cycle_length() const { return cycle_length_; }

  bool operator==(const CoinMatrix&) const = default;

 private:
  CoinMatrix(DenseMatrix matrix, CoinKind kind, std::optional<std::vector<double>> phases,
             std::optional<std::size_t> cycle_length);

  DenseMatrix matrix_;
  CoinKind kind_;
  std::optional<std::vector<double>> phases_;
  std::optional<std::size_t> cycle_length_;

  friend CoinMatrix build_general_coin_1d(double, double, double);
  friend CoinMatrix build_cyclic_coin(std::span<const double>, double);
  friend CoinMatrix build_partial_cycle_coin(std::size_t, std::size_t, std::span<const double>, double);
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

/// (sum of phases) reduced into (-pi, pi]; zero for a valid cyclic phase set.
double phase_sum_residual(std::span<const double> phases);

/// [[cos t, e^{i p1} sin t], [e^{i p2} sin t, -e^{i(p1+p2)} cos t]] with
/// t in [0, 2pi), p1, p2 in [0, pi).
CoinMatrix build_general_coin_1d(double theta, double phi1, double phi2);

/// Cyclic phase coin on n = phases.size() >= 2 states. The phases must sum to
/// a multiple of 2pi within `phase_tol`; a violation reports the residual.
CoinMatrix build_cyclic_coin(std::span<const double> phases, double phase_tol = kTolPhase);

/// Appends the phase in (-pi, pi] that makes the total a multiple of 2pi.
std::vector<double> complete_phases(std::span<const double> partial);

/// Cycles the first r basis states with the given r phases and fixes the
/// remaining n - r. Requires n >= r >= 2.
CoinMatrix build_partial_cycle_coin(std::size_t n, std::size_t r, std::span<const double> phases,
                                    double phase_tol = kTolPhase);

/// Reads the cycle weights lambda_1..lambda_n (0-based in the result) off a
/// matrix with the cyclic nonzero pattern.
std::vector<Complex> cyclic_weights(const DenseMatrix& matrix);

/// m-th power of the cyclic operator with weights lambda_1..lambda_n, placed
/// entry by entry from the closed-form products; no matrix multiplication.
/// For m = n the result is (product of all weights) * I.
DenseMatrix cyclic_power_from_weights(std::span<const Complex> weights, std::size_t m);

/// Closed-form W^m for a Cyclic coin, 1 <= m <= n.
DenseMatrix cyclic_power_closed_form(const CoinMatrix& coin, std::size_t m);

/// Smallest t in 1..max_order with |A^t - I| <= tol entrywise, if any.
/// Throws ConstraintError when A is not unitary within tol.
std::optional<std::size_t> matrix_order(const DenseMatrix& a, std::size_t max_order, double tol = kTolMat);

}  // namespace qwalk
