#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/lattice_state.hpp"
#include "qwalk/shift_plan.hpp"

namespace qwalk {

enum class RevivalMode { Exact, UpToGlobalPhase };

std::string_view to_string(RevivalMode mode);

/// Coin, shift table and normalized initial state of one walk. One step is
/// U = S (I x C): the coin acts on every site, then the shift moves amplitudes.
class WalkInstance {
 public:
  WalkInstance(CoinMatrix coin, ShiftTable shifts, WalkState initial, Tolerances tolerances = {});

  const CoinMatrix& coin() const { return coin_; }
  const ShiftTable& shifts() const { return shifts_; }
  const WalkState& initial() const { return initial_; }
  const Tolerances& tolerances() const { return tolerances_; }

 private:
  CoinMatrix coin_;
  ShiftTable shifts_;
  WalkState initial_;
  Tolerances tolerances_;
};

/// Index t of each series refers to the state after t steps; entry 0 is the
/// initial state itself.
struct RevivalReport {
  std::optional<std::size_t> period;
  std::vector<double> fidelity_series;
  std::vector<double> distance_series;
  RevivalMode mode = RevivalMode::Exact;
};

WalkState step(const WalkState& state, const WalkInstance& instance);

WalkState evolve(const WalkInstance& instance, std::size_t t);

/// States after 0, 1, ..., t steps.
std::vector<WalkState> trajectory(const WalkInstance& instance, std::size_t t);

/// First t in 1..max_steps at which the walk returns to its initial state:
/// ||psi_t - psi_0|| <= tol (Exact) or 1 - |<psi_0|psi_t>| <= tol
/// (UpToGlobalPhase), with tol the instance's revival tolerance.
RevivalReport detect_revival(const WalkInstance& instance, std::size_t max_steps,
                             RevivalMode mode = RevivalMode::Exact);

std::map<LatticePosition, double> probability_distribution(const WalkState& state);

/// For a partial-cycle coin whose fixed coin states never move: true iff every
/// amplitude that starts on a fixed coin state stays at its site with the
/// same modulus for steps 1..t.
bool stationary_component_check(const WalkInstance& instance, std::size_t t);

}  // namespace qwalk
