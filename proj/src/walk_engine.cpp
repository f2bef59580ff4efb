#include "qwalk/walk_engine.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string_view to_string(RevivalMode mode) {
  return mode == RevivalMode::Exact ? "exact" : "global_phase";
}

WalkInstance::WalkInstance(CoinMatrix coin, ShiftTable shifts, WalkState initial, Tolerances tolerances)
    : coin_(std::move(coin)),
      shifts_(std::move(shifts)),
      initial_(std::move(initial)),
      tolerances_(tolerances) {
  if (coin_.size() != shifts_.coin_size() || coin_.size() != initial_.coin_size())
    throw DimensionError("coin, shift table and initial state disagree on the coin dimension");
  if (shifts_.dimension() != initial_.dimension())
    throw DimensionError("shift table and initial state disagree on the spatial dimension");
  if (!is_unitary(coin_.matrix(), tolerances_.mat)) throw ConstraintError("coin is not unitary");
  if (!initial_.is_normalized(tolerances_.norm)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "initial state has squared norm " << initial_.norm_squared() << ", expected 1";
    throw ConstraintError(msg.str(), initial_.norm_squared() - 1.0);
  }
}

WalkState step(const WalkState& state, const WalkInstance& instance) {
  WalkState next = apply_shift(apply_coin(state, instance.coin().matrix()), instance.shifts());
  const double eps = instance.tolerances().prune_epsilon;
  return eps > 0.0 ? next.pruned(eps) : next;
}

WalkState evolve(const WalkInstance& instance, std::size_t t) {
  WalkState state = instance.initial();
  for (std::size_t i = 0; i < t; ++i) state = step(state, instance);
  return state;
}

std::vector<WalkState> trajectory(const WalkInstance& instance, std::size_t t) {
  std::vector<WalkState> states;
  states.reserve(t + 1);
  states.push_back(instance.initial());
  for (std::size_t i = 0; i < t; ++i) states.push_back(step(states.back(), instance));
  return states;
}

RevivalReport detect_revival(const WalkInstance& instance, std::size_t max_steps, RevivalMode mode) {
  if (max_steps < 1) throw RangeError("detect_revival needs max_steps >= 1");
  const WalkState& initial = instance.initial();
  const double tol = instance.tolerances().revival;

  RevivalReport report;
  report.mode = mode;
  report.fidelity_series.push_back(std::abs(inner_product(initial, initial)));
  report.distance_series.push_back(0.0);

  WalkState state = initial;
  for (std::size_t t = 1; t <= max_steps; ++t) {
    state = step(state, instance);
    const double fidelity = std::abs(inner_product(initial, state));
    const double distance = l2_distance(initial, state);
    report.fidelity_series.push_back(fidelity);
    report.distance_series.push_back(distance);
    const bool revived = mode == RevivalMode::Exact ? distance <= tol : 1.0 - fidelity <= tol;
    if (revived) {
      report.period = t;
      break;
    }
  }
  return report;
}

std::map<LatticePosition, double> probability_distribution(const WalkState& state) {
  std::map<LatticePosition, double> out;
  for (const auto& [pos, vec] : state.amplitudes()) {
    double p = 0.0;
    for (Complex z : vec) p += std::norm(z);
    out.emplace(pos, p);
  }
  return out;
}

bool stationary_component_check(const WalkInstance& instance, std::size_t t) {
  const CoinMatrix& coin = instance.coin();
  if (coin.kind() != CoinKind::PartialCycle || !coin.cycle_length())
    throw ConstraintError("stationary_component_check needs a partial-cycle coin");
  const std::size_t r = *coin.cycle_length();
  const std::size_t n = coin.size();
  for (std::size_t j = r; j < n; ++j) {
    if (!instance.shifts().is_stationary_coin(j)) {
      std::ostringstream msg;
      msg << "coin state " << j + 1 << " is fixed by the coin but has a nonzero displacement";
      throw ConstraintError(msg.str());
    }
  }

  struct Pinned {
    LatticePosition position;
    std::size_t coin;
    double modulus;
  };
  std::vector<Pinned> pinned;
  double fixed_weight = 0.0;
  for (const auto& [pos, vec] : instance.initial().amplitudes()) {
    for (std::size_t j = r; j < n; ++j) {
      if (vec[j] == Complex{}) continue;
      pinned.push_back({pos, j, std::abs(vec[j])});
      fixed_weight += std::norm(vec[j]);
    }
  }

  const double tol = instance.tolerances().norm;
  WalkState state = instance.initial();
  for (std::size_t i = 0; i < t; ++i) {
    state = step(state, instance);
    for (const Pinned& p : pinned)
      if (std::abs(std::abs(state.amplitude(p.position, p.coin)) - p.modulus) > tol) return false;
    // No weight may flow into the fixed coin states from elsewhere.
    double weight = 0.0;
    for (const auto& [pos, vec] : state.amplitudes())
      for (std::size_t j = r; j < n; ++j) weight += std::norm(vec[j]);
    if (std::abs(weight - fixed_weight) > tol) return false;
  }
  return true;
}

}  // namespace qwalk
