#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/coin.hpp"
#include "qwalk/lattice_state.hpp"
#include "qwalk/momentum_lab.hpp"
#include "qwalk/shift_plan.hpp"
#include "qwalk/walk_engine.hpp"

namespace qwalk {

struct CoinSpec {
  CoinKind kind = CoinKind::Cyclic;
  std::vector<double> phases;              // cyclic, partial_cycle
  std::optional<std::size_t> cycle_length;  // partial_cycle
  double theta = 0.0;                      // general_1d
  double phi1 = 0.0;
  double phi2 = 0.0;
  std::vector<std::vector<Complex>> custom_matrix;  // custom

  bool operator==(const CoinSpec&) const = default;
};

struct ShiftSpec {
  bool usual = false;  // every dimension uses usual_shift_choice(n)
  std::vector<std::vector<std::int64_t>> rows;

  bool operator==(const ShiftSpec&) const = default;
};

/// One initial amplitude. `coin` is 1-based, as in configs and printed tables.
struct InitialAmplitude {
  std::vector<std::int64_t> position;
  std::size_t coin = 1;
  double amp_re = 0.0;
  double amp_im = 0.0;

  bool operator==(const InitialAmplitude&) const = default;
};

struct WalkConfig {
  std::size_t d = 1;
  std::size_t n = 2;
  CoinSpec coin;
  ShiftSpec shifts;
  std::vector<InitialAmplitude> initial;
  bool normalize = false;
  std::size_t max_steps = 0;
  Tolerances tolerances;
  RevivalMode revival_mode = RevivalMode::Exact;
  SignConvention sign_convention = SignConvention::MinusIK;
  std::uint64_t seed = 0;

  bool operator==(const WalkConfig&) const = default;
};

inline constexpr int kSchemaVersion = 1;

/// Accepts a JSON number or a string "pi", "-pi", "pi*p", "pi*p/q", "pi/q"
/// (p a signed integer, q a positive integer).
double parse_angle(const nlohmann::json& value, const std::string& field);

/// Parses and validates a config. Every failure is a ConfigError naming the
/// offending field, e.g. "shifts[0]" or "coin.phases".
WalkConfig parse_config(std::string_view text);

nlohmann::json config_to_json(const WalkConfig& config);
std::string serialize_config(const WalkConfig& config);

CoinMatrix build_coin(const WalkConfig& config);
ShiftTable build_shifts(const WalkConfig& config);
WalkState build_initial_state(const WalkConfig& config);
WalkInstance build_instance(const WalkConfig& config);
MomentumPropagator build_propagator(const WalkConfig& config);

}  // namespace qwalk
