#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/config.hpp"

namespace qwalk {

struct RunOutput {
  nlohmann::json record;     // schema_version 1, "record": "walk_run"
  std::string probability_csv;  // header "step,x1,...,xd,probability"
};

/// Evolves the configured walk for max_steps steps, dumping every state and
/// the revival series.
RunOutput run_walk(const WalkConfig& config);

/// Revival detection only; record type "revival_report".
nlohmann::json run_period(const WalkConfig& config);

/// Spectrum sweep over `samples` momenta seeded by `seed`.
nlohmann::json run_spectrum(const WalkConfig& config, std::size_t samples, std::uint64_t seed);

nlohmann::json coin_to_json(const CoinMatrix& coin);

struct TableComparison {
  int table = 0;
  bool pass = false;
  double tolerance = 1e-12;
  double max_deviation = 0.0;
  std::vector<double> step_deviations;  // one per tabulated step
  std::optional<std::size_t> period;
  std::size_t expected_period = 0;

  nlohmann::json to_json() const;
};

/// Runs bundled walk 1, 2 or 3 and compares every tabulated amplitude.
TableComparison reproduce_table(int which);

}  // namespace qwalk
