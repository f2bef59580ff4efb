#include "qwalk/runner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/golden.hpp"

namespace qwalk {

using nlohmann::json;

namespace {

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json state_to_json(const WalkState& state) {
  json entries = json::array();
  for (const auto& [pos, vec] : state.amplitudes()) {
    for (std::size_t c = 0; c < vec.size(); ++c) {
      if (vec[c] == Complex{}) continue;
      entries.push_back({{"position", std::vector<std::int64_t>(pos.coords().begin(), pos.coords().end())},
                         {"coin", c + 1},
                         {"re", vec[c].real()},
                         {"im", vec[c].imag()}});
    }
  }
  return entries;
}

json revival_to_json(const RevivalReport& report) {
  return json{
      {"period", report.period ? json(*report.period) : json(nullptr)},
      {"mode", std::string(to_string(report.mode))},
      {"fidelity_series", report.fidelity_series},
      {"distance_series", report.distance_series},
  };
}

void append_csv_rows(std::ostringstream& csv, std::size_t t, const WalkState& state) {
  for (const auto& [pos, p] : probability_distribution(state)) {
    csv << t;
    for (std::int64_t x : pos.coords()) csv << ',' << x;
    csv << ',' << p << '\n';
  }
}

}  // namespace

json coin_to_json(const CoinMatrix& coin) {
  json rows = json::array();
  for (std::size_t i = 0; i < coin.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < coin.size(); ++j) row.push_back({coin.matrix()(i, j).real(), coin.matrix()(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json out{{"schema_version", kSchemaVersion},
           {"record", "coin"},
           {"kind", std::string(to_string(coin.kind()))},
           {"n", coin.size()},
           {"matrix", std::move(rows)},
           {"unitary", is_unitary(coin.matrix())}};
  if (coin.phases()) out["phases"] = *coin.phases();
  if (coin.cycle_length()) out["r"] = *coin.cycle_length();
  return out;
}

RunOutput run_walk(const WalkConfig& config) {
  const WalkInstance instance = build_instance(config);
  std::ostringstream csv;
  csv.precision(17);
  csv << "step";
  for (std::size_t r = 1; r <= config.d; ++r) csv << ",x" << r;
  csv << ",probability\n";

  json steps = json::array();
  WalkState state = instance.initial();
  for (std::size_t t = 0;; ++t) {
    steps.push_back({{"step", t}, {"norm", std::sqrt(state.norm_squared())}, {"state", state_to_json(state)}});
    append_csv_rows(csv, t, state);
    if (t == config.max_steps) break;
    try {
      state = step(state, instance);
    } catch (const Error& e) {
      throw Error("step " + std::to_string(t + 1) + ": " + e.what());
    }
  }

  RevivalReport revival;
  revival.mode = config.revival_mode;
  revival.fidelity_series = {1.0};
  revival.distance_series = {0.0};
  if (config.max_steps > 0) revival = detect_revival(instance, config.max_steps, config.revival_mode);

  json record{{"schema_version", kSchemaVersion},
              {"record", "walk_run"},
              {"d", config.d},
              {"n", config.n},
              {"coin_kind", std::string(to_string(config.coin.kind))},
              {"max_steps", config.max_steps},
              {"steps", std::move(steps)}};
  record.update(revival_to_json(revival));
  return {std::move(record), csv.str()};
}

json run_period(const WalkConfig& config) {
  const WalkInstance instance = build_instance(config);
  json record{{"schema_version", kSchemaVersion},
              {"record", "revival_report"},
              {"max_steps", config.max_steps}};
  record.update(revival_to_json(detect_revival(instance, std::max<std::size_t>(config.max_steps, 1),
                                               config.revival_mode)));
  return record;
}

json run_spectrum(const WalkConfig& config, std::size_t samples, std::uint64_t seed) {
  const MomentumPropagator prop = build_propagator(config);
  const SpectrumReport report = spectrum_sweep(prop, samples, seed, config.tolerances.mat);
  json sample_list = json::array();
  for (std::size_t s = 0; s < report.k_samples.size(); ++s) {
    json eigenvalues = json::array();
    for (Complex z : report.eigenvalue_sets[s]) {
      json e = complex_json(z);
      e["arg"] = std::arg(z);
      eigenvalues.push_back(std::move(e));
    }
    sample_list.push_back({{"k", report.k_samples[s]}, {"eigenvalues", std::move(eigenvalues)}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"record", "spectrum_report"},
              {"d", config.d},
              {"n", config.n},
              {"coin_kind", std::string(to_string(config.coin.kind))},
              {"method", prop.coin().kind() == CoinKind::Cyclic ? "characteristic_polynomial" : "numeric"},
              {"sign_convention", std::string(to_string(config.sign_convention))},
              {"seed", seed},
              {"samples", std::move(sample_list)},
              {"k_independent", report.k_independent},
              {"matches_roots_of_unity", report.matches_roots_of_unity}};
}

json TableComparison::to_json() const {
  return json{{"schema_version", kSchemaVersion},
              {"record", "table_comparison"},
              {"table", table},
              {"result", pass ? "PASS" : "FAIL"},
              {"tolerance", tolerance},
              {"max_deviation", max_deviation},
              {"step_deviations", step_deviations},
              {"period", period ? json(*period) : json(nullptr)},
              {"expected_period", expected_period}};
}

TableComparison reproduce_table(int which) {
  const WalkConfig config = parse_config(bundled_config(which));
  const WalkInstance instance = build_instance(config);
  const std::vector<GoldenStep> rows = golden_table(which);

  TableComparison cmp;
  cmp.table = which;
  cmp.expected_period = golden_period(which);
  const std::size_t last = rows.back().step;
  const std::vector<WalkState> states = trajectory(instance, last);
  for (const GoldenStep& row : rows) {
    const double dev = max_abs_deviation(states[row.step], row.expected);
    cmp.step_deviations.push_back(dev);
    cmp.max_deviation = std::max(cmp.max_deviation, dev);
  }
  cmp.period = detect_revival(instance, std::max<std::size_t>(config.max_steps, 1), config.revival_mode).period;
  cmp.pass = cmp.max_deviation <= cmp.tolerance && cmp.period == cmp.expected_period;
  return cmp;
}

}  // namespace qwalk
