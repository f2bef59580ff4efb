// Command-line front end for building coins, running walks, detecting
// revivals, sweeping spectra and reproducing the reference tables.
//
// Exit codes: 0 success / PASS, 1 FAIL or runtime failure, 2 config error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qwalk::ConfigError("", "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qwalk::Error("cannot write '" + path + "'");
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coined quantum walks with exact full-state revivals"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string csv_path;
  std::uint64_t seed = 0;
  std::size_t samples = 10;
  std::size_t max_order = 64;
  int which = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output path (default stdout)");
    sub->add_option("--seed", seed, "Seed for randomized momentum sampling");
    sub->add_option("--samples", samples, "Number of random momentum samples")->check(CLI::PositiveNumber);
  };
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Walk config (JSON)")->required();
    add_common(sub);
  };

  auto* coin_build = app.add_subcommand("coin-build", "Build and print the configured coin");
  add_config(coin_build);
  auto* coin_order = app.add_subcommand("coin-order", "Matrix order of the coin and of V_k over momentum samples");
  add_config(coin_order);
  coin_order->add_option("--max-order", max_order, "Largest power to try")->check(CLI::PositiveNumber);
  auto* walk_run = app.add_subcommand("walk-run", "Evolve the walk and dump every state");
  add_config(walk_run);
  walk_run->add_option("--csv", csv_path, "Also write the probability table as CSV");
  auto* walk_period = app.add_subcommand("walk-period", "Detect the revival period");
  add_config(walk_period);
  auto* spectrum = app.add_subcommand("spectrum", "Sweep the eigenvalues of V_k");
  add_config(spectrum);
  auto* reproduce = app.add_subcommand("reproduce-table", "Compare a bundled walk against its reference table");
  reproduce->add_option("--which", which, "Table number (1, 2 or 3)")->required()->check(CLI::Range(1, 3));
  add_common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (reproduce->parsed()) {
      const qwalk::TableComparison cmp = qwalk::reproduce_table(which);
      write_text(out_path, dump(cmp.to_json()));
      std::cerr << "table " << which << ": " << (cmp.pass ? "PASS" : "FAIL")
                << " (max deviation " << cmp.max_deviation << ")\n";
      return cmp.pass ? kExitOk : kExitFail;
    }

    const qwalk::WalkConfig config = qwalk::parse_config(read_file(config_path));
    const bool seed_given = app.get_subcommands().front()->count("--seed") > 0;
    const std::uint64_t effective_seed = seed_given ? seed : config.seed;

    if (coin_build->parsed()) {
      write_text(out_path, dump(qwalk::coin_to_json(qwalk::build_coin(config))));
    } else if (coin_order->parsed()) {
      const qwalk::CoinMatrix coin = qwalk::build_coin(config);
      const auto order = qwalk::matrix_order(coin.matrix(), max_order, config.tolerances.mat);
      nlohmann::json record{{"schema_version", qwalk::kSchemaVersion},
                            {"record", "coin_order"},
                            {"coin_order", order ? nlohmann::json(*order) : nlohmann::json(nullptr)}};
      try {
        const auto prop_order = qwalk::propagator_order(qwalk::build_propagator(config), samples, max_order,
                                                        effective_seed, config.tolerances.mat);
        record["propagator_order"] = prop_order ? nlohmann::json(*prop_order) : nlohmann::json(nullptr);
      } catch (const qwalk::ConstraintError& e) {
        record["propagator_order"] = nullptr;
        record["propagator_order_error"] = e.what();
      }
      write_text(out_path, dump(record));
    } else if (walk_run->parsed()) {
      const qwalk::RunOutput run = qwalk::run_walk(config);
      write_text(out_path, dump(run.record));
      if (!csv_path.empty()) write_text(csv_path, run.probability_csv);
    } else if (walk_period->parsed()) {
      write_text(out_path, dump(qwalk::run_period(config)));
    } else if (spectrum->parsed()) {
      write_text(out_path, dump(qwalk::run_spectrum(config, samples, effective_seed)));
    }
    return kExitOk;
  } catch (const qwalk::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
