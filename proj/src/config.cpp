#include "qwalk/config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

using nlohmann::json;

namespace {

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(path.empty() ? key : path + "." + key, "missing required field");
  return *it;
}

std::string child(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }

std::int64_t to_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::size_t to_count(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ConfigError(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

double to_real(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  return v.get<double>();
}

bool parse_integer(std::string_view text, long long& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size() && !text.empty();
}

CoinKind parse_kind(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  const auto s = v.get<std::string>();
  if (s == "cyclic") return CoinKind::Cyclic;
  if (s == "partial_cycle") return CoinKind::PartialCycle;
  if (s == "general_1d") return CoinKind::General1D;
  if (s == "custom") return CoinKind::Custom;
  throw ConfigError(path, "unknown coin kind '" + s + "'");
}

CoinSpec parse_coin(const json& obj, std::size_t n) {
  CoinSpec coin;
  coin.kind = parse_kind(require(obj, "kind", "coin"), "coin.kind");
  switch (coin.kind) {
    case CoinKind::PartialCycle:
      coin.cycle_length = to_count(require(obj, "r", "coin"), "coin.r");
      [[fallthrough]];
    case CoinKind::Cyclic: {
      const json& phases = require(obj, "phases", "coin");
      if (!phases.is_array()) throw ConfigError("coin.phases", "expected an array");
      for (std::size_t i = 0; i < phases.size(); ++i)
        coin.phases.push_back(parse_angle(phases[i], index_path("coin.phases", i)));
      break;
    }
    case CoinKind::General1D:
      coin.theta = parse_angle(require(obj, "theta", "coin"), "coin.theta");
      coin.phi1 = parse_angle(require(obj, "phi1", "coin"), "coin.phi1");
      coin.phi2 = parse_angle(require(obj, "phi2", "coin"), "coin.phi2");
      break;
    case CoinKind::Custom: {
      const json& rows = require(obj, "matrix", "coin");
      if (!rows.is_array() || rows.size() != n) throw ConfigError("coin.matrix", "expected n rows");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string row_path = index_path("coin.matrix", i);
        if (!rows[i].is_array() || rows[i].size() != n) throw ConfigError(row_path, "expected n entries");
        std::vector<Complex> row;
        for (std::size_t j = 0; j < n; ++j) {
          const json& entry = rows[i][j];
          const std::string entry_path = index_path(row_path, j);
          if (entry.is_number()) {
            row.emplace_back(entry.get<double>(), 0.0);
          } else if (entry.is_array() && entry.size() == 2) {
            row.emplace_back(to_real(entry[0], entry_path), to_real(entry[1], entry_path));
          } else {
            throw ConfigError(entry_path, "expected a number or [re, im]");
          }
        }
        coin.custom_matrix.push_back(std::move(row));
      }
      break;
    }
  }
  return coin;
}

Tolerances parse_tolerances(const json& obj) {
  Tolerances tol;
  if (!obj.is_object()) throw ConfigError("tolerances", "expected an object");
  auto read = [&](const char* key, double& slot) {
    if (const auto it = obj.find(key); it != obj.end()) {
      slot = to_real(*it, child("tolerances", key));
      if (!(slot >= 0.0)) throw ConfigError(child("tolerances", key), "must be non-negative");
    }
  };
  read("norm", tol.norm);
  read("mat", tol.mat);
  read("revival", tol.revival);
  read("phase", tol.phase);
  read("prune_epsilon", tol.prune_epsilon);
  return tol;
}

json angle_list(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(v);
  return out;
}

}  // namespace

double parse_angle(const json& value, const std::string& field) {
  if (value.is_number()) return value.get<double>();
  if (!value.is_string()) throw ConfigError(field, "expected a number or a \"pi*p/q\" string");
  std::string_view text = value.get_ref<const std::string&>();
  const std::string original(text);
  auto fail = [&]() -> double { throw ConfigError(field, "cannot parse angle '" + original + "'"); };

  double sign = 1.0;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    if (text.front() == '-') sign = -1.0;
    text.remove_prefix(1);
  }
  if (text.substr(0, 2) != "pi") return fail();
  text.remove_prefix(2);
  long long numerator = 1;
  long long denominator = 1;
  if (!text.empty() && text.front() == '*') {
    text.remove_prefix(1);
    const auto slash = text.find('/');
    if (!parse_integer(text.substr(0, slash), numerator)) return fail();
    text = slash == std::string_view::npos ? std::string_view{} : text.substr(slash);
  }
  if (!text.empty() && text.front() == '/') {
    text.remove_prefix(1);
    if (!parse_integer(text, denominator) || denominator <= 0) return fail();
    text = {};
  }
  if (!text.empty()) return fail();
  return sign * std::numbers::pi * static_cast<double>(numerator) / static_cast<double>(denominator);
}

WalkConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("", "config must be a JSON object");

  if (const auto it = root.find("schema_version"); it != root.end() && *it != kSchemaVersion)
    throw ConfigError("schema_version", "unsupported schema version");

  WalkConfig cfg;
  cfg.d = to_count(require(root, "d", ""), "d");
  cfg.n = to_count(require(root, "n", ""), "n");
  if (cfg.d < 1) throw ConfigError("d", "spatial dimension must be at least 1");
  if (cfg.n < 2) throw ConfigError("n", "coin dimension must be at least 2");

  cfg.coin = parse_coin(require(root, "coin", ""), cfg.n);

  const json& shifts = require(root, "shifts", "");
  if (shifts.is_string()) {
    if (shifts.get<std::string>() != "usual") throw ConfigError("shifts", "expected a grid or \"usual\"");
    cfg.shifts.usual = true;
  } else if (shifts.is_array()) {
    for (std::size_t r = 0; r < shifts.size(); ++r) {
      const std::string row_path = index_path("shifts", r);
      if (!shifts[r].is_array()) throw ConfigError(row_path, "expected an array of integers");
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < shifts[r].size(); ++j) row.push_back(to_int(shifts[r][j], index_path(row_path, j)));
      cfg.shifts.rows.push_back(std::move(row));
    }
  } else {
    throw ConfigError("shifts", "expected a grid or \"usual\"");
  }

  const json& initial = require(root, "initial", "");
  if (!initial.is_array() || initial.empty()) throw ConfigError("initial", "expected a non-empty array");
  for (std::size_t i = 0; i < initial.size(); ++i) {
    const std::string path = index_path("initial", i);
    InitialAmplitude amp;
    const json& pos = require(initial[i], "position", path);
    if (!pos.is_array()) throw ConfigError(child(path, "position"), "expected an array of integers");
    for (std::size_t r = 0; r < pos.size(); ++r)
      amp.position.push_back(to_int(pos[r], index_path(child(path, "position"), r)));
    amp.coin = to_count(require(initial[i], "coin", path), child(path, "coin"));
    amp.amp_re = to_real(require(initial[i], "amp_re", path), child(path, "amp_re"));
    if (const auto it = initial[i].find("amp_im"); it != initial[i].end())
      amp.amp_im = to_real(*it, child(path, "amp_im"));
    cfg.initial.push_back(std::move(amp));
  }

  if (const auto it = root.find("normalize"); it != root.end()) {
    if (!it->is_boolean()) throw ConfigError("normalize", "expected a boolean");
    cfg.normalize = it->get<bool>();
  }
  if (const auto it = root.find("max_steps"); it != root.end()) cfg.max_steps = to_count(*it, "max_steps");
  if (const auto it = root.find("tolerances"); it != root.end()) cfg.tolerances = parse_tolerances(*it);
  if (const auto it = root.find("revival_mode"); it != root.end()) {
    const std::string mode = it->is_string() ? it->get<std::string>() : "";
    if (mode == "exact") cfg.revival_mode = RevivalMode::Exact;
    else if (mode == "global_phase") cfg.revival_mode = RevivalMode::UpToGlobalPhase;
    else throw ConfigError("revival_mode", "expected \"exact\" or \"global_phase\"");
  }
  if (const auto it = root.find("sign_convention"); it != root.end()) {
    const std::string sign = it->is_string() ? it->get<std::string>() : "";
    if (sign == "minus_ik") cfg.sign_convention = SignConvention::MinusIK;
    else if (sign == "plus_ik") cfg.sign_convention = SignConvention::PlusIK;
    else throw ConfigError("sign_convention", "expected \"minus_ik\" or \"plus_ik\"");
  }
  if (const auto it = root.find("seed"); it != root.end()) {
    if (!it->is_number_unsigned()) throw ConfigError("seed", "expected a non-negative integer");
    cfg.seed = it->get<std::uint64_t>();
  }

  build_instance(cfg);
  return cfg;
}

json config_to_json(const WalkConfig& cfg) {
  json coin{{"kind", std::string(to_string(cfg.coin.kind))}};
  switch (cfg.coin.kind) {
    case CoinKind::PartialCycle:
      coin["r"] = cfg.coin.cycle_length.value_or(0);
      [[fallthrough]];
    case CoinKind::Cyclic:
      coin["phases"] = angle_list(cfg.coin.phases);
      break;
    case CoinKind::General1D:
      coin["theta"] = cfg.coin.theta;
      coin["phi1"] = cfg.coin.phi1;
      coin["phi2"] = cfg.coin.phi2;
      break;
    case CoinKind::Custom: {
      json rows = json::array();
      for (const auto& row : cfg.coin.custom_matrix) {
        json r = json::array();
        for (Complex z : row) r.push_back({z.real(), z.imag()});
        rows.push_back(std::move(r));
      }
      coin["matrix"] = std::move(rows);
      break;
    }
  }

  json initial = json::array();
  for (const InitialAmplitude& a : cfg.initial)
    initial.push_back({{"position", a.position}, {"coin", a.coin}, {"amp_re", a.amp_re}, {"amp_im", a.amp_im}});

  return json{
      {"schema_version", kSchemaVersion},
      {"d", cfg.d},
      {"n", cfg.n},
      {"coin", std::move(coin)},
      {"shifts", cfg.shifts.usual ? json("usual") : json(cfg.shifts.rows)},
      {"initial", std::move(initial)},
      {"normalize", cfg.normalize},
      {"max_steps", cfg.max_steps},
      {"tolerances",
       {{"norm", cfg.tolerances.norm},
        {"mat", cfg.tolerances.mat},
        {"revival", cfg.tolerances.revival},
        {"phase", cfg.tolerances.phase},
        {"prune_epsilon", cfg.tolerances.prune_epsilon}}},
      {"revival_mode", std::string(to_string(cfg.revival_mode))},
      {"sign_convention", std::string(to_string(cfg.sign_convention))},
      {"seed", cfg.seed},
  };
}

std::string serialize_config(const WalkConfig& config) { return config_to_json(config).dump(2) + "\n"; }

CoinMatrix build_coin(const WalkConfig& cfg) {
  const CoinSpec& spec = cfg.coin;
  try {
    switch (spec.kind) {
      case CoinKind::Cyclic:
        if (spec.phases.size() != cfg.n) throw ConfigError("coin.phases", "expected n phases");
        return build_cyclic_coin(spec.phases, cfg.tolerances.phase);
      case CoinKind::PartialCycle: {
        const std::size_t r = spec.cycle_length.value_or(0);
        if (r < 2 || r > cfg.n) throw ConfigError("coin.r", "cycle length must satisfy n >= r >= 2");
        if (spec.phases.size() != r) throw ConfigError("coin.phases", "expected r phases");
        return build_partial_cycle_coin(cfg.n, r, spec.phases, cfg.tolerances.phase);
      }
      case CoinKind::General1D:
        if (cfg.n != 2) throw ConfigError("n", "general_1d coins need n = 2");
        try {
          return build_general_coin_1d(spec.theta, spec.phi1, spec.phi2);
        } catch (const RangeError& e) {
          throw ConfigError("coin", e.what());
        }
      case CoinKind::Custom:
        try {
          return CoinMatrix::custom(DenseMatrix::from_rows(spec.custom_matrix), cfg.tolerances.mat);
        } catch (const Error& e) {
          throw ConfigError("coin.matrix", e.what());
        }
    }
  } catch (const ConstraintError& e) {
    throw ConfigError("coin.phases", e.what());
  }
  throw ConfigError("coin.kind", "unsupported coin kind");
}

ShiftTable build_shifts(const WalkConfig& cfg) {
  std::vector<std::vector<std::int64_t>> rows;
  if (cfg.shifts.usual) {
    rows.assign(cfg.d, usual_shift_choice(cfg.n));
  } else {
    rows = cfg.shifts.rows;
    if (rows.size() != cfg.d) throw ConfigError("shifts", "expected d rows");
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].size() != cfg.n) throw ConfigError(index_path("shifts", r), "expected n displacements");
  }
  try {
    return build_shift_table(rows);
  } catch (const ZeroSumViolation& e) {
    throw ConfigError(index_path("shifts", e.dimension()), e.what());
  } catch (const Error& e) {
    throw ConfigError("shifts", e.what());
  }
}

WalkState build_initial_state(const WalkConfig& cfg) {
  std::vector<WalkState::Entry> entries;
  for (std::size_t i = 0; i < cfg.initial.size(); ++i) {
    const InitialAmplitude& a = cfg.initial[i];
    const std::string path = index_path("initial", i);
    if (a.position.size() != cfg.d) throw ConfigError(child(path, "position"), "expected d coordinates");
    if (a.coin < 1 || a.coin > cfg.n) throw ConfigError(child(path, "coin"), "coin index must lie in 1..n");
    if (!std::isfinite(a.amp_re) || !std::isfinite(a.amp_im)) throw ConfigError(path, "amplitude is not finite");
    entries.push_back({LatticePosition(a.position), a.coin - 1, Complex{a.amp_re, a.amp_im}});
  }
  WalkState state = WalkState::from_entries(cfg.d, cfg.n, entries);
  if (state.norm_squared() == 0.0) throw ConfigError("initial", "initial state is zero");
  if (cfg.normalize) return state.normalized();
  if (!state.is_normalized(cfg.tolerances.norm)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "squared norm is " << state.norm_squared() << "; set normalize=true or supply a unit state";
    throw ConfigError("initial", msg.str());
  }
  return state;
}

WalkInstance build_instance(const WalkConfig& cfg) {
  CoinMatrix coin = build_coin(cfg);
  ShiftTable shifts = build_shifts(cfg);
  WalkState initial = build_initial_state(cfg);
  try {
    return WalkInstance(std::move(coin), std::move(shifts), std::move(initial), cfg.tolerances);
  } catch (const Error& e) {
    throw ConfigError("", e.what());
  }
}

MomentumPropagator build_propagator(const WalkConfig& cfg) {
  return MomentumPropagator(build_coin(cfg), build_shifts(cfg), cfg.sign_convention);
}

}  // namespace qwalk
