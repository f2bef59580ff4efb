#include "qwalk/momentum_lab.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

double canonical_argument(Complex z, double tol) {
  const double a = std::arg(z);
  return a < -kPi + tol ? a + 2.0 * kPi : a;
}

}  // namespace

std::string_view to_string(SignConvention sign) {
  return sign == SignConvention::PlusIK ? "plus_ik" : "minus_ik";
}

MomentumPropagator::MomentumPropagator(CoinMatrix coin, ShiftTable shifts, SignConvention sign)
    : coin_(std::move(coin)), shifts_(std::move(shifts)), sign_(sign) {
  if (coin_.size() != shifts_.coin_size())
    throw DimensionError("coin and shift table disagree on the coin dimension");
}

double wrap_momentum(double k) {
  double r = std::remainder(k, 2.0 * kPi);
  if (r >= kPi) r -= 2.0 * kPi;
  return r;
}

DenseMatrix evaluate_propagator(const MomentumPropagator& prop, std::span<const double> k) {
  const ShiftTable& shifts = prop.shifts();
  if (k.size() != shifts.dimension()) throw DimensionError("momentum has the wrong number of components");
  const double sign = prop.sign_convention() == SignConvention::PlusIK ? 1.0 : -1.0;
  const DenseMatrix& c = prop.coin().matrix();
  const std::size_t n = c.size();
  DenseMatrix v(n);
  for (std::size_t j = 0; j < n; ++j) {
    double phase = 0.0;
    for (std::size_t r = 0; r < shifts.dimension(); ++r)
      phase += static_cast<double>(shifts.at(r, j)) * wrap_momentum(k[r]);
    const Complex factor = std::polar(1.0, sign * phase);
    for (std::size_t col = 0; col < n; ++col) {
      const Complex entry = c(j, col);
      if (entry != Complex{}) v(j, col) = factor * entry;
    }
  }
  return v;
}

std::vector<Momentum> momentum_samples(std::size_t dimension, std::size_t random_count, std::uint64_t seed) {
  std::vector<Momentum> out;
  out.emplace_back(dimension, 0.0);
  for (std::size_t r = 0; r < dimension; ++r) {
    Momentum edge(dimension, 0.0);
    edge[r] = -kPi;
    out.push_back(std::move(edge));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-kPi, kPi);
  for (std::size_t s = 0; s < random_count; ++s) {
    Momentum k(dimension);
    for (double& component : k) component = uniform(rng);
    out.push_back(std::move(k));
  }
  return out;
}

std::optional<std::size_t> propagator_order(const MomentumPropagator& prop, std::size_t k_samples,
                                            std::size_t max_order, std::uint64_t seed, double tol) {
  if (k_samples < 1) throw RangeError("propagator_order needs at least one k sample");
  std::optional<std::size_t> common;
  bool first = true;
  for (const Momentum& k : momentum_samples(prop.dimension(), k_samples, seed)) {
    const auto order = matrix_order(evaluate_propagator(prop, k), max_order, tol);
    if (first) {
      common = order;
      first = false;
    } else if (order != common) {
      std::ostringstream msg;
      msg << "propagator order depends on k (" << (common ? std::to_string(*common) : "none") << " vs "
          << (order ? std::to_string(*order) : "none") << ")";
      throw ConstraintError(msg.str());
    }
  }
  return common;
}

std::vector<Complex> characteristic_eigenvalues(const MomentumPropagator& prop, std::span<const double> k) {
  if (prop.coin().kind() != CoinKind::Cyclic)
    throw ConstraintError("characteristic_eigenvalues needs a cyclic coin");
  const std::vector<Complex> weights = cyclic_weights(evaluate_propagator(prop, k));
  Complex p{1.0, 0.0};
  for (Complex w : weights) p *= w;
  const std::size_t n = weights.size();
  const double radius = std::pow(std::abs(p), 1.0 / static_cast<double>(n));
  const double base = std::arg(p) / static_cast<double>(n);
  std::vector<Complex> roots;
  roots.reserve(n);
  for (std::size_t m = 0; m < n; ++m)
    roots.push_back(std::polar(radius, base + 2.0 * kPi * static_cast<double>(m) / static_cast<double>(n)));
  sort_by_argument(roots);
  return roots;
}

std::vector<Complex> numeric_eigenvalues(const DenseMatrix& matrix) {
  const auto n = static_cast<Eigen::Index>(matrix.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue iteration did not converge");
  std::vector<Complex> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
  sort_by_argument(values);
  return values;
}

std::vector<Complex> roots_of_unity(std::size_t n) {
  if (n == 0) throw DimensionError("roots_of_unity needs n >= 1");
  std::vector<Complex> roots;
  for (std::size_t m = 0; m < n; ++m)
    roots.push_back(std::polar(1.0, 2.0 * kPi * static_cast<double>(m) / static_cast<double>(n)));
  sort_by_argument(roots);
  return roots;
}

void sort_by_argument(std::vector<Complex>& values, double tol) {
  std::stable_sort(values.begin(), values.end(), [tol](Complex a, Complex b) {
    return canonical_argument(a, tol) < canonical_argument(b, tol);
  });
}

double max_set_deviation(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("eigenvalue sets differ in size");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

SpectrumReport spectrum_sweep(const MomentumPropagator& prop, std::size_t samples, std::uint64_t seed,
                              double tol) {
  if (samples < 2) throw RangeError("spectrum_sweep needs at least two samples");
  SpectrumReport report;
  report.k_samples = momentum_samples(prop.dimension(), samples, seed);
  report.k_samples.resize(samples);

  const bool cyclic = prop.coin().kind() == CoinKind::Cyclic;
  for (const Momentum& k : report.k_samples) {
    report.eigenvalue_sets.push_back(cyclic ? characteristic_eigenvalues(prop, k)
                                            : numeric_eigenvalues(evaluate_propagator(prop, k)));
  }

  const std::vector<Complex> roots = roots_of_unity(prop.coin().size());
  report.k_independent = true;
  report.matches_roots_of_unity = true;
  for (std::size_t a = 0; a < report.eigenvalue_sets.size(); ++a) {
    if (max_set_deviation(report.eigenvalue_sets[a], roots) > tol) report.matches_roots_of_unity = false;
    for (std::size_t b = a + 1; b < report.eigenvalue_sets.size(); ++b)
      if (max_set_deviation(report.eigenvalue_sets[a], report.eigenvalue_sets[b]) > tol)
        report.k_independent = false;
  }
  return report;
}

std::vector<std::int64_t> minimum_oracle_window(const WalkInstance& instance, std::size_t t) {
  const ShiftTable& shifts = instance.shifts();
  const std::size_t d = shifts.dimension();
  std::vector<std::int64_t> required(d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    std::int64_t reach = 0;
    for (std::size_t j = 0; j < shifts.coin_size(); ++j) reach = std::max(reach, std::abs(shifts.at(r, j)));
    std::int64_t radius = 0;
    for (const auto& [pos, vec] : instance.initial().amplitudes()) radius = std::max(radius, std::abs(pos[r]));
    required[r] = reach * static_cast<std::int64_t>(t) + radius + 1;
  }
  return required;
}

WalkState dense_oracle_evolve(const WalkInstance& instance, std::size_t t,
                              std::span<const std::int64_t> half_widths) {
  const ShiftTable& shifts = instance.shifts();
  const std::size_t d = shifts.dimension();
  const std::size_t n = shifts.coin_size();
  if (half_widths.size() != d) throw DimensionError("need one half-width per spatial dimension");

  const std::vector<std::int64_t> required = minimum_oracle_window(instance, t);
  for (std::size_t r = 0; r < d; ++r) {
    if (half_widths[r] < required[r]) {
      std::ostringstream msg;
      msg << "oracle window half-width " << half_widths[r] << " along dimension " << r
          << " is too small; need at least " << required[r];
      throw WindowTooSmall(msg.str(), r, required[r]);
    }
  }

  // Sites are flattened row-major with dimension 0 most significant.
  std::vector<std::size_t> extent(d);
  std::size_t sites = 1;
  for (std::size_t r = 0; r < d; ++r) {
    extent[r] = static_cast<std::size_t>(2 * half_widths[r] + 1);
    sites *= extent[r];
  }
  const std::size_t dim = sites * n;
  constexpr std::size_t kMaxDim = 8192;
  if (dim > kMaxDim) {
    std::ostringstream msg;
    msg << "dense oracle dimension " << dim << " exceeds the limit " << kMaxDim;
    throw RangeError(msg.str());
  }

  auto site_index = [&](std::span<const std::int64_t> coords) -> std::optional<std::size_t> {
    std::size_t idx = 0;
    for (std::size_t r = 0; r < d; ++r) {
      if (coords[r] < -half_widths[r] || coords[r] > half_widths[r]) return std::nullopt;
      idx = idx * extent[r] + static_cast<std::size_t>(coords[r] + half_widths[r]);
    }
    return idx;
  };
  auto site_coords = [&](std::size_t idx) {
    std::vector<std::int64_t> coords(d);
    for (std::size_t r = d; r-- > 0;) {
      coords[r] = static_cast<std::int64_t>(idx % extent[r]) - half_widths[r];
      idx /= extent[r];
    }
    return coords;
  };

  const DenseMatrix& coin = instance.coin().matrix();
  std::vector<Complex> u(dim * dim);
  std::vector<std::int64_t> target(d);
  for (std::size_t s = 0; s < sites; ++s) {
    const std::vector<std::int64_t> x = site_coords(s);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < d; ++r) target[r] = x[r] + shifts.at(r, c);
      const auto dest = site_index(target);
      if (!dest) continue;
      for (std::size_t src = 0; src < n; ++src) u[(*dest * n + c) * dim + (s * n + src)] = coin(c, src);
    }
  }

  std::vector<Complex> psi(dim);
  for (const auto& [pos, vec] : instance.initial().amplitudes()) {
    const std::size_t s = *site_index(pos.coords());
    for (std::size_t c = 0; c < n; ++c) psi[s * n + c] = vec[c];
  }
  std::vector<Complex> next(dim);
  for (std::size_t step = 0; step < t; ++step) {
    for (std::size_t row = 0; row < dim; ++row) {
      Complex acc{};
      const Complex* u_row = &u[row * dim];
      for (std::size_t col = 0; col < dim; ++col) acc += u_row[col] * psi[col];
      next[row] = acc;
    }
    std::swap(psi, next);
  }

  WalkState::AmplitudeMap out;
  for (std::size_t s = 0; s < sites; ++s) {
    std::vector<Complex> vec(psi.begin() + static_cast<std::ptrdiff_t>(s * n),
                             psi.begin() + static_cast<std::ptrdiff_t>((s + 1) * n));
    if (std::any_of(vec.begin(), vec.end(), [](Complex z) { return z != Complex{}; }))
      out.emplace(LatticePosition(site_coords(s)), std::move(vec));
  }
  return WalkState(d, n, std::move(out));
}

}  // namespace qwalk
