#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_phase_sum(std::span<const double> phases, double tol) {
  const double residual = phase_sum_residual(phases);
  if (std::abs(residual) > tol) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "phase sum is not a multiple of 2pi (residual " << residual << ", tolerance " << tol << ")";
    throw ConstraintError(msg.str(), residual);
  }
}

std::vector<double> wrapped(std::span<const double> phases) {
  std::vector<double> out;
  out.reserve(phases.size());
  for (double p : phases) {
    if (!std::isfinite(p)) throw RangeError("phase is not finite");
    out.push_back(wrap_phase(p));
  }
  return out;
}

// Places the cyclic pattern on basis states 0..phases.size()-1 of `m`.
void place_cycle(DenseMatrix& m, const std::vector<double>& phases) {
  const std::size_t r = phases.size();
  for (std::size_t j = 1; j < r; ++j) m(j, j - 1) = std::polar(1.0, phases[j]);
  m(0, r - 1) = std::polar(1.0, phases[0]);
}

}  // namespace

std::string_view to_string(CoinKind kind) {
  switch (kind) {
    case CoinKind::Cyclic: return "cyclic";
    case CoinKind::PartialCycle: return "partial_cycle";
    case CoinKind::General1D: return "general_1d";
    case CoinKind::Custom: return "custom";
  }
  return "unknown";
}

CoinMatrix::CoinMatrix(DenseMatrix matrix, CoinKind kind, std::optional<std::vector<double>> phases,
                       std::optional<std::size_t> cycle_length)
    : matrix_(std::move(matrix)), kind_(kind), phases_(std::move(phases)), cycle_length_(cycle_length) {}

CoinMatrix CoinMatrix::custom(DenseMatrix matrix, double tol) {
  if (!is_unitary(matrix, tol)) throw ConstraintError("custom coin matrix is not unitary");
  return CoinMatrix(std::move(matrix), CoinKind::Custom, std::nullopt, std::nullopt);
}

double wrap_phase(double angle) {
  double r = std::remainder(angle, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double phase_sum_residual(std::span<const double> phases) {
  // Summing wrapped phases keeps the running total small.
  double total = 0.0;
  for (double p : phases) total += wrap_phase(p);
  return wrap_phase(total);
}

CoinMatrix build_general_coin_1d(double theta, double phi1, double phi2) {
  if (!(theta >= 0.0 && theta < kTwoPi)) throw RangeError("theta must lie in [0, 2pi)");
  if (!(phi1 >= 0.0 && phi1 < kPi)) throw RangeError("phi1 must lie in [0, pi)");
  if (!(phi2 >= 0.0 && phi2 < kPi)) throw RangeError("phi2 must lie in [0, pi)");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  DenseMatrix m(2);
  m(0, 0) = c;
  m(0, 1) = std::polar(1.0, phi1) * s;
  m(1, 0) = std::polar(1.0, phi2) * s;
  m(1, 1) = -std::polar(1.0, phi1 + phi2) * c;
  return CoinMatrix(std::move(m), CoinKind::General1D, std::nullopt, std::nullopt);
}

CoinMatrix build_cyclic_coin(std::span<const double> phases, double phase_tol) {
  const std::size_t n = phases.size();
  if (n < 2) throw DimensionError("cyclic coin needs n >= 2 phases");
  std::vector<double> theta = wrapped(phases);
  require_phase_sum(theta, phase_tol);
  DenseMatrix m(n);
  place_cycle(m, theta);
  return CoinMatrix(std::move(m), CoinKind::Cyclic, std::move(theta), std::nullopt);
}

std::vector<double> complete_phases(std::span<const double> partial) {
  if (partial.empty()) throw DimensionError("complete_phases needs at least one phase (n >= 2)");
  std::vector<double> out = wrapped(partial);
  double total = 0.0;
  for (double p : out) total += p;
  out.push_back(wrap_phase(-total));
  return out;
}

CoinMatrix build_partial_cycle_coin(std::size_t n, std::size_t r, std::span<const double> phases,
                                    double phase_tol) {
  if (r < 2 || r > n) {
    std::ostringstream msg;
    msg << "cycle length r=" << r << " must satisfy n >= r >= 2 with n=" << n;
    throw RangeError(msg.str());
  }
  if (phases.size() != r) throw DimensionError("partial-cycle coin needs exactly r phases");
  std::vector<double> theta = wrapped(phases);
  require_phase_sum(theta, phase_tol);
  DenseMatrix m(n);
  place_cycle(m, theta);
  for (std::size_t i = r; i < n; ++i) m(i, i) = 1.0;
  return CoinMatrix(std::move(m), CoinKind::PartialCycle, std::move(theta), r);
}

std::vector<Complex> cyclic_weights(const DenseMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n < 2) throw DimensionError("cyclic pattern needs n >= 2");
  std::vector<Complex> lambda(n);
  lambda[0] = matrix(0, n - 1);
  for (std::size_t j = 1; j < n; ++j) lambda[j] = matrix(j, j - 1);
  return lambda;
}

DenseMatrix cyclic_power_from_weights(std::span<const Complex> weights, std::size_t m) {
  const std::size_t n = weights.size();
  if (n < 2) throw DimensionError("cyclic pattern needs n >= 2");
  if (m < 1 || m > n) throw RangeError("power m must lie in 1..n");

  // 1-based lambda_l, matching the index arithmetic of the closed form.
  auto lambda = [&](std::size_t l) { return weights[l - 1]; };
  auto product = [&](std::size_t lo, std::size_t hi) {
    Complex p{1.0, 0.0};
    for (std::size_t l = lo; l <= hi; ++l) p *= lambda(l);
    return p;
  };
  DenseMatrix out(n);
  auto place = [&](std::size_t row, std::size_t col, Complex value) { out(row - 1, col - 1) = value; };

  if (m == n) {
    const Complex all = product(1, n);
    for (std::size_t j = 1; j <= n; ++j) place(j, j, all);
    return out;
  }
  // |k><k-m| for k = m+1..n carries lambda_{k-m+1} ... lambda_k.
  for (std::size_t k = m + 1; k <= n; ++k) place(k, k - m, product(k - m + 1, k));
  // |j><n-(m-j)| for j = 1..m-1 carries (lambda_1..lambda_j)(lambda_n..lambda_{n-m+j+1}).
  for (std::size_t j = 1; j + 1 <= m; ++j) {
    Complex tail{1.0, 0.0};
    for (std::size_t v = 0; v + j + 1 <= m; ++v) tail *= lambda(n - v);
    place(j, n - (m - j), product(1, j) * tail);
  }
  // |m><n| carries lambda_1 ... lambda_m.
  place(m, n, product(1, m));
  return out;
}

DenseMatrix cyclic_power_closed_form(const CoinMatrix& coin, std::size_t m) {
  if (coin.kind() != CoinKind::Cyclic) throw ConstraintError("closed-form powers need a cyclic coin");
  const std::vector<Complex> lambda = cyclic_weights(coin.matrix());
  return cyclic_power_from_weights(lambda, m);
}

std::optional<std::size_t> matrix_order(const DenseMatrix& a, std::size_t max_order, double tol) {
  if (!is_unitary(a, tol)) throw ConstraintError("matrix_order needs a unitary matrix");
  DenseMatrix power = a;
  for (std::size_t t = 1; t <= max_order; ++t) {
    if (deviation_from_identity(power) <= tol) return t;
    power = matrix_multiply(power, a);
  }
  return std::nullopt;
}

}  // namespace qwalk
