#include "qwalk/lattice_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool all_exact_zero(const std::vector<Complex>& v) {
  return std::all_of(v.begin(), v.end(), [](Complex z) { return z == Complex{}; });
}

void require_same_shape(const WalkState& a, const WalkState& b, const char* op) {
  if (a.dimension() != b.dimension() || a.coin_size() != b.coin_size()) {
    std::ostringstream msg;
    msg << op << ": incompatible states (d=" << a.dimension() << ", n=" << a.coin_size()
        << ") vs (d=" << b.dimension() << ", n=" << b.coin_size() << ")";
    throw DimensionError(msg.str());
  }
}

// Visits every (position, coin) pair in the union of both supports.
template <typename Fn>
void for_each_union(const WalkState& a, const WalkState& b, Fn&& fn) {
  const std::vector<Complex> zeros(a.coin_size());
  auto ia = a.amplitudes().begin();
  auto ib = b.amplitudes().begin();
  const auto ea = a.amplitudes().end();
  const auto eb = b.amplitudes().end();
  while (ia != ea || ib != eb) {
    const std::vector<Complex>* va = &zeros;
    const std::vector<Complex>* vb = &zeros;
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      va = &ia->second;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      vb = &ib->second;
      ++ib;
    } else {
      va = &ia->second;
      vb = &ib->second;
      ++ia;
      ++ib;
    }
    for (std::size_t c = 0; c < a.coin_size(); ++c) fn((*va)[c], (*vb)[c]);
  }
}

}  // namespace

LatticePosition::LatticePosition(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("lattice position needs at least one coordinate");
}

LatticePosition::LatticePosition(std::initializer_list<std::int64_t> coords)
    : LatticePosition(std::vector<std::int64_t>(coords)) {}

LatticePosition LatticePosition::origin(std::size_t dimension) {
  return LatticePosition(std::vector<std::int64_t>(dimension, 0));
}

DenseMatrix::DenseMatrix(std::size_t n) : DenseMatrix(n, std::vector<Complex>(n * n)) {}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<Complex> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (n_ == 0) throw DimensionError("matrix size must be at least 1");
  if (entries_.size() != n_ * n_) throw DimensionError("matrix entries do not form an n x n grid");
  for (Complex z : entries_) {
    if (!is_finite(z)) throw RangeError("matrix entry is not finite");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionError("matrix rows must all have length n (square)");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return DenseMatrix(n, std::move(flat));
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != n_) throw DimensionError("vector length does not match matrix size");
  std::vector<Complex> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < n_; ++j) {
      const Complex m = (*this)(i, j);
      if (m != Complex{}) acc += m * v[j];
    }
    out[i] = acc;
  }
  return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  if (other.n_ != n_) throw DimensionError("matrix size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  return worst;
}

bool DenseMatrix::has_zero_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    if ((*this)(i, i) != Complex{}) return false;
  return true;
}

DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    std::ostringstream msg;
    msg << "matrix_multiply: size mismatch " << n << " vs " << b.size();
    throw DimensionError(msg.str());
  }
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double deviation_from_identity(const DenseMatrix& a) {
  return a.max_abs_diff(DenseMatrix::identity(a.size()));
}

bool is_unitary(const DenseMatrix& a, double tol) {
  const DenseMatrix adj = a.adjoint();
  return deviation_from_identity(matrix_multiply(a, adj)) <= tol &&
         deviation_from_identity(matrix_multiply(adj, a)) <= tol;
}

WalkState::WalkState(std::size_t dimension, std::size_t coin_size)
    : WalkState(dimension, coin_size, {}) {}

WalkState::WalkState(std::size_t dimension, std::size_t coin_size, AmplitudeMap amplitudes)
    : d_(dimension), n_(coin_size), amplitudes_(std::move(amplitudes)) {
  if (d_ == 0) throw DimensionError("walk state needs spatial dimension >= 1");
  if (n_ == 0) throw DimensionError("walk state needs coin dimension >= 1");
  for (auto it = amplitudes_.begin(); it != amplitudes_.end();) {
    if (it->first.dimension() != d_) throw DimensionError("position dimension differs from state dimension");
    if (it->second.size() != n_) throw DimensionError("amplitude vector length differs from coin dimension");
    for (Complex z : it->second)
      if (!is_finite(z)) throw RangeError("amplitude is not finite");
    it = all_exact_zero(it->second) ? amplitudes_.erase(it) : std::next(it);
  }
}

WalkState WalkState::from_entries(std::size_t dimension, std::size_t coin_size,
                                  std::span<const Entry> entries) {
  AmplitudeMap map;
  for (const Entry& e : entries) {
    if (e.coin >= coin_size) throw RangeError("coin index out of range");
    auto [it, inserted] = map.try_emplace(e.position, coin_size);
    it->second[e.coin] += e.amplitude;
  }
  return WalkState(dimension, coin_size, std::move(map));
}

Complex WalkState::amplitude(const LatticePosition& position, std::size_t coin) const {
  if (coin >= n_) throw RangeError("coin index out of range");
  const auto it = amplitudes_.find(position);
  return it == amplitudes_.end() ? Complex{} : it->second[coin];
}

double WalkState::norm_squared() const {
  double total = 0.0;
  for (const auto& [pos, vec] : amplitudes_)
    for (Complex z : vec) total += std::norm(z);
  return total;
}

bool WalkState::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

WalkState WalkState::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) throw RangeError("cannot normalize the zero state");
  return scaled(1.0 / norm);
}

WalkState WalkState::pruned(double epsilon) const {
  AmplitudeMap out;
  for (const auto& [pos, vec] : amplitudes_) {
    std::vector<Complex> kept = vec;
    for (Complex& z : kept)
      if (std::abs(z) <= epsilon) z = Complex{};
    if (!all_exact_zero(kept)) out.emplace(pos, std::move(kept));
  }
  return WalkState(d_, n_, std::move(out));
}

WalkState WalkState::scaled(Complex factor) const {
  AmplitudeMap out = amplitudes_;
  for (auto& [pos, vec] : out)
    for (Complex& z : vec) z *= factor;
  return WalkState(d_, n_, std::move(out));
}

Complex inner_product(const WalkState& a, const WalkState& b) {
  require_same_shape(a, b, "inner_product");
  Complex acc{};
  for_each_union(a, b, [&](Complex x, Complex y) { acc += std::conj(x) * y; });
  return acc;
}

double l2_distance(const WalkState& a, const WalkState& b) {
  require_same_shape(a, b, "l2_distance");
  double acc = 0.0;
  for_each_union(a, b, [&](Complex x, Complex y) { acc += std::norm(x - y); });
  return std::sqrt(acc);
}

double max_abs_deviation(const WalkState& a, const WalkState& b) {
  require_same_shape(a, b, "max_abs_deviation");
  double worst = 0.0;
  for_each_union(a, b, [&](Complex x, Complex y) { worst = std::max(worst, std::abs(x - y)); });
  return worst;
}

WalkState apply_coin(const WalkState& state, const DenseMatrix& coin) {
  if (coin.size() != state.coin_size()) throw DimensionError("coin size differs from state coin dimension");
  WalkState::AmplitudeMap out;
  for (const auto& [pos, vec] : state.amplitudes()) out.emplace(pos, coin.apply(vec));
  return WalkState(state.dimension(), state.coin_size(), std::move(out));
}

}  // namespace qwalk
