#include "qwalk/momentum_lab.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/golden.hpp"
#include "test_support.hpp"

using namespace qwalk;
using qwalk::testing::Rng;
using std::numbers::pi;

namespace {

WalkInstance table_instance(int which) { return build_instance(parse_config(bundled_config(which))); }

MomentumPropagator table_propagator(int which, SignConvention sign = SignConvention::MinusIK) {
  const WalkInstance w = table_instance(which);
  return MomentumPropagator(w.coin(), w.shifts(), sign);
}

// Independent eigenvalue route: Eigen's general complex Schur solver, called
// directly rather than through the library.
std::vector<Complex> eigen_oracle(const DenseMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(std::size_t(i), std::size_t(j));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
  std::vector<Complex> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
  sort_by_argument(values);
  return values;
}

Momentum random_momentum(Rng& rng, std::size_t d) {
  Momentum k(d);
  for (double& c : k) c = qwalk::testing::uniform_angle(rng);
  return k;
}

Complex product_of_nonzero_entries(const DenseMatrix& m) {
  Complex p{1.0, 0.0};
  for (Complex z : m.entries())
    if (z != Complex{}) p *= z;
  return p;
}

}  // namespace

TEST(EvaluatePropagator, SwapAtZeroMomentum) {
  const MomentumPropagator prop(build_cyclic_coin(std::vector<double>{0, 0}), conventional_two_state_shifts());
  EXPECT_EQ(evaluate_propagator(prop, Momentum{0.0}), DenseMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
}

TEST(EvaluatePropagator, ThreeStateLineEntries) {
  const double k = 0.37;
  for (SignConvention sign : {SignConvention::MinusIK, SignConvention::PlusIK}) {
    const double s = sign == SignConvention::PlusIK ? 1.0 : -1.0;
    const DenseMatrix v = evaluate_propagator(table_propagator(2, sign), Momentum{k});
    EXPECT_NEAR(std::abs(v(0, 2) - std::polar(1.0, s * -5 * k)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(v(1, 0) - std::polar(1.0, s * 3 * k + 2 * pi / 3)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(v(2, 1) - std::polar(1.0, s * 2 * k + 4 * pi / 3)), 0.0, 1e-15);
  }
}

TEST(EvaluatePropagator, CycleProductIsOne) {
  const DenseMatrix v = evaluate_propagator(table_propagator(2), Momentum{0.7});
  EXPECT_NEAR(std::abs(product_of_nonzero_entries(v) - 1.0), 0.0, 1e-14);
}

TEST(EvaluatePropagator, WrapsOutOfRangeMomentum) {
  const MomentumPropagator prop = table_propagator(2);
  EXPECT_LE(evaluate_propagator(prop, Momentum{0.5 + 2 * pi}).max_abs_diff(evaluate_propagator(prop, Momentum{0.5})),
            1e-13);
  EXPECT_DOUBLE_EQ(wrap_momentum(pi), -pi);
  EXPECT_DOUBLE_EQ(wrap_momentum(-pi), -pi);
  EXPECT_THROW(evaluate_propagator(prop, Momentum{0.1, 0.2}), DimensionError);
}

TEST(EvaluatePropagator, UnitaryWithCoinPattern) {
  Rng rng(113);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = qwalk::testing::uniform_size(rng, 1, 3);
    const std::size_t n = qwalk::testing::uniform_size(rng, 2, 8);
    const std::size_t r = qwalk::testing::uniform_size(rng, 2, n);
    const CoinMatrix coin = trial % 2 ? qwalk::testing::random_cyclic_coin(rng, n)
                                      : build_partial_cycle_coin(n, r, qwalk::testing::random_valid_phases(rng, r));
    const MomentumPropagator prop(coin, build_shift_table(qwalk::testing::random_zero_sum_grid(rng, d, n, 4)));
    const DenseMatrix v = evaluate_propagator(prop, random_momentum(rng, d));
    EXPECT_TRUE(is_unitary(v, kTolMat));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(v(i, j) == Complex{}, coin.matrix()(i, j) == Complex{});
  }
}

TEST(PropagatorOrder, Examples) {
  EXPECT_EQ(propagator_order(table_propagator(1), 10, 20), 2u);
  EXPECT_EQ(propagator_order(table_propagator(3), 10, 20), 3u);
  Rng rng(127);
  const MomentumPropagator six(qwalk::testing::random_cyclic_coin(rng, 6), build_shift_table({usual_shift_choice(6)}));
  EXPECT_EQ(propagator_order(six, 10, 20, 5), 6u);
  EXPECT_THROW(propagator_order(six, 0, 20), RangeError);
}

TEST(PropagatorOrder, DispersiveCoinHasNoCommonOrder) {
  const MomentumPropagator hadamard(build_general_coin_1d(pi / 4, 0, 0), conventional_two_state_shifts());
  // At k = 0 and k = -pi V_k is +-H (order 2); generic k has no finite order.
  EXPECT_THROW(propagator_order(hadamard, 10, 30, 1), ConstraintError);
}

TEST(MomentumSamples, DeterministicPointsFirstAndSeeded) {
  const auto a = momentum_samples(2, 4, 9);
  ASSERT_EQ(a.size(), 7u);
  EXPECT_EQ(a[0], (Momentum{0, 0}));
  EXPECT_EQ(a[1], (Momentum{-pi, 0}));
  EXPECT_EQ(a[2], (Momentum{0, -pi}));
  EXPECT_EQ(a, momentum_samples(2, 4, 9));
  EXPECT_NE(a, momentum_samples(2, 4, 10));
  for (const auto& k : a)
    for (double c : k) {
      EXPECT_GE(c, -pi);
      EXPECT_LT(c, pi);
    }
}

TEST(CharacteristicEigenvalues, RootsOfUnityForValidWalks) {
  const auto roots3 = roots_of_unity(3);
  for (double k : {-pi, -1.0, 0.0, 0.4, 3.0})
    EXPECT_LE(max_set_deviation(characteristic_eigenvalues(table_propagator(2), Momentum{k}), roots3), 1e-12);
  const auto two = characteristic_eigenvalues(table_propagator(1), Momentum{0.9});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(std::abs(two[0] - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(two[1] + 1.0), 0.0, 1e-12);
}

TEST(CharacteristicEigenvalues, ThreeStateLineAgainstNumericSolver) {
  const MomentumPropagator prop = table_propagator(2);
  const Momentum k{1.1};
  const auto closed = characteristic_eigenvalues(prop, k);
  const std::vector<Complex> expected{std::polar(1.0, -2 * pi / 3), 1.0, std::polar(1.0, 2 * pi / 3)};
  EXPECT_LE(max_set_deviation(closed, expected), 1e-12);
  EXPECT_LE(max_set_deviation(closed, eigen_oracle(evaluate_propagator(prop, k))), 1e-8);
}

TEST(CharacteristicEigenvalues, RequiresCyclicCoin) {
  const MomentumPropagator prop(build_partial_cycle_coin(3, 2, std::vector<double>{0, 0}),
                                build_shift_table({{1, -1, 0}}));
  EXPECT_THROW(characteristic_eigenvalues(prop, Momentum{0.0}), ConstraintError);
}

TEST(CharacteristicEigenvalues, MatchNumericSolverOnRandomWalks) {
  Rng rng(131);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = qwalk::testing::uniform_size(rng, 1, 3);
    const std::size_t n = qwalk::testing::uniform_size(rng, 2, 8);
    const MomentumPropagator prop(qwalk::testing::random_cyclic_coin(rng, n),
                                  build_shift_table(qwalk::testing::random_zero_sum_grid(rng, d, n, 5)),
                                  trial % 2 ? SignConvention::PlusIK : SignConvention::MinusIK);
    for (int s = 0; s < 10; ++s) {
      const Momentum k = random_momentum(rng, d);
      const DenseMatrix v = evaluate_propagator(prop, k);
      const auto closed = characteristic_eigenvalues(prop, k);
      EXPECT_LE(max_set_deviation(closed, eigen_oracle(v)), 1e-8);
      EXPECT_LE(max_set_deviation(closed, roots_of_unity(n)), 1e-8);
      EXPECT_NEAR(std::abs(product_of_nonzero_entries(v) - 1.0), 0.0, 1e-12);
      EXPECT_TRUE(cyclic_power_from_weights(cyclic_weights(v), n - 1).has_zero_diagonal());
      EXPECT_LE(deviation_from_identity(cyclic_power_from_weights(cyclic_weights(v), n)), kTolMat);
    }
  }
}

TEST(SpectrumSweep, ThreeStateLineIsFlat) {
  const SpectrumReport r = spectrum_sweep(table_propagator(2), 10, 3);
  EXPECT_EQ(r.k_samples.size(), 10u);
  EXPECT_EQ(r.eigenvalue_sets.size(), 10u);
  EXPECT_TRUE(r.k_independent);
  EXPECT_TRUE(r.matches_roots_of_unity);
  for (const auto& set : r.eigenvalue_sets)
    for (Complex z : set) EXPECT_NEAR(std::abs(z), 1.0, kTolMat);
}

TEST(SpectrumSweep, HadamardWalkDisperses) {
  const MomentumPropagator hadamard(build_general_coin_1d(pi / 4, 0, 0), conventional_two_state_shifts());
  const SpectrumReport r = spectrum_sweep(hadamard, 10, 3);
  EXPECT_FALSE(r.k_independent);
  EXPECT_FALSE(r.matches_roots_of_unity);
}

TEST(SpectrumSweep, InertSwapIsConstant) {
  const MomentumPropagator prop(build_cyclic_coin(std::vector<double>{0, 0}), build_shift_table({{0, 0}}));
  const SpectrumReport r = spectrum_sweep(prop, 6, 1);
  EXPECT_TRUE(r.k_independent);
  for (const auto& set : r.eigenvalue_sets) EXPECT_LE(max_set_deviation(set, std::vector<Complex>{1.0, -1.0}), 1e-15);
  EXPECT_THROW(spectrum_sweep(prop, 1, 1), RangeError);
}

TEST(SortByArgument, MinusOneSortsLast) {
  std::vector<Complex> values{Complex(-1.0, -1e-17), Complex(1.0, 0.0)};
  sort_by_argument(values);
  EXPECT_EQ(values[0], Complex(1.0, 0.0));
}

TEST(DenseOracle, MatchesEngineOnTwoStateWalk) {
  const WalkInstance w = table_instance(1);
  const std::vector<std::int64_t> window{5};
  EXPECT_LE(max_abs_deviation(dense_oracle_evolve(w, 2, window), evolve(w, 2)), 1e-12);
}

TEST(DenseOracle, PlaneWalkReturnsToStart) {
  const WalkInstance w = table_instance(3);
  const std::vector<std::int64_t> window{8, 8};
  EXPECT_LE(max_abs_deviation(dense_oracle_evolve(w, 3, window), w.initial()), 1e-12);
}

TEST(DenseOracle, ZeroStepsEmbedsInitial) {
  const WalkInstance w = table_instance(2);
  const std::vector<std::int64_t> window{4};
  EXPECT_EQ(dense_oracle_evolve(w, 0, window), w.initial());
}

TEST(DenseOracle, RefusesSmallWindow) {
  const WalkInstance w = table_instance(2);
  EXPECT_EQ(minimum_oracle_window(w, 3), (std::vector<std::int64_t>{19}));
  const std::vector<std::int64_t> window{18};
  try {
    dense_oracle_evolve(w, 3, window);
    FAIL() << "expected WindowTooSmall";
  } catch (const WindowTooSmall& e) {
    EXPECT_EQ(e.required(), 19);
  }
}

TEST(DenseOracle, MatchesEngineOnRandomWalks) {
  Rng rng(137);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t d = qwalk::testing::uniform_size(rng, 1, 2);
    const std::size_t n = qwalk::testing::uniform_size(rng, 2, 4);
    const std::size_t t = qwalk::testing::uniform_size(rng, 1, d == 1 ? 12 : 5);
    const CoinMatrix coin = trial % 2 ? qwalk::testing::random_cyclic_coin(rng, n)
                                      : CoinMatrix::custom(qwalk::testing::random_unitary(rng, n));
    const WalkInstance w(coin, build_shift_table(qwalk::testing::random_zero_sum_grid(rng, d, n, 1)),
                         qwalk::testing::random_state(rng, d, n, 4, 1));
    const auto window = minimum_oracle_window(w, t);
    EXPECT_LE(max_abs_deviation(dense_oracle_evolve(w, t, window), evolve(w, t)), 1e-12);
  }
}

TEST(DenseOracle, DistinguishesWrongDynamics) {
  const WalkInstance w = table_instance(2);
  const auto window = minimum_oracle_window(w, 2);
  EXPECT_GT(max_abs_deviation(dense_oracle_evolve(w, 1, window), evolve(w, 2)), 0.1);
  const WalkInstance flipped(w.coin(), w.shifts().negated(), w.initial());
  EXPECT_GT(max_abs_deviation(dense_oracle_evolve(flipped, 2, window), evolve(w, 2)), 0.1);
}
