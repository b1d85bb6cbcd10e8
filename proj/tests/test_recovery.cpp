#include "bgc/basis_pursuit.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bgc/coherence.hpp"
#include "bgc/construct.hpp"
#include "bgc/errors.hpp"
#include "bgc/rng.hpp"
#include "bgc/sparse_signal.hpp"

using bgc::RecoveryStatus;
using bgc::Signing;
using bgc::SparseSignal;

TEST_CASE("generate_signal: degenerate sizes") {
  const SparseSignal zero = bgc::generate_signal(5, 0, Signing::signed_pm1, 1);
  CHECK(zero.support.empty());
  CHECK(zero.to_dense().isZero(0.0));

  const SparseSignal ones = bgc::generate_signal(6, 6, Signing::unsigned_one, 2);
  CHECK(ones.to_dense() == Eigen::VectorXd::Ones(6));

  CHECK_THROWS_AS(bgc::generate_signal(3, 4, Signing::signed_pm1, 0), std::invalid_argument);
}

TEST_CASE("generate_signal: deterministic, balanced signs at scale") {
  const SparseSignal a = bgc::generate_signal(10000, 1000, Signing::signed_pm1, 9);
  const SparseSignal b = bgc::generate_signal(10000, 1000, Signing::signed_pm1, 9);
  CHECK(a.support == b.support);
  CHECK(a.values == b.values);

  int positives = 0;
  for (double value : a.values) positives += value > 0 ? 1 : 0;
  CHECK(std::abs(positives - 500.0) <= 4.0 * std::sqrt(1000.0));

  // Support is sorted, distinct, in range.
  CHECK(std::is_sorted(a.support.begin(), a.support.end()));
  CHECK(a.support.front() >= 0);
  CHECK(a.support.back() < 10000);
}

TEST_CASE("signal files: round-trip with comments, parse errors") {
  std::istringstream in("# manifest: {}\n3:1 7:-1\n0:2.5\n");
  const SparseSignal signal = bgc::read_signal(in, 10);
  CHECK(signal.support == std::vector<int>{0, 3, 7});
  CHECK(signal.values == std::vector<double>{2.5, 1.0, -1.0});

  std::ostringstream out;
  bgc::write_signal_entries(signal.to_dense(), out);
  std::istringstream back(out.str());
  const SparseSignal reparsed = bgc::read_signal(back, 10);
  CHECK(reparsed.support == signal.support);
  CHECK(reparsed.values == signal.values);

  std::istringstream bad_index("12:1");
  CHECK_THROWS_AS(bgc::read_signal(bad_index, 10), bgc::ParseError);
  std::istringstream bad_token("3=1");
  CHECK_THROWS_AS(bgc::read_signal(bad_token, 10), bgc::ParseError);
  std::istringstream duplicate("3:1 3:1");
  CHECK_THROWS_AS(bgc::read_signal(duplicate, 10), bgc::ParseError);
  std::istringstream zero_value("3:0");
  CHECK_THROWS_AS(bgc::read_signal(zero_value, 10), bgc::ParseError);
}

TEST_CASE("basis_pursuit: identity matrix returns y itself") {
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(6, 6);
  Eigen::VectorXd y(6);
  y << 1.5, -2.0, 0.0, 3.0, -0.25, 0.0;
  const bgc::RecoveryOutcome outcome = bgc::basis_pursuit(identity, y);
  REQUIRE(outcome.status == RecoveryStatus::optimal);
  CHECK((outcome.estimate - y).lpNorm<Eigen::Infinity>() <= 1e-10);
}

TEST_CASE("basis_pursuit: 1x2 tie keeps the objective sharp") {
  Eigen::MatrixXd A(1, 2);
  A << 1.0, 1.0;
  Eigen::VectorXd y(1);
  y << 2.0;
  const bgc::RecoveryOutcome outcome = bgc::basis_pursuit(A, y);
  REQUIRE(outcome.status == RecoveryStatus::optimal);
  CHECK(outcome.objective == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(outcome.residual <= 1e-9);
}

TEST_CASE("basis_pursuit: k=0 gives the zero vector") {
  const Eigen::MatrixXd A = bgc::sample_gaussian(4, 8, 3).entries;
  const bgc::RecoveryOutcome outcome = bgc::basis_pursuit(A, Eigen::VectorXd::Zero(4));
  REQUIRE(outcome.status == RecoveryStatus::optimal);
  CHECK(outcome.estimate.isZero(1e-12));
}

TEST_CASE("basis_pursuit: rejects all-zero columns") {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(3, 3);
  A(0, 0) = 1.0;
  A(1, 1) = 1.0;
  CHECK_THROWS_AS(bgc::basis_pursuit(A, Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST_CASE("basis_pursuit: infeasible system reported") {
  Eigen::MatrixXd A(2, 2);
  A << 1.0, 1.0, 1.0, 1.0;  // rank 1
  Eigen::VectorXd y(2);
  y << 1.0, 2.0;
  CHECK(bgc::basis_pursuit(A, y).status == RecoveryStatus::infeasible);
  CHECK(bgc::brute_force_l1(A, y).status == RecoveryStatus::infeasible);
}

TEST_CASE("basis_pursuit: iteration limit surfaces") {
  const Eigen::MatrixXd A = bgc::sample_gaussian(6, 12, 5).entries;
  const Eigen::VectorXd y = A * bgc::generate_signal(12, 3, Signing::signed_pm1, 6).to_dense();
  bgc::BasisPursuitOptions options;
  options.max_iterations = 1;
  CHECK(bgc::basis_pursuit(A, y, options).status == RecoveryStatus::iteration_limit);
}

TEST_CASE("basis_pursuit: scaling the observation scales the objective") {
  const Eigen::MatrixXd A = bgc::sample_gaussian(5, 10, 11).entries;
  const Eigen::VectorXd y = A * bgc::generate_signal(10, 2, Signing::signed_pm1, 12).to_dense();
  const double base = bgc::basis_pursuit(A, y).objective;
  for (double alpha : {2.0, 7.5}) {
    CHECK(bgc::basis_pursuit(A, alpha * y).objective ==
          doctest::Approx(alpha * base).epsilon(1e-8));
  }
}

TEST_CASE("brute_force_l1: identity and size guard") {
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(4, 4);
  Eigen::VectorXd y(4);
  y << 1.0, 0.0, -2.0, 0.5;
  const bgc::RecoveryOutcome outcome = bgc::brute_force_l1(identity, y);
  REQUIRE(outcome.status == RecoveryStatus::optimal);
  CHECK((outcome.estimate - y).lpNorm<Eigen::Infinity>() <= 1e-10);

  CHECK_THROWS_AS(bgc::brute_force_l1(Eigen::MatrixXd::Ones(2, 15), Eigen::VectorXd::Ones(2)),
                  std::invalid_argument);
}

TEST_CASE("basis_pursuit agrees with the exhaustive oracle on tiny instances") {
  bgc::Xoshiro256 rng(2024);
  int checked_vectors = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng.uniform_below(7));   // 2..8
    const int n = m + 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(12 - m)));
    const int k = 1 + static_cast<int>(rng.uniform_below(3));

    const Eigen::MatrixXd A = bgc::sample_gaussian(m, n, rng()).entries;
    const Eigen::VectorXd truth =
        bgc::generate_signal(n, std::min(k, n), Signing::signed_pm1, rng()).to_dense();
    const Eigen::VectorXd y = A * truth;

    const bgc::RecoveryOutcome lp = bgc::basis_pursuit(A, y);
    const bgc::RecoveryOutcome oracle = bgc::brute_force_l1(A, y);
    REQUIRE(lp.status == RecoveryStatus::optimal);
    REQUIRE(oracle.status == RecoveryStatus::optimal);
    CHECK(lp.objective == doctest::Approx(oracle.objective).epsilon(1e-6));

    // Below the coherence bound the minimizer is unique: vectors must match.
    bgc::SensingMatrix wrapped;
    wrapped.kind = bgc::MatrixKind::gaussian;
    wrapped.entries = A;
    if (std::min(k, n) <= bgc::coherence(wrapped).k_bound) {
      CHECK((lp.estimate - oracle.estimate).lpNorm<Eigen::Infinity>() <= 1e-6);
      ++checked_vectors;
    }
  }
  (void)checked_vectors;
}

TEST_CASE("coherence guarantee: k within the bound recovers exactly") {
  bgc::ConstructionConfig config;
  config.num_checks = 20;
  config.num_vars = 40;
  config.seed = 15;
  const bgc::BipartiteGraph graph = bgc::bgc_construct(config).graph;
  const bgc::SensingMatrix matrix = bgc::realize_binary(graph);
  const long long k_bound = bgc::coherence(matrix).k_bound;
  REQUIRE(k_bound >= 1);

  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::VectorXd truth =
        bgc::generate_signal(40, static_cast<int>(k_bound), Signing::signed_pm1,
                             1000 + static_cast<std::uint64_t>(trial))
            .to_dense();
    const Eigen::VectorXd y = matrix.entries * truth;
    const bgc::RecoveryOutcome outcome = bgc::basis_pursuit(matrix, y);
    REQUIRE(outcome.status == RecoveryStatus::optimal);
    CHECK(bgc::relative_error(truth, outcome.estimate) <= 1e-6);
  }
}

TEST_CASE("relative_error conventions") {
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(3);
  Eigen::VectorXd one = Eigen::VectorXd::Ones(3);
  CHECK(bgc::relative_error(zero, zero) == 0.0);
  CHECK(std::isinf(bgc::relative_error(zero, one)));
  CHECK(bgc::relative_error(one, one) == 0.0);
}
