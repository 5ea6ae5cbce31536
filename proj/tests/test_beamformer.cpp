#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "drip/array_model.hpp"
#include "drip/beamformer.hpp"
#include "drip/metrics.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace drip;

TEST_CASE("quotient matrices: single target, no interference") {
  ScenarioConfig cfg = testing::tiny_scenario(2, 2);
  Rng rng(3);
  const Eigen::VectorXcd x = testing::random_unit_vector(cfg.dim(), rng);
  const QuotientMatrices qm = build_quotient_matrices(x, 0, cfg);
  const Eigen::Index dim = cfg.n_rx * cfg.n_samples;
  CHECK((qm.t2 - cfg.radar_noise_power * Eigen::MatrixXcd::Identity(dim, dim)).norm() < 1e-14);

  // t1 is a rank-one outer product scaled by the target power.
  const ArrayResponse resp = two_way_response(cfg.target_angle_rad(0), cfg);
  const Eigen::VectorXcd v = apply_lift(resp, x, cfg.n_samples);
  CHECK((qm.t1 - v * v.adjoint()).norm() < 1e-12);
}

TEST_CASE("quotient matrices: interference floor and entrywise oracle") {
  ScenarioConfig cfg = testing::small_scenario();
  Rng rng(5);
  const Eigen::VectorXcd x = testing::random_unit_vector(cfg.dim(), rng);
  const QuotientMatrices qm = build_quotient_matrices(x, 0, cfg);

  // All eigenvalues of t2 sit at or above the noise power.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(qm.t2);
  CHECK(es.eigenvalues().minCoeff() >= cfg.radar_noise_power * (1.0 - 1e-12));

  // Entrywise reconstruction through independently assembled dense lifts.
  const Eigen::Index dim = cfg.n_rx * cfg.n_samples;
  Eigen::MatrixXcd expected = cfg.radar_noise_power * Eigen::MatrixXcd::Identity(dim, dim);
  for (int qp = 1; qp < cfg.num_targets(); ++qp) {
    const Eigen::MatrixXcd lift = spacetime_lift(two_way_response(cfg.target_angle_rad(qp), cfg),
                                                 cfg.n_samples);
    const Eigen::VectorXcd v = lift * x;
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j)
        expected(i, j) += cfg.target_powers[qp] * v(i) * std::conj(v(j));
  }
  for (int i = 0; i < cfg.num_interferers(); ++i) {
    const Eigen::MatrixXcd lift =
        spacetime_lift(two_way_response(cfg.interferer_angle_rad(i), cfg), cfg.n_samples);
    const Eigen::VectorXcd v = lift * x;
    for (Eigen::Index a = 0; a < dim; ++a)
      for (Eigen::Index b = 0; b < dim; ++b)
        expected(a, b) += cfg.interferer_powers[i] * v(a) * std::conj(v(b));
  }
  CHECK((qm.t2 - expected).norm() < 1e-10);
}

TEST_CASE("beamformer update is distortionless") {
  ScenarioConfig cfg = testing::small_scenario();
  Rng rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const Eigen::VectorXcd x = testing::random_unit_vector(cfg.dim(), rng);
    for (int q = 0; q < cfg.num_targets(); ++q) {
      const Eigen::VectorXcd u = update_beamformer(x, q, cfg);
      const ArrayResponse resp = two_way_response(cfg.target_angle_rad(q), cfg);
      const Eigen::VectorXcd v = apply_lift(resp, x, cfg.n_samples);
      const std::complex<double> response = u.dot(v);  // u^H v
      CHECK(std::abs(response - std::complex<double>(1.0, 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("matched filter limit without interference") {
  ScenarioConfig cfg = testing::tiny_scenario(2, 2);
  Rng rng(11);
  const Eigen::VectorXcd x = testing::random_unit_vector(cfg.dim(), rng);
  const Eigen::VectorXcd u = update_beamformer(x, 0, cfg);
  const ArrayResponse resp = two_way_response(cfg.target_angle_rad(0), cfg);
  const Eigen::VectorXcd v = apply_lift(resp, x, cfg.n_samples);
  // u must be proportional to v when t2 is a scaled identity.
  const std::complex<double> ratio = u(0) / v(0);
  CHECK((u - ratio * v).norm() < 1e-10 * u.norm());
  CHECK(std::abs(u.dot(v) - std::complex<double>(1.0, 0.0)) < 1e-10);
}

TEST_CASE("closed form attains the generalized eigenvalue maximum") {
  ScenarioConfig cfg = testing::small_scenario();
  Rng rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const Eigen::VectorXcd x = testing::random_unit_vector(cfg.dim(), rng);
    for (int q = 0; q < cfg.num_targets(); ++q) {
      const QuotientMatrices qm = build_quotient_matrices(x, q, cfg);
      const Eigen::VectorXcd u = update_beamformer(x, q, cfg);
      const double achieved = rayleigh_quotient(qm, u);
      const double best = oracle::generalized_eig_quotient(qm.t1, qm.t2).value;
      CHECK(achieved == doctest::Approx(best).epsilon(1e-8));

      // And beats 50 random directions.
      for (int trial = 0; trial < 50; ++trial) {
        const Eigen::VectorXcd w =
            testing::random_complex_vector(cfg.n_rx * cfg.n_samples, rng);
        CHECK(rayleigh_quotient(qm, w) <= achieved + 1e-9);
      }
    }
  }
}

TEST_CASE("refreshing the combiner never lowers the sinr") {
  ScenarioConfig cfg = testing::small_scenario();
  Rng rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    const Eigen::VectorXcd x_old = testing::random_unit_vector(cfg.dim(), rng);
    const Eigen::VectorXcd x_new = testing::random_unit_vector(cfg.dim(), rng);
    const BeamformerBank old_bank = update_all_beamformers(x_old, cfg);
    const BeamformerBank new_bank = update_all_beamformers(x_new, cfg);
    for (int q = 0; q < cfg.num_targets(); ++q) {
      const double before = radar_sinr(x_new, old_bank, q, cfg);
      const double after = radar_sinr(x_new, new_bank, q, cfg);
      CHECK(after >= before - 1e-9);
    }
  }
}

TEST_CASE("factorized solve agrees with the explicit inverse") {
  ScenarioConfig cfg = testing::small_scenario();
  Rng rng(19);
  const Eigen::VectorXcd x = testing::random_unit_vector(cfg.dim(), rng);
  for (int q = 0; q < cfg.num_targets(); ++q) {
    const QuotientMatrices qm = build_quotient_matrices(x, q, cfg);
    const ArrayResponse resp = two_way_response(cfg.target_angle_rad(q), cfg);
    const Eigen::VectorXcd v = apply_lift(resp, x, cfg.n_samples);
    const Eigen::MatrixXcd t2_inv = qm.t2.inverse();
    const Eigen::VectorXcd expected =
        (t2_inv * v) / (v.adjoint() * t2_inv * v).value().real();
    const Eigen::VectorXcd u = update_beamformer(x, q, cfg);
    CHECK((u - expected).norm() <= 1e-9 * expected.norm());
  }
}
