// Shared scenario builders and small helpers for the test suites.
#pragma once

#include <Eigen/Dense>

#include "drip/rng.hpp"
#include "drip/scenario.hpp"

namespace drip::testing {

/// Desk-scale reference scenario: 12 transmit / 7 receive antennas, 7 time
/// samples, 4 users, two targets at 10 and 30 degrees plus one interferer.
inline ScenarioConfig paper_scenario() {
  ScenarioConfig cfg;
  cfg.n_tx = 12;
  cfg.n_rx = 7;
  cfg.n_samples = 7;
  cfg.n_users = 4;
  cfg.target_angles_deg = {10.0, 30.0};
  cfg.interferer_angles_deg = {-50.0};
  cfg.target_powers = {1.0, 1.0};
  cfg.interferer_powers = {1.0};
  cfg.radar_noise_power = 0.01;
  cfg.comm_noise_power = 0.01;
  cfg.epsilon = 0.45;
  cfg.eta_db = 2.5;
  cfg.sinr_floors_db = {20.0, 20.0};
  cfg.rho = 10.0;
  cfg.outer_iters = 8;
  cfg.inner_iters = 120;
  cfg.bfgs_iters = 50;
  cfg.constellation = Constellation::QAM16;
  cfg.rng_seed = 1;
  return cfg;
}

/// Small mixed instance for algebraic cross-checks (cheap dense oracles).
inline ScenarioConfig small_scenario() {
  ScenarioConfig cfg;
  cfg.n_tx = 3;
  cfg.n_rx = 2;
  cfg.n_samples = 2;
  cfg.n_users = 2;
  cfg.target_angles_deg = {10.0, 42.0};
  cfg.interferer_angles_deg = {-35.0};
  cfg.target_powers = {1.0, 0.8};
  cfg.interferer_powers = {1.3};
  cfg.radar_noise_power = 0.01;
  cfg.comm_noise_power = 0.01;
  cfg.epsilon = 0.6;
  cfg.eta_db = 3.0;
  cfg.sinr_floors_db = {6.0, 6.0};
  cfg.rho = 10.0;
  cfg.outer_iters = 6;
  cfg.inner_iters = 30;
  cfg.bfgs_iters = 50;
  return cfg;
}

/// Tiny instance for reference-solver cross-validation.
inline ScenarioConfig tiny_scenario(int n_tx, int n_samples) {
  ScenarioConfig cfg;
  cfg.n_tx = n_tx;
  cfg.n_rx = 2;
  cfg.n_samples = n_samples;
  cfg.n_users = 1;
  cfg.target_angles_deg = {20.0};
  cfg.target_powers = {1.0};
  cfg.radar_noise_power = 0.01;
  cfg.comm_noise_power = 0.01;
  cfg.epsilon = 0.7;
  cfg.eta_db = 3.0;
  cfg.sinr_floors_db = {6.0};
  cfg.rho = 10.0;
  cfg.outer_iters = 8;
  cfg.inner_iters = 40;
  cfg.bfgs_iters = 60;
  return cfg;
}

inline Eigen::VectorXcd random_complex_vector(int n, Rng& rng) {
  Eigen::VectorXcd v(n);
  for (int k = 0; k < n; ++k) v(k) = rng.cgaussian();
  return v;
}

inline Eigen::VectorXcd random_unit_vector(int n, Rng& rng) {
  Eigen::VectorXcd v = random_complex_vector(n, rng);
  return v / v.norm();
}

inline Eigen::MatrixXcd random_hermitian(int n, Rng& rng) {
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.cgaussian();
  return 0.5 * (a + a.adjoint());
}

}  // namespace drip::testing
