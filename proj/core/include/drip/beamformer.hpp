#pragma once

#include <Eigen/Dense>
#include <vector>

#include "drip/scenario.hpp"

namespace drip {

/// Receive combiners, one stacked vector per target: u_q has length
/// n_rx * n_samples and concatenates the per-time-instant combiners.
struct BeamformerBank {
  std::vector<Eigen::VectorXcd> vectors;

  int num_targets() const { return static_cast<int>(vectors.size()); }
  const Eigen::VectorXcd& operator[](int q) const { return vectors.at(q); }
};

/// Generalized Rayleigh quotient data for one target: the combiner SINR at u
/// is (u^H t1 u) / (u^H t2 u). t1 is rank one (desired echo), t2 collects
/// inter-target echoes, interferer echoes, and the noise floor.
struct QuotientMatrices {
  Eigen::MatrixXcd t1;
  Eigen::MatrixXcd t2;
};

/// Lifted echo directions at the current waveform: one vector
/// (I_L (x) Pi(theta)) x per target followed by one per interferer.
struct LiftedEchoes {
  std::vector<Eigen::VectorXcd> targets;
  std::vector<Eigen::VectorXcd> interferers;
};

LiftedEchoes lifted_echoes(const Eigen::VectorXcd& x, const ScenarioConfig& cfg);

QuotientMatrices build_quotient_matrices(const Eigen::VectorXcd& x, int q,
                                         const ScenarioConfig& cfg);

double rayleigh_quotient(const QuotientMatrices& qm, const Eigen::VectorXcd& u);

/// Closed-form minimum-variance distortionless combiner for target q:
/// u = t2^{-1} v / (v^H t2^{-1} v) with v the lifted desired echo. Satisfies
/// u^H v = 1 and maximizes the Rayleigh quotient (rank-one numerator).
Eigen::VectorXcd update_beamformer(const Eigen::VectorXcd& x, int q, const ScenarioConfig& cfg);

BeamformerBank update_all_beamformers(const Eigen::VectorXcd& x, const ScenarioConfig& cfg);

}  // namespace drip
