#include "drip/beamformer.hpp"

#include <stdexcept>

#include "drip/array_model.hpp"

namespace drip {

LiftedEchoes lifted_echoes(const Eigen::VectorXcd& x, const ScenarioConfig& cfg) {
  LiftedEchoes e;
  e.targets.reserve(cfg.num_targets());
  for (int q = 0; q < cfg.num_targets(); ++q) {
    const ArrayResponse resp = two_way_response(cfg.target_angle_rad(q), cfg);
    e.targets.push_back(apply_lift(resp, x, cfg.n_samples));
  }
  e.interferers.reserve(cfg.num_interferers());
  for (int i = 0; i < cfg.num_interferers(); ++i) {
    const ArrayResponse resp = two_way_response(cfg.interferer_angle_rad(i), cfg);
    e.interferers.push_back(apply_lift(resp, x, cfg.n_samples));
  }
  return e;
}

QuotientMatrices build_quotient_matrices(const Eigen::VectorXcd& x, int q,
                                         const ScenarioConfig& cfg) {
  if (q < 0 || q >= cfg.num_targets())
    throw std::out_of_range("build_quotient_matrices: target index out of range");
  const LiftedEchoes e = lifted_echoes(x, cfg);
  const Eigen::Index dim = cfg.n_rx * cfg.n_samples;

  QuotientMatrices qm;
  qm.t1.noalias() = cfg.target_powers[q] * (e.targets[q] * e.targets[q].adjoint());
  qm.t2 = cfg.radar_noise_power * Eigen::MatrixXcd::Identity(dim, dim);
  for (int qp = 0; qp < cfg.num_targets(); ++qp) {
    if (qp == q) continue;
    qm.t2.noalias() += cfg.target_powers[qp] * (e.targets[qp] * e.targets[qp].adjoint());
  }
  for (int i = 0; i < cfg.num_interferers(); ++i)
    qm.t2.noalias() += cfg.interferer_powers[i] * (e.interferers[i] * e.interferers[i].adjoint());
  return qm;
}

double rayleigh_quotient(const QuotientMatrices& qm, const Eigen::VectorXcd& u) {
  const double num = (u.adjoint() * qm.t1 * u).value().real();
  const double den = (u.adjoint() * qm.t2 * u).value().real();
  if (!(den > 0.0)) throw std::runtime_error("rayleigh_quotient: nonpositive denominator");
  return num / den;
}

Eigen::VectorXcd update_beamformer(const Eigen::VectorXcd& x, int q, const ScenarioConfig& cfg) {
  const QuotientMatrices qm = build_quotient_matrices(x, q, cfg);

  const ArrayResponse resp = two_way_response(cfg.target_angle_rad(q), cfg);
  const Eigen::VectorXcd v = apply_lift(resp, x, cfg.n_samples);

  // t2 = low-rank + noise * I is Hermitian positive definite; solve instead of
  // forming the inverse.
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(qm.t2);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("update_beamformer: interference matrix factorization failed");
  const Eigen::VectorXcd t2inv_v = ldlt.solve(v);
  const double denom = (v.adjoint() * t2inv_v).value().real();
  if (!(denom > 0.0) || !std::isfinite(denom))
    throw std::runtime_error("update_beamformer: degenerate lifted echo (zero response)");
  return t2inv_v / denom;
}

BeamformerBank update_all_beamformers(const Eigen::VectorXcd& x, const ScenarioConfig& cfg) {
  BeamformerBank bank;
  bank.vectors.reserve(cfg.num_targets());
  for (int q = 0; q < cfg.num_targets(); ++q) bank.vectors.push_back(update_beamformer(x, q, cfg));
  return bank;
}

}  // namespace drip
