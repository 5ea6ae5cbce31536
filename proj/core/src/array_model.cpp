#include "drip/array_model.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace drip {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

SteeringVector steering(int n, double theta_rad, double spacing) {
  if (n < 1) throw std::invalid_argument("steering: antenna count must be at least 1");
  SteeringVector sv;
  sv.angle_rad = theta_rad;
  sv.spacing = spacing;
  sv.entries.resize(n);
  const double phase_step = kTwoPi * spacing * std::sin(theta_rad);
  for (int k = 0; k < n; ++k)
    sv.entries(k) = std::polar(1.0, phase_step * static_cast<double>(k));
  return sv;
}

ArrayResponse two_way_response(double theta_rad, const ScenarioConfig& cfg) {
  const SteeringVector a_tx = steering(cfg.n_tx, theta_rad, cfg.tx_spacing_wavelengths);
  const SteeringVector a_rx = steering(cfg.n_rx, theta_rad, cfg.rx_spacing_wavelengths);
  ArrayResponse resp;
  resp.angle_rad = theta_rad;
  // Outer product with a plain transpose on the transmit side.
  resp.matrix = a_rx.entries * a_tx.entries.transpose();
  return resp;
}

Eigen::MatrixXcd spacetime_lift(const ArrayResponse& resp, int n_samples) {
  if (n_samples < 1) throw std::invalid_argument("spacetime_lift: n_samples must be at least 1");
  const Eigen::Index rows = resp.matrix.rows();
  const Eigen::Index cols = resp.matrix.cols();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rows * n_samples, cols * n_samples);
  for (int l = 0; l < n_samples; ++l)
    out.block(l * rows, l * cols, rows, cols) = resp.matrix;
  return out;
}

Eigen::VectorXcd apply_lift(const ArrayResponse& resp, const Eigen::VectorXcd& x, int n_samples) {
  const Eigen::Index n_tx = resp.matrix.cols();
  const Eigen::Index n_rx = resp.matrix.rows();
  if (x.size() != n_tx * n_samples)
    throw std::invalid_argument("apply_lift: vector length does not match n_tx * n_samples");
  Eigen::Map<const Eigen::MatrixXcd> mat(x.data(), n_tx, n_samples);
  Eigen::MatrixXcd lifted = resp.matrix * mat;  // n_rx x L
  return Eigen::Map<Eigen::VectorXcd>(lifted.data(), n_rx * n_samples);
}

Eigen::VectorXcd apply_lift_adjoint(const ArrayResponse& resp, const Eigen::VectorXcd& u,
                                    int n_samples) {
  const Eigen::Index n_tx = resp.matrix.cols();
  const Eigen::Index n_rx = resp.matrix.rows();
  if (u.size() != n_rx * n_samples)
    throw std::invalid_argument("apply_lift_adjoint: vector length does not match n_rx * n_samples");
  Eigen::Map<const Eigen::MatrixXcd> mat(u.data(), n_rx, n_samples);
  Eigen::MatrixXcd lowered = resp.matrix.adjoint() * mat;  // n_tx x L
  return Eigen::Map<Eigen::VectorXcd>(lowered.data(), n_tx * n_samples);
}

}  // namespace drip
