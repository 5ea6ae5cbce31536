#pragma once

#include <Eigen/Dense>

#include "drip/scenario.hpp"

namespace drip {

/// Uniform-linear-array phase response at one angle. Entry k equals
/// exp(j 2*pi*spacing*k*sin(angle)); entry 0 is always 1.
struct SteeringVector {
  Eigen::VectorXcd entries;
  double angle_rad = 0.0;
  double spacing = 0.5;  // in wavelengths
};

SteeringVector steering(int n, double theta_rad, double spacing);

/// Two-way (monostatic) array response Pi(theta) = a_rx(theta) a_tx(theta)^T.
/// Rank one; Frobenius norm sqrt(n_rx * n_tx). Note the plain transpose.
struct ArrayResponse {
  Eigen::MatrixXcd matrix;  // n_rx x n_tx
  double angle_rad = 0.0;
};

ArrayResponse two_way_response(double theta_rad, const ScenarioConfig& cfg);

/// Dense block-diagonal lift I_L (x) Pi, size (n_rx*L) x (n_tx*L). Used where
/// full matrices are needed; prefer apply_lift in hot paths.
Eigen::MatrixXcd spacetime_lift(const ArrayResponse& resp, int n_samples);

/// (I_L (x) Pi) x without materializing the lift: returns vec(Pi * X) where
/// X = unvec(x) column-major, x of length n_tx*L.
Eigen::VectorXcd apply_lift(const ArrayResponse& resp, const Eigen::VectorXcd& x, int n_samples);

/// Adjoint application: (I_L (x) Pi)^H u = vec(Pi^H * U), u of length n_rx*L.
Eigen::VectorXcd apply_lift_adjoint(const ArrayResponse& resp, const Eigen::VectorXcd& u,
                                    int n_samples);

}  // namespace drip
