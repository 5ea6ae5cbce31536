#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace drip {

/// Complex-to-real stacking: x -> [Re(x); Im(x)].
inline Eigen::VectorXd phi_vec(const Eigen::VectorXcd& x) {
  const Eigen::Index n = x.size();
  Eigen::VectorXd out(2 * n);
  out.head(n) = x.real();
  out.tail(n) = x.imag();
  return out;
}

/// Complex-to-real matrix lift: A -> [[Re A, -Im A], [Im A, Re A]].
/// Satisfies phi_mat(A) * phi_vec(x) == phi_vec(A x); for Hermitian A the
/// real quadratic form equals x^H A x.
inline Eigen::MatrixXd phi_mat(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  const Eigen::Index m = a.cols();
  Eigen::MatrixXd out(2 * n, 2 * m);
  out.topLeftCorner(n, m) = a.real();
  out.topRightCorner(n, m) = -a.imag();
  out.bottomLeftCorner(n, m) = a.imag();
  out.bottomRightCorner(n, m) = a.real();
  return out;
}

/// Inverse of phi_vec: first half + j * second half. Throws on odd length.
inline Eigen::VectorXcd phi_inverse(const Eigen::VectorXd& xr) {
  if (xr.size() % 2 != 0)
    throw std::invalid_argument("phi_inverse: vector length must be even");
  const Eigen::Index n = xr.size() / 2;
  Eigen::VectorXcd out(n);
  out.real() = xr.head(n);
  out.imag() = xr.tail(n);
  return out;
}

}  // namespace drip
