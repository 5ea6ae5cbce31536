#pragma once

#include <Eigen/Dense>
#include <functional>

namespace drip {

/// Objective callback: returns f(x) and fills grad (always requested).
using ObjectiveFn = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

struct BfgsOptions {
  int max_iters = 100;
  double grad_tol = 1e-8;
  double wolfe_c1 = 1e-4;  // sufficient decrease
  double wolfe_c2 = 0.9;   // curvature
};

enum class BfgsStatus { gradient_tol, max_iters, line_search_failure };

struct BfgsResult {
  Eigen::VectorXd x;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  BfgsStatus status = BfgsStatus::max_iters;
};

/// Dense BFGS with a strong-Wolfe line search. The inverse-Hessian
/// approximation is updated only when the curvature product y^T s is positive;
/// the update is skipped otherwise, which keeps the approximation positive
/// definite across the hinge kinks of the reduced Lagrangian (the objective is
/// C^1 but not C^2 there). On line-search failure the best iterate found so
/// far is returned with the corresponding status.
BfgsResult minimize_bfgs(const ObjectiveFn& f, const Eigen::VectorXd& x0,
                         const BfgsOptions& opts);

}  // namespace drip
