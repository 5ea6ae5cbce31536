#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "drip/qcqp.hpp"

namespace drip {

struct InnerOptions {
  double rho = 10.0;
  int inner_iters = 30;
  int bfgs_iters = 50;
  double bfgs_grad_tol = 1e-8;
  double violation_tol = 1e-8;  // early stop: max constraint violation
  double step_tol = 1e-10;      // early stop: primal step norm
};

/// Per-iteration record of the quantities the inner-loop convergence argument
/// is stated over: objective, worst violation, dual magnitude, primal step,
/// and the largest change of any constraint value between iterates.
struct InnerTraceRow {
  double objective = 0.0;
  double max_violation = 0.0;
  double dual_norm = 0.0;
  double step_norm = 0.0;
  double constraint_drift = 0.0;
};

struct InnerTrace {
  std::vector<InnerTraceRow> rows;
};

enum class InnerStatus { converged, iteration_budget, line_search_failure };

struct InnerResult {
  Eigen::VectorXd x_r;
  Eigen::VectorXd lambda;
  InnerTrace trace;
  InnerStatus status = InnerStatus::iteration_budget;
};

/// Augmented Lagrangian of the slacked problem with the slacks eliminated in
/// closed form:
///   obj(x) - sum_i lambda_i^2/(2 rho)
///          + (rho/2) sum_i ([lambda_i/rho + c_i(x) - r_i]^+)^2.
double reduced_lagrangian(const Eigen::VectorXd& x_r, const Eigen::VectorXd& lambda, double rho,
                          const QcqpProblem& prob);

/// Closed-form optimal slacks phi_i = [r_i - c_i(x) - lambda_i/rho]^+.
Eigen::VectorXd slack_update(const Eigen::VectorXd& x_r, const Eigen::VectorXd& lambda,
                             double rho, const QcqpProblem& prob);

/// Gradient of the reduced Lagrangian:
///   2 P0 x + q0 + rho sum_i [lambda_i/rho + c_i(x) - r_i]^+ (2 P_i x + q_i).
Eigen::VectorXd al_gradient(const Eigen::VectorXd& x_r, const Eigen::VectorXd& lambda,
                            double rho, const QcqpProblem& prob);

/// Multiplier ascent: lambda_i <- [lambda_i + rho (c_i(x) - r_i)]^+,
/// elementwise nonnegative by construction.
Eigen::VectorXd dual_update(const Eigen::VectorXd& x_r, const Eigen::VectorXd& lambda,
                            double rho, const QcqpProblem& prob);

/// Runs inner_iters rounds of {BFGS minimization of the reduced Lagrangian,
/// dual update} from lambda = 0. Early-stops once the worst violation and the
/// primal step are both below tolerance. A BFGS line-search failure is
/// reported through the status, never thrown.
InnerResult inner_solve(const QcqpProblem& prob, const Eigen::VectorXd& x_init,
                        const InnerOptions& opts);

/// CSV export of an inner trace: iter, objective, max_violation, dual_norm,
/// step_norm.
void write_inner_trace_csv(const InnerTrace& trace, std::ostream& out);

}  // namespace drip
