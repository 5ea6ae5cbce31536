#include "drip/al_solver.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "drip/bfgs.hpp"
#include "drip/csv.hpp"
#include "drip/realify.hpp"

namespace drip {

namespace {

Eigen::VectorXd constraint_values(const QcqpProblem& prob, const Eigen::VectorXd& x_r,
                                  const Eigen::VectorXcd& xc) {
  Eigen::VectorXd c(prob.num_constraints());
  for (int i = 0; i < prob.num_constraints(); ++i) c(i) = prob.constraints[i].value(x_r, xc);
  return c;
}

double max_violation_of(const QcqpProblem& prob, const Eigen::VectorXd& c) {
  double v = 0.0;
  for (int i = 0; i < prob.num_constraints(); ++i) v = std::max(v, c(i) - prob.rhs(i));
  return v;
}

}  // namespace

double reduced_lagrangian(const Eigen::VectorXd& x_r, const Eigen::VectorXd& lambda, double rho,
                          const QcqpProblem& prob) {
  const Eigen::VectorXcd xc = phi_inverse(x_r);
  double val = prob.objective.value(x_r, xc);
  for (int i = 0; i < prob.num_constraints(); ++i) {
    val -= lambda(i) * lambda(i) / (2.0 * rho);
    const double hinge =
        lambda(i) / rho + prob.constraints[i].value(x_r, xc) - prob.rhs(i);
    if (hinge > 0.0) val += 0.5 * rho * hinge * hinge;
  }
  return val;
}

Eigen::VectorXd slack_update(const Eigen::VectorXd& x_r, const Eigen::VectorXd& lambda,
                             double rho, const QcqpProblem& prob) {
  const Eigen::VectorXcd xc = phi_inverse(x_r);
  Eigen::VectorXd phi(prob.num_constraints());
  for (int i = 0; i < prob.num_constraints(); ++i) {
    const double slack =
        -lambda(i) / rho - prob.constraints[i].value(x_r, xc) + prob.rhs(i);
    phi(i) = std::max(slack, 0.0);
  }
  return phi;
}

Eigen::VectorXd al_gradient(const Eigen::VectorXd& x_r, const Eigen::VectorXd& lambda,
                            double rho, const QcqpProblem& prob) {
  const Eigen::VectorXcd xc = phi_inverse(x_r);
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(x_r.size());
  prob.objective.add_scaled_gradient(x_r, xc, 1.0, grad);
  for (int i = 0; i < prob.num_constraints(); ++i) {
    const double hinge =
        lambda(i) / rho + prob.constraints[i].value(x_r, xc) - prob.rhs(i);
    if (hinge > 0.0) prob.constraints[i].add_scaled_gradient(x_r, xc, rho * hinge, grad);
  }
  return grad;
}

Eigen::VectorXd dual_update(const Eigen::VectorXd& x_r, const Eigen::VectorXd& lambda,
                            double rho, const QcqpProblem& prob) {
  const Eigen::VectorXcd xc = phi_inverse(x_r);
  Eigen::VectorXd next(prob.num_constraints());
  for (int i = 0; i < prob.num_constraints(); ++i) {
    const double c = prob.constraints[i].value(x_r, xc);
    next(i) = std::max(lambda(i) + rho * (c - prob.rhs(i)), 0.0);
  }
  return next;
}

InnerResult inner_solve(const QcqpProblem& prob, const Eigen::VectorXd& x_init,
                        const InnerOptions& opts) {
  InnerResult res;
  res.x_r = x_init;
  res.lambda = Eigen::VectorXd::Zero(prob.num_constraints());

  BfgsOptions bopts;
  bopts.max_iters = opts.bfgs_iters;
  bopts.grad_tol = opts.bfgs_grad_tol;

  Eigen::VectorXd prev_c;
  bool saw_line_search_failure = false;

  for (int iter = 0; iter < opts.inner_iters; ++iter) {
    // Minimizing the reduced Lagrangian at the current multipliers. The value
    // and gradient share the per-constraint evaluations.
    const Eigen::VectorXd lambda = res.lambda;
    const double rho = opts.rho;
    ObjectiveFn f = [&prob, &lambda, rho](const Eigen::VectorXd& xr, Eigen::VectorXd& grad) {
      const Eigen::VectorXcd xc = phi_inverse(xr);
      grad.setZero();
      prob.objective.add_scaled_gradient(xr, xc, 1.0, grad);
      double val = prob.objective.value(xr, xc);
      for (int i = 0; i < prob.num_constraints(); ++i) {
        val -= lambda(i) * lambda(i) / (2.0 * rho);
        const double hinge = lambda(i) / rho + prob.constraints[i].value(xr, xc) - prob.rhs(i);
        if (hinge > 0.0) {
          val += 0.5 * rho * hinge * hinge;
          prob.constraints[i].add_scaled_gradient(xr, xc, rho * hinge, grad);
        }
      }
      return val;
    };

    const BfgsResult bres = minimize_bfgs(f, res.x_r, bopts);
    // A line search that stalls with a near-zero gradient is ordinary
    // floating-point exhaustion at the minimizer; only count failures that
    // leave a substantial gradient behind.
    if (bres.status == BfgsStatus::line_search_failure &&
        bres.grad_norm > 1e-5 * (1.0 + std::abs(bres.value)))
      saw_line_search_failure = true;

    const double step_norm = (bres.x - res.x_r).norm();
    res.x_r = bres.x;
    res.lambda = dual_update(res.x_r, res.lambda, opts.rho, prob);

    const Eigen::VectorXcd xc = phi_inverse(res.x_r);
    Eigen::VectorXd c = constraint_values(prob, res.x_r, xc);

    InnerTraceRow row;
    row.objective = prob.objective.value(res.x_r, xc);
    row.max_violation = max_violation_of(prob, c);
    row.dual_norm = res.lambda.norm();
    row.step_norm = step_norm;
    row.constraint_drift =
        prev_c.size() == c.size() ? (c - prev_c).cwiseAbs().maxCoeff() : 0.0;
    res.trace.rows.push_back(row);
    prev_c = std::move(c);

    if (row.max_violation < opts.violation_tol && step_norm < opts.step_tol) {
      res.status = InnerStatus::converged;
      return res;
    }
  }

  res.status = saw_line_search_failure ? InnerStatus::line_search_failure
                                       : InnerStatus::iteration_budget;
  return res;
}

void write_inner_trace_csv(const InnerTrace& trace, std::ostream& out) {
  out << "iter,objective,max_violation,dual_norm,step_norm\n";
  for (std::size_t k = 0; k < trace.rows.size(); ++k) {
    const auto& r = trace.rows[k];
    out << (k + 1) << ',' << csv_num(r.objective) << ',' << csv_num(r.max_violation) << ','
        << csv_num(r.dual_norm) << ',' << csv_num(r.step_norm) << '\n';
  }
}

}  // namespace drip
