#include "drip/bccd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "drip/metrics.hpp"
#include "drip/qcqp.hpp"
#include "drip/realify.hpp"

namespace drip {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::iteration_budget: return "iteration_budget";
    case SolveStatus::inner_failure: return "inner_failure";
  }
  throw std::logic_error("unreachable solve status");
}

namespace {

Eigen::VectorXd residuals_at(const QcqpProblem& prob, const Eigen::VectorXd& xr) {
  const Eigen::VectorXcd xc = phi_inverse(xr);
  Eigen::VectorXd out(prob.num_constraints());
  for (int i = 0; i < prob.num_constraints(); ++i)
    out(i) = prob.constraints[i].value(xr, xc) - prob.rhs(i);
  return out;
}

}  // namespace

SolveResult drip_solve(const ScenarioConfig& cfg, const CommBlock& comm,
                       const ComplexWaveform& x0) {
  const Eigen::VectorXcd x0_vec = x0.vec();
  const Eigen::VectorXcd x_comm = comm.zf_reference.vec();
  if (x0_vec.size() != cfg.dim())
    throw std::invalid_argument("drip_solve: reference waveform dimension mismatch");

  InnerOptions inner_opts;
  inner_opts.rho = cfg.rho;
  inner_opts.inner_iters = cfg.inner_iters;
  inner_opts.bfgs_iters = cfg.bfgs_iters;

  SolveResult res;
  res.min_beamformer_margin = std::numeric_limits<double>::infinity();

  Eigen::VectorXcd x = x0_vec;
  BeamformerBank bank;
  bool have_bank = false;
  bool saw_inner_failure = false;

  // Final iterate, plus the least-violating iterate seen as the fallback for
  // runs that never become feasible.
  Eigen::VectorXd final_residuals;
  double final_violation = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd best_x = x;
  BeamformerBank best_bank;
  Eigen::VectorXd best_residuals;
  double best_violation = std::numeric_limits<double>::infinity();

  for (int k = 0; k < cfg.outer_iters; ++k) {
    // Combiner block: closed-form refresh per target. The refresh maximizes
    // each target's quotient, so the SINR at the current waveform must not
    // drop; track the worst margin as a runtime monitor.
    BeamformerBank next_bank = update_all_beamformers(x, cfg);
    if (have_bank) {
      for (int q = 0; q < cfg.num_targets(); ++q) {
        const double before = radar_sinr(x, bank, q, cfg);
        const double after = radar_sinr(x, next_bank, q, cfg);
        const double margin = after - before;
        res.min_beamformer_margin = std::min(res.min_beamformer_margin, margin);
        if (margin < -1e-9) res.beamformer_monotone = false;
      }
    }
    bank = std::move(next_bank);
    have_bank = true;

    // Waveform block: rebuild the SINR rows around the fresh combiners and
    // run the inner solver from the current iterate with multipliers reset.
    // A zero similarity radius collapses the feasible set onto the reference
    // chirp itself (the ball's gradient vanishes there, so no finite
    // multiplier certifies it); the waveform block is then the identity.
    const QcqpProblem prob = assemble(x_comm, x0_vec, bank, cfg);
    Eigen::VectorXd x_r_next;
    if (cfg.epsilon > 0.0) {
      const InnerResult inner = inner_solve(prob, phi_vec(x), inner_opts);
      if (inner.status == InnerStatus::line_search_failure) saw_inner_failure = true;
      x_r_next = inner.x_r;
    } else {
      x_r_next = phi_vec(x0_vec);
    }

    const Eigen::VectorXcd x_next = phi_inverse(x_r_next);
    const double step = (x_next - x).norm();
    x = x_next;
    res.outer_iterations = k + 1;

    res.objective_trace.push_back((x - x_comm).squaredNorm());
    ComplexWaveform w = ComplexWaveform::from_vec(x, cfg.n_tx, cfg.n_samples);
    res.mui_trace.push_back(mui_energy(comm.channel, w.mat, comm.symbols));
    std::vector<double> sinr_row(cfg.num_targets());
    for (int q = 0; q < cfg.num_targets(); ++q)
      sinr_row[q] = linear_to_db(radar_sinr(x, bank, q, cfg));
    res.sinr_trace_db.push_back(std::move(sinr_row));

    Eigen::VectorXd residuals = residuals_at(prob, x_r_next);
    const double violation = residuals.size() > 0 ? std::max(residuals.maxCoeff(), 0.0) : 0.0;
    if (violation < best_violation) {
      best_violation = violation;
      best_x = x;
      best_bank = bank;
      best_residuals = residuals;
    }
    final_violation = violation;
    final_residuals = std::move(residuals);

    if (violation <= kFeasibilityTol && step < 1e-8) break;
  }

  // Descent monitor on the surrogate objective; a violation beyond the slack
  // disqualifies the run from reporting convergence.
  for (std::size_t k = 1; k < res.objective_trace.size(); ++k) {
    const double prev = res.objective_trace[k - 1];
    const double cur = res.objective_trace[k];
    if (cur > prev + 1e-4 * (1.0 + std::abs(prev))) res.objective_monotone = false;
  }

  if (!std::isfinite(res.min_beamformer_margin)) res.min_beamformer_margin = 0.0;

  // A feasible run returns its final iterate (best objective under descent);
  // otherwise fall back to the least-violating one.
  if (final_violation <= kFeasibilityTol) {
    res.waveform = ComplexWaveform::from_vec(x, cfg.n_tx, cfg.n_samples);
    res.beamformers = std::move(bank);
    res.feasibility = std::move(final_residuals);
    res.max_violation = final_violation;
  } else {
    res.waveform = ComplexWaveform::from_vec(best_x, cfg.n_tx, cfg.n_samples);
    res.beamformers = std::move(best_bank);
    res.feasibility = std::move(best_residuals);
    res.max_violation = best_violation;
  }

  const bool feasible = res.max_violation <= kFeasibilityTol;
  if (feasible && res.objective_monotone && res.beamformer_monotone)
    res.status = SolveStatus::converged;
  else if (saw_inner_failure && !feasible)
    res.status = SolveStatus::inner_failure;
  else
    res.status = SolveStatus::iteration_budget;
  return res;
}

}  // namespace drip
