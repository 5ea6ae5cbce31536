#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "drip/al_solver.hpp"
#include "drip/beamformer.hpp"
#include "drip/scenario.hpp"
#include "drip/signals.hpp"

namespace drip {

enum class SolveStatus { converged, iteration_budget, inner_failure };

std::string to_string(SolveStatus s);

/// Output of one full block-coordinate solve: the waveform, its combiners,
/// per-outer-iteration metric traces, and the final per-constraint residuals.
///
/// `converged` is only reported when the returned waveform satisfies every
/// constraint within tolerance and the monotonicity monitors held; an
/// infeasible run returns the least-violating iterate under
/// `iteration_budget`.
struct SolveResult {
  ComplexWaveform waveform;
  BeamformerBank beamformers;

  std::vector<double> objective_trace;               // ||x^k - x_comm||^2
  std::vector<std::vector<double>> sinr_trace_db;    // [outer][target]
  std::vector<double> mui_trace;

  Eigen::VectorXd feasibility;  // c_i - r_i at the returned waveform
  double max_violation = 0.0;
  SolveStatus status = SolveStatus::iteration_budget;

  int outer_iterations = 0;
  bool objective_monotone = true;   // descent of the surrogate objective
  bool beamformer_monotone = true;  // combiner refresh never lowered any SINR
  double min_beamformer_margin = 0.0;
};

/// Feasibility tolerance used to call a returned waveform converged.
inline constexpr double kFeasibilityTol = 1e-6;

/// Block cyclic coordinate descent on (combiners, waveform):
/// starts at the reference chirp and alternates a closed-form combiner
/// refresh per target with an augmented-Lagrangian solve of the assembled
/// waveform program, until the iterate stalls or the budget is spent.
SolveResult drip_solve(const ScenarioConfig& cfg, const CommBlock& comm,
                       const ComplexWaveform& x0);

}  // namespace drip
