#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <utility>
#include <vector>

#include "drip/beamformer.hpp"
#include "drip/scenario.hpp"
#include "drip/signals.hpp"

namespace drip {

/// Peak sample power over average sample power (linear ratio, >= 1; equals 1
/// exactly for constant-modulus signals). The average runs over all
/// n_tx * n_samples entries of the vectorized waveform, which makes
/// papr(x) <= eta equivalent to the per-sample caps the solver enforces under
/// the unit-norm constraint.
double papr(const Eigen::VectorXcd& x);
double papr_db(const Eigen::VectorXcd& x);

/// Residual multi-user interference energy ||H X - S||_F^2.
double mui_energy(const Eigen::MatrixXcd& channel, const Eigen::MatrixXcd& waveform,
                  const Eigen::MatrixXcd& symbols);

/// Post-combining radar SINR for target q: coherently integrated desired echo
/// power over inter-target + interferer echo power and noise,
///
///   sigma_q^2 |u_q^H v_q|^2 /
///     (sum_{q' != q} sigma_q'^2 |u_q^H v_q'|^2
///      + sum_i sigma_i^2 |u_q^H v_i|^2 + sigma_r^2 ||u_q||^2),
///
/// with v the lifted echo directions at x. Identical to the generalized
/// Rayleigh quotient of the beamformer module and to the role-swapped
/// waveform-side quadratic form used in the solver constraints. Invariant to
/// rescaling u_q.
double radar_sinr(const Eigen::VectorXcd& x, const BeamformerBank& bank, int q,
                  const ScenarioConfig& cfg);

/// Sum over users of log2(1 + per-user SINR), per-user SINR being mean symbol
/// energy over mean residual interference energy plus noise. `symbols` is the
/// scaled block carried by CommBlock.
double sum_rate(const Eigen::MatrixXcd& channel, const Eigen::MatrixXcd& waveform,
                const Eigen::MatrixXcd& symbols, double comm_noise_power);

/// Scans the combiner SINR over angles: at each grid angle a hypothetical
/// unit-power target is combined with the minimum-variance distortionless
/// beamformer against the scenario's interferer echoes and noise. The
/// scenario targets are the subjects of the scan rather than clutter, so the
/// value at a true target angle is an upper bound on (with one target, equal
/// to) that target's achievable SINR. Returns (angle_deg, gain_db) pairs.
std::vector<std::pair<double, double>> beampattern(const Eigen::VectorXcd& x,
                                                   const ScenarioConfig& cfg,
                                                   const std::vector<double>& grid_deg);

/// Complementary CDF: probability that a sample exceeds each threshold.
std::vector<std::pair<double, double>> papr_ccdf(const std::vector<double>& samples_db,
                                                 const std::vector<double>& thresholds_db);

/// Euclidean distance to the reference chirp, ||x - x0|| (not squared).
double empirical_similarity(const Eigen::VectorXcd& x, const Eigen::VectorXcd& x0);

/// Everything the experiment harness reports about one solved waveform.
struct MetricReport {
  double papr_db = 0.0;
  double mui_energy = 0.0;
  std::vector<double> sinr_per_target_db;
  double sum_rate_bps_hz = 0.0;
  double similarity = 0.0;  // ||x - x0||
  std::vector<double> feasibility;  // per-constraint residuals c_i - r_i
};

MetricReport evaluate_metrics(const ScenarioConfig& cfg, const CommBlock& comm,
                              const ComplexWaveform& x0, const ComplexWaveform& waveform,
                              const BeamformerBank& bank);

/// CSV emitters shared by the harness and the single-solve dump.
void write_trace_csv(const std::vector<double>& values, std::ostream& out);
void write_beampattern_csv(const std::vector<std::pair<double, double>>& pattern,
                           std::ostream& out);
void write_ccdf_csv(const std::vector<std::pair<double, double>>& ccdf, std::ostream& out);

}  // namespace drip
