#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "drip/beamformer.hpp"
#include "drip/scenario.hpp"

namespace drip {

/// One real quadratic form c(x_r) = x_r^T P x_r + q^T x_r over the stacked
/// real variable x_r = [Re x; Im x].
///
/// Every matrix in this problem family is a scaled identity, a single-sample
/// power selector, or the realification of a low-rank Hermitian sum
/// sum_j w_j c_j c_j^H, so P is stored in that structured form and evaluated
/// in O(rank * n) instead of O(n^2). dense_matrix() materializes P for tests
/// and debug dumps.
struct QuadForm {
  double id_scale = 0.0;          // alpha in alpha * I
  int selector = -1;              // complex sample index p for |x_p|^2, or -1
  Eigen::MatrixXcd factors;       // n_complex x k, columns c_j (k may be 0)
  Eigen::VectorXd factor_weights; // k real weights w_j
  Eigen::VectorXd linear;         // q, size 2*n_complex or 0 (treated as zero)
  std::string label;              // constraint family tag for dumps/reports

  /// xc must equal phi_inverse(xr); both are passed so callers can hoist the
  /// complex view out of per-constraint loops.
  double value(const Eigen::VectorXd& xr, const Eigen::VectorXcd& xc) const;

  /// out += coeff * (2 P x_r + q).
  void add_scaled_gradient(const Eigen::VectorXd& xr, const Eigen::VectorXcd& xc, double coeff,
                           Eigen::VectorXd& out) const;

  Eigen::MatrixXd dense_matrix(int n_complex) const;
};

/// The real QCQP the waveform block solves each outer iteration:
///   minimize x_r^T P0 x_r + q0^T x_r  s.t.  c_i(x_r) <= r_i, i = 1..m
/// with m = n_tx*n_samples + num_targets + 3 and fixed constraint order
/// [norm-upper, norm-lower, similarity, per-sample caps..., SINR floors...].
struct QcqpProblem {
  int n_complex = 0;
  QuadForm objective;
  std::vector<QuadForm> constraints;
  Eigen::VectorXd rhs;

  int n_real() const { return 2 * n_complex; }
  int num_constraints() const { return static_cast<int>(constraints.size()); }
};

/// Waveform-side SINR constraint data for target q with the combiner held
/// fixed: the constraint sinr >= floor becomes
///   x^H (floor * s2 - s1) x <= -floor * noise * u_norm_sq.
struct SinrConstraintData {
  Eigen::MatrixXcd s1;  // desired-echo quadratic form, rank one
  Eigen::MatrixXcd s2;  // inter-target + interferer quadratic form
  double u_norm_sq = 0.0;
};

SinrConstraintData sinr_constraint_data(const Eigen::VectorXcd& u_q, int q,
                                        const ScenarioConfig& cfg);

/// Combiner-side SINR of target q evaluated through the waveform-side forms;
/// equals radar_sinr(x, bank, q, cfg) for the same combiner.
double sinr_via_constraint_data(const SinrConstraintData& data, const Eigen::VectorXcd& x,
                                double radar_noise_power);

QcqpProblem assemble(const Eigen::VectorXcd& x_comm, const Eigen::VectorXcd& x0,
                     const BeamformerBank& bank, const ScenarioConfig& cfg);

/// Dense dump of the assembled problem for cross-implementation diffing.
/// Format (CSV): one "objective" / "constraint" section per form, each with a
/// meta row (index, label, rhs), a "q" row of 2n entries, and 2n "P" rows of
/// 2n entries.
void write_qcqp_dump(const QcqpProblem& prob, std::ostream& out);

}  // namespace drip
