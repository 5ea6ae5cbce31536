#include "drip/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "drip/array_model.hpp"
#include "drip/csv.hpp"
#include "drip/qcqp.hpp"
#include "drip/realify.hpp"

namespace drip {

namespace {
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double papr(const Eigen::VectorXcd& x) {
  const Eigen::Index n = x.size();
  if (n == 0) throw std::invalid_argument("papr: empty vector");
  double peak = 0.0;
  double total = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double p = std::norm(x(k));
    peak = std::max(peak, p);
    total += p;
  }
  if (!(total > 0.0)) throw std::invalid_argument("papr: zero vector");
  return peak / (total / static_cast<double>(n));
}

double papr_db(const Eigen::VectorXcd& x) { return linear_to_db(papr(x)); }

double mui_energy(const Eigen::MatrixXcd& channel, const Eigen::MatrixXcd& waveform,
                  const Eigen::MatrixXcd& symbols) {
  return (channel * waveform - symbols).squaredNorm();
}

double radar_sinr(const Eigen::VectorXcd& x, const BeamformerBank& bank, int q,
                  const ScenarioConfig& cfg) {
  if (q < 0 || q >= bank.num_targets())
    throw std::out_of_range("radar_sinr: target index out of range");
  const Eigen::VectorXcd& u = bank[q];
  const LiftedEchoes e = lifted_echoes(x, cfg);

  const double num = cfg.target_powers[q] * std::norm(u.dot(e.targets[q]));
  double den = cfg.radar_noise_power * u.squaredNorm();
  for (int qp = 0; qp < cfg.num_targets(); ++qp) {
    if (qp == q) continue;
    den += cfg.target_powers[qp] * std::norm(u.dot(e.targets[qp]));
  }
  for (int i = 0; i < cfg.num_interferers(); ++i)
    den += cfg.interferer_powers[i] * std::norm(u.dot(e.interferers[i]));

  if (!(den > 0.0)) throw std::runtime_error("radar_sinr: degenerate beamformer (zero denominator)");
  return num / den;
}

double sum_rate(const Eigen::MatrixXcd& channel, const Eigen::MatrixXcd& waveform,
                const Eigen::MatrixXcd& symbols, double comm_noise_power) {
  const Eigen::MatrixXcd residual = channel * waveform - symbols;
  const double inv_l = 1.0 / static_cast<double>(symbols.cols());
  double rate = 0.0;
  for (Eigen::Index p = 0; p < symbols.rows(); ++p) {
    const double signal = symbols.row(p).squaredNorm() * inv_l;
    const double interference = residual.row(p).squaredNorm() * inv_l;
    rate += std::log2(1.0 + signal / (interference + comm_noise_power));
  }
  return rate;
}

std::vector<std::pair<double, double>> beampattern(const Eigen::VectorXcd& x,
                                                   const ScenarioConfig& cfg,
                                                   const std::vector<double>& grid_deg) {
  if (grid_deg.empty()) throw std::invalid_argument("beampattern: empty angle grid");

  const LiftedEchoes e = lifted_echoes(x, cfg);
  const Eigen::Index dim = cfg.n_rx * cfg.n_samples;

  // The scan asks what a unit-power target at each angle would achieve
  // against the scene's clutter: interferer echoes plus noise. The scenario
  // targets are what the scan is illuminating, so they do not enter the
  // interference matrix.
  Eigen::MatrixXcd t2 = cfg.radar_noise_power * Eigen::MatrixXcd::Identity(dim, dim);
  for (int i = 0; i < cfg.num_interferers(); ++i)
    t2.noalias() += cfg.interferer_powers[i] * (e.interferers[i] * e.interferers[i].adjoint());
  const Eigen::LDLT<Eigen::MatrixXcd> ldlt(t2);

  std::vector<std::pair<double, double>> pattern;
  pattern.reserve(grid_deg.size());
  for (double angle_deg : grid_deg) {
    const double theta = angle_deg * kPi / 180.0;
    const ArrayResponse resp = two_way_response(theta, cfg);
    const Eigen::VectorXcd v = apply_lift(resp, x, cfg.n_samples);
    const double gain = (v.adjoint() * ldlt.solve(v)).value().real();
    pattern.emplace_back(angle_deg, linear_to_db(std::max(gain, 1e-300)));
  }
  return pattern;
}

std::vector<std::pair<double, double>> papr_ccdf(const std::vector<double>& samples_db,
                                                 const std::vector<double>& thresholds_db) {
  if (samples_db.empty()) throw std::invalid_argument("papr_ccdf: no samples");
  std::vector<std::pair<double, double>> out;
  out.reserve(thresholds_db.size());
  for (double t : thresholds_db) {
    const auto above = std::count_if(samples_db.begin(), samples_db.end(),
                                     [t](double s) { return s > t; });
    out.emplace_back(t, static_cast<double>(above) / static_cast<double>(samples_db.size()));
  }
  return out;
}

double empirical_similarity(const Eigen::VectorXcd& x, const Eigen::VectorXcd& x0) {
  if (x.size() != x0.size())
    throw std::invalid_argument("empirical_similarity: length mismatch");
  return (x - x0).norm();
}

MetricReport evaluate_metrics(const ScenarioConfig& cfg, const CommBlock& comm,
                              const ComplexWaveform& x0, const ComplexWaveform& waveform,
                              const BeamformerBank& bank) {
  MetricReport r;
  const Eigen::VectorXcd x = waveform.vec();
  r.papr_db = papr_db(x);
  r.mui_energy = mui_energy(comm.channel, waveform.mat, comm.symbols);
  r.sum_rate_bps_hz = sum_rate(comm.channel, waveform.mat, comm.symbols, cfg.comm_noise_power);
  r.similarity = empirical_similarity(x, x0.vec());
  r.sinr_per_target_db.resize(cfg.num_targets());
  for (int q = 0; q < cfg.num_targets(); ++q)
    r.sinr_per_target_db[q] = linear_to_db(radar_sinr(x, bank, q, cfg));

  const QcqpProblem prob = assemble(comm.zf_reference.vec(), x0.vec(), bank, cfg);
  const Eigen::VectorXd xr = phi_vec(x);
  const Eigen::VectorXcd xc = phi_inverse(xr);
  r.feasibility.resize(prob.num_constraints());
  for (int i = 0; i < prob.num_constraints(); ++i)
    r.feasibility[i] = prob.constraints[i].value(xr, xc) - prob.rhs(i);
  return r;
}

void write_trace_csv(const std::vector<double>& values, std::ostream& out) {
  out << "iteration,value\n";
  for (std::size_t k = 0; k < values.size(); ++k)
    out << (k + 1) << ',' << csv_num(values[k]) << '\n';
}

void write_beampattern_csv(const std::vector<std::pair<double, double>>& pattern,
                           std::ostream& out) {
  out << "angle_deg,gain_db\n";
  for (const auto& [angle, gain] : pattern) out << csv_num(angle) << ',' << csv_num(gain) << '\n';
}

void write_ccdf_csv(const std::vector<std::pair<double, double>>& ccdf, std::ostream& out) {
  out << "threshold_db,prob\n";
  for (const auto& [t, p] : ccdf) out << csv_num(t) << ',' << csv_num(p) << '\n';
}

}  // namespace drip
