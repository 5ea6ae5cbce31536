#include "drip/qcqp.hpp"

#include <complex>
#include <ostream>
#include <stdexcept>

#include "drip/array_model.hpp"
#include "drip/csv.hpp"
#include "drip/realify.hpp"

namespace drip {

double QuadForm::value(const Eigen::VectorXd& xr, const Eigen::VectorXcd& xc) const {
  double v = 0.0;
  if (id_scale != 0.0) v += id_scale * xr.squaredNorm();
  if (selector >= 0) v += std::norm(xc(selector));
  for (Eigen::Index j = 0; j < factors.cols(); ++j)
    v += factor_weights(j) * std::norm(factors.col(j).dot(xc));
  if (linear.size() > 0) v += linear.dot(xr);
  return v;
}

void QuadForm::add_scaled_gradient(const Eigen::VectorXd& xr, const Eigen::VectorXcd& xc,
                                   double coeff, Eigen::VectorXd& out) const {
  const Eigen::Index n = xc.size();
  if (id_scale != 0.0) out.noalias() += (2.0 * coeff * id_scale) * xr;
  if (selector >= 0) {
    out(selector) += 2.0 * coeff * xc(selector).real();
    out(selector + n) += 2.0 * coeff * xc(selector).imag();
  }
  for (Eigen::Index j = 0; j < factors.cols(); ++j) {
    // 2 * w * (c^H x) c is the complex gradient of w |c^H x|^2.
    const std::complex<double> inner = factors.col(j).dot(xc);  // c^H x
    const std::complex<double> s = 2.0 * coeff * factor_weights(j) * inner;
    out.head(n).noalias() += (s * factors.col(j)).real();
    out.tail(n).noalias() += (s * factors.col(j)).imag();
  }
  if (linear.size() > 0) out.noalias() += coeff * linear;
}

Eigen::MatrixXd QuadForm::dense_matrix(int n_complex) const {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n_complex, n_complex);
  if (selector >= 0) p(selector, selector) += 1.0;
  for (Eigen::Index j = 0; j < factors.cols(); ++j)
    p.noalias() += factor_weights(j) * (factors.col(j) * factors.col(j).adjoint());
  Eigen::MatrixXd out = phi_mat(p);
  if (id_scale != 0.0)
    out += id_scale * Eigen::MatrixXd::Identity(2 * n_complex, 2 * n_complex);
  return out;
}

SinrConstraintData sinr_constraint_data(const Eigen::VectorXcd& u_q, int q,
                                        const ScenarioConfig& cfg) {
  if (q < 0 || q >= cfg.num_targets())
    throw std::out_of_range("sinr_constraint_data: target index out of range");
  const int n = cfg.dim();

  SinrConstraintData data;
  data.u_norm_sq = u_q.squaredNorm();

  const ArrayResponse own = two_way_response(cfg.target_angle_rad(q), cfg);
  const Eigen::VectorXcd w_own = apply_lift_adjoint(own, u_q, cfg.n_samples);
  data.s1.noalias() = cfg.target_powers[q] * (w_own * w_own.adjoint());

  data.s2 = Eigen::MatrixXcd::Zero(n, n);
  for (int qp = 0; qp < cfg.num_targets(); ++qp) {
    if (qp == q) continue;
    const ArrayResponse resp = two_way_response(cfg.target_angle_rad(qp), cfg);
    const Eigen::VectorXcd w = apply_lift_adjoint(resp, u_q, cfg.n_samples);
    data.s2.noalias() += cfg.target_powers[qp] * (w * w.adjoint());
  }
  for (int i = 0; i < cfg.num_interferers(); ++i) {
    const ArrayResponse resp = two_way_response(cfg.interferer_angle_rad(i), cfg);
    const Eigen::VectorXcd w = apply_lift_adjoint(resp, u_q, cfg.n_samples);
    data.s2.noalias() += cfg.interferer_powers[i] * (w * w.adjoint());
  }
  return data;
}

double sinr_via_constraint_data(const SinrConstraintData& data, const Eigen::VectorXcd& x,
                                double radar_noise_power) {
  const double num = (x.adjoint() * data.s1 * x).value().real();
  const double den =
      (x.adjoint() * data.s2 * x).value().real() + radar_noise_power * data.u_norm_sq;
  return num / den;
}

QcqpProblem assemble(const Eigen::VectorXcd& x_comm, const Eigen::VectorXcd& x0,
                     const BeamformerBank& bank, const ScenarioConfig& cfg) {
  const int n = cfg.dim();
  if (x_comm.size() != n || x0.size() != n)
    throw std::invalid_argument("assemble: reference vector dimension mismatch");
  if (bank.num_targets() != cfg.num_targets())
    throw std::invalid_argument("assemble: beamformer bank does not match target count");

  QcqpProblem prob;
  prob.n_complex = n;

  prob.objective.id_scale = 1.0;
  prob.objective.linear = -2.0 * phi_vec(x_comm);
  prob.objective.label = "objective";

  const int m = n + cfg.num_targets() + 3;
  prob.constraints.reserve(m);
  prob.rhs.resize(m);
  int idx = 0;

  // ||x||^2 = 1 split into <= 1 and >= 1.
  QuadForm norm_upper;
  norm_upper.id_scale = 1.0;
  norm_upper.label = "norm_upper";
  prob.constraints.push_back(std::move(norm_upper));
  prob.rhs(idx++) = 1.0;

  QuadForm norm_lower;
  norm_lower.id_scale = -1.0;
  norm_lower.label = "norm_lower";
  prob.constraints.push_back(std::move(norm_lower));
  prob.rhs(idx++) = -1.0;

  // ||x - x0||^2 <= eps^2 expanded around the reference.
  QuadForm similarity;
  similarity.id_scale = 1.0;
  similarity.linear = -2.0 * phi_vec(x0);
  similarity.label = "similarity";
  prob.constraints.push_back(std::move(similarity));
  prob.rhs(idx++) = cfg.epsilon * cfg.epsilon - x0.squaredNorm();

  // Per-sample power caps |x_p|^2 <= eta / (n_tx * n_samples).
  const double cap = cfg.eta_linear() / static_cast<double>(n);
  for (int p = 0; p < n; ++p) {
    QuadForm sample_cap;
    sample_cap.selector = p;
    sample_cap.label = "papr";
    prob.constraints.push_back(std::move(sample_cap));
    prob.rhs(idx++) = cap;
  }

  // SINR floors: x^H (floor * s2 - s1) x <= -floor * noise * ||u||^2, kept in
  // factored form (one column per echo direction seen through u_q).
  const std::vector<double> floors = cfg.sinr_floors_linear();
  for (int q = 0; q < cfg.num_targets(); ++q) {
    const Eigen::VectorXcd& u = bank[q];
    const int k = cfg.num_targets() + cfg.num_interferers();
    QuadForm sinr;
    sinr.factors.resize(n, k);
    sinr.factor_weights.resize(k);
    int col = 0;
    for (int qp = 0; qp < cfg.num_targets(); ++qp) {
      const ArrayResponse resp = two_way_response(cfg.target_angle_rad(qp), cfg);
      sinr.factors.col(col) = apply_lift_adjoint(resp, u, cfg.n_samples);
      sinr.factor_weights(col) =
          qp == q ? -cfg.target_powers[q] : floors[q] * cfg.target_powers[qp];
      ++col;
    }
    for (int i = 0; i < cfg.num_interferers(); ++i) {
      const ArrayResponse resp = two_way_response(cfg.interferer_angle_rad(i), cfg);
      sinr.factors.col(col) = apply_lift_adjoint(resp, u, cfg.n_samples);
      sinr.factor_weights(col) = floors[q] * cfg.interferer_powers[i];
      ++col;
    }
    sinr.label = "sinr";
    prob.constraints.push_back(std::move(sinr));
    prob.rhs(idx++) = -floors[q] * cfg.radar_noise_power * u.squaredNorm();
  }

  return prob;
}

namespace {

void dump_form(const QuadForm& form, int n_complex, double rhs, int index, std::ostream& out) {
  out << (index < 0 ? "objective" : "constraint") << ',' << index << ',' << form.label << ','
      << csv_num(rhs) << '\n';
  const int nr = 2 * n_complex;
  out << "q";
  if (form.linear.size() > 0)
    for (int j = 0; j < nr; ++j) out << ',' << csv_num(form.linear(j));
  else
    for (int j = 0; j < nr; ++j) out << ',' << csv_num(0.0);
  out << '\n';
  const Eigen::MatrixXd p = form.dense_matrix(n_complex);
  for (int i = 0; i < nr; ++i) {
    out << "P";
    for (int j = 0; j < nr; ++j) out << ',' << csv_num(p(i, j));
    out << '\n';
  }
}

}  // namespace

void write_qcqp_dump(const QcqpProblem& prob, std::ostream& out) {
  out << "# qcqp dump: n_complex=" << prob.n_complex << " m=" << prob.num_constraints() << '\n';
  dump_form(prob.objective, prob.n_complex, 0.0, -1, out);
  for (int i = 0; i < prob.num_constraints(); ++i)
    dump_form(prob.constraints[i], prob.n_complex, prob.rhs(i), i + 1, out);
}

}  // namespace drip
