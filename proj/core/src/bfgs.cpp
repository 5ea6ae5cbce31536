#include "drip/bfgs.hpp"

#include <cmath>

namespace drip {

namespace {

struct LinePoint {
  double alpha = 0.0;
  double value = 0.0;
  double slope = 0.0;  // directional derivative along the search direction
  Eigen::VectorXd x;
  Eigen::VectorXd grad;
};

struct LineSearchResult {
  LinePoint point;
  bool ok = false;
};

/// Strong-Wolfe line search: bracketing stage followed by bisection zoom.
LineSearchResult wolfe_line_search(const ObjectiveFn& f, const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& p, double f0, double slope0,
                                   double c1, double c2) {
  constexpr int kMaxBracket = 20;
  constexpr int kMaxZoom = 40;

  auto eval = [&](double alpha) {
    LinePoint pt;
    pt.alpha = alpha;
    pt.x = x + alpha * p;
    pt.grad.resize(x.size());
    pt.value = f(pt.x, pt.grad);
    pt.slope = pt.grad.dot(p);
    return pt;
  };

  auto zoom = [&](LinePoint lo, LinePoint hi) -> LineSearchResult {
    for (int j = 0; j < kMaxZoom; ++j) {
      LinePoint mid = eval(0.5 * (lo.alpha + hi.alpha));
      if (mid.value > f0 + c1 * mid.alpha * slope0 || mid.value >= lo.value) {
        hi = std::move(mid);
      } else {
        if (std::abs(mid.slope) <= -c2 * slope0) return {std::move(mid), true};
        if (mid.slope * (hi.alpha - lo.alpha) >= 0.0) hi = std::move(lo);
        lo = std::move(mid);
      }
      if (std::abs(hi.alpha - lo.alpha) < 1e-16 * (1.0 + std::abs(lo.alpha))) break;
    }
    // Accept the best sufficiently-decreasing point even if the curvature
    // condition never latched; the caller skips the Hessian update then.
    if (lo.alpha > 0.0 && lo.value <= f0 + c1 * lo.alpha * slope0) return {std::move(lo), true};
    return {{}, false};
  };

  LinePoint prev;
  prev.alpha = 0.0;
  prev.value = f0;
  prev.slope = slope0;

  double alpha = 1.0;
  for (int i = 0; i < kMaxBracket; ++i) {
    LinePoint cur = eval(alpha);
    if (cur.value > f0 + c1 * alpha * slope0 || (i > 0 && cur.value >= prev.value))
      return zoom(std::move(prev), std::move(cur));
    if (std::abs(cur.slope) <= -c2 * slope0) return {std::move(cur), true};
    if (cur.slope >= 0.0) return zoom(std::move(cur), std::move(prev));
    prev = std::move(cur);
    alpha *= 2.0;
  }
  return {{}, false};
}

}  // namespace

BfgsResult minimize_bfgs(const ObjectiveFn& f, const Eigen::VectorXd& x0,
                         const BfgsOptions& opts) {
  const Eigen::Index n = x0.size();

  BfgsResult res;
  res.x = x0;
  Eigen::VectorXd grad(n);
  res.value = f(res.x, grad);
  res.grad_norm = grad.norm();

  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
  bool h_is_identity = true;
  bool first_update = true;

  for (int it = 0; it < opts.max_iters; ++it) {
    res.iterations = it;
    if (res.grad_norm <= opts.grad_tol) {
      res.status = BfgsStatus::gradient_tol;
      return res;
    }

    Eigen::VectorXd p = h_is_identity ? Eigen::VectorXd(-grad) : Eigen::VectorXd(-(h_inv * grad));
    double slope = grad.dot(p);
    if (slope >= 0.0) {
      // Not a descent direction; restart from steepest descent.
      h_inv.setIdentity();
      h_is_identity = true;
      first_update = true;
      p = -grad;
      slope = grad.dot(p);
    }

    LineSearchResult ls = wolfe_line_search(f, res.x, p, res.value, slope, opts.wolfe_c1,
                                            opts.wolfe_c2);
    if (!ls.ok && !h_is_identity) {
      // Retry once along steepest descent before giving up.
      h_inv.setIdentity();
      h_is_identity = true;
      first_update = true;
      p = -grad;
      slope = grad.dot(p);
      ls = wolfe_line_search(f, res.x, p, res.value, slope, opts.wolfe_c1, opts.wolfe_c2);
    }
    if (!ls.ok) {
      res.status = BfgsStatus::line_search_failure;
      return res;
    }

    const Eigen::VectorXd s = ls.point.x - res.x;
    const Eigen::VectorXd y = ls.point.grad - grad;
    const double ys = y.dot(s);

    res.x = std::move(ls.point.x);
    res.value = ls.point.value;
    grad = std::move(ls.point.grad);
    res.grad_norm = grad.norm();

    // Update the inverse-Hessian approximation only on positive curvature.
    if (ys > 1e-12 * y.norm() * s.norm()) {
      if (first_update) {
        const double yy = y.squaredNorm();
        if (yy > 0.0) h_inv = (ys / yy) * Eigen::MatrixXd::Identity(n, n);
        first_update = false;
      }
      const Eigen::VectorXd hy = h_inv * y;
      const double yhy = y.dot(hy);
      const double rho = 1.0 / ys;
      h_inv.noalias() += (rho * rho * (ys + yhy)) * (s * s.transpose());
      h_inv.noalias() -= rho * (hy * s.transpose());
      h_inv.noalias() -= rho * (s * hy.transpose());
      h_is_identity = false;
    }
  }

  res.iterations = opts.max_iters;
  res.status = res.grad_norm <= opts.grad_tol ? BfgsStatus::gradient_tol : BfgsStatus::max_iters;
  return res;
}

}  // namespace drip
