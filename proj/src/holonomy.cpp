#include "homsub/holonomy.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <cmath>

namespace homsub {

std::vector<double> uniform_grid(double t_max, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = points > 1 ? t_max * static_cast<double>(i) / (points - 1) : 0.0;
  return g;
}

std::vector<double> symmetric_grid(double t_max, int points) {
  const std::vector<double> half = uniform_grid(t_max, points);
  std::vector<double> g;
  g.reserve(2 * points - 1);
  for (int i = points - 1; i >= 1; --i) g.push_back(-half[i]);
  for (double t : half) g.push_back(t);
  return g;
}

HolonomyPropagator::HolonomyPropagator(const OneillTensors& tensors, const Vec& x_p)
    : tensors_(&tensors), metric_(&tensors.metric()) {
  const auto& t = tensors.triple();
  const int q = t.dim_q(), m = t.dim_m();
  if (x_p.size() != t.dim_p())
    fail(ErrorKind::DimensionMismatch, "direction must be in p-coordinates");
  const double nrm = metric_->norm_p(x_p);
  if (nrm < 1e-14) fail(ErrorKind::ZeroVector, "geodesic direction must be non-zero");
  if (!t.is_horizontal(x_p, 1e-10 * nrm))
    fail(ErrorKind::NotHorizontal, "geodesic direction must be horizontal");
  x_p_ = x_p / nrm;

  const Mat nx = nomizu_operator(*metric_, x_p_);
  const Mat b = -nx.topLeftCorner(q, q);  // -pr_q N_x on the q-block
  Mat s_x = Mat::Zero(q, q);
  const Vec xm = t.horizontal_block(x_p_);
  for (int a = 0; a < m; ++a)
    if (xm[a] != 0.0) s_x += xm[a] * tensors.s_table(a);
  m_hol_ = b - s_x;
  m_dual_ = b + s_x;

  // the m-component of the field equation must reduce to -A*_x automatically
  const Mat nx_mq = nx.bottomLeftCorner(m, q);
  residuals_.horizontal_consistency =
      q == 0 ? 0.0 : (nx_mq + tensors.a_star_matrix(xm)).cwiseAbs().maxCoeff();
  if (q > 0) {
    const Mat& P = metric_->vertical_tensor();
    const Mat adjoint = P.inverse() * m_hol_.transpose() * P;
    residuals_.generator_duality = (m_dual_ + adjoint).cwiseAbs().maxCoeff();
  }
}

Mat HolonomyPropagator::flow(FieldKind kind, double t) const {
  const Mat& m = generator(kind);
  if (m.rows() == 0) return Mat::Zero(0, 0);
  return (t * m).exp();
}

Vec HolonomyPropagator::to_vertical_block(const Vec& w0_p) const {
  const auto& t = tensors_->triple();
  if (w0_p.size() != t.dim_p())
    fail(ErrorKind::DimensionMismatch, "field value must be in p-coordinates");
  if (!t.is_vertical(w0_p, 1e-9 * std::max(1.0, w0_p.norm())))
    fail(ErrorKind::NotVertical, "holonomy fields are vertical");
  return t.vertical_block(w0_p);
}

Vec HolonomyPropagator::propagate(FieldKind kind, double t, const Vec& w0_p) const {
  const auto& tr = tensors_->triple();
  const Vec w0 = to_vertical_block(w0_p);
  return tr.assemble(flow(kind, t) * w0, Vec::Zero(tr.dim_m()));
}

std::vector<HolonomyPropagator::NormPoint> HolonomyPropagator::norm_evolution(
    FieldKind kind, const Vec& w0_p, const std::vector<double>& grid) const {
  const Vec w0 = to_vertical_block(w0_p);
  const Mat& M = generator(kind);
  const Mat& P = metric_->vertical_tensor();
  std::vector<NormPoint> out;
  out.reserve(grid.size());
  for (double t : grid) {
    const Vec w = flow(kind, t) * w0;
    const Vec mw = M * w;
    NormPoint pt;
    pt.t = t;
    pt.value = w.dot(P * w);
    pt.d1 = 2.0 * w.dot(P * mw);
    pt.d2 = 2.0 * (M * mw).dot(P * w) + 2.0 * mw.dot(P * mw);
    out.push_back(pt);
  }
  return out;
}

HolonomyPropagator::DualRelationReport HolonomyPropagator::dual_relation_check(
    const std::vector<double>& grid, double tol) const {
  DualRelationReport rep;
  rep.tolerance = tol;
  const int q = static_cast<int>(m_hol_.rows());
  if (q == 0) return rep;
  const Mat& P = metric_->vertical_tensor();
  const Mat pinv = P.inverse();
  for (double t : grid) {
    const Mat lhs = flow(FieldKind::Dual, t);
    const Mat rhs = pinv * (-t * m_hol_.transpose()).exp() * P;
    rep.max_residual = std::max(rep.max_residual, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return rep;
}

HolonomyPropagator::BoundednessReport HolonomyPropagator::boundedness_check(
    const Vec& w0_p, double horizon, FieldKind kind, int grid_points, double tol) const {
  const Vec w0 = to_vertical_block(w0_p);
  if (w0.norm() < 1e-14) fail(ErrorKind::ZeroVector, "initial field value must be non-zero");
  BoundednessReport rep;
  rep.tolerance = tol;
  const Mat& M = generator(kind);
  if (M.rows() > 0) {
    const Eigen::EigenSolver<Mat> es(M);
    rep.spectral_abscissa = es.eigenvalues().real().cwiseAbs().maxCoeff();
  }
  const Mat& P = metric_->vertical_tensor();
  const double n0 = w0.dot(P * w0);
  for (double t : symmetric_grid(horizon, grid_points)) {
    const Vec w = flow(kind, t) * w0;
    const double ratio = w.dot(P * w) / n0;
    if (ratio > rep.sup_ratio) {
      rep.sup_ratio = ratio;
      rep.attained_time = t;
    }
  }
  return rep;
}

HolonomyPropagator::CurvatureIdentityReport HolonomyPropagator::curvature_identity_residual(
    const Vec& w0_p, const std::vector<double>& grid, double tol) const {
  const auto& tr = tensors_->triple();
  CurvatureIdentityReport rep;
  rep.tolerance = tol;
  const Vec w0 = to_vertical_block(w0_p);
  const std::vector<NormPoint> norms = norm_evolution(FieldKind::Dual, w0_p, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const Vec w_p = tr.assemble(flow(FieldKind::Dual, t) * w0, Vec::Zero(tr.dim_m()));
    const double lhs = sectional_curvature(*metric_, x_p_, w_p);
    const Vec s_w = tensors_->s_tensor(x_p_, w_p);
    const Vec a_w = tensors_->a_star(x_p_, w_p);
    const double rhs = 0.5 * norms[i].d2 - 3.0 * metric_->inner_p(s_w, s_w) +
                       metric_->inner_p(a_w, a_w);
    rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
  }
  return rep;
}

}  // namespace homsub
