#include "homsub/oneill.hpp"

#include <cmath>

#include "homsub/rng.hpp"

namespace homsub {

OneillTensors::OneillTensors(const AdaptedMetric& metric) : metric_(&metric) {
  const auto& t = triple();
  const int p = t.dim_p(), q = t.dim_q(), m = t.dim_m();

  nomizu_p_.reserve(p);
  for (int i = 0; i < p; ++i)
    nomizu_p_.push_back(nomizu_operator(metric, Vec::Unit(p, i)));

  a_.assign(m, Mat::Zero(q, m));
  a_star_.assign(m, Mat::Zero(m, q));
  s_.assign(m, Mat::Zero(q, q));
  for (int a = 0; a < m; ++a) {
    const Mat& nx = nomizu_p_[q + a];
    a_[a] = nx.topRightCorner(q, m);              // pr_q N_x on the m-block
    a_star_[a] = a_[a].transpose() * metric.vertical_tensor();
    for (int j = 0; j < q; ++j)
      s_[a].col(j) = -nomizu_p_[j].block(0, q + a, q, 1);  // -pr_q(N_xi x_a)
  }
}

Vec OneillTensors::check_horizontal(const Vec& x_p) const {
  const auto& t = triple();
  if (x_p.size() != t.dim_p())
    fail(ErrorKind::DimensionMismatch, "expected p-coordinates");
  if (!t.is_horizontal(x_p, 1e-9 * std::max(1.0, x_p.norm())))
    fail(ErrorKind::NotHorizontal, "vector has a vertical component");
  return t.horizontal_block(x_p);
}

Vec OneillTensors::check_vertical(const Vec& xi_p) const {
  const auto& t = triple();
  if (xi_p.size() != t.dim_p())
    fail(ErrorKind::DimensionMismatch, "expected p-coordinates");
  if (!t.is_vertical(xi_p, 1e-9 * std::max(1.0, xi_p.norm())))
    fail(ErrorKind::NotVertical, "vector has a horizontal component");
  return t.vertical_block(xi_p);
}

Vec OneillTensors::a_tensor(const Vec& x_p, const Vec& y_p) const {
  const auto& t = triple();
  const Vec x = check_horizontal(x_p), y = check_horizontal(y_p);
  Vec out = Vec::Zero(t.dim_q());
  for (int a = 0; a < t.dim_m(); ++a)
    if (x[a] != 0.0) out += x[a] * (a_[a] * y);
  return t.assemble(out, Vec::Zero(t.dim_m()));
}

Vec OneillTensors::a_star(const Vec& x_p, const Vec& xi_p) const {
  const auto& t = triple();
  const Vec x = check_horizontal(x_p);
  const Vec xi = check_vertical(xi_p);
  Vec out = Vec::Zero(t.dim_m());
  for (int a = 0; a < t.dim_m(); ++a)
    if (x[a] != 0.0) out += x[a] * (a_star_[a] * xi);
  return t.assemble(Vec::Zero(t.dim_q()), out);
}

Vec OneillTensors::s_tensor(const Vec& x_p, const Vec& xi_p) const {
  const auto& t = triple();
  const Vec x = check_horizontal(x_p);
  const Vec xi = check_vertical(xi_p);
  Vec out = Vec::Zero(t.dim_q());
  for (int a = 0; a < t.dim_m(); ++a)
    if (x[a] != 0.0) out += x[a] * (s_[a] * xi);
  return t.assemble(out, Vec::Zero(t.dim_m()));
}

Mat OneillTensors::a_star_matrix(const Vec& x_m_block) const {
  const auto& t = triple();
  Mat out = Mat::Zero(t.dim_m(), t.dim_q());
  for (int a = 0; a < t.dim_m(); ++a)
    if (x_m_block[a] != 0.0) out += x_m_block[a] * a_star_[a];
  return out;
}

Vec OneillTensors::nabla_a_star(const Vec& z_p, const Vec& x_p, const Vec& xi_p) const {
  const auto& t = triple();
  check_horizontal(z_p);
  check_horizontal(x_p);
  check_vertical(xi_p);
  const int q = t.dim_q(), m = t.dim_m();

  Mat nz = Mat::Zero(t.dim_p(), t.dim_p());
  for (int i = 0; i < t.dim_p(); ++i)
    if (z_p[i] != 0.0) nz += z_p[i] * nomizu_p_[i];

  const Vec astar_xi = a_star(x_p, xi_p);
  const Vec first = t.assemble(Vec::Zero(q), t.horizontal_block(nz * astar_xi));
  const Vec nzx_h = t.assemble(Vec::Zero(q), t.horizontal_block(nz * x_p));
  const Vec nzxi_v = t.assemble(t.vertical_block(nz * xi_p), Vec::Zero(m));
  return first - a_star(nzx_h, xi_p) - a_star(x_p, nzxi_v);
}

double OneillTensors::max_s_norm() const {
  double worst = 0.0;
  for (const Mat& s : s_) worst = std::max(worst, s.cwiseAbs().maxCoeff());
  return worst;
}

OneillTensors::Residuals OneillTensors::residuals() const {
  const auto& t = triple();
  const int q = t.dim_q(), m = t.dim_m();
  const Mat& P = metric_->vertical_tensor();
  Residuals r;
  for (int a = 0; a < m; ++a) {
    // duality: <A*_x xi, y> = <A_x y, xi>_P over all basis triples
    const Mat lhs = a_star_[a].transpose();       // q x m, row xi: <A* xi, y>
    const Mat rhs = P * a_[a];                    // row xi: <A_x y, P xi>
    r.duality = std::max(r.duality, (lhs - rhs).cwiseAbs().maxCoeff());
    r.a_xx = std::max(r.a_xx, (a_[a].col(a)).norm());
    for (int j = 0; j < q; ++j)
      r.a_star_orthogonality =
          std::max(r.a_star_orthogonality, std::abs(a_star_[a](a, j)));
    r.s_symmetry =
        std::max(r.s_symmetry, (P * s_[a] - s_[a].transpose() * P).cwiseAbs().maxCoeff());
  }
  return r;
}

TgIdentityReport OneillTensors::tg_identity_check(int samples, unsigned seed,
                                                  double tol) const {
  const auto& t = triple();
  TgIdentityReport rep;
  rep.tolerance = tol;
  rep.s_norm = max_s_norm();
  rep.applicable = rep.s_norm <= tol;
  if (!rep.applicable || t.dim_q() == 0) return rep;

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vec x = t.assemble(Vec::Zero(t.dim_q()), rng.unit_vector(t.dim_m()));
    const Vec xi = t.assemble(
        rng.unit_vector(t.dim_q(), metric_->vertical_tensor()), Vec::Zero(t.dim_m()));
    const Vec astar_xi = a_star(x, xi);
    const double lhs1 = metric_->inner_p(curvature_tensor(*metric_, x, astar_xi, xi), x);
    const double rhs1 = metric_->inner_p(nabla_a_star(x, x, xi), astar_xi);
    rep.curvature_residual = std::max(rep.curvature_residual, std::abs(lhs1 - rhs1));
    const double lhs2 = sectional_curvature(*metric_, xi, x);
    const double rhs2 = metric_->inner_p(astar_xi, astar_xi);
    rep.vertizontal_residual = std::max(rep.vertizontal_residual, std::abs(lhs2 - rhs2));
  }
  return rep;
}

}  // namespace homsub
