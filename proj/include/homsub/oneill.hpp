#ifndef HOMSUB_ONEILL_HPP
#define HOMSUB_ONEILL_HPP

#include <vector>

#include "homsub/connection.hpp"

namespace homsub {

struct TgIdentityReport {
  bool applicable = false;       // requires totally geodesic fibers (S = 0)
  double s_norm = 0.0;           // gate value
  double curvature_residual = 0.0;   // R(X, A*xi, xi, X) vs <(nabla_X A*)_X xi, A*_X xi>
  double vertizontal_residual = 0.0; // K(xi, X) vs |A*_X xi|^2
  double tolerance = 0.0;
  bool pass() const {
    return applicable && curvature_residual <= tolerance && vertizontal_residual <= tolerance;
  }
};

// Precomputed tensor tables of the submersion for one adapted metric.
// For each horizontal basis vector x_a:
//   A_a  (q x m): y -> pr_q(N_{x_a} y)         [integrability tensor]
//   A*_a (m x q): metric dual, A*_a = A_a^T P
//   S_a  (q x q): xi -> -pr_q(N_xi x_a)        [fiber second fundamental form]
// Blocks are in q-/m-coordinates of the triple; all maps are linear in x.
class OneillTensors {
 public:
  explicit OneillTensors(const AdaptedMetric& metric);

  const AdaptedMetric& metric() const { return *metric_; }
  const SubmersionTriple& triple() const { return *metric_->triple(); }

  const Mat& a_table(int a) const { return a_[a]; }
  const Mat& a_star_table(int a) const { return a_star_[a]; }
  const Mat& s_table(int a) const { return s_[a]; }

  // A_x y, vertical result (p-coordinates in and out)
  Vec a_tensor(const Vec& x_p, const Vec& y_p) const;
  // A*_x xi, horizontal result
  Vec a_star(const Vec& x_p, const Vec& xi_p) const;
  // S_x xi, vertical result
  Vec s_tensor(const Vec& x_p, const Vec& xi_p) const;

  // (nabla_z A*)_x xi = pr_m(N_z(A*_x xi)) - A*_{pr_m(N_z x)} xi - A*_x(pr_q(N_z xi))
  Vec nabla_a_star(const Vec& z_p, const Vec& x_p, const Vec& xi_p) const;

  // A*_x as an m x q matrix for a horizontal direction x (m-block coords)
  Mat a_star_matrix(const Vec& x_m_block) const;

  double max_s_norm() const;  // 0 iff fibers totally geodesic

  struct Residuals {
    double duality = 0.0;            // <A*_x xi, y> vs <A_x y, xi>
    double a_xx = 0.0;               // A_x x = 0
    double a_star_orthogonality = 0.0;  // A*_x xi perpendicular to x
    double s_symmetry = 0.0;         // S_x g-symmetric on q
  };
  Residuals residuals() const;

  TgIdentityReport tg_identity_check(int samples, unsigned seed, double tol) const;

 private:
  Vec check_horizontal(const Vec& x_p) const;  // returns m-block
  Vec check_vertical(const Vec& xi_p) const;   // returns q-block

  const AdaptedMetric* metric_;
  std::vector<Mat> nomizu_p_;  // N_{e_i} for the p-basis (N is linear in z)
  std::vector<Mat> a_, a_star_, s_;
};

}  // namespace homsub

#endif  // HOMSUB_ONEILL_HPP
