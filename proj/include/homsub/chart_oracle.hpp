#ifndef HOMSUB_CHART_ORACLE_HPP
#define HOMSUB_CHART_ORACLE_HPP

#include <functional>
#include <vector>

#include "homsub/connection.hpp"

namespace homsub {

// Finite-difference oracle for the invariant connection, independent of the
// Nomizu-operator route.  Works in exponential coordinates u -> exp(sum u_i e_i)
// around the base point: the pulled-back metric matrix is evaluated exactly
// from the group structure, Christoffel symbols come from central differences,
// and covariant derivatives / curvature follow the coordinate formulas.
//
// Intended for tests and the CLI's diagnostic mode.
class ChartOracle {
 public:
  explicit ChartOracle(const AdaptedMetric& metric, double step = 1e-5);

  // chart frame: column i is pr_p(dexp_u e_i) in p-coordinates
  Mat frame_at(const Vec& u) const;
  // pulled-back metric matrix at u
  Mat metric_at(const Vec& u) const;
  // Christoffel symbols at u; [k](i,j) layout
  std::vector<Mat> christoffel(const Vec& u) const;

  // covariant derivative at the base point, along z, of the field whose
  // coefficient curve in the transported frame along exp(tz) is w(t);
  // central differences with one Richardson refinement
  Vec covariant_derivative(const Vec& z_p, const std::function<Vec(double)>& w_of_t) const;

  // covariant derivative of the action-transported field of w (constant
  // coefficients); equals the Nomizu operator applied to w
  Vec covariant_derivative_transported(const Vec& z_p, const Vec& w_p) const;

  // Lie bracket at the base point of the action-transported fields of x and y
  Vec bracket_of_transported(const Vec& x_p, const Vec& y_p) const;

  // R(x,y)z from differentiated Christoffel symbols
  Vec curvature(const Vec& x_p, const Vec& y_p, const Vec& z_p) const;

 private:
  Vec christoffel_term(const std::vector<Mat>& gamma, const Vec& a, const Vec& b) const;
  void ensure_curvature_tables() const;

  const SubmersionTriple* triple_;
  Mat gram_p_;
  Mat p_basis_;  // algebra coords of the p-basis
  int p_ = 0;
  double h_ = 1e-5;

  mutable bool tables_ready_ = false;
  mutable std::vector<Mat> gamma0_;                // Christoffels at 0
  mutable std::vector<std::vector<Mat>> dgamma_;   // dgamma_[l][k](i,j) = d_l Gamma^k_ij
};

}  // namespace homsub

#endif  // HOMSUB_CHART_ORACLE_HPP
