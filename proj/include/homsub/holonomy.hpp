#ifndef HOMSUB_HOLONOMY_HPP
#define HOMSUB_HOLONOMY_HPP

#include <vector>

#include "homsub/oneill.hpp"

namespace homsub {

enum class FieldKind { Holonomy, Dual };

// Constant-coefficient generators of the holonomy and dual holonomy flows
// along the horizontal geodesic exp(tx).  In the isometry-transported frame a
// holonomy field solves w' = M_hol w and a dual field w' = M_dual w, with
//   M_hol  = -pr_q N_x|_q - S_x,   M_dual = -pr_q N_x|_q + S_x.
// M_dual is minus the metric adjoint of M_hol, so the flows satisfy
// exp(t M_dual) = (exp(t M_hol))^{-*}.
class HolonomyPropagator {
 public:
  // x need not be normalized; it is scaled to unit metric norm internally
  HolonomyPropagator(const OneillTensors& tensors, const Vec& x_p);

  const Vec& direction() const { return x_p_; }  // unit-norm, p-coordinates
  const Mat& holonomy_generator() const { return m_hol_; }
  const Mat& dual_generator() const { return m_dual_; }
  const Mat& generator(FieldKind kind) const {
    return kind == FieldKind::Holonomy ? m_hol_ : m_dual_;
  }
  const AdaptedMetric& metric() const { return *metric_; }

  Mat flow(FieldKind kind, double t) const;  // exp(t M) on the q-block

  // w(t) = exp(tM) w0 for a vertical w0 in p-coordinates
  Vec propagate(FieldKind kind, double t, const Vec& w0_p) const;

  struct BuildResiduals {
    double horizontal_consistency = 0.0;  // pr_m(N_x w) + A*_x w over the q-basis
    double generator_duality = 0.0;       // M_dual + (g-adjoint of M_hol)
  };
  const BuildResiduals& build_residuals() const { return residuals_; }

  struct NormPoint {
    double t = 0.0;
    double value = 0.0;   // |w(t)|_g^2
    double d1 = 0.0;      // exact first derivative
    double d2 = 0.0;      // exact second derivative
  };
  // exact derivatives from the generator; no finite differences
  std::vector<NormPoint> norm_evolution(FieldKind kind, const Vec& w0_p,
                                        const std::vector<double>& grid) const;

  struct DualRelationReport {
    double max_residual = 0.0;  // |exp(tM_dual) - (exp(tM_hol))^{-*}| over the grid
    double tolerance = 0.0;
    bool pass() const { return max_residual <= tolerance; }
  };
  DualRelationReport dual_relation_check(const std::vector<double>& grid, double tol) const;

  struct BoundednessReport {
    double sup_ratio = 0.0;       // sup |w(t)|^2 / |w0|^2 over [-T, T]
    double attained_time = 0.0;
    double spectral_abscissa = 0.0;  // max |Re lambda| of the generator
    double tolerance = 0.0;
    bool pass() const { return spectral_abscissa <= tolerance && std::isfinite(sup_ratio); }
  };
  BoundednessReport boundedness_check(const Vec& w0_p, double horizon, FieldKind kind,
                                      int grid_points, double tol) const;

  // Eq-style curvature identity along the flow:
  //   K(x, w(t)) = 1/2 (d^2/dt^2)|w|^2 - 3 |S_x w(t)|^2 + |A*_x w(t)|^2
  struct CurvatureIdentityReport {
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass() const { return max_residual <= tolerance; }
  };
  CurvatureIdentityReport curvature_identity_residual(const Vec& w0_p,
                                                      const std::vector<double>& grid,
                                                      double tol) const;

 private:
  Vec to_vertical_block(const Vec& w0_p) const;

  const OneillTensors* tensors_;
  const AdaptedMetric* metric_;
  Vec x_p_;
  Mat m_hol_, m_dual_;
  BuildResiduals residuals_;
};

std::vector<double> uniform_grid(double t_max, int points);        // [0, T]
std::vector<double> symmetric_grid(double t_max, int points);     // [-T, T]

}  // namespace homsub

#endif  // HOMSUB_HOLONOMY_HPP
