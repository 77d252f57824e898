#ifndef HOMSUB_CONNECTION_HPP
#define HOMSUB_CONNECTION_HPP

#include <memory>
#include <vector>

#include "homsub/liealg.hpp"

namespace homsub {

struct TripleReport {
  double h_subalgebra_residual = 0.0;   // [h,h] inside h
  double k_subalgebra_residual = 0.0;   // [k,k] inside k
  double orthogonality_residual = 0.0;  // k, q, m mutually orthogonal
  double ad_k_q_residual = 0.0;         // [k,q] inside q
  double ad_h_m_residual = 0.0;         // [h,m] inside m
  double tolerance = kDefaultTolStruct;
  bool pass() const {
    return h_subalgebra_residual <= tolerance && k_subalgebra_residual <= tolerance &&
           orthogonality_residual <= tolerance && ad_k_q_residual <= tolerance &&
           ad_h_m_residual <= tolerance;
  }
};

// Orthogonal decomposition g = k + q + m for a chain K < H < G.  q models the
// vertical space of G/K -> G/H, m the horizontal space, p = q + m the tangent
// space of G/K at the base point.  p-coordinates list the q-block first.
class SubmersionTriple {
 public:
  static std::shared_ptr<const SubmersionTriple> build(AlgebraPtr algebra,
                                                       const Subspace& k_space,
                                                       const Subspace& h_space,
                                                       double tol = kDefaultTolStruct);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Subspace& k_space() const { return k_space_; }
  const Subspace& q_space() const { return q_space_; }
  const Subspace& m_space() const { return m_space_; }
  const Subspace& p_space() const { return p_space_; }
  int dim_q() const { return q_space_.rank(); }
  int dim_m() const { return m_space_.rank(); }
  int dim_p() const { return dim_q() + dim_m(); }

  // p-coordinates <-> algebra coordinates
  Vec to_p(const Vec& algebra_vec) const { return p_space_.coords(algebra_vec); }
  Vec from_p(const Vec& p_vec) const { return p_space_.embed(p_vec); }

  Vec vertical_block(const Vec& p_vec) const { return p_vec.head(dim_q()); }
  Vec horizontal_block(const Vec& p_vec) const { return p_vec.tail(dim_m()); }
  Vec assemble(const Vec& q_block, const Vec& m_block) const;

  // pr_p [a, b] in p-coordinates
  Vec bracket_p(const Vec& a_p, const Vec& b_p) const;
  // k-component of [a, b] in algebra coordinates
  Vec bracket_k_part(const Vec& a_p, const Vec& b_p) const;

  bool is_horizontal(const Vec& p_vec, double tol) const {
    return vertical_block(p_vec).norm() <= tol;
  }
  bool is_vertical(const Vec& p_vec, double tol) const {
    return horizontal_block(p_vec).norm() <= tol;
  }

  TripleReport validate(double tol = kDefaultTolStruct) const;

 private:
  SubmersionTriple() = default;
  AlgebraPtr algebra_;
  Subspace k_space_, q_space_, m_space_, p_space_;
};

using TriplePtr = std::shared_ptr<const SubmersionTriple>;

// G-invariant metric adapted to the submersion: the vertical tensor P on
// q-coordinates, identity on the m-block.  P = identity is the normal metric.
class AdaptedMetric {
 public:
  static AdaptedMetric normal(TriplePtr triple);
  static AdaptedMetric with_vertical_tensor(TriplePtr triple, const Mat& P,
                                            double tol = kDefaultTolStruct);

  const TriplePtr& triple() const { return triple_; }
  const Mat& vertical_tensor() const { return P_; }
  const Mat& gram_p() const { return gram_p_; }          // blockdiag(P, I)
  const Mat& gram_p_inverse() const { return gram_inv_; }
  const Mat& vertical_gram_sqrt() const { return P_sqrt_; }
  const Mat& vertical_gram_inv_sqrt() const { return P_inv_sqrt_; }
  bool is_normal() const { return normal_; }

  double inner_p(const Vec& a_p, const Vec& b_p) const { return a_p.dot(gram_p_ * b_p); }
  double norm_p(const Vec& a_p) const { return std::sqrt(std::max(0.0, inner_p(a_p, a_p))); }
  double ad_invariance_residual() const;  // commutation of P with ad(k)|q

 private:
  AdaptedMetric() = default;
  TriplePtr triple_;
  Mat P_, gram_p_, gram_inv_, P_sqrt_, P_inv_sqrt_;
  bool normal_ = true;
};

// Nomizu operator N_z of the invariant connection: N_z w = 1/2 pr_p[z,w] + U(z,w)
// with 2<U(z,w),v> = <pr_p[v,z],w> + <z,pr_p[v,w]> for all v in p.  Returns the
// p x p matrix of w -> N_z w; it is skew w.r.t. the metric gram.
Mat nomizu_operator(const AdaptedMetric& metric, const Vec& z_p);

// R(x,y)z = N_x N_y z - N_y N_x z - N_{pr_p[x,y]} z - pr_p[pr_k[x,y], z]
Vec curvature_tensor(const AdaptedMetric& metric, const Vec& x_p, const Vec& y_p,
                     const Vec& z_p);

// unreduced sectional curvature K(x,y) = <R(x,y)y, x>_g
double sectional_curvature(const AdaptedMetric& metric, const Vec& x_p, const Vec& y_p);

// generator -N_x of parallel transport along the horizontal geodesic exp(tx)
// (fields are represented by their coefficient curves in the transported frame)
Mat parallel_generator(const AdaptedMetric& metric, const Vec& x_p);
Mat parallel_flow(const AdaptedMetric& metric, const Vec& x_p, double t);

// checks z in p (NotInP) when vectors are given in algebra coordinates
Vec require_in_p(const SubmersionTriple& triple, const Vec& algebra_vec, double tol);

}  // namespace homsub

#endif  // HOMSUB_CONNECTION_HPP
