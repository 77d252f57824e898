#include "homsub/connection.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>

namespace homsub {

std::shared_ptr<const SubmersionTriple> SubmersionTriple::build(AlgebraPtr algebra,
                                                                const Subspace& k_space,
                                                                const Subspace& h_space,
                                                                double tol) {
  auto t = std::shared_ptr<SubmersionTriple>(new SubmersionTriple());
  t->algebra_ = std::move(algebra);
  t->k_space_ = k_space;

  // k must sit inside h
  for (int j = 0; j < k_space.rank(); ++j)
    if (h_space.distance_to(k_space.basis_vector(j)) > tol)
      fail(ErrorKind::InvalidChain, "k is not contained in h");

  t->q_space_ = Subspace::complement_within(k_space, h_space);
  t->m_space_ = Subspace::complement(h_space);

  Mat p_cols(t->algebra_->dim(), t->q_space_.rank() + t->m_space_.rank());
  p_cols << t->q_space_.basis(), t->m_space_.basis();
  t->p_space_ = Subspace::from_span(t->algebra_, p_cols);

  TripleReport rep = t->validate(tol);
  if (!rep.pass()) {
    if (rep.h_subalgebra_residual > tol || rep.k_subalgebra_residual > tol)
      fail(ErrorKind::InvalidChain, "k or h is not a subalgebra");
    fail(ErrorKind::InvalidChain, "decomposition violates Ad-invariance");
  }
  return t;
}

Vec SubmersionTriple::assemble(const Vec& q_block, const Vec& m_block) const {
  Vec out(dim_p());
  out.head(dim_q()) = q_block;
  out.tail(dim_m()) = m_block;
  return out;
}

Vec SubmersionTriple::bracket_p(const Vec& a_p, const Vec& b_p) const {
  return to_p(algebra_->bracket(from_p(a_p), from_p(b_p)));
}

Vec SubmersionTriple::bracket_k_part(const Vec& a_p, const Vec& b_p) const {
  return k_space_.project(algebra_->bracket(from_p(a_p), from_p(b_p)));
}

TripleReport SubmersionTriple::validate(double tol) const {
  TripleReport rep;
  rep.tolerance = tol;
  const auto& alg = *algebra_;

  auto span_residual = [&](const Subspace& a, const Subspace& b, const Subspace& target) {
    double worst = 0.0;
    for (int i = 0; i < a.rank(); ++i)
      for (int j = 0; j < b.rank(); ++j) {
        const Vec br = alg.bracket(a.basis_vector(i), b.basis_vector(j));
        worst = std::max(worst, target.distance_to(br));
      }
    return worst;
  };

  Subspace h_full = k_space_.rank() > 0
                        ? Subspace::from_span(algebra_, [&] {
                            Mat cols(alg.dim(), k_space_.rank() + q_space_.rank());
                            cols << k_space_.basis(), q_space_.basis();
                            return cols;
                          }())
                        : q_space_;
  rep.h_subalgebra_residual = span_residual(h_full, h_full, h_full);
  if (k_space_.rank() > 0)
    rep.k_subalgebra_residual = span_residual(k_space_, k_space_, k_space_);

  // mutual orthogonality and dimension count
  Mat all(alg.dim(), k_space_.rank() + q_space_.rank() + m_space_.rank());
  if (all.cols() != alg.dim())
    fail(ErrorKind::InvalidChain, "subspace dimensions do not sum to dim g");
  all << k_space_.basis(), q_space_.basis(), m_space_.basis();
  rep.orthogonality_residual =
      (all.transpose() * all - Mat::Identity(alg.dim(), alg.dim())).cwiseAbs().maxCoeff();

  if (k_space_.rank() > 0) rep.ad_k_q_residual = span_residual(k_space_, q_space_, q_space_);
  rep.ad_h_m_residual = span_residual(h_full, m_space_, m_space_);
  return rep;
}

// ---------------------------------------------------------------- metric

AdaptedMetric AdaptedMetric::normal(TriplePtr triple) {
  const int q = triple->dim_q();
  return with_vertical_tensor(std::move(triple), Mat::Identity(q, q));
}

AdaptedMetric AdaptedMetric::with_vertical_tensor(TriplePtr triple, const Mat& P, double tol) {
  const int q = triple->dim_q();
  if (P.rows() != q || P.cols() != q)
    fail(ErrorKind::InvalidP, "vertical tensor must be " + std::to_string(q) + "x" +
                                  std::to_string(q));
  if ((P - P.transpose()).cwiseAbs().maxCoeff() > tol * std::max(1.0, P.cwiseAbs().maxCoeff()))
    fail(ErrorKind::InvalidP, "vertical tensor is not symmetric");

  AdaptedMetric m;
  m.triple_ = std::move(triple);
  m.P_ = 0.5 * (P + P.transpose());

  if (q > 0) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m.P_);
    if (es.eigenvalues().minCoeff() <= 0.0)
      fail(ErrorKind::InvalidP, "vertical tensor is not positive-definite");
    m.P_sqrt_ = es.operatorSqrt();
    m.P_inv_sqrt_ = es.operatorInverseSqrt();
  } else {
    m.P_sqrt_ = m.P_inv_sqrt_ = Mat::Zero(0, 0);
  }

  const int p = m.triple_->dim_p();
  m.gram_p_ = Mat::Identity(p, p);
  m.gram_p_.topLeftCorner(q, q) = m.P_;
  m.gram_inv_ = Mat::Identity(p, p);
  if (q > 0) m.gram_inv_.topLeftCorner(q, q) = m.P_.inverse();
  m.normal_ = q == 0 || (m.P_ - Mat::Identity(q, q)).cwiseAbs().maxCoeff() < 1e-15;

  if (m.ad_invariance_residual() > tol)
    fail(ErrorKind::InvalidP, "vertical tensor does not commute with ad(k) on q");
  return m;
}

double AdaptedMetric::ad_invariance_residual() const {
  const auto& t = *triple_;
  double worst = 0.0;
  for (int i = 0; i < t.k_space().rank(); ++i) {
    const Mat ad_full = t.algebra()->ad(t.k_space().basis_vector(i));
    const Mat ad_q = t.q_space().basis().transpose() * ad_full * t.q_space().basis();
    worst = std::max(worst, (P_ * ad_q - ad_q * P_).cwiseAbs().maxCoeff());
  }
  return worst;
}

// ---------------------------------------------------------------- Nomizu

Vec require_in_p(const SubmersionTriple& triple, const Vec& algebra_vec, double tol) {
  if (triple.p_space().distance_to(algebra_vec) > tol)
    fail(ErrorKind::NotInP, "vector has a k-component above tolerance");
  return triple.to_p(algebra_vec);
}

Mat nomizu_operator(const AdaptedMetric& metric, const Vec& z_p) {
  const auto& t = *metric.triple();
  const int p = t.dim_p();
  if (z_p.size() != p) fail(ErrorKind::DimensionMismatch, "z must be in p-coordinates");

  const Mat& G = metric.gram_p();
  Mat half_ad(p, p);   // w -> 1/2 pr_p [z, w]
  Mat rhs(p, p);       // rhs(v, w) = <pr_p[v,z], w>_g + <z, pr_p[v,w]>_g
  for (int j = 0; j < p; ++j)
    half_ad.col(j) = 0.5 * t.bracket_p(z_p, Vec::Unit(p, j));
  for (int v = 0; v < p; ++v) {
    const Vec bvz = t.bracket_p(Vec::Unit(p, v), z_p);
    const Vec gz = G * z_p;
    for (int w = 0; w < p; ++w) {
      const Vec bvw = t.bracket_p(Vec::Unit(p, v), Vec::Unit(p, w));
      rhs(v, w) = bvz.dot(G.col(w)) + gz.dot(bvw);
    }
  }
  // U(z, .) column-wise: G U = rhs/2
  const Mat U = metric.gram_p_inverse() * (0.5 * rhs);
  return half_ad + U;
}

Vec curvature_tensor(const AdaptedMetric& metric, const Vec& x_p, const Vec& y_p,
                     const Vec& z_p) {
  const auto& t = *metric.triple();
  const Mat nx = nomizu_operator(metric, x_p);
  const Mat ny = nomizu_operator(metric, y_p);
  const Mat nb = nomizu_operator(metric, t.bracket_p(x_p, y_p));
  const Vec k_part = t.bracket_k_part(x_p, y_p);  // algebra coordinates
  const Vec ad_k_z = t.to_p(t.algebra()->bracket(k_part, t.from_p(z_p)));
  return nx * (ny * z_p) - ny * (nx * z_p) - nb * z_p - ad_k_z;
}

double sectional_curvature(const AdaptedMetric& metric, const Vec& x_p, const Vec& y_p) {
  return metric.inner_p(curvature_tensor(metric, x_p, y_p, y_p), x_p);
}

Mat parallel_generator(const AdaptedMetric& metric, const Vec& x_p) {
  const auto& t = *metric.triple();
  if (x_p.size() != t.dim_p())
    fail(ErrorKind::DimensionMismatch, "x must be in p-coordinates");
  if (!t.is_horizontal(x_p, 1e-10 * std::max(1.0, x_p.norm())))
    fail(ErrorKind::NotHorizontal, "transport direction must be horizontal");
  return -nomizu_operator(metric, x_p);
}

Mat parallel_flow(const AdaptedMetric& metric, const Vec& x_p, double t) {
  return (t * parallel_generator(metric, x_p)).exp();
}

}  // namespace homsub
