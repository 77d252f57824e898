#include "homsub/chart_oracle.hpp"

#include <cmath>

namespace homsub {

namespace {

// T(A) = sum_{k>=0} (-A)^k / (k+1)!  (right-trivialized differential of exp)
Mat dexp_series(const Mat& A) {
  const int n = static_cast<int>(A.rows());
  Mat term = Mat::Identity(n, n);
  Mat sum = term;
  for (int k = 1; k < 60; ++k) {
    term = (-A * term) / static_cast<double>(k + 1);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  return sum;
}

}  // namespace

ChartOracle::ChartOracle(const AdaptedMetric& metric, double step)
    : triple_(metric.triple().get()),
      gram_p_(metric.gram_p()),
      p_basis_(metric.triple()->p_space().basis()),
      p_(metric.triple()->dim_p()),
      h_(step) {
  if (step < 1e-9) fail(ErrorKind::StepTooSmall, "finite-difference step below 1e-9");
}

Mat ChartOracle::frame_at(const Vec& u) const {
  const auto& alg = *triple_->algebra();
  const Mat T = dexp_series(alg.ad(p_basis_ * u));
  Mat frame(p_, p_);
  for (int i = 0; i < p_; ++i)
    frame.col(i) = triple_->to_p(T * p_basis_.col(i));
  return frame;
}

Mat ChartOracle::metric_at(const Vec& u) const {
  const Mat C = frame_at(u);
  return C.transpose() * gram_p_ * C;
}

std::vector<Mat> ChartOracle::christoffel(const Vec& u) const {
  std::vector<Mat> dG(p_);  // dG[l] = d_l G
  for (int l = 0; l < p_; ++l) {
    const Vec e = Vec::Unit(p_, l);
    dG[l] = (metric_at(u + h_ * e) - metric_at(u - h_ * e)) / (2.0 * h_);
  }
  const Mat Ginv = metric_at(u).inverse();
  std::vector<Mat> gamma(p_, Mat::Zero(p_, p_));
  for (int k = 0; k < p_; ++k)
    for (int i = 0; i < p_; ++i)
      for (int j = 0; j < p_; ++j) {
        double s = 0.0;
        for (int l = 0; l < p_; ++l)
          s += Ginv(k, l) * (dG[i](j, l) + dG[j](i, l) - dG[l](i, j));
        gamma[k](i, j) = 0.5 * s;
      }
  return gamma;
}

Vec ChartOracle::christoffel_term(const std::vector<Mat>& gamma, const Vec& a,
                                  const Vec& b) const {
  Vec out(p_);
  for (int k = 0; k < p_; ++k) out[k] = a.dot(gamma[k] * b);
  return out;
}

Vec ChartOracle::covariant_derivative(const Vec& z_p,
                                      const std::function<Vec(double)>& w_of_t) const {
  // the curve exp(tz) has exact chart coordinates u(t) = t z, and the field
  // coefficients in the chart frame are C(tz)^{-1} w(t)
  auto chart_coeff = [&](double t) -> Vec {
    return frame_at(t * z_p).inverse() * w_of_t(t);
  };
  auto derivative_at_step = [&](double h) -> Vec {
    return (chart_coeff(h) - chart_coeff(-h)) / (2.0 * h);
  };
  const Vec d1 = derivative_at_step(h_);
  const Vec d2 = derivative_at_step(2.0 * h_);
  const Vec dw = (4.0 * d1 - d2) / 3.0;  // one Richardson refinement
  return dw + christoffel_term(christoffel(Vec::Zero(p_)), z_p, w_of_t(0.0));
}

Vec ChartOracle::covariant_derivative_transported(const Vec& z_p, const Vec& w_p) const {
  return covariant_derivative(z_p, [&](double) { return w_p; });
}

Vec ChartOracle::bracket_of_transported(const Vec& x_p, const Vec& y_p) const {
  // [X,Y]^k = X^i d_i Y^k - Y^i d_i X^k with X^k(u) = [C(u)^{-1} x]^k
  Vec out = Vec::Zero(p_);
  for (int i = 0; i < p_; ++i) {
    const Vec e = Vec::Unit(p_, i);
    const Mat cp = frame_at(h_ * e).inverse();
    const Mat cm = frame_at(-h_ * e).inverse();
    const Vec dy = (cp * y_p - cm * y_p) / (2.0 * h_);
    const Vec dx = (cp * x_p - cm * x_p) / (2.0 * h_);
    out += x_p[i] * dy - y_p[i] * dx;
  }
  return out;
}

void ChartOracle::ensure_curvature_tables() const {
  if (tables_ready_) return;
  const double hg = 1e-4;  // second-derivative stencil needs a larger step
  gamma0_ = christoffel(Vec::Zero(p_));
  dgamma_.resize(p_);
  for (int l = 0; l < p_; ++l) {
    const Vec e = Vec::Unit(p_, l);
    const std::vector<Mat> gp = christoffel(hg * e);
    const std::vector<Mat> gm = christoffel(-hg * e);
    dgamma_[l].resize(p_);
    for (int k = 0; k < p_; ++k) dgamma_[l][k] = (gp[k] - gm[k]) / (2.0 * hg);
  }
  tables_ready_ = true;
}

Vec ChartOracle::curvature(const Vec& x_p, const Vec& y_p, const Vec& z_p) const {
  ensure_curvature_tables();
  // R^l_{ijk} = d_i Gamma^l_jk - d_j Gamma^l_ik + Gamma^l_im Gamma^m_jk
  //                                             - Gamma^l_jm Gamma^m_ik
  Vec out = Vec::Zero(p_);
  Vec gyz(p_), gxz(p_);
  for (int m = 0; m < p_; ++m) {
    gyz[m] = y_p.dot(gamma0_[m] * z_p);
    gxz[m] = x_p.dot(gamma0_[m] * z_p);
  }
  for (int l = 0; l < p_; ++l) {
    double s = 0.0;
    for (int i = 0; i < p_; ++i) {
      s += x_p[i] * y_p.dot(dgamma_[i][l] * z_p);
      s -= y_p[i] * x_p.dot(dgamma_[i][l] * z_p);
    }
    s += x_p.dot(gamma0_[l] * gyz) - y_p.dot(gamma0_[l] * gxz);
    out[l] = s;
  }
  return out;
}

}  // namespace homsub
