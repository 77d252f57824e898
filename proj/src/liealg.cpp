#include "homsub/liealg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace homsub {

namespace {

Mat elementary(int n, int i, int j) {
  Mat e = Mat::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

// L_ij = E_ij - E_ji, i < j, lexicographic order
std::vector<Mat> so_basis(int n) {
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.push_back(elementary(n, i, j) - elementary(n, j, i));
  return out;
}

// (L_k)_{ij} = -eps_{kij}; satisfies [L1,L2] = L3 cyclically
std::vector<Mat> so3_cyclic_basis() {
  std::vector<Mat> L(3, Mat::Zero(3, 3));
  L[0](2, 1) = 1.0; L[0](1, 2) = -1.0;
  L[1](0, 2) = 1.0; L[1](2, 0) = -1.0;
  L[2](1, 0) = 1.0; L[2](0, 1) = -1.0;
  return L;
}

}  // namespace

std::shared_ptr<const LieAlgebraBasis> LieAlgebraBasis::from_catalog(const std::string& id) {
  // All catalog bases are orthonormal under -tr(XY)/2, so the stored basis
  // matches the generators below exactly.
  if (id == "su2") return build(so3_cyclic_basis(), 0.5, kDefaultTolStruct);
  if (id == "so4") return build(so_basis(4), 0.5, kDefaultTolStruct);
  if (id == "so5") return build(so_basis(5), 0.5, kDefaultTolStruct);
  if (id == "u1xu1") {
    Mat j1 = Mat::Zero(4, 4), j2 = Mat::Zero(4, 4);
    j1(0, 1) = -1.0; j1(1, 0) = 1.0;
    j2(2, 3) = -1.0; j2(3, 2) = 1.0;
    return build({j1, j2}, 0.5, kDefaultTolStruct);
  }
  fail(ErrorKind::ConfigError, "unknown algebra catalog id '" + id + "'");
}

std::shared_ptr<const LieAlgebraBasis> LieAlgebraBasis::from_matrices(
    const std::vector<Mat>& generators, double scale, double tol_struct) {
  return build(generators, scale, tol_struct);
}

std::shared_ptr<const LieAlgebraBasis> LieAlgebraBasis::build(
    const std::vector<Mat>& generators, double scale, double tol_struct) {
  if (generators.empty()) fail(ErrorKind::Degenerate, "empty generator list");
  const int n = static_cast<int>(generators.size());
  const int m = static_cast<int>(generators[0].rows());
  for (const Mat& g : generators)
    if (g.rows() != m || g.cols() != m)
      fail(ErrorKind::DimensionMismatch, "generators must be square and equally sized");

  auto form = [scale](const Mat& x, const Mat& y) { return -scale * (x * y).trace(); };

  // positive-definiteness of the trace form on the span rules out
  // non-compact and linearly dependent input
  Mat g0(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) g0(i, j) = g0(j, i) = form(generators[i], generators[j]);
  Eigen::SelfAdjointEigenSolver<Mat> es(g0);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || lo <= 1e-12 * std::max(1.0, hi))
    fail(ErrorKind::Degenerate, "trace form is not positive-definite on the span");

  // Loewdin orthonormalization: keeps already-orthonormal bases unchanged
  Mat g0inv_sqrt = es.operatorInverseSqrt();
  auto alg = std::shared_ptr<LieAlgebraBasis>(new LieAlgebraBasis());
  alg->scale_ = scale;
  alg->basis_.resize(n, Mat::Zero(m, m));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) alg->basis_[j] += g0inv_sqrt(i, j) * generators[i];
  alg->gram_ = Mat::Identity(n, n);

  // closure under commutators, and the structure-constant table
  alg->table_.assign(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const Mat br = alg->basis_[i] * alg->basis_[j] - alg->basis_[j] * alg->basis_[i];
      Vec c(n);
      for (int k = 0; k < n; ++k) c[k] = form(br, alg->basis_[k]);
      Mat rem = br;
      for (int k = 0; k < n; ++k) rem -= c[k] * alg->basis_[k];
      const double res = std::sqrt(std::max(0.0, form(rem, rem)));
      if (res > tol_struct)
        fail(ErrorKind::NotClosed,
             "commutator of basis elements " + std::to_string(i) + "," + std::to_string(j) +
                 " leaves the span (residual " + std::to_string(res) + ")");
      alg->table_[i].col(j) = c;
      alg->table_[j].col(i) = -c;  // antisymmetry holds exactly as stored
    }
  }
  return alg;
}

Vec LieAlgebraBasis::bracket(const Vec& a, const Vec& b) const {
  if (a.size() != dim() || b.size() != dim())
    fail(ErrorKind::DimensionMismatch, "bracket operands must match the algebra dimension");
  Vec out = Vec::Zero(dim());
  for (int i = 0; i < dim(); ++i)
    if (a[i] != 0.0) out += a[i] * (table_[i] * b);
  return out;
}

Mat LieAlgebraBasis::ad(const Vec& a) const {
  if (a.size() != dim())
    fail(ErrorKind::DimensionMismatch, "ad operand must match the algebra dimension");
  Mat out = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (a[i] != 0.0) out += a[i] * table_[i];
  return out;
}

Mat LieAlgebraBasis::matrix_of(const Vec& coeff) const {
  if (coeff.size() != dim())
    fail(ErrorKind::DimensionMismatch, "coefficient vector must match the algebra dimension");
  Mat out = Mat::Zero(matrix_size(), matrix_size());
  for (int i = 0; i < dim(); ++i) out += coeff[i] * basis_[i];
  return out;
}

Vec LieAlgebraBasis::coords_of(const Mat& X) const {
  Vec c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = inner_matrices(X, basis_[i]);
  return c;
}

StructureReport LieAlgebraBasis::validate_structure(double tol) const {
  StructureReport rep;
  rep.tolerance = tol;
  const int n = dim();
  for (int i = 0; i < n; ++i) {
    const Vec ei = Vec::Unit(n, i);
    for (int j = 0; j < n; ++j) {
      const Vec ej = Vec::Unit(n, j);
      const Vec bij = table_[i].col(j);
      for (int k = 0; k < n; ++k) {
        const Vec ek = Vec::Unit(n, k);
        const Vec jac = bracket(bij, ek) + bracket(table_[j].col(k), ei) +
                        bracket(table_[k].col(i), ej);
        rep.jacobi_residual = std::max(rep.jacobi_residual, jac.norm());
        const double skew = bracket(ek, ei).dot(ej) + ei.dot(bracket(ek, ej));
        rep.ad_skew_residual = std::max(rep.ad_skew_residual, std::abs(skew));
      }
      const Mat br = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      rep.commutator_residual =
          std::max(rep.commutator_residual, (br - matrix_of(bij)).norm());
    }
  }
  return rep;
}

std::vector<Mat> irreducible_so3_in_so5() {
  // orthonormal basis of symmetric traceless 3x3 matrices under tr(ST)
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  std::vector<Mat> B(5, Mat::Zero(3, 3));
  B[0](0, 0) = 1.0 / s2; B[0](1, 1) = -1.0 / s2;
  B[1](2, 2) = 2.0 / s6; B[1](0, 0) = -1.0 / s6; B[1](1, 1) = -1.0 / s6;
  B[2](0, 1) = B[2](1, 0) = 1.0 / s2;
  B[3](0, 2) = B[3](2, 0) = 1.0 / s2;
  B[4](1, 2) = B[4](2, 1) = 1.0 / s2;

  const std::vector<Mat> L = so3_cyclic_basis();
  std::vector<Mat> H(3, Mat::Zero(5, 5));
  for (int k = 0; k < 3; ++k)
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        H[k](a, b) = (B[a] * (L[k] * B[b] - B[b] * L[k])).trace();
  return H;
}

Mat irreducible_so3_span(const AlgebraPtr& so5) {
  const std::vector<Mat> H = irreducible_so3_in_so5();
  Mat span(so5->dim(), 3);
  for (int k = 0; k < 3; ++k) span.col(k) = so5->coords_of(H[k]);
  return span;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::from_indices(AlgebraPtr alg, const std::vector<int>& indices) {
  Mat cols = Mat::Zero(alg->dim(), static_cast<int>(indices.size()));
  int j = 0;
  for (int idx : indices) {
    if (idx < 0 || idx >= alg->dim())
      fail(ErrorKind::ConfigError, "basis index " + std::to_string(idx) + " out of range");
    cols(idx, j++) = 1.0;
  }
  return from_span(std::move(alg), cols);
}

Subspace Subspace::from_span(AlgebraPtr alg, const Mat& span_columns) {
  if (span_columns.rows() != alg->dim())
    fail(ErrorKind::DimensionMismatch, "span vectors must match the algebra dimension");
  Subspace s;
  s.alg_ = std::move(alg);
  const int r = static_cast<int>(span_columns.cols());
  Mat b(span_columns.rows(), r);
  int kept = 0;
  for (int j = 0; j < r; ++j) {
    Vec v = span_columns.col(j);
    for (int i = 0; i < kept; ++i) v -= b.col(i).dot(v) * b.col(i);
    for (int i = 0; i < kept; ++i) v -= b.col(i).dot(v) * b.col(i);  // re-orthogonalize
    const double nrm = v.norm();
    if (nrm <= 1e-10 * std::max(1.0, span_columns.col(j).norm()))
      fail(ErrorKind::InvalidChain, "span vectors are linearly dependent");
    b.col(kept++) = v / nrm;
  }
  s.basis_ = b.leftCols(kept);
  return s;
}

Subspace Subspace::complement(const Subspace& s) {
  const int n = s.alg_->dim();
  Subspace out;
  out.alg_ = s.alg_;
  Mat b(n, n - s.rank());
  int kept = 0;
  for (int j = 0; j < n && kept < b.cols(); ++j) {
    Vec v = Vec::Unit(n, j) - s.project(Vec::Unit(n, j));
    for (int i = 0; i < kept; ++i) v -= b.col(i).dot(v) * b.col(i);
    const double nrm = v.norm();
    if (nrm > 1e-8) b.col(kept++) = v / nrm;
  }
  if (kept != b.cols()) fail(ErrorKind::InvalidChain, "complement construction lost rank");
  out.basis_ = b;
  return out;
}

Subspace Subspace::complement_within(const Subspace& s, const Subspace& inside) {
  Subspace out;
  out.alg_ = s.alg_;
  const int n = s.alg_->dim();
  const int r = inside.rank() - s.rank();
  if (r < 0) fail(ErrorKind::InvalidChain, "subspace is larger than its container");
  Mat b(n, r);
  int kept = 0;
  for (int j = 0; j < inside.rank() && kept < r; ++j) {
    Vec v = inside.basis_vector(j) - s.project(inside.basis_vector(j));
    for (int i = 0; i < kept; ++i) v -= b.col(i).dot(v) * b.col(i);
    const double nrm = v.norm();
    if (nrm > 1e-8) b.col(kept++) = v / nrm;
  }
  if (kept != r) fail(ErrorKind::InvalidChain, "complement construction lost rank");
  out.basis_ = b;
  return out;
}

Vec Subspace::project(const Vec& x) const {
  if (x.size() != alg_->dim())
    fail(ErrorKind::DimensionMismatch, "projection input must match the algebra dimension");
  return basis_ * (basis_.transpose() * x);
}

Vec Subspace::coords(const Vec& x) const {
  if (x.size() != alg_->dim())
    fail(ErrorKind::DimensionMismatch, "coordinate input must match the algebra dimension");
  return basis_.transpose() * x;
}

Vec Subspace::embed(const Vec& c) const {
  if (c.size() != rank())
    fail(ErrorKind::DimensionMismatch, "embedding input must match the subspace rank");
  return basis_ * c;
}

double Subspace::distance_to(const Vec& x) const { return (x - project(x)).norm(); }

}  // namespace homsub
