#ifndef HOMSUB_LIEALG_HPP
#define HOMSUB_LIEALG_HPP

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "homsub/error.hpp"

namespace homsub {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline constexpr double kDefaultTolStruct = 1e-10;

struct StructureReport {
  double jacobi_residual = 0.0;       // max over basis triples
  double ad_skew_residual = 0.0;      // bi-invariance of the inner product
  double commutator_residual = 0.0;   // stored constants vs matrix commutators
  double tolerance = kDefaultTolStruct;
  bool pass() const {
    return jacobi_residual <= tolerance && ad_skew_residual <= tolerance &&
           commutator_residual <= tolerance;
  }
};

// Orthonormal basis of a compact matrix Lie algebra together with its
// structure constants.  The inner product is -scale*trace(XY); the basis is
// Gram-Schmidt orthonormalized at construction so the stored gram is the
// identity and adjoints are plain transposes.
class LieAlgebraBasis {
 public:
  // Catalog ids: "su2", "so4", "so5", "u1xu1".
  static std::shared_ptr<const LieAlgebraBasis> from_catalog(const std::string& id);

  // Validates closure under commutators (NotClosed) and positivity of the
  // trace form (Degenerate), then orthonormalizes.
  static std::shared_ptr<const LieAlgebraBasis> from_matrices(
      const std::vector<Mat>& generators, double scale = 1.0,
      double tol_struct = kDefaultTolStruct);

  int dim() const { return static_cast<int>(basis_.size()); }
  int matrix_size() const { return basis_.empty() ? 0 : static_cast<int>(basis_[0].rows()); }
  const Mat& basis_matrix(int i) const { return basis_.at(i); }
  const Mat& gram() const { return gram_; }
  double trace_scale() const { return scale_; }

  // c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k
  double structure_constant(int i, int j, int k) const { return table_[i](k, j); }

  // coefficients of [a, b]
  Vec bracket(const Vec& a, const Vec& b) const;

  // matrix of x -> [a, x] in basis coordinates
  Mat ad(const Vec& a) const;

  // sum_i a_i e_i as a matrix
  Mat matrix_of(const Vec& coeff) const;

  // coefficients of X w.r.t. the orthonormal basis
  Vec coords_of(const Mat& X) const;

  double inner(const Vec& a, const Vec& b) const { return a.dot(b); }
  double inner_matrices(const Mat& X, const Mat& Y) const {
    return -scale_ * (X * Y).trace();
  }

  StructureReport validate_structure(double tol = kDefaultTolStruct) const;

 private:
  LieAlgebraBasis() = default;
  static std::shared_ptr<const LieAlgebraBasis> build(
      const std::vector<Mat>& generators, double scale, double tol_struct);

  std::vector<Mat> basis_;
  std::vector<Mat> table_;  // table_[i].col(j) = coords of [e_i, e_j]
  Mat gram_;
  double scale_ = 1.0;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebraBasis>;

// so(3) embedded irreducibly in so(5): the image of so(3) acting by
// commutator on symmetric traceless 3x3 matrices, identified with R^5 via a
// fixed orthonormal basis.  Returns the three 5x5 generators; their span in
// so(5) coordinates is catalog data and regression-locked by the tests.
std::vector<Mat> irreducible_so3_in_so5();
Mat irreducible_so3_span(const AlgebraPtr& so5);

// Gram-orthonormal span inside a LieAlgebraBasis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace from_indices(AlgebraPtr alg, const std::vector<int>& indices);
  // Orthonormalizes the given coefficient columns (InvalidChain on rank loss).
  static Subspace from_span(AlgebraPtr alg, const Mat& span_columns);
  // Orthogonal complement of `s` inside `inside` (or the full algebra).
  static Subspace complement(const Subspace& s);
  static Subspace complement_within(const Subspace& s, const Subspace& inside);

  const AlgebraPtr& algebra() const { return alg_; }
  int rank() const { return static_cast<int>(basis_.cols()); }
  const Mat& basis() const { return basis_; }  // n x r, orthonormal columns
  Vec basis_vector(int j) const { return basis_.col(j); }

  Vec project(const Vec& x) const;           // n-dim result
  Vec coords(const Vec& x) const;            // r-dim coordinates
  Vec embed(const Vec& coords) const;        // r-dim -> n-dim
  double distance_to(const Vec& x) const;    // norm of the rejected part
  bool contains(const Vec& x, double tol) const { return distance_to(x) <= tol; }

 private:
  AlgebraPtr alg_;
  Mat basis_;
};

}  // namespace homsub

#endif  // HOMSUB_LIEALG_HPP
