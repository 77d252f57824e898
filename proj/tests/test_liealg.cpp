#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>

#include "homsub/liealg.hpp"
#include "homsub/rng.hpp"

using namespace homsub;

namespace {

// independent oracle: structure constants straight from matrix commutators
double commutator_oracle_constant(const LieAlgebraBasis& alg, int i, int j, int k) {
  const Mat br = alg.basis_matrix(i) * alg.basis_matrix(j) -
                 alg.basis_matrix(j) * alg.basis_matrix(i);
  return alg.inner_matrices(br, alg.basis_matrix(k));
}

}  // namespace

TEST_CASE("su2 catalog: cyclic bracket table and identity gram") {
  auto alg = LieAlgebraBasis::from_catalog("su2");
  REQUIRE(alg->dim() == 3);
  CHECK((alg->gram() - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-14);

  // [E1,E2]=E3, [E2,E3]=E1, [E3,E1]=E2; all other constants vanish
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double expected = 0.0;
        if ((i + 1) % 3 == j && (j + 1) % 3 == k) expected = 1.0;
        if ((j + 1) % 3 == i && (i + 1) % 3 == k) expected = -1.0;
        CHECK(alg->structure_constant(i, j, k) == doctest::Approx(expected).epsilon(1e-14));
        CHECK(alg->structure_constant(i, j, k) ==
              doctest::Approx(commutator_oracle_constant(*alg, i, j, k)).epsilon(1e-14));
      }

  const Vec e1 = Vec::Unit(3, 0), e2 = Vec::Unit(3, 1);
  CHECK((alg->bracket(e1, e2) - Vec::Unit(3, 2)).norm() < 1e-14);
}

TEST_CASE("u1xu1 catalog: abelian") {
  auto alg = LieAlgebraBasis::from_catalog("u1xu1");
  REQUIRE(alg->dim() == 2);
  const StructureReport rep = alg->validate_structure();
  CHECK(rep.jacobi_residual == 0.0);
  CHECK(rep.ad_skew_residual == 0.0);
  CHECK(rep.commutator_residual == 0.0);
  CHECK(alg->bracket(Vec::Unit(2, 0), Vec::Unit(2, 1)).norm() == 0.0);
}

TEST_CASE("so5 catalog: dimension and structure residuals") {
  auto alg = LieAlgebraBasis::from_catalog("so5");
  REQUIRE(alg->dim() == 10);
  const StructureReport rep = alg->validate_structure();
  CHECK(rep.jacobi_residual < 1e-12);
  CHECK(rep.ad_skew_residual < 1e-12);
  CHECK(rep.commutator_residual < 1e-12);
  CHECK(rep.pass());
}

TEST_CASE("all catalog algebras validate below 1e-12 with positive gram") {
  for (const char* id : {"su2", "so4", "so5", "u1xu1"}) {
    CAPTURE(id);
    auto alg = LieAlgebraBasis::from_catalog(id);
    const StructureReport rep = alg->validate_structure();
    CHECK(rep.jacobi_residual < 1e-12);
    CHECK(rep.ad_skew_residual < 1e-12);
    CHECK(rep.commutator_residual < 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat> es(alg->gram());
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("bracket is bilinear and antisymmetric on random inputs") {
  auto alg = LieAlgebraBasis::from_catalog("so5");
  Rng rng(991);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec a = rng.gaussian_vector(10), b = rng.gaussian_vector(10),
              c = rng.gaussian_vector(10);
    const double s = rng.gaussian();
    CHECK((alg->bracket(a, b) + alg->bracket(b, a)).norm() < 1e-13);
    CHECK(alg->bracket(a, a).norm() < 1e-13);
    const Vec lin = alg->bracket(a + s * c, b) - alg->bracket(a, b) - s * alg->bracket(c, b);
    CHECK(lin.norm() < 1e-12 * std::max(1.0, s * s));
  }
}

TEST_CASE("subspace projection: orthonormal basis cases and idempotence") {
  auto su2 = LieAlgebraBasis::from_catalog("su2");
  const Subspace s = Subspace::from_indices(su2, {0});
  Vec x(3);
  x << 1.0, 1.0, 0.0;  // E1 + E2
  CHECK((s.project(x) - Vec::Unit(3, 0)).norm() < 1e-14);

  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec v = rng.gaussian_vector(3);
    CHECK((s.project(s.project(v)) - s.project(v)).norm() < 1e-14);
  }
}

TEST_CASE("so4: bracket of horizontal generators lands in so(3)") {
  auto so4 = LieAlgebraBasis::from_catalog("so4");
  // basis order: L12 L13 L14 L23 L24 L34
  const Subspace h = Subspace::from_indices(so4, {0, 1, 3});
  const Vec l14 = Vec::Unit(6, 2), l24 = Vec::Unit(6, 4);
  const Vec br = so4->bracket(l14, l24);
  CHECK((so4->bracket(l14, l24) + Vec::Unit(6, 0)).norm() < 1e-14);  // [L14,L24] = -L12
  CHECK((h.project(br) - br).norm() < 1e-14);
}

TEST_CASE("non-closed span is rejected at build") {
  auto so4 = LieAlgebraBasis::from_catalog("so4");
  std::vector<Mat> gens = {so4->basis_matrix(0), so4->basis_matrix(1)};  // L12, L13
  CHECK_THROWS_WITH_AS(LieAlgebraBasis::from_matrices(gens, 0.5),
                       doctest::Contains("NotClosed"), Error);
  try {
    LieAlgebraBasis::from_matrices(gens, 0.5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosed);
  }
}

TEST_CASE("non-compact input is rejected as degenerate") {
  Mat sym = Mat::Zero(2, 2);
  sym(0, 0) = 1.0;
  sym(1, 1) = -1.0;  // symmetric traceless: trace form is negative
  CHECK_THROWS_AS((void)LieAlgebraBasis::from_matrices({sym}), Error);
  try {
    (void)LieAlgebraBasis::from_matrices({sym});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("custom algebra build: scaled so(3) input is orthonormalized") {
  auto ref = LieAlgebraBasis::from_catalog("su2");
  std::vector<Mat> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(2.5 * ref->basis_matrix(i));
  auto alg = LieAlgebraBasis::from_matrices(gens, 1.0);
  CHECK(alg->dim() == 3);
  CHECK((alg->gram() - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(alg->validate_structure().pass());
}

TEST_CASE("irreducible so(3) in so(5): locked generators") {
  const std::vector<Mat> H = irreducible_so3_in_so5();
  REQUIRE(H.size() == 3);

  // rotation about the third axis in the symmetric-traceless representation:
  // weights (2, 1, 0) split over the fixed R^5 basis
  Mat h3 = Mat::Zero(5, 5);
  h3(2, 0) = 2.0; h3(0, 2) = -2.0;
  h3(4, 3) = 1.0; h3(3, 4) = -1.0;
  CHECK((H[2] - h3).cwiseAbs().maxCoeff() < 1e-13);

  for (const Mat& h : H) {
    CHECK((h + h.transpose()).cwiseAbs().maxCoeff() < 1e-13);   // lands in so(5)
    CHECK(std::abs(-(h * h).trace() - 10.0) < 1e-12);           // spin-2 Casimir norm
  }
  // representation is a homomorphism: [h1, h2] = h3 cyclically
  CHECK((H[0] * H[1] - H[1] * H[0] - H[2]).cwiseAbs().maxCoeff() < 1e-12);

  auto so5 = LieAlgebraBasis::from_catalog("so5");
  const Mat span = irreducible_so3_span(so5);
  REQUIRE(span.cols() == 3);
  for (int k = 0; k < 3; ++k)
    CHECK((so5->matrix_of(span.col(k)) - H[k]).cwiseAbs().maxCoeff() < 1e-12);
  const Subspace h = Subspace::from_span(so5, span);
  CHECK(h.rank() == 3);
}

TEST_CASE("dimension mismatch raises") {
  auto su2 = LieAlgebraBasis::from_catalog("su2");
  CHECK_THROWS_AS((void)su2->bracket(Vec::Zero(2), Vec::Zero(3)), Error);
}
