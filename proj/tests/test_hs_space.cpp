#include <catch2/catch_amalgamated.hpp>

#include "dlab/hs_space.hpp"

using namespace dlab;

TEST_CASE("hermitian point rejects non-hermitian input and symmetrizes noise") {
  CMatrix bad(2, 2);
  bad << 1, 2, 3, 4;  // real but asymmetric
  CHECK_THROWS_AS(HermitianPoint(bad), std::invalid_argument);

  CMatrix noisy(2, 2);
  noisy << 1.0, Complex(2.0, 1e-14), Complex(2.0, -1e-14 + 1e-15), -1.0;
  const HermitianPoint p(noisy);  // residual 1e-15 relative: accepted
  CHECK(hermiticity_residual(p.mat()) == 0.0);

  const HermitianPoint forced = HermitianPoint::symmetrized(bad);
  CHECK(hermiticity_residual(forced.mat()) == 0.0);
  CHECK(forced.mat()(0, 1) == Complex(2.5, 0.0));
}

TEST_CASE("hs inner product matches the trace definition") {
  // diag(2, 1, 0, 0) paired with itself: tr(rho^2) = 4 + 1 = 5.
  CMatrix d = CMatrix::Zero(4, 4);
  d(0, 0) = 2;
  d(1, 1) = 1;
  const HermitianPoint rho(d);
  CHECK(hs_inner(rho, rho) == 5.0);
  CHECK(hs_norm(rho) == std::sqrt(5.0));

  const HermitianPoint r1 = random_hermitian(6, 1.0, 101);
  const HermitianPoint r2 = random_hermitian(6, 2.0, 202);
  const double via_trace = (r1.mat() * r2.mat()).trace().real();
  CHECK(hs_inner(r1, r2) == Catch::Approx(via_trace).margin(1e-12));

  CHECK_THROWS_AS(hs_inner(rho, random_hermitian(6, 1.0, 1)),
                  std::invalid_argument);
}

TEST_CASE("hermitian basis is orthonormal and starts with the identity") {
  for (int d : {2, 4, 6}) {
    const HermitianBasis basis(d);
    REQUIRE(basis.size() == d * d);
    const CMatrix first = basis.element(0).mat();
    CHECK(max_abs(CMatrix(first - CMatrix::Identity(d, d) /
                                      std::sqrt(static_cast<double>(d)))) < 1e-14);
    for (int alpha = 0; alpha < basis.size(); ++alpha) {
      const HermitianPoint ba = basis.element(alpha);
      CHECK(hermiticity_residual(ba.mat()) == 0.0);
      for (int beta = alpha; beta < basis.size(); ++beta) {
        const double g = hs_inner(ba, basis.element(beta));
        CHECK(g == Catch::Approx(alpha == beta ? 1.0 : 0.0).margin(1e-13));
      }
    }
  }
}

TEST_CASE("vectorization is an isometry onto R^{d^2}") {
  const int d = 6;
  const HermitianBasis basis(d);
  const HermitianPoint rho = random_hermitian(d, 3.0, 7);
  const HermitianPoint sigma = random_hermitian(d, 0.5, 8);

  const HSVector v = basis.vectorize(rho);
  const HSVector w = basis.vectorize(sigma);
  REQUIRE(v.size() == d * d);
  CHECK(v.dot(w) == Catch::Approx(hs_inner(rho, sigma)).margin(1e-12));
  CHECK(v.norm() == Catch::Approx(hs_norm(rho)).margin(1e-12));

  const HermitianPoint back = basis.devectorize(v);
  CHECK(max_abs(CMatrix(back.mat() - rho.mat())) < 1e-13);

  // Coordinates against explicit basis elements must agree with the fast path.
  for (int alpha : {0, 1, d, d + 3, d * d - 1})
    CHECK(v(alpha) ==
          Catch::Approx(hs_inner(basis.element(alpha), rho)).margin(1e-12));
}

TEST_CASE("vectorize is linear") {
  const int d = 4;
  const HermitianBasis basis(d);
  const HermitianPoint a = random_hermitian(d, 1.0, 11);
  const HermitianPoint b = random_hermitian(d, 1.0, 12);
  const HermitianPoint combo =
      HermitianPoint::symmetrized(2.0 * a.mat() - 0.5 * b.mat());
  const HSVector lhs = basis.vectorize(combo);
  const HSVector rhs = 2.0 * basis.vectorize(a) - 0.5 * basis.vectorize(b);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("random hermitian and density generators are deterministic") {
  const HermitianPoint h1 = random_hermitian(5, 1.0, 99);
  const HermitianPoint h2 = random_hermitian(5, 1.0, 99);
  CHECK(max_abs(CMatrix(h1.mat() - h2.mat())) == 0.0);
  CHECK(hermiticity_residual(h1.mat()) == 0.0);
  CHECK(max_abs(CMatrix(h1.mat() - random_hermitian(5, 1.0, 100).mat())) > 0.0);

  const HermitianPoint rho = random_density(5, 42);
  CHECK(rho.mat().trace().real() == Catch::Approx(1.0).margin(1e-14));
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.mat(), Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues()(0) >= -1e-14);
  const HermitianPoint rho2 = random_density(5, 42);
  CHECK(max_abs(CMatrix(rho.mat() - rho2.mat())) == 0.0);
}
