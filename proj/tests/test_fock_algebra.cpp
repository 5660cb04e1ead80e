#include <catch2/catch_amalgamated.hpp>

#include "dlab/fock_algebra.hpp"

using namespace dlab;

namespace {

// Independent Kronecker product: out(2m+i, 2n+j) = f(m,n) s(i,j).
CMatrix kron_oracle(const CMatrix& f, const CMatrix& s) {
  const int nf = static_cast<int>(f.rows());
  const int ns = static_cast<int>(s.rows());
  CMatrix out(nf * ns, nf * ns);
  for (int m = 0; m < nf; ++m)
    for (int n = 0; n < nf; ++n)
      for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j)
          out(ns * m + i, ns * n + j) = f(m, n) * s(i, j);
  return out;
}

}  // namespace

TEST_CASE("truncation config validates and derives dimensions") {
  CHECK_THROWS_AS(TruncationConfig(1), std::invalid_argument);
  CHECK_THROWS_AS(TruncationConfig(0), std::invalid_argument);
  CHECK_THROWS_AS(TruncationConfig(-3), std::invalid_argument);
  const TruncationConfig cfg(5);
  CHECK(cfg.n_levels() == 5);
  CHECK(cfg.field_dim() == 5);
  CHECK(cfg.system_dim() == 10);
}

TEST_CASE("annihilation operator has sqrt(n) superdiagonal") {
  const TruncationConfig cfg(4);
  const CMatrix a = make_annihilation(cfg).mat;
  REQUIRE(a.rows() == 4);
  REQUIRE(a.cols() == 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (j == i + 1)
        CHECK(a(i, j) == Complex(std::sqrt(static_cast<double>(j)), 0.0));
      else
        CHECK(a(i, j) == Complex(0.0, 0.0));
    }
  }
  CHECK(make_annihilation(cfg).label == FieldOpLabel::Annihilation);
}

TEST_CASE("creation operator is the exact adjoint of annihilation") {
  const TruncationConfig cfg(6);
  const CMatrix a = make_annihilation(cfg).mat;
  const CMatrix adag = make_creation(cfg).mat;
  CHECK((adag - a.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("truncated commutator [a, a dagger] deviates only at the top level") {
  // For 4 levels: a a† - a†a = diag(1, 1, 1, -3); the -(N-1) entry is the
  // hand-computed fingerprint of the truncation.
  const TruncationConfig cfg(4);
  const CMatrix a = make_annihilation(cfg).mat;
  const CMatrix comm = a * a.adjoint() - a.adjoint() * a;
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = 1;
  expected(1, 1) = 1;
  expected(2, 2) = 1;
  expected(3, 3) = -3;
  CHECK(max_abs(CMatrix(comm - expected)) < 1e-14);
}

TEST_CASE("a a dagger as a product of truncated factors") {
  // 3 levels: a a† = diag(1, 2, 0), because a†|2> = 0 under truncation.
  const TruncationConfig cfg(3);
  const CMatrix a = make_annihilation(cfg).mat;
  const CMatrix aad = a * a.adjoint();
  CMatrix expected = CMatrix::Zero(3, 3);
  expected(0, 0) = 1;
  expected(1, 1) = 2;
  CHECK(max_abs(CMatrix(aad - expected)) < 1e-14);
}

TEST_CASE("number operator equals diag(0..N-1)") {
  // Built as the product of the truncated factors, so diagonal entries carry
  // the rounding of (sqrt k)^2; off-diagonal entries are exactly zero.
  const TruncationConfig cfg(5);
  const CMatrix n = number_operator(cfg).mat;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j)
        CHECK(std::abs(n(i, j) - Complex(i, 0.0)) < 1e-14);
      else
        CHECK(n(i, j) == Complex(0.0, 0.0));
    }
}

TEST_CASE("pauli matrices satisfy the quaternion relations") {
  const SpinMatrix s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
  const SpinMatrix id = spin_identity();
  CHECK((s1 * s1 - id).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((s2 * s2 - id).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((s3 * s3 - id).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((s1 * s2 - Complex(0, 1) * s3).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((s1 - s1.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((s2 - s2.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(pauli(0), std::invalid_argument);
  CHECK_THROWS_AS(pauli(4), std::invalid_argument);
}

TEST_CASE("tensor product uses the n-major layout") {
  const TruncationConfig cfg(3);
  CMatrix f(3, 3);
  f << Complex(1, 0), Complex(0, 2), Complex(3, -1),
       Complex(0, 0), Complex(-2, 0), Complex(1, 1),
       Complex(5, 0), Complex(0, 0), Complex(0, -4);
  const CMatrix s = pauli(2);
  const CMatrix t = tensor(f, s);
  REQUIRE(t.rows() == 6);
  CHECK(max_abs(CMatrix(t - kron_oracle(f, s))) == 0.0);
  CHECK_THROWS_AS(tensor(f, CMatrix(CMatrix::Identity(3, 3))),
                  std::invalid_argument);
}

TEST_CASE("lifted field and spin operators commute and compose to tensor") {
  const TruncationConfig cfg(4);
  const CMatrix f = make_annihilation(cfg).mat;
  const SpinMatrix s = pauli(1);
  const CMatrix lf = lift_field(f);
  const CMatrix ls = lift_spin(s, cfg);
  CHECK(max_abs(CMatrix(lf * ls - ls * lf)) < 1e-15);
  CHECK(max_abs(CMatrix(lf * ls - tensor(f, CMatrix(s)))) < 1e-15);
  CHECK(max_abs(CMatrix(lf - kron_oracle(f, CMatrix(CMatrix::Identity(2, 2))))) == 0.0);
}

TEST_CASE("spin index helpers address the n-major basis") {
  CHECK(spin_plus_index(0) == 0);
  CHECK(spin_minus_index(0) == 1);
  CHECK(spin_plus_index(3) == 6);
  CHECK(spin_minus_index(3) == 7);
}
