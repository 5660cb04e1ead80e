#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dlab/common.hpp"

namespace dlab {

/// A Hermitian d x d matrix viewed as a point of the real Hilbert space HS
/// with inner product tr(rho1 rho2). Construction rejects matrices whose
/// Hermiticity residual exceeds 1e-12 relative to the largest entry, then
/// symmetrizes to (M + M†)/2.
class HermitianPoint {
public:
  HermitianPoint() = default;

  explicit HermitianPoint(const CMatrix& m) {
    if (m.rows() != m.cols())
      throw std::invalid_argument("HermitianPoint: matrix must be square");
    if (relative_hermiticity_residual(m) > 1e-12)
      throw std::invalid_argument("HermitianPoint: matrix is not Hermitian");
    m_ = 0.5 * (m + m.adjoint());
  }

  /// Symmetrizes without the residual check. For callers that monitor the
  /// residual themselves (the integrator) or produce exactly Hermitian input.
  static HermitianPoint symmetrized(const CMatrix& m) {
    HermitianPoint p;
    p.m_ = 0.5 * (m + m.adjoint());
    return p;
  }

  const CMatrix& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

private:
  CMatrix m_;
};

/// tr(rho1 rho2); real and symmetric for Hermitian arguments.
inline double hs_inner(const HermitianPoint& rho1, const HermitianPoint& rho2) {
  if (rho1.dim() != rho2.dim())
    throw std::invalid_argument("hs_inner: dimension mismatch");
  // tr(AB) = sum_ij A_ij conj(B_ij) for Hermitian B.
  return rho1.mat().cwiseProduct(rho2.mat().conjugate()).sum().real();
}

/// sqrt(<rho, rho>); coincides with the Frobenius norm of the matrix.
inline double hs_norm(const HermitianPoint& rho) { return rho.mat().norm(); }

/// Coordinates of a HermitianPoint in a HermitianBasis; length d^2.
using HSVector = RVector;

/// Orthonormal basis of the real space of Hermitian d x d matrices:
///   element 0                 I/sqrt(d),
///   elements 1 .. d-1         traceless diagonal matrices (Gram-Schmidt over
///                             the diagonal units E_ii, seeded with I/sqrt(d)),
///   then per pair i < j       (E_ij + E_ji)/sqrt(2) and i(E_ij - E_ji)/sqrt(2).
///
/// Elements are generated on demand; only the diagonal rows are stored, so a
/// basis stays cheap even at d^2 in the tens of thousands.
class HermitianBasis {
public:
  explicit HermitianBasis(int dim) : d_(dim) {
    if (d_ < 1) throw std::invalid_argument("HermitianBasis: dim must be >= 1");
    build_diagonal_rows();
    pairs_.reserve(static_cast<std::size_t>(d_) * (d_ - 1) / 2);
    for (int i = 0; i < d_; ++i)
      for (int j = i + 1; j < d_; ++j) pairs_.emplace_back(i, j);
  }

  int dim() const { return d_; }
  int size() const { return d_ * d_; }

  HermitianPoint element(int alpha) const {
    if (alpha < 0 || alpha >= size())
      throw std::invalid_argument("HermitianBasis: element index out of range");
    CMatrix m = CMatrix::Zero(d_, d_);
    if (alpha < d_) {
      for (int i = 0; i < d_; ++i) m(i, i) = diag_rows_(alpha, i);
    } else {
      static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      const auto [i, j] = pairs_[(alpha - d_) / 2];
      if ((alpha - d_) % 2 == 0) {
        m(i, j) = inv_sqrt2;
        m(j, i) = inv_sqrt2;
      } else {
        m(i, j) = Complex(0, inv_sqrt2);
        m(j, i) = Complex(0, -inv_sqrt2);
      }
    }
    return HermitianPoint::symmetrized(m);
  }

  /// coords_alpha = <B_alpha, rho>, evaluated without materializing elements.
  HSVector vectorize(const HermitianPoint& rho) const {
    if (rho.dim() != d_)
      throw std::invalid_argument("vectorize: dimension mismatch");
    const CMatrix& m = rho.mat();
    HSVector v(size());
    const RVector diag = m.diagonal().real();
    v.head(d_) = diag_rows_ * diag;
    const double sqrt2 = std::sqrt(2.0);
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const auto [i, j] = pairs_[p];
      v(d_ + 2 * static_cast<int>(p)) = sqrt2 * m(i, j).real();
      v(d_ + 2 * static_cast<int>(p) + 1) = sqrt2 * m(i, j).imag();
    }
    return v;
  }

  HermitianPoint devectorize(const HSVector& coords) const {
    if (coords.size() != size())
      throw std::invalid_argument("devectorize: coordinate length mismatch");
    CMatrix m = CMatrix::Zero(d_, d_);
    const RVector diag = diag_rows_.transpose() * coords.head(d_);
    for (int i = 0; i < d_; ++i) m(i, i) = diag(i);
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const auto [i, j] = pairs_[p];
      const Complex z(coords(d_ + 2 * static_cast<int>(p)) * inv_sqrt2,
                      coords(d_ + 2 * static_cast<int>(p) + 1) * inv_sqrt2);
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
    return HermitianPoint::symmetrized(m);
  }

private:
  void build_diagonal_rows() {
    diag_rows_ = RMatrix::Zero(d_, d_);
    diag_rows_.row(0).setConstant(1.0 / std::sqrt(static_cast<double>(d_)));
    int rows = 1;
    for (int cand = 0; cand < d_ && rows < d_; ++cand) {
      RVector w = RVector::Zero(d_);
      w(cand) = 1.0;
      for (int pass = 0; pass < 2; ++pass)  // twice, for orthogonality to ~eps
        for (int r = 0; r < rows; ++r)
          w -= diag_rows_.row(r).dot(w) * diag_rows_.row(r).transpose();
      const double norm = w.norm();
      if (norm > 1e-10) diag_rows_.row(rows++) = w.transpose() / norm;
    }
    if (rows != d_)
      throw NumericalError("HermitianBasis: diagonal orthogonalization failed");
  }

  int d_;
  RMatrix diag_rows_;  // row r = diagonal of basis element r
  std::vector<std::pair<int, int>> pairs_;
};

inline HermitianBasis standard_hermitian_basis(int dim) {
  return HermitianBasis(dim);
}

inline HSVector vectorize(const HermitianPoint& rho, const HermitianBasis& basis) {
  return basis.vectorize(rho);
}

inline HermitianPoint devectorize(const HSVector& coords, const HermitianBasis& basis) {
  return basis.devectorize(coords);
}

/// G + G† for G with independent centered Gaussian entries of deviation
/// scale/sqrt(2). Deterministic for a fixed seed.
inline HermitianPoint random_hermitian(int dim, double scale, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, scale / std::sqrt(2.0));
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  return HermitianPoint::symmetrized(g + g.adjoint());
}

/// G G† / tr(G G†) for Gaussian G: positive semidefinite with unit trace.
inline HermitianPoint random_density(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    CMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        g(i, j) = Complex(re, im);
      }
    const CMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    if (tr > 1e-300) return HermitianPoint::symmetrized(w / tr);
    // tr == 0 has probability zero; redraw.
  }
}

}  // namespace dlab
