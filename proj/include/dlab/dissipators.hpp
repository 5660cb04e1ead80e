#pragma once

#include <algorithm>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dlab/common.hpp"
#include "dlab/fock_algebra.hpp"
#include "dlab/hs_space.hpp"
#include "dlab/parallel.hpp"

namespace dlab {

/// FullD is the balanced dissipator: the DeltaOnly term plus its mirror with
/// a and a† interchanged.
enum class DissipatorKind { FullD, DeltaOnly };

/// Lifted ladder operators on X = F (x) C^2 together with the cached
/// products a†a and aa† that appear in both dissipators. All composite
/// operators are products of the truncated factors.
struct LadderOps {
  CMatrix a;     // a  (x) I_2
  CMatrix adag;  // a† (x) I_2
  CMatrix ada;   // a†a (x) I_2
  CMatrix aad;   // aa† (x) I_2

  static LadderOps make(const TruncationConfig& cfg) {
    LadderOps ops;
    ops.a = lift_field(make_annihilation(cfg).mat);
    ops.adag = lift_field(make_creation(cfg).mat);
    ops.ada = ops.adag * ops.a;
    ops.aad = ops.a * ops.adag;
    return ops;
  }

  int dim() const { return static_cast<int>(a.rows()); }
};

/// Dissipator action before the defensive symmetrization; used by the
/// Hermiticity-preservation diagnostics.
inline CMatrix apply_dissipator_raw(DissipatorKind kind, const CMatrix& rho,
                                    const LadderOps& ops) {
  if (rho.rows() != ops.a.rows() || rho.cols() != ops.a.cols())
    throw std::invalid_argument("apply_dissipator: dimension mismatch");
  CMatrix out = ops.a * rho * ops.adag - 0.5 * (ops.ada * rho + rho * ops.ada);
  if (kind == DissipatorKind::FullD)
    out += ops.adag * rho * ops.a - 0.5 * (ops.aad * rho + rho * ops.aad);
  return out;
}

/// D rho = a rho a† - (1/2){a†a, rho} + a† rho a - (1/2){aa†, rho}
/// Delta rho = a rho a† - (1/2){a†a, rho}
/// evaluated with the truncated operators; the output is symmetrized.
inline HermitianPoint apply_dissipator(DissipatorKind kind, const HermitianPoint& rho,
                                       const LadderOps& ops) {
  return HermitianPoint::symmetrized(apply_dissipator_raw(kind, rho.mat(), ops));
}

/// HS adjoint: satisfies <sigma, L rho> = <L† sigma, rho>. D is its own
/// adjoint; for Delta the cyclic-trace manipulation gives
/// Delta† sigma = a† sigma a - (1/2){a†a, sigma}.
inline HermitianPoint hs_adjoint(DissipatorKind kind, const HermitianPoint& sigma,
                                 const LadderOps& ops) {
  if (kind == DissipatorKind::FullD)
    return apply_dissipator(DissipatorKind::FullD, sigma, ops);
  const CMatrix& s = sigma.mat();
  if (s.rows() != ops.a.rows())
    throw std::invalid_argument("hs_adjoint: dimension mismatch");
  CMatrix out = ops.adag * s * ops.a - 0.5 * (ops.ada * s + s * ops.ada);
  return HermitianPoint::symmetrized(out);
}

/// <rho, L rho> = tr(rho L rho).
inline double quadratic_form(DissipatorKind kind, const HermitianPoint& rho,
                             const LadderOps& ops) {
  return hs_inner(rho, apply_dissipator(kind, rho, ops));
}

/// The same quadratic form through the spectral resolution of rho:
/// with rho = sum_i rho_i e_i⊗e_i and a_ik = <e_i, a e_k>,
///   FullD:     -sum_ik |a_ik|^2 (rho_i - rho_k)^2
///   DeltaOnly:  sum_ik |a_ik|^2 (rho_i rho_k - rho_k^2).
/// Eigenvalues are taken in ascending order; the sums are invariant under
/// rotations inside degenerate eigenvalue blocks.
inline double eigenbasis_form(DissipatorKind kind, const HermitianPoint& rho,
                              const LadderOps& ops) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.mat());
  if (es.info() != Eigen::Success)
    throw NumericalError("eigenbasis_form: eigensolver did not converge");
  const RVector lam = es.eigenvalues();
  const CMatrix a_eig = es.eigenvectors().adjoint() * ops.a * es.eigenvectors();
  const int d = static_cast<int>(lam.size());
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const double w = std::norm(a_eig(i, k));
      if (kind == DissipatorKind::FullD) {
        const double diff = lam(i) - lam(k);
        total -= w * diff * diff;
      } else {
        total += w * (lam(i) * lam(k) - lam(k) * lam(k));
      }
    }
  }
  return total;
}

/// Real d^2 x d^2 matrix of a superoperator in an orthonormal Hermitian
/// basis: entry (alpha, beta) = <B_alpha, L(B_beta)>.
struct SuperOperatorMatrix {
  RMatrix mat;
  HermitianBasis basis;
};

/// Column beta is vectorize(L(B_beta)); columns are filled in parallel.
template <class Op>
SuperOperatorMatrix superoperator_matrix(Op&& op, const HermitianBasis& basis) {
  const int n = basis.size();
  RMatrix m(n, n);
  parallel_for(n, [&](int beta) {
    m.col(beta) = basis.vectorize(op(basis.element(beta)));
  });
  return {std::move(m), basis};
}

inline SuperOperatorMatrix superoperator_matrix(DissipatorKind kind,
                                                const HermitianBasis& basis,
                                                const LadderOps& ops) {
  return superoperator_matrix(
      [&](const HermitianPoint& r) { return apply_dissipator(kind, r, ops); },
      basis);
}

struct SpectrumResult {
  CVector eigenvalues;  // sorted by (Re, Im) ascending
  double spectral_gap;  // |Re| of the nonzero eigenvalue closest to zero
};

namespace detail {

inline void sort_eigenvalues(CVector& eig) {
  std::vector<Complex> v(eig.data(), eig.data() + eig.size());
  std::sort(v.begin(), v.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  for (Eigen::Index i = 0; i < eig.size(); ++i) eig(i) = v[static_cast<std::size_t>(i)];
}

inline double spectral_gap_of(const CVector& eig, double zero_tol) {
  double max_mag = 0.0;
  for (Eigen::Index i = 0; i < eig.size(); ++i)
    max_mag = std::max(max_mag, std::abs(eig(i)));
  double gap = 0.0;
  bool found = false;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    const double mag = std::abs(eig(i));
    if (mag <= zero_tol * max_mag) continue;
    const double dist = std::abs(eig(i).real());
    if (!found || dist < gap) {
      gap = dist;
      found = true;
    }
  }
  return found ? gap : 0.0;
}

}  // namespace detail

/// Eigenvalues of the superoperator matrix. The FullD matrix is checked to be
/// symmetric (relative transpose residual 1e-10) and then diagonalized with
/// the self-adjoint solver; DeltaOnly goes through the general solver and may
/// produce complex pairs.
inline SpectrumResult dissipator_spectrum(DissipatorKind kind,
                                          const SuperOperatorMatrix& sop,
                                          double zero_tol = 1e-8) {
  SpectrumResult result;
  if (kind == DissipatorKind::FullD) {
    const double scale = max_abs(sop.mat);
    const double residual = max_abs(RMatrix(sop.mat - sop.mat.transpose()));
    if (scale > 0.0 && residual > 1e-10 * scale)
      throw NumericalError("dissipator_spectrum: FullD matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (sop.mat + sop.mat.transpose()),
                                              Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw NumericalError("dissipator_spectrum: eigensolver did not converge");
    result.eigenvalues = es.eigenvalues().cast<Complex>();
  } else {
    Eigen::EigenSolver<RMatrix> es(sop.mat, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
      throw NumericalError("dissipator_spectrum: eigensolver did not converge");
    result.eigenvalues = es.eigenvalues();
  }
  detail::sort_eigenvalues(result.eigenvalues);
  result.spectral_gap = detail::spectral_gap_of(result.eigenvalues, zero_tol);
  return result;
}

inline SpectrumResult dissipator_spectrum(DissipatorKind kind,
                                          const TruncationConfig& cfg,
                                          double zero_tol = 1e-8) {
  const HermitianBasis basis(cfg.system_dim());
  const LadderOps ops = LadderOps::make(cfg);
  return dissipator_spectrum(kind, superoperator_matrix(kind, basis, ops), zero_tol);
}

/// Orthonormal basis of the numerical null space: right singular vectors with
/// sigma <= tol * sigma_max, returned as columns. tol must lie in (0, 1).
inline RMatrix kernel_basis(const SuperOperatorMatrix& sop, double tol = 1e-8) {
  if (!(tol > 0.0 && tol < 1.0))
    throw std::invalid_argument("kernel_basis: tol must lie in (0,1)");
  Eigen::BDCSVD<RMatrix> svd(sop.mat, Eigen::ComputeFullV);
  const RVector sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  int null_dim = 0;
  for (Eigen::Index i = sigma.size(); i-- > 0;) {
    if (sigma(i) <= tol * sigma_max)
      ++null_dim;
    else
      break;
  }
  return svd.matrixV().rightCols(null_dim);
}

inline RMatrix kernel_basis(DissipatorKind kind, const TruncationConfig& cfg,
                            double tol = 1e-8) {
  const HermitianBasis basis(cfg.system_dim());
  const LadderOps ops = LadderOps::make(cfg);
  return kernel_basis(superoperator_matrix(kind, basis, ops), tol);
}

}  // namespace dlab
