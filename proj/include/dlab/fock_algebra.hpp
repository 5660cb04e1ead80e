#pragma once

#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "dlab/common.hpp"

namespace dlab {

/// Number of Fock levels |0>..|N-1> retained in the truncated field space F.
/// The coupled system F (x) C^2 has dimension d = 2N; that value is always
/// derived here, never stored separately.
class TruncationConfig {
public:
  explicit TruncationConfig(int n_levels) : n_levels_(n_levels) {
    if (n_levels_ < 2)
      throw std::invalid_argument("TruncationConfig: n_levels must be >= 2");
  }

  int n_levels() const { return n_levels_; }
  int field_dim() const { return n_levels_; }
  int system_dim() const { return 2 * n_levels_; }

private:
  int n_levels_;
};

enum class FieldOpLabel { Annihilation, Creation, Number, Identity, Custom };

/// Operator on the truncated field space (N x N).
struct FieldOperator {
  CMatrix mat;
  FieldOpLabel label = FieldOpLabel::Custom;
};

/// Operator on the spin factor C^2.
using SpinMatrix = Eigen::Matrix2cd;

/// Operator on the coupled space, d = 2N. Basis ordering is n-major: the
/// vector |n, s> sits at index 2n + s with s = 0 for s_+ and s = 1 for s_-,
/// so the 2x2 spin blocks of a matrix are contiguous.
using SystemOperator = CMatrix;

inline int spin_plus_index(int n) { return 2 * n; }
inline int spin_minus_index(int n) { return 2 * n + 1; }

/// a|n> = sqrt(n)|n-1>, truncated to N levels.
inline FieldOperator make_annihilation(const TruncationConfig& cfg) {
  const int n = cfg.n_levels();
  CMatrix a = CMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return {std::move(a), FieldOpLabel::Annihilation};
}

/// Conjugate transpose of make_annihilation. Under truncation the top level
/// is annihilated: a†|N-1> = 0, unlike the untruncated ladder.
inline FieldOperator make_creation(const TruncationConfig& cfg) {
  return {make_annihilation(cfg).mat.adjoint(), FieldOpLabel::Creation};
}

inline FieldOperator make_field_identity(const TruncationConfig& cfg) {
  return {CMatrix::Identity(cfg.n_levels(), cfg.n_levels()),
          FieldOpLabel::Identity};
}

/// a†a as a product of the truncated factors; equals diag(0, 1, ..., N-1).
inline FieldOperator number_operator(const TruncationConfig& cfg) {
  const FieldOperator a = make_annihilation(cfg);
  return {a.mat.adjoint() * a.mat, FieldOpLabel::Number};
}

/// Pauli matrix sigma_k, k in {1,2,3}; sigma_3 is diagonal (+1, -1).
inline SpinMatrix pauli(int k) {
  SpinMatrix s;
  switch (k) {
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 3:
      s << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

inline SpinMatrix spin_identity() { return SpinMatrix::Identity(); }

/// Kronecker product respecting the n-major layout:
/// tensor(F, S)(2m+i, 2n+j) = F(m,n) S(i,j).
inline SystemOperator tensor(const CMatrix& field, const CMatrix& spin) {
  if (spin.rows() != 2 || spin.cols() != 2)
    throw std::invalid_argument("tensor: spin factor must be 2x2");
  return Eigen::kroneckerProduct(field, spin);
}

inline SystemOperator tensor(const FieldOperator& field, const SpinMatrix& spin) {
  return tensor(field.mat, CMatrix(spin));
}

/// F (x) I_2, acting on the field factor only.
inline SystemOperator lift_field(const CMatrix& field) {
  return Eigen::kroneckerProduct(field, CMatrix(CMatrix::Identity(2, 2)));
}

/// I_N (x) S, acting on the spin factor only.
inline SystemOperator lift_spin(const SpinMatrix& spin, const TruncationConfig& cfg) {
  const int n = cfg.n_levels();
  return Eigen::kroneckerProduct(CMatrix(CMatrix::Identity(n, n)), CMatrix(spin));
}

}  // namespace dlab
