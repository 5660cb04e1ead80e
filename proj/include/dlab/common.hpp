#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Thrown when an eigensolver/SVD fails to converge or an integration
/// becomes unstable beyond recovery. CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Default hybrid tolerance: |x - y| <= atol + rtol * max(|x|, |y|).
constexpr double kDefaultAtol = 1e-12;
constexpr double kDefaultRtol = 1e-10;

inline bool approx_equal(double x, double y, double atol = kDefaultAtol,
                         double rtol = kDefaultRtol) {
  return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
}

/// Largest entry magnitude; 0 for an empty matrix.
inline double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const RMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Max-norm of M - M†.
inline double hermiticity_residual(const CMatrix& m) {
  return max_abs(CMatrix(m - m.adjoint()));
}

/// Residual relative to the largest entry of M (0 for the zero matrix).
inline double relative_hermiticity_residual(const CMatrix& m) {
  const double scale = max_abs(m);
  if (scale == 0.0) return 0.0;
  return hermiticity_residual(m) / scale;
}

/// splitmix64 finalizer: derives well-separated child seeds from a master
/// seed and a salt, so independent sample streams never share state.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace dlab
