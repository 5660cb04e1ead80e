#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "dlab/common.hpp"
#include "dlab/dissipators.hpp"
#include "dlab/fock_algebra.hpp"
#include "dlab/hs_space.hpp"

namespace dlab {

/// omega_c: cavity resonance frequency, omega_a: molecular frequency,
/// p: dipole coupling, gamma: dissipation rate. Frequencies and gamma must be
/// finite and nonnegative; zero is accepted so that degenerate cases (pure
/// dissipation, H = 0) remain expressible.
struct PhysicalParams {
  double omega_c = 1.0;
  double omega_a = 1.0;
  double p = 0.0;
  double gamma = 1.0;

  void validate() const {
    const auto finite = [](double x) { return std::isfinite(x); };
    if (!finite(omega_c) || !finite(omega_a) || !finite(p) || !finite(gamma))
      throw std::invalid_argument("PhysicalParams: parameters must be finite");
    if (omega_c < 0 || omega_a < 0)
      throw std::invalid_argument("PhysicalParams: frequencies must be >= 0");
    if (gamma < 0)
      throw std::invalid_argument("PhysicalParams: gamma must be >= 0");
  }
};

enum class PumpingKind { None, CavityDrive, AtomDrive, ScalarOffset, Custom };

/// Pumping term A^e(t) inside V(t). Built-in variants:
///   CavityDrive   E cos(w_d t) (a + a†) (x) I
///   AtomDrive     E cos(w_d t)  I (x) sigma_1
///   ScalarOffset  E cos(w_d t)  Identity   (commutes with everything, so it
///                 never affects the dynamics; provided to demonstrate that)
/// Custom callbacks are re-validated for Hermiticity on every evaluation.
class PumpingProfile {
public:
  using CustomFn = std::function<CMatrix(double)>;

  static PumpingProfile none() { return PumpingProfile(PumpingKind::None, 0, 0, {}); }
  static PumpingProfile cavity_drive(double amplitude, double frequency) {
    return PumpingProfile(PumpingKind::CavityDrive, amplitude, frequency, {});
  }
  static PumpingProfile atom_drive(double amplitude, double frequency) {
    return PumpingProfile(PumpingKind::AtomDrive, amplitude, frequency, {});
  }
  static PumpingProfile scalar_offset(double amplitude, double frequency) {
    return PumpingProfile(PumpingKind::ScalarOffset, amplitude, frequency, {});
  }
  static PumpingProfile custom(CustomFn fn) {
    if (!fn) throw std::invalid_argument("PumpingProfile: empty custom callback");
    return PumpingProfile(PumpingKind::Custom, 0, 0, std::move(fn));
  }

  PumpingKind kind() const { return kind_; }
  bool is_none() const { return kind_ == PumpingKind::None; }
  bool time_independent() const { return kind_ == PumpingKind::None; }
  double amplitude() const { return amplitude_; }
  double frequency() const { return frequency_; }

  CMatrix evaluate(double t, const TruncationConfig& cfg) const {
    const int d = cfg.system_dim();
    switch (kind_) {
      case PumpingKind::None:
        return CMatrix::Zero(d, d);
      case PumpingKind::CavityDrive: {
        const FieldOperator a = make_annihilation(cfg);
        return amplitude_ * std::cos(frequency_ * t) *
               lift_field(CMatrix(a.mat + a.mat.adjoint()));
      }
      case PumpingKind::AtomDrive:
        return amplitude_ * std::cos(frequency_ * t) * lift_spin(pauli(1), cfg);
      case PumpingKind::ScalarOffset:
        return amplitude_ * std::cos(frequency_ * t) * CMatrix::Identity(d, d);
      case PumpingKind::Custom: {
        CMatrix m = custom_(t);
        if (m.rows() != d || m.cols() != d)
          throw std::invalid_argument("PumpingProfile: custom matrix has wrong size");
        if (relative_hermiticity_residual(m) > 1e-12)
          throw std::invalid_argument("PumpingProfile: custom matrix is not Hermitian");
        return m;
      }
    }
    throw std::logic_error("PumpingProfile: unreachable");
  }

private:
  PumpingProfile(PumpingKind kind, double amplitude, double frequency, CustomFn fn)
      : kind_(kind), amplitude_(amplitude), frequency_(frequency),
        custom_(std::move(fn)) {}

  PumpingKind kind_;
  double amplitude_;
  double frequency_;
  CustomFn custom_;
};

/// Full description of the generator 𝒜(t)ρ = -i[H(t), ρ] + γ D ρ.
struct LiouvillianSpec {
  PhysicalParams params;
  PumpingProfile pumping = PumpingProfile::none();
  DissipatorKind dissipator = DissipatorKind::FullD;
  TruncationConfig truncation;
};

/// Caches the lifted operators of a LiouvillianSpec so that repeated
/// evaluations (one per integrator stage) stay cheap.
class Liouvillian {
public:
  explicit Liouvillian(LiouvillianSpec spec)
      : spec_(std::move(spec)), ops_(LadderOps::make(spec_.truncation)) {
    spec_.params.validate();
    const TruncationConfig& cfg = spec_.truncation;
    h_static_ = spec_.params.omega_c * lift_field(number_operator(cfg).mat) +
                0.5 * spec_.params.omega_a * lift_spin(pauli(3), cfg);
    coupling_ = tensor(make_annihilation(cfg).mat + make_creation(cfg).mat,
                       CMatrix(pauli(1)));
  }

  const LiouvillianSpec& spec() const { return spec_; }
  const LadderOps& ladder() const { return ops_; }

  /// H(t) = omega_c a†a (x) I + (1/2) omega_a I (x) sigma_3
  ///        + p [ (a + a†) (x) sigma_1 + A^e(t) ].
  CMatrix hamiltonian(double t) const {
    CMatrix h = h_static_;
    if (spec_.params.p != 0.0) {
      h += spec_.params.p * coupling_;
      if (!spec_.pumping.is_none())
        h += spec_.params.p * spec_.pumping.evaluate(t, spec_.truncation);
    }
    return h;
  }

  /// 𝒜(t)ρ.
  HermitianPoint apply(double t, const HermitianPoint& rho) const {
    return HermitianPoint::symmetrized(apply_raw(t, rho.mat()));
  }

  /// Same, before symmetrization (integrators watch the raw residual).
  CMatrix apply_raw(double t, const CMatrix& rho) const {
    const CMatrix h = hamiltonian(t);
    CMatrix out = Complex(0, -1) * (h * rho - rho * h);
    if (spec_.params.gamma != 0.0)
      out += spec_.params.gamma * apply_dissipator_raw(spec_.dissipator, rho, ops_);
    return out;
  }

private:
  LiouvillianSpec spec_;
  LadderOps ops_;
  CMatrix h_static_;
  CMatrix coupling_;
};

inline CMatrix build_hamiltonian(const LiouvillianSpec& spec, double t) {
  return Liouvillian(spec).hamiltonian(t);
}

/// -i[H, ρ]; Hermitian, traceless, and HS-orthogonal to ρ.
inline HermitianPoint commutator_action(const CMatrix& h, const HermitianPoint& rho) {
  if (h.rows() != h.cols() || h.rows() != rho.dim())
    throw std::invalid_argument("commutator_action: dimension mismatch");
  if (relative_hermiticity_residual(h) > 1e-12)
    throw std::invalid_argument("commutator_action: H is not Hermitian");
  const CMatrix& r = rho.mat();
  return HermitianPoint::symmetrized(Complex(0, -1) * (h * r - r * h));
}

inline HermitianPoint liouvillian_apply(const LiouvillianSpec& spec, double t,
                                        const HermitianPoint& rho) {
  return Liouvillian(spec).apply(t, rho);
}

}  // namespace dlab
