#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "dlab/common.hpp"
#include "dlab/dissipators.hpp"
#include "dlab/hamiltonian.hpp"
#include "dlab/hs_space.hpp"

namespace dlab {

/// Expm propagates with the exact matrix exponential of the superoperator and
/// is only admissible for autonomous generators (pumping None).
enum class StepMethod { RK4Fixed, Expm };

struct IntegratorConfig {
  StepMethod method = StepMethod::RK4Fixed;
  double step = 1e-3;
  double t_start = 0.0;
  double t_end = 1.0;
  int record_every = 1;  // store every k-th step; first and last always kept

  void validate() const {
    if (!(std::isfinite(step) && step > 0))
      throw std::invalid_argument("IntegratorConfig: step must be > 0");
    if (!(std::isfinite(t_start) && std::isfinite(t_end) && t_end > t_start))
      throw std::invalid_argument("IntegratorConfig: need t_end > t_start");
    if (record_every < 1)
      throw std::invalid_argument("IntegratorConfig: record_every must be >= 1");
  }
};

struct ObservableRecord {
  double trace = 0;
  double purity = 0;         // tr rho^2
  double hs_norm = 0;
  double photon_number = 0;  // tr((a†a (x) I) rho)
  double inversion = 0;      // tr((I (x) sigma_3) rho)
  double min_eigenvalue = 0;
};

/// Precomputed readout operators for one truncation.
class ObservableSet {
public:
  explicit ObservableSet(const TruncationConfig& cfg)
      : number_(lift_field(number_operator(cfg).mat)),
        sz_(lift_spin(pauli(3), cfg)) {}

  ObservableRecord measure(const HermitianPoint& rho) const {
    ObservableRecord rec;
    const CMatrix& m = rho.mat();
    rec.trace = m.trace().real();
    rec.purity = hs_inner(rho, rho);
    rec.hs_norm = hs_norm(rho);
    rec.photon_number = trace_product(number_, m);
    rec.inversion = trace_product(sz_, m);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw NumericalError("observables: eigensolver did not converge");
    rec.min_eigenvalue = es.eigenvalues()(0);
    return rec;
  }

private:
  static double trace_product(const CMatrix& a, const CMatrix& b) {
    return a.cwiseProduct(b.transpose()).sum().real();
  }

  CMatrix number_;
  CMatrix sz_;
};

inline ObservableRecord observables(const HermitianPoint& rho,
                                    const TruncationConfig& cfg) {
  return ObservableSet(cfg).measure(rho);
}

struct Trajectory {
  std::vector<double> times;
  std::vector<HermitianPoint> states;
  std::vector<ObservableRecord> observables;
  double step_used = 0;  // step after any stability halving
  int halvings = 0;
};

/// Superoperator matrix of the autonomous generator 𝒜 in the standard
/// Hermitian basis of dimension d^2.
inline SuperOperatorMatrix liouvillian_superoperator(const LiouvillianSpec& spec) {
  if (!spec.pumping.time_independent())
    throw std::invalid_argument(
        "liouvillian_superoperator: generator must be autonomous (pumping none)");
  const Liouvillian liou(spec);
  const HermitianBasis basis(spec.truncation.system_dim());
  return superoperator_matrix(
      [&](const HermitianPoint& r) { return liou.apply(0.0, r); }, basis);
}

/// exp(t M) of the autonomous generator, via scaling-and-squaring.
inline SuperOperatorMatrix exact_propagator(const LiouvillianSpec& spec, double t) {
  SuperOperatorMatrix sop = liouvillian_superoperator(spec);
  sop.mat = RMatrix(t * sop.mat).exp();
  return sop;
}

namespace detail {

struct StepPlan {
  long n_full = 0;
  double remainder = 0;  // final shortened step, 0 if the grid is exact
  long total_steps() const { return n_full + (remainder > 0 ? 1 : 0); }
};

inline StepPlan plan_steps(double t_start, double t_end, double h) {
  const double total = t_end - t_start;
  const double ratio = total / h;
  long n = static_cast<long>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio))
    n = static_cast<long>(std::floor(ratio));
  if (n < 0) n = 0;
  double rem = total - static_cast<double>(n) * h;
  if (std::abs(rem) < 1e-9 * h) rem = 0.0;
  if (rem < 0) {  // llround overshoot by one step
    --n;
    rem = total - static_cast<double>(n) * h;
  }
  return {n, rem};
}

struct StepRejected {};

// One full RK4 pass at fixed h; throws StepRejected when a raw update stops
// being finite, explodes in norm (legitimate transient growth is at most a
// factor ~sqrt(dim), far below the cap), or drifts from Hermiticity.
inline Trajectory rk4_run(const Liouvillian& liou, const HermitianPoint& rho0,
                          const IntegratorConfig& cfg, double h) {
  const StepPlan plan = plan_steps(cfg.t_start, cfg.t_end, h);
  const ObservableSet obs(liou.spec().truncation);
  const double norm_cap = 1e3 * (rho0.mat().norm() + 1.0);

  Trajectory traj;
  traj.step_used = h;
  const auto record = [&](double t, const HermitianPoint& state) {
    traj.times.push_back(t);
    traj.states.push_back(state);
    traj.observables.push_back(obs.measure(state));
  };

  HermitianPoint state = rho0;
  record(cfg.t_start, state);

  const long total_steps = plan.total_steps();
  for (long k = 1; k <= total_steps; ++k) {
    const double t = cfg.t_start + static_cast<double>(k - 1) * h;
    const double hk = (k <= plan.n_full) ? h : plan.remainder;
    const CMatrix& y = state.mat();
    const CMatrix k1 = liou.apply_raw(t, y);
    const CMatrix k2 = liou.apply_raw(t + 0.5 * hk, y + (0.5 * hk) * k1);
    const CMatrix k3 = liou.apply_raw(t + 0.5 * hk, y + (0.5 * hk) * k2);
    const CMatrix k4 = liou.apply_raw(t + hk, y + hk * k3);
    const CMatrix next = y + (hk / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.allFinite() || next.norm() > norm_cap ||
        relative_hermiticity_residual(next) > 1e-6)
      throw StepRejected{};
    state = HermitianPoint::symmetrized(next);
    const double t_next = (k == total_steps && plan.remainder > 0)
                              ? cfg.t_end
                              : cfg.t_start + static_cast<double>(k) * h;
    if (k % cfg.record_every == 0 || k == total_steps) record(t_next, state);
  }
  return traj;
}

inline Trajectory expm_run(const LiouvillianSpec& spec, const HermitianPoint& rho0,
                           const IntegratorConfig& cfg) {
  const SuperOperatorMatrix sop = liouvillian_superoperator(spec);
  const ObservableSet obs(spec.truncation);
  const double stride = cfg.step * cfg.record_every;
  const StepPlan plan = plan_steps(cfg.t_start, cfg.t_end, stride);
  const RMatrix prop = RMatrix(stride * sop.mat).exp();

  Trajectory traj;
  traj.step_used = cfg.step;
  const auto record = [&](double t, const HermitianPoint& state) {
    traj.times.push_back(t);
    traj.states.push_back(state);
    traj.observables.push_back(obs.measure(state));
  };

  record(cfg.t_start, rho0);
  HSVector v = sop.basis.vectorize(rho0);
  for (long k = 1; k <= plan.n_full; ++k) {
    v = prop * v;
    record(cfg.t_start + static_cast<double>(k) * stride, sop.basis.devectorize(v));
  }
  if (plan.remainder > 0) {
    v = RMatrix(plan.remainder * sop.mat).exp() * v;
    record(cfg.t_end, sop.basis.devectorize(v));
  }
  return traj;
}

}  // namespace detail

/// Integrates ρ̇ = 𝒜(t)ρ. RK4 re-symmetrizes after every step and never
/// renormalizes the trace (drift is a diagnostic, not hidden). A step whose
/// raw Hermiticity residual exceeds 1e-6 signals instability: the run
/// restarts with h halved, up to 12 times, and the trajectory reports how
/// often that happened.
inline Trajectory evolve(const LiouvillianSpec& spec, const HermitianPoint& rho0,
                         const IntegratorConfig& cfg) {
  cfg.validate();
  if (rho0.dim() != spec.truncation.system_dim())
    throw std::invalid_argument("evolve: initial state has wrong dimension");

  if (cfg.method == StepMethod::Expm) {
    if (!spec.pumping.time_independent())
      throw std::invalid_argument("evolve: Expm requires pumping none");
    spec.params.validate();
    return detail::expm_run(spec, rho0, cfg);
  }

  const Liouvillian liou(spec);
  constexpr int kMaxHalvings = 12;
  for (int halvings = 0; halvings <= kMaxHalvings; ++halvings) {
    const double h = cfg.step / static_cast<double>(1L << halvings);
    try {
      Trajectory traj = detail::rk4_run(liou, rho0, cfg, h);
      traj.halvings = halvings;
      return traj;
    } catch (const detail::StepRejected&) {
      continue;
    }
  }
  throw NumericalError("evolve: instability persisted after repeated step halving");
}

}  // namespace dlab
