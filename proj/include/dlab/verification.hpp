#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dlab/common.hpp"
#include "dlab/dissipators.hpp"
#include "dlab/fock_algebra.hpp"
#include "dlab/hamiltonian.hpp"
#include "dlab/hs_space.hpp"
#include "dlab/io.hpp"
#include "dlab/parallel.hpp"

namespace dlab {

/// Outcome of one property check at one truncation size. `witnesses` holds
/// serialized inputs that achieve the extreme violation, so a reader can
/// re-run the check on exactly those inputs; `details` carries auxiliary
/// measurements (residuals, kernel dimensions, ...).
struct PropertyReport {
  std::string property_id;
  int n_levels = 0;
  int n_samples = 0;
  double max_violation = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  Json witnesses = Json::array();
  Json details = Json::object();
};

inline void to_json(Json& j, const PropertyReport& r) {
  j = Json{{"property_id", r.property_id}, {"truncation", r.n_levels},
           {"n", r.n_samples},             {"max_violation", r.max_violation},
           {"threshold", r.threshold},     {"verdict", r.pass ? "pass" : "fail"},
           {"seed", r.seed},               {"witnesses", r.witnesses},
           {"details", r.details}};
}

inline void from_json(const Json& j, PropertyReport& r) {
  j.at("property_id").get_to(r.property_id);
  j.at("truncation").get_to(r.n_levels);
  j.at("n").get_to(r.n_samples);
  j.at("max_violation").get_to(r.max_violation);
  j.at("threshold").get_to(r.threshold);
  r.pass = j.at("verdict").get<std::string>() == "pass";
  j.at("seed").get_to(r.seed);
  r.witnesses = j.value("witnesses", Json::array());
  r.details = j.value("details", Json::object());
}

/// Restriction of states to Fock levels 0..max_level; every level above is
/// zero padding. At least one padded level below the truncation edge must
/// remain, otherwise truncation artifacts contaminate the restricted map.
struct PaddedSupportSpec {
  int max_level = 0;

  void validate(const TruncationConfig& cfg) const {
    if (max_level < 0)
      throw std::invalid_argument("PaddedSupportSpec: max_level must be >= 0");
    if (max_level > cfg.n_levels() - 2)
      throw std::invalid_argument(
          "PaddedSupportSpec: max_level must be <= n_levels - 2 so the top "
          "Fock level stays empty");
  }

  int padded_system_dim() const { return 2 * (max_level + 1); }
};

namespace detail {

/// Samples cycle through small/unit/large scales so that violations that
/// only show up at extreme norms are not missed.
inline double sample_scale(int index) {
  constexpr double kScales[3] = {0.1, 1.0, 10.0};
  return kScales[index % 3];
}

inline HermitianPoint sample_hermitian(int dim, int index, std::uint64_t seed) {
  return random_hermitian(dim, sample_scale(index),
                          mix_seed(seed, static_cast<std::uint64_t>(index)));
}

inline int argmax(const std::vector<double>& v) {
  return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

/// |n, s_+><n, s_+| as a system operator.
inline CMatrix fock_projector(const TruncationConfig& cfg, int level) {
  CMatrix e = CMatrix::Zero(cfg.system_dim(), cfg.system_dim());
  e(spin_plus_index(level), spin_plus_index(level)) = 1.0;
  return e;
}

}  // namespace detail

/// <rho1, D rho2> = <D rho1, rho2> on random pairs at mixed scales, plus the
/// transpose residual of the full matrix representation.
inline PropertyReport check_symmetry(const TruncationConfig& cfg, int n_samples,
                                     std::uint64_t seed) {
  PropertyReport report;
  report.property_id = "full_dissipator_hs_symmetry";
  report.n_levels = cfg.n_levels();
  report.n_samples = n_samples;
  report.threshold = 1e-10;
  report.seed = seed;

  const LadderOps ops = LadderOps::make(cfg);
  const int d = cfg.system_dim();
  std::vector<double> viol(static_cast<std::size_t>(n_samples), 0.0);
  parallel_for(n_samples, [&](int i) {
    const HermitianPoint rho1 = detail::sample_hermitian(d, 2 * i, seed);
    const HermitianPoint rho2 = detail::sample_hermitian(d, 2 * i + 1, seed);
    const double lhs = hs_inner(rho1, apply_dissipator(DissipatorKind::FullD, rho2, ops));
    const double rhs = hs_inner(apply_dissipator(DissipatorKind::FullD, rho1, ops), rho2);
    viol[static_cast<std::size_t>(i)] =
        std::abs(lhs - rhs) / std::max(hs_norm(rho1) * hs_norm(rho2), 1e-300);
  });
  const int worst = detail::argmax(viol);

  const HermitianBasis basis = standard_hermitian_basis(d);
  const SuperOperatorMatrix sop =
      superoperator_matrix(DissipatorKind::FullD, basis, ops);
  const double transpose_residual =
      max_abs(RMatrix(sop.mat - sop.mat.transpose())) / std::max(max_abs(sop.mat), 1e-300);

  report.max_violation = std::max(viol[static_cast<std::size_t>(worst)], transpose_residual);
  report.pass = report.max_violation <= report.threshold;
  report.details["worst_pair_violation"] = viol[static_cast<std::size_t>(worst)];
  report.details["superop_transpose_residual"] = transpose_residual;
  report.witnesses.push_back(
      Json{{"sample_index", worst},
           {"violation", viol[static_cast<std::size_t>(worst)]},
           {"rho1", matrix_to_json(detail::sample_hermitian(d, 2 * worst, seed).mat())},
           {"rho2", matrix_to_json(detail::sample_hermitian(d, 2 * worst + 1, seed).mat())}});
  return report;
}

/// <rho, D rho> <= 0 on random Hermitian inputs and on every two-level
/// diagonal state w1 E_ii + w2 E_jj at a few weight ratios. The recorded
/// violation is the *signed* maximum of <rho, D rho>/|rho|^2, so a healthy
/// run reports a negative number.
inline PropertyReport check_nonpositivity(const TruncationConfig& cfg,
                                          int n_samples, std::uint64_t seed) {
  PropertyReport report;
  report.property_id = "full_dissipator_nonpositivity";
  report.n_levels = cfg.n_levels();
  report.threshold = 1e-12;
  report.seed = seed;

  const LadderOps ops = LadderOps::make(cfg);
  const int d = cfg.system_dim();
  std::vector<double> ratio(static_cast<std::size_t>(n_samples), 0.0);
  parallel_for(n_samples, [&](int i) {
    const HermitianPoint rho = detail::sample_hermitian(d, i, seed);
    const double norm2 = std::max(hs_norm(rho) * hs_norm(rho), 1e-300);
    ratio[static_cast<std::size_t>(i)] =
        quadratic_form(DissipatorKind::FullD, rho, ops) / norm2;
  });
  int worst_random = detail::argmax(ratio);
  double worst_value = ratio[static_cast<std::size_t>(worst_random)];

  // Structured family: all two-level diagonal states. Diagonal states make
  // the closed-form value easy to audit by hand.
  constexpr double kWeights[3][2] = {{1.0, 1.0}, {2.0, 1.0}, {1.0, 3.0}};
  int n_structured = 0;
  double worst_structured = -std::numeric_limits<double>::infinity();
  int worst_i = -1, worst_j = -1, worst_w = -1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int w = 0; w < 3; ++w) {
        CMatrix m = CMatrix::Zero(d, d);
        m(i, i) = kWeights[w][0];
        m(j, j) = kWeights[w][1];
        const HermitianPoint rho(m);
        const double norm2 = kWeights[w][0] * kWeights[w][0] +
                             kWeights[w][1] * kWeights[w][1];
        const double r = quadratic_form(DissipatorKind::FullD, rho, ops) / norm2;
        ++n_structured;
        if (r > worst_structured) {
          worst_structured = r;
          worst_i = i;
          worst_j = j;
          worst_w = w;
        }
      }
    }
  }

  report.n_samples = n_samples + n_structured;
  report.max_violation = std::max(worst_value, worst_structured);
  report.pass = report.max_violation <= report.threshold;
  report.details["worst_random_ratio"] = worst_value;
  report.details["worst_structured_ratio"] = worst_structured;
  report.details["n_random"] = n_samples;
  report.details["n_structured"] = n_structured;
  report.witnesses.push_back(
      Json{{"kind", "random"},
           {"sample_index", worst_random},
           {"violation", worst_value},
           {"rho", matrix_to_json(detail::sample_hermitian(d, worst_random, seed).mat())}});
  {
    CMatrix m = CMatrix::Zero(d, d);
    m(worst_i, worst_i) = kWeights[worst_w][0];
    m(worst_j, worst_j) = kWeights[worst_w][1];
    report.witnesses.push_back(Json{{"kind", "two_level_diagonal"},
                                    {"violation", worst_structured},
                                    {"rho", matrix_to_json(m)}});
  }
  return report;
}

/// The quadratic form computed directly must match the closed form obtained
/// in the eigenbasis of rho:
///   FullD:     -sum_ik |a_ik|^2 (rho_i - rho_k)^2
///   DeltaOnly:  sum_ik |a_ik|^2 (rho_i rho_k - rho_k^2).
/// Even samples are general Hermitian matrices, odd samples density matrices.
inline PropertyReport check_quadratic_identity(const TruncationConfig& cfg,
                                               DissipatorKind kind, int n_samples,
                                               std::uint64_t seed) {
  PropertyReport report;
  report.property_id = kind == DissipatorKind::FullD
                           ? "quadratic_form_identity_full"
                           : "quadratic_form_identity_delta";
  report.n_levels = cfg.n_levels();
  report.n_samples = n_samples;
  report.threshold = 1e-8;
  report.seed = seed;

  const LadderOps ops = LadderOps::make(cfg);
  const int d = cfg.system_dim();
  const auto sample = [&](int i) {
    return i % 2 == 0
               ? detail::sample_hermitian(d, i, seed)
               : random_density(d, mix_seed(seed, 0x10000u + static_cast<std::uint64_t>(i)));
  };
  std::vector<double> viol(static_cast<std::size_t>(n_samples), 0.0);
  std::vector<double> direct(static_cast<std::size_t>(n_samples), 0.0);
  std::vector<double> spectral(static_cast<std::size_t>(n_samples), 0.0);
  parallel_for(n_samples, [&](int i) {
    const HermitianPoint rho = sample(i);
    const double qf = quadratic_form(kind, rho, ops);
    const double ef = eigenbasis_form(kind, rho, ops);
    direct[static_cast<std::size_t>(i)] = qf;
    spectral[static_cast<std::size_t>(i)] = ef;
    viol[static_cast<std::size_t>(i)] =
        std::abs(qf - ef) / std::max({std::abs(qf), std::abs(ef), 1e-4});
  });
  const int worst = detail::argmax(viol);

  report.max_violation = viol[static_cast<std::size_t>(worst)];
  report.pass = report.max_violation <= report.threshold;
  report.details["worst_direct_value"] = direct[static_cast<std::size_t>(worst)];
  report.details["worst_spectral_value"] = spectral[static_cast<std::size_t>(worst)];
  report.witnesses.push_back(Json{{"sample_index", worst},
                                  {"violation", viol[static_cast<std::size_t>(worst)]},
                                  {"rho", matrix_to_json(sample(worst).mat())}});
  return report;
}

/// Fixed, hand-checkable witnesses separating Delta from D:
///  * rho1 = |0,s+><0,s+|, rho2 = |1,s+><1,s+|:
///      <rho1, Delta rho2> = 1 but <Delta rho1, rho2> = 0 (Delta asymmetric),
///      while both orderings give 1 for D.
///  * w = 2 rho1 + rho2: <w, Delta w> = +1 > 0 (Delta indefinite), while
///      <w, D w> = -3 for n_levels >= 3 (-1 at the minimal truncation).
inline PropertyReport check_sign_witnesses(const TruncationConfig& cfg) {
  PropertyReport report;
  report.property_id = "delta_asymmetry_and_indefiniteness_witness";
  report.n_levels = cfg.n_levels();
  report.n_samples = 0;
  report.threshold = 1e-12;
  report.seed = 0;

  const LadderOps ops = LadderOps::make(cfg);
  const HermitianPoint rho1(detail::fock_projector(cfg, 0));
  const HermitianPoint rho2(detail::fock_projector(cfg, 1));
  const HermitianPoint w = HermitianPoint::symmetrized(2.0 * rho1.mat() + rho2.mat());

  const double delta_lhs = hs_inner(rho1, apply_dissipator(DissipatorKind::DeltaOnly, rho2, ops));
  const double delta_rhs = hs_inner(apply_dissipator(DissipatorKind::DeltaOnly, rho1, ops), rho2);
  const double full_lhs = hs_inner(rho1, apply_dissipator(DissipatorKind::FullD, rho2, ops));
  const double full_rhs = hs_inner(apply_dissipator(DissipatorKind::FullD, rho1, ops), rho2);
  const double qf_delta = quadratic_form(DissipatorKind::DeltaOnly, w, ops);
  const double qf_full = quadratic_form(DissipatorKind::FullD, w, ops);
  const double qf_full_expected = cfg.n_levels() >= 3 ? -3.0 : -1.0;

  const double deviations[6] = {
      std::abs(delta_lhs - 1.0), std::abs(delta_rhs - 0.0),
      std::abs(full_lhs - 1.0),  std::abs(full_rhs - 1.0),
      std::abs(qf_delta - 1.0),  std::abs(qf_full - qf_full_expected)};
  report.max_violation = *std::max_element(std::begin(deviations), std::end(deviations));
  report.pass = report.max_violation <= report.threshold && qf_delta > 0.0;

  report.details["delta_pair_lhs"] = delta_lhs;
  report.details["delta_pair_rhs"] = delta_rhs;
  report.details["full_pair_lhs"] = full_lhs;
  report.details["full_pair_rhs"] = full_rhs;
  report.details["delta_quadratic_form"] = qf_delta;
  report.details["full_quadratic_form"] = qf_full;
  report.details["full_quadratic_form_expected"] = qf_full_expected;
  report.witnesses.push_back(Json{{"rho1", matrix_to_json(rho1.mat())},
                                  {"rho2", matrix_to_json(rho2.mat())},
                                  {"expected", Json{{"delta_lhs", 1.0},
                                                    {"delta_rhs", 0.0},
                                                    {"full_lhs", 1.0},
                                                    {"full_rhs", 1.0}}}});
  report.witnesses.push_back(Json{{"rho", matrix_to_json(w.mat())},
                                  {"expected", Json{{"delta_quadratic_form", 1.0},
                                                    {"full_quadratic_form", qf_full_expected}}}});
  return report;
}

/// tr(D rho) = tr(Delta rho) = tr(-i[H(t), rho]) = 0 on random inputs and
/// random times, for a representative driven configuration.
inline PropertyReport check_trace_annihilation(const TruncationConfig& cfg,
                                               int n_samples, std::uint64_t seed) {
  PropertyReport report;
  report.property_id = "trace_annihilation";
  report.n_levels = cfg.n_levels();
  report.n_samples = n_samples;
  report.threshold = 1e-12;
  report.seed = seed;

  LiouvillianSpec spec{PhysicalParams{1.0, 0.9, 0.2, 1.0},
                       PumpingProfile::cavity_drive(0.5, 1.1),
                       DissipatorKind::FullD, cfg};
  const Liouvillian liou(spec);
  const LadderOps& ops = liou.ladder();
  const int d = cfg.system_dim();

  std::vector<double> viol(static_cast<std::size_t>(n_samples), 0.0);
  std::vector<double> times(static_cast<std::size_t>(n_samples), 0.0);
  parallel_for(n_samples, [&](int i) {
    const HermitianPoint rho = detail::sample_hermitian(d, i, seed);
    const double rho_norm = std::max(hs_norm(rho), 1e-300);
    std::mt19937_64 rng(mix_seed(seed, 0x20000u + static_cast<std::uint64_t>(i)));
    const double t = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
    times[static_cast<std::size_t>(i)] = t;

    const double full_tr =
        std::abs(apply_dissipator_raw(DissipatorKind::FullD, rho.mat(), ops).trace()) / rho_norm;
    const double delta_tr =
        std::abs(apply_dissipator_raw(DissipatorKind::DeltaOnly, rho.mat(), ops).trace()) / rho_norm;
    const CMatrix h = liou.hamiltonian(t);
    const CMatrix comm = Complex(0, -1) * (h * rho.mat() - rho.mat() * h);
    const double comm_tr =
        std::abs(comm.trace()) / std::max(h.norm() * rho_norm, 1e-300);
    viol[static_cast<std::size_t>(i)] = std::max({full_tr, delta_tr, comm_tr});
  });
  const int worst = detail::argmax(viol);

  report.max_violation = viol[static_cast<std::size_t>(worst)];
  report.pass = report.max_violation <= report.threshold;
  report.details["hamiltonian"] = Json{{"omega_c", 1.0},       {"omega_a", 0.9},
                                       {"p", 0.2},             {"gamma", 1.0},
                                       {"pumping", "cavity"},  {"drive_amp", 0.5},
                                       {"drive_freq", 1.1}};
  report.witnesses.push_back(
      Json{{"sample_index", worst},
           {"time", times[static_cast<std::size_t>(worst)]},
           {"violation", viol[static_cast<std::size_t>(worst)]},
           {"rho", matrix_to_json(detail::sample_hermitian(d, worst, seed).mat())}});
  return report;
}

/// d^2 x m embedding whose columns are the vectorized orthonormal Hermitian
/// basis of matrices supported on Fock levels 0..max_level (both spins).
inline RMatrix padded_embedding(const HermitianBasis& basis,
                                const TruncationConfig& cfg,
                                const PaddedSupportSpec& pad) {
  const int d = cfg.system_dim();
  std::vector<int> idx;
  for (int n = 0; n <= pad.max_level; ++n) {
    idx.push_back(spin_plus_index(n));
    idx.push_back(spin_minus_index(n));
  }
  const int dp = static_cast<int>(idx.size());
  RMatrix b(d * d, dp * dp);
  int col = 0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int p = 0; p < dp; ++p) {
    CMatrix e = CMatrix::Zero(d, d);
    e(idx[static_cast<std::size_t>(p)], idx[static_cast<std::size_t>(p)]) = 1.0;
    b.col(col++) = basis.vectorize(HermitianPoint::symmetrized(e));
  }
  for (int p = 0; p < dp; ++p) {
    for (int q = p + 1; q < dp; ++q) {
      const int i = idx[static_cast<std::size_t>(p)];
      const int j = idx[static_cast<std::size_t>(q)];
      CMatrix sym = CMatrix::Zero(d, d);
      sym(i, j) = inv_sqrt2;
      sym(j, i) = inv_sqrt2;
      b.col(col++) = basis.vectorize(HermitianPoint::symmetrized(sym));
      CMatrix anti = CMatrix::Zero(d, d);
      anti(i, j) = Complex(0, inv_sqrt2);
      anti(j, i) = Complex(0, -inv_sqrt2);
      b.col(col++) = basis.vectorize(HermitianPoint::symmetrized(anti));
    }
  }
  return b;
}

/// Singular values of D restricted to the padded-support subspace, smallest
/// last. A strictly positive minimum certifies injectivity on that subspace.
inline RVector restricted_singular_values(const TruncationConfig& cfg,
                                          const PaddedSupportSpec& pad) {
  pad.validate(cfg);
  const HermitianBasis basis = standard_hermitian_basis(cfg.system_dim());
  const SuperOperatorMatrix sop = superoperator_matrix(
      DissipatorKind::FullD, basis, LadderOps::make(cfg));
  Eigen::BDCSVD<RMatrix> svd(RMatrix(sop.mat * padded_embedding(basis, cfg, pad)));
  if (svd.info() != Eigen::Success)
    throw NumericalError("restricted_singular_values: SVD did not converge");
  return svd.singularValues();
}

/// Kernel of the truncated D is exactly the 4-dimensional commutant of the
/// lifted field algebra, span{I, I_F (x) sigma_1..3}; restricted to states
/// padded away from the truncation edge, D is injective (smallest singular
/// value strictly positive). The kernel dimension must be stable across a
/// range of SVD cut-offs.
inline PropertyReport check_kernel_structure(const TruncationConfig& cfg,
                                             const PaddedSupportSpec& pad,
                                             double svd_tol = 1e-8) {
  pad.validate(cfg);
  PropertyReport report;
  report.property_id = "kernel_dimension_and_padded_injectivity";
  report.n_levels = cfg.n_levels();
  report.n_samples = 0;
  report.threshold = 1e-8;
  report.seed = 0;

  const int d = cfg.system_dim();
  const LadderOps ops = LadderOps::make(cfg);
  const HermitianBasis basis = standard_hermitian_basis(d);
  const SuperOperatorMatrix sop =
      superoperator_matrix(DissipatorKind::FullD, basis, ops);

  Eigen::BDCSVD<RMatrix> svd(sop.mat, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success)
    throw NumericalError("check_kernel_structure: SVD did not converge");
  const RVector sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  const auto kernel_dim_at = [&](double tol) {
    int k = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
      if (sigma(i) <= tol * sigma_max) ++k;
    return k;
  };
  const int kdim = kernel_dim_at(svd_tol);
  Json dim_by_tol = Json::object();
  bool dims_stable = true;
  for (double tol : {1e-10, 1e-8, 1e-6}) {
    const int k = kernel_dim_at(tol);
    dim_by_tol[format_g17(tol)] = k;
    dims_stable = dims_stable && k == kdim;
  }
  const RMatrix v_kernel =
      svd.matrixV().rightCols(kdim);

  // The four commutant generators, normalized; all have HS norm sqrt(d).
  double span_max = 0.0;
  Json span_residuals = Json::object();
  const double inv_norm = 1.0 / std::sqrt(static_cast<double>(d));
  const std::pair<const char*, CMatrix> generators[4] = {
      {"identity", CMatrix::Identity(d, d)},
      {"spin_x", lift_spin(pauli(1), cfg)},
      {"spin_y", lift_spin(pauli(2), cfg)},
      {"spin_z", lift_spin(pauli(3), cfg)}};
  for (const auto& [name, g] : generators) {
    const HSVector v = basis.vectorize(HermitianPoint::symmetrized(inv_norm * g));
    const double r = (v - v_kernel * (v_kernel.transpose() * v)).norm();
    span_residuals[name] = r;
    span_max = std::max(span_max, r);
  }

  const RMatrix restricted = sop.mat * padded_embedding(basis, cfg, pad);
  Eigen::BDCSVD<RMatrix> restricted_svd(restricted);
  if (restricted_svd.info() != Eigen::Success)
    throw NumericalError("check_kernel_structure: restricted SVD did not converge");
  const double sigma_min = restricted_svd.singularValues().minCoeff();

  report.max_violation = span_max;
  report.pass = kdim == 4 && dims_stable && span_max <= report.threshold &&
                sigma_min > 1e-6 * sigma_max;
  report.details["kernel_dim"] = kdim;
  report.details["kernel_dim_by_tol"] = dim_by_tol;
  report.details["span_residuals"] = span_residuals;
  report.details["restricted_sigma_min"] = sigma_min;
  report.details["sigma_max"] = sigma_max;
  report.details["padded_max_level"] = pad.max_level;
  report.details["padded_dim"] = pad.padded_system_dim();
  return report;
}

/// Runs every check at every requested truncation size with seeds derived
/// deterministically from the master seed, so a rerun with the same seed
/// reproduces the reports bit for bit.
inline std::vector<PropertyReport> run_full_certification(
    const std::vector<int>& n_levels_list, std::uint64_t seed,
    int n_samples = 1000) {
  std::vector<PropertyReport> reports;
  for (std::size_t i = 0; i < n_levels_list.size(); ++i) {
    const TruncationConfig cfg(n_levels_list[i]);
    const auto child = [&](std::uint64_t salt) {
      return mix_seed(seed, 16 * static_cast<std::uint64_t>(i) + salt);
    };
    reports.push_back(check_symmetry(cfg, n_samples, child(1)));
    reports.push_back(check_nonpositivity(cfg, n_samples, child(2)));
    reports.push_back(
        check_quadratic_identity(cfg, DissipatorKind::FullD, n_samples / 2, child(3)));
    reports.push_back(
        check_quadratic_identity(cfg, DissipatorKind::DeltaOnly, n_samples / 2, child(4)));
    reports.push_back(check_sign_witnesses(cfg));
    reports.push_back(check_trace_annihilation(cfg, n_samples, child(5)));
    reports.push_back(
        check_kernel_structure(cfg, PaddedSupportSpec{cfg.n_levels() - 2}));
  }
  return reports;
}

inline bool all_pass(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const PropertyReport& r) { return r.pass; });
}

/// Bundles a certification run into the on-disk report document.
inline Json certification_to_json(const std::vector<PropertyReport>& reports,
                                  std::uint64_t seed) {
  Json j;
  j["schema"] = "dissipator-lab/verify/v1";
  j["seed"] = seed;
  j["all_pass"] = all_pass(reports);
  j["reports"] = reports;
  return j;
}

}  // namespace dlab
