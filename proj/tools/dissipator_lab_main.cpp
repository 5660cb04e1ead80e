// Command-line front end: certify dissipator properties, export spectra,
// integrate the driven master equation, and emit the sign/asymmetry
// witnesses. Exit codes: 0 success / all properties pass, 1 property
// failure, 2 configuration error, 3 numerical failure.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dlab/dlab.hpp"

namespace {

struct VerifyOpts {
  std::vector<int> n_levels{2, 4, 8, 16};
  std::uint64_t seed = 20260814;
  int samples = 1000;
  std::string out = "report.json";
};

struct SpectrumOpts {
  int n_levels = 8;
  std::string dissipator = "full";
  std::string out = "eigs.csv";
  std::string summary = "summary.json";
};

struct EvolveOpts {
  int n_levels = 8;
  double omega_c = 1.0;
  double omega_a = 1.0;
  double p = 0.0;
  double gamma = 1.0;
  std::string pumping = "none";
  double drive_amp = 0.0;
  double drive_freq = 0.0;
  std::string dissipator = "full";
  std::string initial = "vacuum";
  std::string method = "rk4";
  double t_start = 0.0;
  double t_end = 1.0;
  double step = 1e-3;
  int record_every = 1;
  std::string out = "traj.csv";
};

struct WitnessOpts {
  int n_levels = 8;
  std::string out = "witness.json";
};

dlab::DissipatorKind parse_dissipator(const std::string& name) {
  if (name == "full") return dlab::DissipatorKind::FullD;
  if (name == "delta") return dlab::DissipatorKind::DeltaOnly;
  throw std::invalid_argument("unknown dissipator '" + name + "'");
}

dlab::PumpingProfile parse_pumping(const std::string& name, double amp, double freq) {
  if (name == "none") return dlab::PumpingProfile::none();
  if (name == "cavity") return dlab::PumpingProfile::cavity_drive(amp, freq);
  if (name == "atom") return dlab::PumpingProfile::atom_drive(amp, freq);
  if (name == "scalar") return dlab::PumpingProfile::scalar_offset(amp, freq);
  throw std::invalid_argument("unknown pumping profile '" + name + "'");
}

/// vacuum          |0, s_-><0, s_-|   (empty cavity, atom in the lower state)
/// fock:<n>        |n, s_+><n, s_+|   (n photons, atom in the upper state)
/// random:<seed>   random full-rank density matrix
dlab::HermitianPoint parse_initial(const std::string& name,
                                   const dlab::TruncationConfig& cfg) {
  const int d = cfg.system_dim();
  if (name == "vacuum") {
    dlab::CMatrix m = dlab::CMatrix::Zero(d, d);
    m(dlab::spin_minus_index(0), dlab::spin_minus_index(0)) = 1.0;
    return dlab::HermitianPoint(m);
  }
  const auto parse_suffix = [&](const std::string& prefix) -> std::string {
    return name.substr(prefix.size());
  };
  if (name.rfind("fock:", 0) == 0) {
    const std::string digits = parse_suffix("fock:");
    std::size_t used = 0;
    int n = -1;
    try {
      n = std::stoi(digits, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("initial state '" + name + "' is malformed");
    }
    if (used != digits.size() || n < 0 || n >= cfg.n_levels())
      throw std::invalid_argument("fock level in '" + name +
                                  "' must be an integer in [0, n_levels)");
    dlab::CMatrix m = dlab::CMatrix::Zero(d, d);
    m(dlab::spin_plus_index(n), dlab::spin_plus_index(n)) = 1.0;
    return dlab::HermitianPoint(m);
  }
  if (name.rfind("random:", 0) == 0) {
    const std::string digits = parse_suffix("random:");
    std::size_t used = 0;
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(digits, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("initial state '" + name + "' is malformed");
    }
    if (used != digits.size())
      throw std::invalid_argument("initial state '" + name + "' is malformed");
    return dlab::random_density(d, seed);
  }
  throw std::invalid_argument("unknown initial state '" + name +
                              "' (expected vacuum, fock:<n> or random:<seed>)");
}

int run_verify(const VerifyOpts& o) {
  const std::vector<dlab::PropertyReport> reports =
      dlab::run_full_certification(o.n_levels, o.seed, o.samples);
  for (const dlab::PropertyReport& r : reports) {
    std::printf("[%s] N=%-3d %-45s max_violation=% .3e  threshold=%.0e\n",
                r.pass ? "pass" : "FAIL", r.n_levels, r.property_id.c_str(),
                r.max_violation, r.threshold);
  }
  dlab::Json doc = dlab::certification_to_json(reports, o.seed);
  doc["n_levels"] = o.n_levels;
  doc["n_samples"] = o.samples;
  dlab::atomic_write_file(o.out, doc.dump(2) + "\n");
  const std::size_t n_pass = static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(), [](const auto& r) { return r.pass; }));
  std::printf("%zu/%zu properties passed; report written to %s\n", n_pass,
              reports.size(), o.out.c_str());
  return n_pass == reports.size() ? 0 : 1;
}

int run_spectrum(const SpectrumOpts& o) {
  const dlab::TruncationConfig cfg(o.n_levels);
  const dlab::DissipatorKind kind = parse_dissipator(o.dissipator);
  const dlab::SpectrumResult spec = dlab::dissipator_spectrum(kind, cfg);

  std::string csv = "index,real,imag\n";
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
    csv += std::to_string(i);
    csv += ',';
    csv += dlab::format_g17(spec.eigenvalues(i).real());
    csv += ',';
    csv += dlab::format_g17(spec.eigenvalues(i).imag());
    csv += '\n';
  }
  dlab::atomic_write_file(o.out, csv);

  double max_real = spec.eigenvalues.real().maxCoeff();
  double min_real = spec.eigenvalues.real().minCoeff();
  const double mod_max = spec.eigenvalues.cwiseAbs().maxCoeff();
  int n_zero = 0;
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i)
    if (std::abs(spec.eigenvalues(i)) <= 1e-10 * mod_max) ++n_zero;

  dlab::Json summary{{"schema", "dissipator-lab/spectrum/v1"},
                     {"n_levels", o.n_levels},
                     {"dissipator", o.dissipator},
                     {"dim", spec.eigenvalues.size()},
                     {"spectral_gap", spec.spectral_gap},
                     {"max_real", max_real},
                     {"min_real", min_real},
                     {"n_zero_modes", n_zero}};
  dlab::atomic_write_file(o.summary, summary.dump(2) + "\n");
  std::printf(
      "spectrum of %s dissipator at N=%d: %lld eigenvalues, gap %.6g, "
      "%d zero modes; wrote %s and %s\n",
      o.dissipator.c_str(), o.n_levels,
      static_cast<long long>(spec.eigenvalues.size()), spec.spectral_gap,
      n_zero, o.out.c_str(), o.summary.c_str());
  return 0;
}

int run_evolve(const EvolveOpts& o) {
  const dlab::TruncationConfig cfg(o.n_levels);
  dlab::LiouvillianSpec spec{
      dlab::PhysicalParams{o.omega_c, o.omega_a, o.p, o.gamma},
      parse_pumping(o.pumping, o.drive_amp, o.drive_freq),
      parse_dissipator(o.dissipator), cfg};
  spec.params.validate();

  dlab::IntegratorConfig icfg;
  if (o.method == "rk4") icfg.method = dlab::StepMethod::RK4Fixed;
  else if (o.method == "expm") icfg.method = dlab::StepMethod::Expm;
  else throw std::invalid_argument("unknown method '" + o.method + "'");
  icfg.step = o.step;
  icfg.t_start = o.t_start;
  icfg.t_end = o.t_end;
  icfg.record_every = o.record_every;

  const dlab::HermitianPoint rho0 = parse_initial(o.initial, cfg);
  const dlab::Trajectory traj = dlab::evolve(spec, rho0, icfg);

  std::string csv = "t,trace,purity,hs_norm,photon_number,inversion,min_eigenvalue\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const dlab::ObservableRecord& r = traj.observables[i];
    csv += dlab::format_g17(traj.times[i]);
    for (double v : {r.trace, r.purity, r.hs_norm, r.photon_number, r.inversion,
                     r.min_eigenvalue}) {
      csv += ',';
      csv += dlab::format_g17(v);
    }
    csv += '\n';
  }
  dlab::atomic_write_file(o.out, csv);

  const dlab::ObservableRecord& last = traj.observables.back();
  std::printf(
      "integrated to t=%.6g in %zu records (step %.3g, %d halvings); "
      "final trace %.12g, photons %.6g, inversion %.6g; wrote %s\n",
      traj.times.back(), traj.times.size(), traj.step_used, traj.halvings,
      last.trace, last.photon_number, last.inversion, o.out.c_str());
  return 0;
}

int run_witness(const WitnessOpts& o) {
  const dlab::TruncationConfig cfg(o.n_levels);
  const dlab::PropertyReport report = dlab::check_sign_witnesses(cfg);
  dlab::Json doc{{"schema", "dissipator-lab/witness/v1"}, {"report", report}};
  dlab::atomic_write_file(o.out, doc.dump(2) + "\n");
  std::printf("[%s] N=%-3d %s max_violation=% .3e; wrote %s\n",
              report.pass ? "pass" : "FAIL", report.n_levels,
              report.property_id.c_str(), report.max_violation, o.out.c_str());
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dissipator-lab: numerical laboratory for the damping superoperators of "
      "a truncated cavity-QED system. Certifies symmetry/nonpositivity/kernel "
      "structure, exports spectra, and integrates the driven master equation."};
  app.set_config("--config", "", "Read options from an INI file");
  app.require_subcommand(1);

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the full property certification across truncation sizes");
  verify->add_option("--n-levels", vo.n_levels,
                     "Comma-separated truncation sizes (each >= 2)")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--seed", vo.seed, "Master RNG seed")->capture_default_str();
  verify->add_option("--samples", vo.samples, "Random samples per property")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--out", vo.out, "JSON report path")->capture_default_str();

  SpectrumOpts so;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalues of a dissipator as a Hilbert-Schmidt operator");
  spectrum->add_option("--n-levels", so.n_levels, "Truncation size")
      ->required()
      ->check(CLI::Range(2, 1 << 12));
  spectrum->add_option("--dissipator", so.dissipator, "full or delta")
      ->check(CLI::IsMember({"full", "delta"}))
      ->capture_default_str();
  spectrum->add_option("--out", so.out, "Eigenvalue CSV path")->capture_default_str();
  spectrum->add_option("--summary", so.summary, "Summary JSON path")
      ->capture_default_str();

  EvolveOpts eo;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "Integrate d rho/dt = -i[H(t), rho] + gamma D rho");
  evolve->add_option("--n-levels", eo.n_levels, "Truncation size")
      ->required()
      ->check(CLI::Range(2, 1 << 12));
  evolve->add_option("--omega-c", eo.omega_c, "Cavity frequency")->capture_default_str();
  evolve->add_option("--omega-a", eo.omega_a, "Atomic frequency")->capture_default_str();
  evolve->add_option("--p", eo.p, "Dipole coupling strength")->capture_default_str();
  evolve->add_option("--gamma", eo.gamma, "Dissipation rate")->capture_default_str();
  evolve->add_option("--pumping", eo.pumping,
                     "Pump profile (enters the Hamiltonian scaled by p)")
      ->check(CLI::IsMember({"none", "cavity", "atom", "scalar"}))
      ->capture_default_str();
  evolve->add_option("--drive-amp", eo.drive_amp, "Pump amplitude")->capture_default_str();
  evolve->add_option("--drive-freq", eo.drive_freq, "Pump frequency")->capture_default_str();
  evolve->add_option("--dissipator", eo.dissipator, "full or delta")
      ->check(CLI::IsMember({"full", "delta"}))
      ->capture_default_str();
  evolve->add_option("--initial", eo.initial,
                     "vacuum, fock:<n> or random:<seed>")
      ->capture_default_str();
  evolve->add_option("--method", eo.method, "rk4 or expm (expm needs pumping none)")
      ->check(CLI::IsMember({"rk4", "expm"}))
      ->capture_default_str();
  evolve->add_option("--t-start", eo.t_start, "Start time")->capture_default_str();
  evolve->add_option("--t-end", eo.t_end, "End time")->capture_default_str();
  evolve->add_option("--step", eo.step, "Integrator step")->capture_default_str();
  evolve->add_option("--record-every", eo.record_every,
                     "Store every k-th step (first/last always kept)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evolve->add_option("--out", eo.out, "Trajectory CSV path")->capture_default_str();

  WitnessOpts wo;
  CLI::App* witness = app.add_subcommand(
      "witness", "Exact witnesses separating the two dissipators");
  witness->add_option("--n-levels", wo.n_levels, "Truncation size")
      ->required()
      ->check(CLI::Range(2, 1 << 12));
  witness->add_option("--out", wo.out, "Witness JSON path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(vo);
    if (spectrum->parsed()) return run_spectrum(so);
    if (evolve->parsed()) return run_evolve(eo);
    if (witness->parsed()) return run_witness(wo);
  } catch (const dlab::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 2;
}
