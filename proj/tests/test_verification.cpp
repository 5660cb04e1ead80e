#include <catch2/catch_amalgamated.hpp>

#include "dlab/verification.hpp"

using namespace dlab;

TEST_CASE("symmetry check passes and its witness can be replayed") {
  const TruncationConfig cfg(4);
  const PropertyReport report = check_symmetry(cfg, 100, 12345);
  CHECK(report.property_id == "full_dissipator_hs_symmetry");
  CHECK(report.pass);
  CHECK(report.max_violation <= 1e-10);
  CHECK(report.n_levels == 4);
  CHECK(report.seed == 12345);
  REQUIRE(report.witnesses.size() == 1);

  // Replaying the serialized witness pair must land on the stored violation.
  const LadderOps ops = LadderOps::make(cfg);
  const HermitianPoint rho1(matrix_from_json(report.witnesses[0]["rho1"]));
  const HermitianPoint rho2(matrix_from_json(report.witnesses[0]["rho2"]));
  const double lhs = hs_inner(rho1, apply_dissipator(DissipatorKind::FullD, rho2, ops));
  const double rhs = hs_inner(apply_dissipator(DissipatorKind::FullD, rho1, ops), rho2);
  const double viol = std::abs(lhs - rhs) / (hs_norm(rho1) * hs_norm(rho2));
  CHECK(viol == report.witnesses[0]["violation"].get<double>());
}

TEST_CASE("nonpositivity check reports a signed maximum") {
  const TruncationConfig cfg(4);
  const PropertyReport report = check_nonpositivity(cfg, 100, 999);
  CHECK(report.pass);
  CHECK(report.max_violation <= 0.0);
  CHECK(report.n_samples > 100);  // structured family counted on top
  CHECK(report.details.at("n_structured").get<int>() ==
        3 * (8 * 7) / 2);

  const HermitianPoint worst(matrix_from_json(report.witnesses[1]["rho"]));
  const LadderOps ops = LadderOps::make(cfg);
  const double qf = quadratic_form(DissipatorKind::FullD, worst, ops);
  CHECK(qf / hs_inner(worst, worst) ==
        Catch::Approx(report.witnesses[1]["violation"].get<double>()).margin(1e-15));
}

TEST_CASE("quadratic identity check covers both dissipators") {
  const TruncationConfig cfg(3);
  const PropertyReport full =
      check_quadratic_identity(cfg, DissipatorKind::FullD, 60, 5);
  CHECK(full.property_id == "quadratic_form_identity_full");
  CHECK(full.pass);
  const PropertyReport delta =
      check_quadratic_identity(cfg, DissipatorKind::DeltaOnly, 60, 5);
  CHECK(delta.property_id == "quadratic_form_identity_delta");
  CHECK(delta.pass);
}

TEST_CASE("sign witnesses have the closed-form values") {
  for (int n : {2, 3, 8}) {
    const PropertyReport report = check_sign_witnesses(TruncationConfig(n));
    CHECK(report.pass);
    CHECK(report.max_violation <= 1e-12);
    CHECK(report.details.at("delta_quadratic_form").get<double>() ==
          Catch::Approx(1.0).margin(1e-12));
    CHECK(report.details.at("full_quadratic_form").get<double>() ==
          Catch::Approx(n >= 3 ? -3.0 : -1.0).margin(1e-12));
    CHECK(report.details.at("delta_pair_rhs").get<double>() ==
          Catch::Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("trace annihilation holds for the driven system") {
  const PropertyReport report =
      check_trace_annihilation(TruncationConfig(5), 200, 777);
  CHECK(report.pass);
  CHECK(report.max_violation <= 1e-12);
}

TEST_CASE("kernel structure: dimension four, commutant span, padded injectivity") {
  const TruncationConfig cfg(5);
  const PropertyReport report =
      check_kernel_structure(cfg, PaddedSupportSpec{3});
  CHECK(report.pass);
  CHECK(report.details.at("kernel_dim").get<int>() == 4);
  CHECK(report.details.at("restricted_sigma_min").get<double>() > 0.0);
  CHECK(report.max_violation <= 1e-8);
  for (const auto& [tol, dim] : report.details.at("kernel_dim_by_tol").items())
    CHECK(dim.get<int>() == 4);
}

TEST_CASE("padded support validation") {
  const TruncationConfig cfg(4);
  CHECK_THROWS_AS(PaddedSupportSpec{-1}.validate(cfg), std::invalid_argument);
  CHECK_THROWS_AS(PaddedSupportSpec{3}.validate(cfg), std::invalid_argument);
  CHECK_NOTHROW(PaddedSupportSpec{2}.validate(cfg));
  CHECK(PaddedSupportSpec{2}.padded_system_dim() == 6);
  CHECK_THROWS_AS(check_kernel_structure(cfg, PaddedSupportSpec{3}),
                  std::invalid_argument);
}

TEST_CASE("padded embedding is an isometry into the full space") {
  const TruncationConfig cfg(4);
  const HermitianBasis basis(cfg.system_dim());
  const PaddedSupportSpec pad{1};
  const RMatrix b = padded_embedding(basis, cfg, pad);
  REQUIRE(b.rows() == 64);
  REQUIRE(b.cols() == 16);  // (2*(1+1))^2
  CHECK(max_abs(RMatrix(b.transpose() * b - RMatrix::Identity(16, 16))) < 1e-13);
}

TEST_CASE("restricted singular values are strictly positive") {
  const TruncationConfig cfg(4);
  const RVector sv = restricted_singular_values(cfg, PaddedSupportSpec{2});
  REQUIRE(sv.size() == 36);
  CHECK(sv.minCoeff() > 0.1);
}

TEST_CASE("full certification passes and serializes deterministically") {
  const std::vector<int> sizes{2, 3};
  const std::vector<PropertyReport> reports = run_full_certification(sizes, 2024, 60);
  CHECK(reports.size() == 7 * sizes.size());
  CHECK(all_pass(reports));

  const Json doc1 = certification_to_json(reports, 2024);
  const Json doc2 =
      certification_to_json(run_full_certification(sizes, 2024, 60), 2024);
  CHECK(doc1.dump() == doc2.dump());
  CHECK(doc1.at("schema") == "dissipator-lab/verify/v1");
  CHECK(doc1.at("all_pass").get<bool>());

  // A different seed must change the sampled inputs (max violations differ
  // at the bit level almost surely).
  const std::vector<PropertyReport> other = run_full_certification(sizes, 2025, 60);
  CHECK(certification_to_json(other, 2025).dump() != doc1.dump());
}

TEST_CASE("report json uses the stable schema") {
  PropertyReport r;
  r.property_id = "demo";
  r.n_levels = 4;
  r.n_samples = 10;
  r.max_violation = 1e-13;
  r.threshold = 1e-10;
  r.pass = true;
  r.seed = 7;
  r.witnesses.push_back(Json{{"violation", 1e-13}});
  r.details["extra"] = 1;

  const Json j = r;
  CHECK(j.at("property_id") == "demo");
  CHECK(j.at("truncation") == 4);
  CHECK(j.at("n") == 10);
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("max_violation").get<double>() == 1e-13);
  CHECK(j.at("seed").get<std::uint64_t>() == 7);

  const PropertyReport back = j.get<PropertyReport>();
  CHECK(back.property_id == r.property_id);
  CHECK(back.n_levels == r.n_levels);
  CHECK(back.n_samples == r.n_samples);
  CHECK(back.max_violation == r.max_violation);
  CHECK(back.pass == r.pass);
  CHECK(back.seed == r.seed);
  CHECK(back.witnesses == r.witnesses);
  CHECK(back.details == r.details);
}
