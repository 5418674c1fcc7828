#include <cmath>

#include "doctest.h"
#include "specreg/error.hpp"
#include "specreg/grid.hpp"
#include "specreg/qualification.hpp"

using namespace specreg;

TEST_CASE("classical bound test") {
  const QualificationGrids g;
  const auto fam = families::tikhonov();
  const auto alphas = g.alphas(fam);
  const auto lambdas = g.lambdas();
  const auto half = classical_bound_test(fam, 0.5, alphas, lambdas);
  CHECK(half.bounded);
  // sup_t t^{1/2}/(1 + t) = 1/2 at t = 1
  CHECK(half.witnessed_k == doctest::Approx(0.5).epsilon(1e-3));
  const auto two = classical_bound_test(fam, 2.0, alphas, lambdas);
  CHECK_FALSE(two.bounded);
  CHECK(two.growth_factor > 1e10);
}

TEST_CASE("classical order estimates") {
  const double tol = 0.025;
  auto contains = [&](const QualificationEstimate& e, double mu) {
    return e.mu_lo - 1e-12 <= mu && mu <= e.mu_hi + 1e-12 && e.mu_hi - e.mu_lo <= tol + 1e-12;
  };
  const auto tik = estimate_classical_order(families::tikhonov());
  CHECK(contains(tik, 1.0));
  CHECK_FALSE(tik.sentinel_infinite);
  CHECK(contains(estimate_classical_order(families::example2(1.0)), 1.0));
  CHECK(contains(estimate_classical_order(families::example2(2.0)), 2.0));

  QualificationGrids g3;
  g3.lambda_cap = 0.3;
  const auto ex3 = estimate_classical_order(families::example3(0.5), 8.0, tol, g3);
  // α^{-μ}/|ln α| only turns upward below α ≈ e^{-1/μ}, so the bracket sits just above 0
  CHECK(ex3.mu_lo < 0.05);
  CHECK(ex3.mu_hi <= 0.05);

  const auto ts = estimate_classical_order(families::tsvd());
  CHECK(ts.sentinel_infinite);
  CHECK(ts.mu_lo == 8.0);

  // a finer tolerance refines inside the coarse bracket
  const auto coarse = estimate_classical_order(families::tikhonov(), 8.0, 0.2);
  CHECK(coarse.mu_lo <= tik.mu_lo);
  CHECK(tik.mu_hi <= coarse.mu_hi);

  CHECK_THROWS_AS(estimate_classical_order(families::tikhonov(), 8.0, 0.0), InvalidArgument);
}

TEST_CASE("maximal qualification check") {
  const auto alphas = log_grid(0.3 * (1 - 1e-9), 1e-12, 64);
  const auto lambdas = log_grid(1e-14, 0.3, 256);
  const std::vector<double> probes{0.3, 0.03};
  const auto ex3 = check_maximal(families::example3(0.5), index_functions::inverse_log(), alphas, probes, lambdas);
  CHECK(ex3.passed);
  REQUIRE(ex3.c_witness_per_lambda.size() == 2);
  for (const auto& [l, c] : ex3.c_witness_per_lambda) CHECK(c > 0.0);

  const auto tik = check_maximal(families::tikhonov(), index_functions::power(1.0), alphas, probes, lambdas);
  CHECK(tik.passed);
  CHECK(tik.gamma_witness == doctest::Approx(1.0).epsilon(1e-6));

  // residual vanishes above the cutoff: no positive lower constant
  CHECK_FALSE(check_maximal(families::tsvd(), index_functions::power(1.0), alphas, probes, lambdas).passed);
  // ρ(t) = t is too weak an index for the logarithmic family: γ(α) blows up
  CHECK_FALSE(check_maximal(families::example3(0.5), index_functions::power(1.0), alphas, probes, lambdas).passed);
}

TEST_CASE("theta map") {
  const ThetaMap lin(index_functions::power(1.0), 1.0);
  CHECK(theta_eval(lin, 0.25) == doctest::Approx(0.125));
  CHECK(lin.range_sup() == doctest::Approx(1.0));
  for (double d : {1e-9, 1e-4, 0.3, 1.0}) {
    const double t = theta_inv(lin, d);
    CHECK(theta_eval(lin, t) == doctest::Approx(d).epsilon(1e-12));
    CHECK(t == doctest::Approx(std::pow(d, 2.0 / 3.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(theta_inv(lin, 0.0), OutOfRange);
  CHECK_THROWS_AS(theta_inv(lin, 1.5), OutOfRange);

  const ThetaMap lg(index_functions::inverse_log(), 0.3);
  for (double d : {1e-8, 1e-5, 1e-2}) CHECK(theta_eval(lg, theta_inv(lg, d)) == doctest::Approx(d).epsilon(1e-12));

  const IndexFunction bumpy{"bumpy", [](double t) { return 1.0 / t; }};
  CHECK_THROWS_AS(ThetaMap(bumpy, 1.0), InvalidArgument);
}

TEST_CASE("classical saturation rate") {
  CHECK(saturation_rate_classical(1.0) == doctest::Approx(2.0 / 3.0));
  CHECK(saturation_rate_classical(0.5) == doctest::Approx(0.5));
  CHECK(saturation_rate_classical(2.0) == doctest::Approx(0.8));
}
