#include <cmath>
#include <cstring>

#include "doctest.h"
#include "specreg/error.hpp"
#include "specreg/grid.hpp"
#include "specreg/hypotheses.hpp"

using namespace specreg;

namespace {

FilterFamily synthetic(const std::string& name, FilterFamily::Kernel g, FilterFamily::Kernel r = {}) {
  FilterFamily::Definition d;
  d.name = name;
  d.g = std::move(g);
  d.r = std::move(r);
  return FilterFamily(d);
}

HypothesisGrids coarse(double cap = 1.0) {
  HypothesisGrids g;
  g.lambda_cap = cap;
  g.lambda_points = 257;
  g.alpha_points = 65;
  return g;
}

}  // namespace

TEST_CASE("H2") {
  const HypothesisGrids g;
  const auto tik = check_H2(families::tikhonov(), g, 1.0);
  CHECK(tik.passed);
  CHECK(*tik.witnessed_constant == doctest::Approx(1.0).epsilon(1e-6));

  HypothesisGrids g3 = g;
  g3.lambda_cap = 0.3;
  const auto ex3 = check_H2(families::example3(0.5), g3, 1.0);
  CHECK(ex3.passed);
  CHECK(*ex3.witnessed_constant <= 1.0);

  const auto bad = synthetic("inv_sq", [](double, double l) { return l == 0.0 ? 0.0 : 1.0 / (l * l); });
  const auto res = check_H2(bad, g);
  CHECK_FALSE(res.passed);
  REQUIRE(res.worst_point);
  CHECK(res.worst_point->second == doctest::Approx(1e-12));
}

TEST_CASE("H3") {
  const auto lambdas = log_grid(1e-2, 1.0, 64);
  const auto alphas = log_grid(0.4, 1e-8, 17);
  CHECK(check_H3(families::tikhonov(), lambdas, alphas).passed);

  const auto l4 = log_grid(1e-3, 0.1, 64);
  const auto a4 = log_grid(0.05, 1e-8, 17);
  const auto ex4 = check_H3(families::example4(0.1), l4, a4);
  CHECK(ex4.passed);
  // oracle: |λ g − 1| = 1 − e^{λ/ln α} at the last α, largest λ
  CHECK(*ex4.witnessed_constant == doctest::Approx(-std::expm1(0.1 / std::log(1e-8))).epsilon(1e-12));

  const auto one = synthetic("one", [](double, double) { return 1.0; });
  const std::vector<double> half{0.5};
  const auto res = check_H3(one, half, alphas);
  CHECK_FALSE(res.passed);
  REQUIRE(res.worst_point);
  CHECK(res.worst_point->second == 0.5);

  const std::vector<double> short_seq{0.5, 0.1};
  CHECK_THROWS_AS(check_H3(families::tikhonov(), lambdas, short_seq), InvalidArgument);
}

TEST_CASE("H4 strict and weighted") {
  const HypothesisGrids g = coarse();
  // G_α = 1/α for Tikhonov and TSVD; G_α √α grows like 1/√α
  CHECK_FALSE(check_H4(families::tikhonov(), g).passed);
  CHECK_FALSE(check_H4(families::tsvd(), g).passed);
  // the jump of g at λ = α makes G_α ≈ (1 − 1/e)/α for the three-branch family too
  CHECK_FALSE(check_H4(families::example2(1.0), g).passed);

  const auto w = check_H4_weighted(families::tikhonov(), g);
  CHECK(w.passed);
  CHECK(*w.witnessed_constant == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(check_H4_weighted(families::example2(1.0), g).passed);
  CHECK(check_H4_weighted(families::example2(2.0), g).passed);
}

TEST_CASE("residual monotonicity and lower bounds a-e") {
  const HypothesisGrids g = coarse();
  const auto tik = check_theorem44_ii(families::tikhonov(), {1.0, 0.5, 1.5, 0.4}, g);
  REQUIRE(tik.size() == 5);
  const char* ids[] = {"iiA", "iiB", "iiC", "iiD", "iiE"};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(tik[i].id == ids[i]);
    CHECK(tik[i].passed);
    CHECK(tik[i].slack >= 0.0);
  }

  for (double k : {1.0, 2.0}) {
    const double gamma2 = (1.0 - std::exp(-std::sqrt(2.0))) / 2.0 - std::sqrt(2.0) * std::pow(3.0, -1.5 - k);
    const auto ex2 = check_theorem44_ii(families::example2(k), {1.0, std::exp(-1.0), 2.0, gamma2}, g);
    CHECK(ex2[0].passed);
    CHECK(ex2[1].passed);
    CHECK(ex2[3].passed);
    CHECK(ex2[4].passed);
    // |r| drops by 3^{-k} when α crosses λ/3 from below: not monotone in α
    CHECK_FALSE(ex2[2].passed);
    REQUIRE(ex2[2].worst_point);
    const auto [a, l] = *ex2[2].worst_point;
    CHECK(l / a > 1.0);
    CHECK(l / a < 3.0 * 1.35);
  }

  HypothesisGrids g3 = coarse(0.3);
  const double eps = 0.5;
  const double l03 = std::log(0.3);
  const double gamma2 = (1.0 + l03) / (2.0 * l03 - std::pow(2.0, -eps));
  const double gamma1 = 1.0 / (1.0 + 1.0 / (3.0 * std::exp(1.0)));
  const auto ex3 = check_theorem44_ii(families::example3(eps), {0.3, gamma1, 2.0, gamma2}, g3, "M2");
  CHECK(ex3[0].id == "M2a");
  CHECK(ex3[0].passed);
  CHECK(ex3[2].passed);
  CHECK(ex3[3].passed);
  CHECK(ex3[4].passed);
  // just below λ = α the residual dips well under γ₁ at ε = 0.5
  CHECK_FALSE(ex3[1].passed);
  CHECK(*ex3[1].witnessed_constant < 0.75);

  CHECK_THROWS_AS(check_theorem44_ii(families::tikhonov(), {1.0, 0.0, 1.5, 0.4}, g), InvalidArgument);
  CHECK_THROWS_AS(check_theorem44_ii(families::tikhonov(), {1.0, 0.5, 1.0, 0.4}, g), InvalidArgument);

  // search mode witnesses the grid extrema
  const auto search = check_theorem44_ii(families::tikhonov(), {1.0, std::nullopt, 1.5, std::nullopt}, g);
  CHECK(search[1].passed);
  CHECK(*search[1].witnessed_constant == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(*search[3].witnessed_constant == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("hypothesis iv") {
  const HypothesisGrids g = coarse();
  CHECK(check_iv(families::tikhonov(), 1.0, 1.0, 0.5, g).passed);
  CHECK(check_iv(families::example2(1.0), 1.0, 3.0, 1.0, g).passed);
  CHECK(check_iv(families::example2(2.0), 2.0, 3.0, 1.0, g).passed);
  const auto ts = check_iv(families::tsvd(), 1.0, 1.0, 0.5, g);
  CHECK_FALSE(ts.passed);
  REQUIRE(ts.worst_point);
  CHECK(ts.worst_point->second == doctest::Approx(ts.worst_point->first));
}

TEST_CASE("M3") {
  HypothesisGrids g3 = coarse(0.3);
  const auto [up, lo] = check_M3(families::example3(0.5), index_functions::inverse_log(), 1.0, 1.0, std::nullopt, g3);
  CHECK(up.passed);
  REQUIRE(up.witnessed_constant);
  CHECK(*up.witnessed_constant <= 1.0);
  // at λ = α the ratio equals r_α(α) = 2/(1 − ln α), which tends to 0
  CHECK_FALSE(lo.passed);
  CHECK(*lo.witnessed_constant <= 2.0 / (1.0 - std::log(1e-8)));

  const auto [tu, tl] = check_M3(families::tikhonov(), index_functions::power(1.0), std::nullopt, 1.0, std::nullopt, coarse());
  CHECK(tu.passed);
  CHECK(*tu.witnessed_constant <= 1.0);
  CHECK(*tu.witnessed_constant == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(tl.passed);
}

TEST_CASE("M4") {
  const HypothesisGrids g = coarse();
  CHECK(check_M4(families::tikhonov(), g).passed);
  const auto wave = synthetic("sine", {}, [](double, double l) { return std::sin(10.0 * l); });
  CHECK_FALSE(check_M4(wave, g).passed);
  // r drops from (1+√α)/(1−√α ln α) to 2/(1 − ln α) across λ = α, so r² has a downward jump
  CHECK_FALSE(check_M4(families::example3(0.5), coarse(0.3)).passed);
}

TEST_CASE("M5") {
  const HypothesisGrids g = coarse();
  const auto t = check_M5(families::tikhonov(), 0.5, g);
  CHECK(t.passed);
  CHECK(*t.witnessed_constant == doctest::Approx(0.5).epsilon(1e-4));
  const double gamma2 = (1.0 - std::exp(-std::sqrt(2.0))) / 2.0 - std::sqrt(2.0) * std::pow(3.0, -2.5);
  CHECK(check_M5(families::example2(1.0), gamma2 * std::sqrt(2.0), g).passed);
  const auto zero = synthetic("zero", [](double, double) { return 0.0; });
  CHECK_FALSE(check_M5(zero, 0.1, g).passed);
}

TEST_CASE("local upper type") {
  CHECK(check_local_upper_type(index_functions::inverse_log(), 1.0, 1.0, 0.3, 64).passed);
  CHECK(check_local_upper_type(index_functions::power(1.5), 1.5, 1.0, 1.0, 64).passed);
  const IndexFunction steep{"exp", [](double t) { return std::exp(-1.0 / t); }};
  CHECK_FALSE(check_local_upper_type(steep, 1.0, 1.0, 1.0, 64).passed);
}

TEST_CASE("invertibility and M1") {
  const auto op = make_power_spectrum(50, 2.0);
  const auto alphas = log_grid(1e-8, 0.5, 32);
  const auto tik = check_invertibility(families::tikhonov(), op, alphas);
  CHECK(tik.passed);
  CHECK(*tik.witnessed_constant == doctest::Approx(1e-8 / (1e-8 + 1.0)).epsilon(1e-12));
  CHECK_FALSE(check_invertibility(families::tsvd(), op, alphas).passed);
  const auto a2 = log_grid(1e-8, 0.3, 32);
  CHECK(check_invertibility(families::example2(1.0), op, a2).passed);
  const auto m1 = check_M1(op);
  CHECK(m1.passed);
  CHECK(*m1.witnessed_constant == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("report invariants and determinism") {
  const auto unit = make_power_spectrum(100, 2.0);
  const auto geo3 = make_geometric_spectrum(40, 0.7).scaled(0.3);
  const auto geo4 = make_geometric_spectrum(40, 0.7).scaled(0.1);
  struct Case {
    FilterFamily fam;
    const SpectralOperator* op;
  };
  const std::vector<Case> cases{{families::tikhonov(), &unit},     {families::example2(1.0), &unit},
                                {families::example3(0.5), &geo3}, {families::example4(0.1), &geo4},
                                {families::tsvd(), &unit}};
  for (const auto& c : cases) {
    CAPTURE(c.fam.name());
    HypothesisGrids g = coarse(c.op->norm_sq());
    const auto a = build_report(c.fam, *c.op, g);
    const auto b = build_report(c.fam, *c.op, g);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      const auto& x = a.checks[i];
      const auto& y = b.checks[i];
      CAPTURE(x.id);
      CHECK(x.id == y.id);
      CHECK(x.passed == y.passed);
      CHECK(std::memcmp(&x.slack, &y.slack, sizeof(double)) == 0);
      if (!x.passed) CHECK(x.worst_point.has_value());
    }
  }
}

TEST_CASE("grid refinement never turns a failure into a pass") {
  const auto unit = make_power_spectrum(100, 2.0);
  const auto geo3 = make_geometric_spectrum(40, 0.7).scaled(0.3);
  for (int which = 0; which < 3; ++which) {
    const FilterFamily fam = which == 0 ? families::tikhonov() : which == 1 ? families::example2(1.0) : families::example3(0.5);
    const auto& op = which == 2 ? geo3 : unit;
    HypothesisGrids fine = coarse(op.norm_sq());
    fine.lambda_points = 2 * fine.lambda_points - 1;
    fine.alpha_points = 2 * fine.alpha_points - 1;
    const auto c = build_report(fam, op, coarse(op.norm_sq()));
    const auto f = build_report(fam, op, fine);
    for (const auto& chk : c.checks) {
      if (chk.passed) continue;
      const auto* other = f.find(chk.id);
      REQUIRE(other);
      CAPTURE(chk.id);
      CHECK_FALSE(other->passed);
    }
  }
}
