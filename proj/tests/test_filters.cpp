#include <cmath>

#include "doctest.h"
#include "specreg/error.hpp"
#include "specreg/filters.hpp"
#include "specreg/grid.hpp"

using namespace specreg;

namespace {

std::vector<FilterFamily> builtins() {
  return {families::tikhonov(), families::example2(1.0), families::example2(2.5), families::example3(0.5),
          families::example3(0.9), families::example4(), families::tsvd()};
}

}  // namespace

TEST_CASE("g and r point values") {
  const auto tik = families::tikhonov();
  CHECK(tik.g(0.1, 0.3) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(tik.r(0.1, 0.3) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(tik.g(0.1, 0.0) == doctest::Approx(10.0));

  for (double k : {1.0, 2.0}) {
    const auto ex2 = families::example2(k);
    for (double a : {1e-6, 0.01, 0.2}) CHECK(ex2.g(a, 0.0) == doctest::Approx(1.0 / std::sqrt(a)).epsilon(1e-15));
    // the λ → 0⁺ limit matches the value at 0
    CHECK(ex2.g(0.01, 1e-12) == doctest::Approx(ex2.g(0.01, 0.0)).epsilon(1e-9));
  }

  const auto ex4 = families::example4(0.5);
  CHECK(ex4.g(0.2, 0.1) == 0.0);
  CHECK(ex4.r(0.2, 0.1) == 1.0);
  for (double l : {0.2, 0.3, 0.5}) CHECK(ex4.r(0.2, l) == doctest::Approx(1.0 - std::exp(l / std::log(0.2))).epsilon(1e-14));

  for (const auto& fam : builtins()) {
    CAPTURE(fam.name());
    CHECK(fam.r(0.5 * fam.alpha_max(), 0.0) == 1.0);
  }
}

TEST_CASE("example2 and example3 residuals in closed form") {
  const double a = 0.01;
  const auto ex2 = families::example2(2.0);
  // three branches of s_α^k plus α^k λ^{3/2}
  CHECK(ex2.r(a, 0.005) == doctest::Approx(a * a * std::pow(0.005, 1.5) + std::exp(-0.005 / std::sqrt(a))).epsilon(1e-14));
  CHECK(ex2.r(a, 0.02) == doctest::Approx(a * a * std::pow(0.02, 1.5) + std::exp(-std::sqrt(2.0))).epsilon(1e-14));
  CHECK(ex2.r(a, 0.05) == doctest::Approx(a * a * std::pow(0.05, 1.5) + std::exp(-std::sqrt(5.0)) + 0.04).epsilon(1e-14));

  const auto ex3 = families::example3(0.5);
  const double la = std::log(a);
  CHECK(ex3.r(a, 0.005) == doctest::Approx((a + std::pow(0.005, 1.5)) / (a - std::pow(0.005, 1.5) * la)).epsilon(1e-14));
  const double h = std::pow(a, 1.5);
  CHECK(ex3.r(a, 0.2) == doctest::Approx((h + std::pow(0.2, 1.5)) / (h - std::pow(0.2, 1.5) * la)).epsilon(1e-14));
  CHECK(ex3.g(a, 0.0) == 0.0);
}

TEST_CASE("domain and parameter errors") {
  const auto tik = families::tikhonov(0.5);
  CHECK_THROWS_AS(tik.g(0.0, 0.1), InvalidArgument);
  CHECK_THROWS_AS(tik.g(0.5, 0.1), InvalidArgument);
  CHECK_THROWS_AS(tik.r(-1.0, 0.1), InvalidArgument);
  CHECK_THROWS_AS(tik.g(0.1, -0.1), InvalidArgument);
  CHECK_THROWS_AS(families::example2(0.5), InvalidArgument);
  CHECK_THROWS_AS(families::example3(0.0), InvalidArgument);
  CHECK_THROWS_AS(families::example3(1.0), InvalidArgument);
  CHECK_THROWS_AS(families::example3(0.5, 0.4), InvalidArgument);
  CHECK_THROWS_AS(families::example4(1.0), InvalidArgument);
  CHECK_THROWS_AS(families::make("landweber", {}, std::nullopt, 1.0), InvalidArgument);
  CHECK_THROWS_AS(families::make("tikhonov", {{"k", 2.0}}, std::nullopt, 1.0), InvalidArgument);
  CHECK(families::make("example2", {{"k", 3.0}}, std::nullopt, 0.6).alpha_max() == doctest::Approx(0.2));

  FilterFamily::Definition bad;
  bad.name = "blowup";
  bad.g = [](double, double l) { return 1.0 / (l - 0.5); };
  const FilterFamily fam(bad);
  CHECK_THROWS_AS(fam.g(0.5, 0.5), EvaluationError);
}

TEST_CASE("custom families derive the missing kernel") {
  FilterFamily::Definition only_r;
  only_r.name = "only_r";
  only_r.r = [](double a, double l) { return a / (a + l); };
  const FilterFamily f(only_r);
  CHECK(f.g(0.1, 0.3) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(f.g(0.1, 0.0) == 0.0);

  FilterFamily::Definition only_g;
  only_g.name = "only_g";
  only_g.g = [](double a, double l) { return 1.0 / (a + l); };
  CHECK(FilterFamily(only_g).r(0.1, 0.3) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("catalogue lists five families") {
  const auto cat = families::catalogue();
  REQUIRE(cat.size() == 5);
  CHECK(cat[0].name == "tikhonov");
  CHECK(cat[1].name == "example2");
  CHECK(cat[2].name == "example3");
  CHECK(cat[3].name == "example4");
  CHECK(cat[4].name == "tsvd");
  for (const auto& info : cat) CHECK_NOTHROW(families::make(info.name, {}, std::nullopt, 0.3));
}

TEST_CASE("sup_g") {
  for (double a : {1e-6, 1e-3, 0.2}) {
    CHECK(sup_g(families::tikhonov(), a, 1.0) == doctest::Approx(1.0 / a).epsilon(1e-15));
    CHECK(sup_g(families::tsvd(), a, 1.0) == doctest::Approx(1.0 / a).epsilon(1e-15));
  }
  CHECK_THROWS_AS(sup_g(families::tikhonov(), 0.1, 1.0, 32), InvalidArgument);
}

TEST_CASE("sup_g for example2 sits at the branch switch lambda = alpha") {
  // For α ≤ λ < 3α the filter is (1 − e^{−√(λ/α)})/λ − α^k√λ, whose value at λ = α is
  // (1 − 1/e)/α − α^{k+1/2}: far above g(0) = 1/√α for small α.
  for (double k : {1.0, 2.0}) {
    const auto ex2 = families::example2(k);
    for (double a : {1e-6, 1e-3, 0.1}) {
      const double at_alpha = -std::expm1(-1.0) / a - std::pow(a, k + 0.5);
      CHECK(sup_g(ex2, a, 1.0) == doctest::Approx(at_alpha).epsilon(1e-14));
      CHECK(sup_g(ex2, a, 1.0) >= ex2.g(a, 0.0));
      // dense independent scan never exceeds it
      double dense = 0.0;
      for (int i = 0; i <= 20000; ++i) dense = std::max(dense, std::abs(ex2.g(a, a * std::pow(1e4, i / 20000.0 - 0.5))));
      CHECK(dense <= at_alpha * (1.0 + 1e-14));
    }
  }
}

TEST_CASE("residual identity on the standard grids") {
  for (const auto& fam : builtins()) {
    CAPTURE(fam.name());
    const double cap = fam.name() == "example4" ? 0.1 : (fam.name() == "example3" ? 0.3 : 1.0);
    const auto alphas = log_grid(1e-8, fam.alpha_max() * (1.0 - 1e-9), 64);
    auto lambdas = log_grid(1e-12 * cap, cap, 256);
    lambdas.push_back(0.0);
    double worst = 0.0;
    for (double a : alphas) {
      for (double l : lambdas) {
        const double lg = l * fam.g(a, l);
        worst = std::max(worst, std::abs(fam.r(a, l) - (1.0 - lg)) / std::max(1.0, std::abs(lg)));
      }
    }
    CHECK(worst <= 1e-15);
  }
}

TEST_CASE("H2 witnesses on the standard grids") {
  auto witness = [](const FilterFamily& fam, double cap) {
    double m = 0.0;
    auto lambdas = log_grid(1e-12 * cap, cap, 256);
    lambdas.push_back(0.0);
    for (double a : log_grid(1e-8, fam.alpha_max() * (1.0 - 1e-9), 64))
      for (double l : lambdas) m = std::max(m, std::abs(l * fam.g(a, l)));
    return m;
  };
  CHECK(witness(families::tikhonov(), 1.0) <= 1.0 + 1e-12);
  CHECK(witness(families::example3(0.5), 0.3) <= 1.0 + 1e-12);
  CHECK(witness(families::example3(0.5), 0.6) <= 1.0 + 1e-12);
  for (double k : {1.0, 2.0, 3.0}) {
    const auto ex2 = families::example2(k);
    CHECK(witness(ex2, 1.0) <= 1.0 + std::pow(ex2.alpha_max(), k) + 1e-9);
  }
}

TEST_CASE("weighted H4 witness stays bounded while the sup-norm form grows") {
  for (const auto& fam : {families::tikhonov(), families::example2(1.0), families::example2(2.0)}) {
    CAPTURE(fam.name());
    double weighted = 0.0;
    for (double a : log_grid(1e-8, fam.alpha_max() * (1.0 - 1e-9), 64)) {
      double s = 0.0;
      for (double l : log_grid(1e-12, 1.0, 2048)) s = std::max(s, std::sqrt(l) * std::abs(fam.g(a, l)));
      weighted = std::max(weighted, s * std::sqrt(a));
    }
    CHECK(weighted <= 1.0);
  }
  // Tikhonov: G_α √α = 1/√α
  CHECK(sup_g(families::tikhonov(), 1e-8, 1.0) * std::sqrt(1e-8) == doctest::Approx(1e4));
}
