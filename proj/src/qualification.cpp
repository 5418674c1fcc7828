#include "specreg/qualification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specreg/error.hpp"
#include "specreg/grid.hpp"

namespace specreg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> with_breakpoints(const FilterFamily& fam, double alpha, std::span<const double> base,
                                     double cap) {
  std::vector<double> extra;
  for (double m : fam.breakpoints()) {
    extra.push_back(m * alpha);
    extra.push_back(std::nextafter(m * alpha, 0.0));
  }
  return merge_points(base, extra, 0.0, cap);
}

}  // namespace

std::vector<double> QualificationGrids::alphas(const FilterFamily& fam) const {
  return log_grid(alpha_min, fam.alpha_max() * (1.0 - 1e-9), alpha_points);
}

std::vector<double> QualificationGrids::lambdas() const {
  return log_grid(lambda_min_rel * lambda_cap, lambda_cap, lambda_points);
}

BoundTest classical_bound_test(const FilterFamily& fam, double mu, std::span<const double> alpha_grid,
                               std::span<const double> lambda_grid, double growth_threshold) {
  if (!(mu >= 0.0)) throw InvalidArgument("classical_bound_test: mu must be >= 0");
  if (alpha_grid.empty() || lambda_grid.empty()) throw InvalidArgument("classical_bound_test: empty grid");
  const double cap = *std::max_element(lambda_grid.begin(), lambda_grid.end());
  std::vector<double> b(alpha_grid.size(), 0.0);
  for (std::size_t j = 0; j < alpha_grid.size(); ++j) {
    const double a = alpha_grid[j];
    for (double l : with_breakpoints(fam, a, lambda_grid, cap)) {
      if (l <= 0.0) continue;
      const double v = std::pow(l / a, mu) * std::abs(fam.r(a, l));
      b[j] = std::max(b[j], v);
    }
  }
  const auto growth = decade_growth(alpha_grid, b);
  BoundTest out;
  out.growth_factor = growth.ratio;
  out.witnessed_k = *std::max_element(b.begin(), b.end());
  out.bounded = std::isfinite(out.witnessed_k) && growth.ratio <= growth_threshold;
  return out;
}

QualificationEstimate estimate_classical_order(const FilterFamily& fam, double mu_max, double tol,
                                               const QualificationGrids& grids) {
  if (!(mu_max > 0.0)) throw InvalidArgument("estimate_classical_order: mu_max must be positive");
  if (!(tol > 0.0)) throw InvalidArgument("estimate_classical_order: tol must be positive");
  const auto alphas = grids.alphas(fam);
  const auto lambdas = grids.lambdas();

  QualificationEstimate est;
  auto probe = [&](double mu) {
    const auto t = classical_bound_test(fam, mu, alphas, lambdas, grids.growth_threshold);
    est.per_mu_diagnostics.push_back({mu, t.bounded, t.growth_factor});
    return t.bounded;
  };

  if (probe(mu_max)) {
    est.mu_lo = mu_max;
    est.mu_hi = mu_max;
    est.sentinel_infinite = true;
    return est;
  }
  double lo = 0.0;
  double hi = mu_max;
  if (!probe(0.0)) {
    // Not even bounded at μ = 0: the order is empty; report the degenerate interval.
    est.mu_lo = 0.0;
    est.mu_hi = 0.0;
    return est;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (probe(mid)) lo = mid;
    else hi = mid;
  }
  est.mu_lo = lo;
  est.mu_hi = hi;
  return est;
}

MaximalCheck check_maximal(const FilterFamily& fam, const IndexFunction& rho, std::span<const double> alpha_grid,
                           std::span<const double> lambda_probes, std::span<const double> lambda_grid,
                           double growth_threshold) {
  if (alpha_grid.empty() || lambda_grid.empty()) throw InvalidArgument("check_maximal: empty grid");
  const double cap = *std::max_element(lambda_grid.begin(), lambda_grid.end());
  for (double p : lambda_probes) {
    if (!(p > 0.0) || p > cap) throw InvalidArgument("check_maximal: probe outside (0, cap]");
  }
  MaximalCheck out;
  std::vector<double> gam(alpha_grid.size(), 0.0);
  for (std::size_t j = 0; j < alpha_grid.size(); ++j) {
    const double a = alpha_grid[j];
    const double ra = rho(a);
    if (!(ra > 0.0)) throw EvaluationError("check_maximal: rho(" + std::to_string(a) + ") is not positive");
    for (double l : with_breakpoints(fam, a, lambda_grid, cap)) {
      if (l <= 0.0) continue;
      gam[j] = std::max(gam[j], std::abs(fam.r(a, l)) * rho(l) / ra);
    }
  }
  out.gamma_witness = *std::max_element(gam.begin(), gam.end());
  out.gamma_growth = decade_growth(alpha_grid, gam).ratio;
  bool ok = std::isfinite(out.gamma_witness) && out.gamma_growth <= growth_threshold;

  for (double p : lambda_probes) {
    std::vector<double> c(alpha_grid.size());
    for (std::size_t j = 0; j < alpha_grid.size(); ++j) {
      c[j] = std::abs(fam.r(alpha_grid[j], p)) / rho(alpha_grid[j]);
    }
    const double m = *std::min_element(c.begin(), c.end());
    const double decay = decade_decay(alpha_grid, c).ratio;
    out.c_witness_per_lambda.emplace_back(p, m);
    out.c_decay.push_back(decay);
    if (!(m > 0.0) || decay < 1.0 / growth_threshold) ok = false;
  }
  out.passed = ok;
  return out;
}

ThetaMap::ThetaMap(IndexFunction rho, double domain_cap, std::optional<double> range_cap)
    : rho_(std::move(rho)), domain_cap_(domain_cap), range_cap_(range_cap.value_or(domain_cap)) {
  if (!(domain_cap_ > 0.0) || !std::isfinite(domain_cap_)) throw InvalidArgument("ThetaMap: bad domain cap");
  if (!(range_cap_ > 0.0) || range_cap_ > domain_cap_) throw InvalidArgument("ThetaMap: range cap outside domain");
  const auto ts = log_grid(1e-200 * range_cap_, range_cap_, 1024);
  double prev = 0.0;
  for (double t : ts) {
    const double v = std::sqrt(t) * rho_(t);
    if (!std::isfinite(v) || !(v > prev)) {
      throw InvalidArgument("ThetaMap: theta(t) = sqrt(t) rho(t) is not strictly increasing near t = " +
                            std::to_string(t));
    }
    prev = v;
  }
  range_sup_ = prev;
}

double theta_eval(const ThetaMap& map, double t) {
  if (!(t > 0.0) || t > map.domain_cap_) throw OutOfRange("theta_eval: t outside (0, domain cap]");
  return std::sqrt(t) * map.rho_(t);
}

double theta_inv(const ThetaMap& map, double delta) {
  if (!(delta > 0.0) || delta > map.range_sup_) throw OutOfRange("theta_inv: delta outside the invertible range");
  if (delta == map.range_sup_) return map.range_cap_;
  double lo = std::log(map.range_cap_);
  double hi = lo;
  // Walk down until Θ(e^lo) < δ; Θ vanishes at 0 so this terminates unless δ underflows.
  double step = 1.0;
  while (std::sqrt(std::exp(lo)) * map.rho_(std::exp(lo)) >= delta) {
    hi = lo;
    lo -= step;
    step *= 2.0;
    if (lo < -745.0) throw OutOfRange("theta_inv: delta below the representable range");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double t = std::exp(mid);
    if (std::sqrt(t) * map.rho_(t) < delta) lo = mid;
    else hi = mid;
  }
  const double t_lo = std::exp(lo);
  const double t_hi = std::min(std::exp(hi), map.range_cap_);
  const double r_lo = std::abs(std::sqrt(t_lo) * map.rho_(t_lo) - delta);
  const double r_hi = std::abs(std::sqrt(t_hi) * map.rho_(t_hi) - delta);
  return r_lo < r_hi ? t_lo : t_hi;
}

double saturation_rate_classical(double mu0) {
  if (!(mu0 > 0.0) || !std::isfinite(mu0)) throw InvalidArgument("saturation_rate_classical: mu0 must be positive");
  return 2.0 * mu0 / (2.0 * mu0 + 1.0);
}

}  // namespace specreg
