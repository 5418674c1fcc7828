#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "specreg/filters.hpp"
#include "specreg/index_function.hpp"

namespace specreg {

/// Grids for the qualification scans. The α range reaches far below the hypothesis
/// grids: logarithmic residuals only reveal growth against α^μ for small μ once α
/// spans many decades.
struct QualificationGrids {
  double lambda_cap = 1.0;
  std::size_t alpha_points = 400;
  double alpha_min = 1e-100;
  std::size_t lambda_points = 1024;
  double lambda_min_rel = 1e-102;
  double growth_threshold = 1.5;

  std::vector<double> alphas(const FilterFamily& fam) const;
  std::vector<double> lambdas() const;
};

struct BoundTest {
  bool bounded = false;
  double growth_factor = 0.0;  // smallest-decade max of B(α) over largest-decade max
  double witnessed_k = 0.0;    // max of B(α) over the grid
};

/// B(α) = max_λ (λ/α)^μ |r_α(λ)|, decided bounded by the decade-growth rule.
/// Breakpoint multiples of each α are added to the λ grid.
BoundTest classical_bound_test(const FilterFamily& fam, double mu, std::span<const double> alpha_grid,
                               std::span<const double> lambda_grid, double growth_threshold = 1.5);

struct QualificationDiagnostic {
  double mu = 0.0;
  bool bounded = false;
  double growth_factor = 0.0;
};

struct QualificationEstimate {
  double mu_lo = 0.0;
  double mu_hi = 0.0;
  std::vector<QualificationDiagnostic> per_mu_diagnostics;
  bool sentinel_infinite = false;
};

/// Bisection on μ ∈ [0, mu_max] until mu_hi − mu_lo ≤ tol.
QualificationEstimate estimate_classical_order(const FilterFamily& fam, double mu_max = 8.0, double tol = 0.025,
                                               const QualificationGrids& grids = {});

struct MaximalCheck {
  double gamma_witness = 0.0;
  double gamma_growth = 0.0;
  std::vector<std::pair<double, double>> c_witness_per_lambda;  // (λ probe, min over α)
  std::vector<double> c_decay;                                  // smallest-decade min / largest-decade min
  bool passed = false;
};

/// Upper bound: γ(α) = sup_λ |r_α(λ)| ρ(λ)/ρ(α) without growth toward α → 0.
/// Lower bound: |r_α(λ)|/ρ(α) at each probe stays positive and does not decay toward α → 0.
MaximalCheck check_maximal(const FilterFamily& fam, const IndexFunction& rho, std::span<const double> alpha_grid,
                           std::span<const double> lambda_probes, std::span<const double> lambda_grid,
                           double growth_threshold = 1.5);

/// Θ(t) = √t ρ(t) on (0, domain_cap], inverted on (0, Θ(range_cap)).
class ThetaMap {
 public:
  /// Throws InvalidArgument when Θ is not strictly increasing on a 1024-point log grid
  /// over [1e-200·range_cap, range_cap]. range_cap defaults to domain_cap.
  ThetaMap(IndexFunction rho, double domain_cap, std::optional<double> range_cap = std::nullopt);

  const IndexFunction& rho() const { return rho_; }
  double domain_cap() const { return domain_cap_; }
  /// Upper end of the invertible range, Θ(range_cap). The lower end is open at 0.
  double range_sup() const { return range_sup_; }

 private:
  IndexFunction rho_;
  double domain_cap_;
  double range_cap_;
  double range_sup_;

  friend double theta_eval(const ThetaMap& map, double t);
  friend double theta_inv(const ThetaMap& map, double delta);
};

double theta_eval(const ThetaMap& map, double t);
/// Solves Θ(t) = δ by bisection in log t. Throws OutOfRange for δ ∉ (0, Θ(range_cap)].
double theta_inv(const ThetaMap& map, double delta);

/// 2μ₀/(2μ₀+1).
double saturation_rate_classical(double mu0);

}  // namespace specreg
