#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specreg/index_function.hpp"

namespace specreg {

/// A spectral regularization family {g_α}, α ∈ (0, alpha_max), with residual
/// r_α(λ) = 1 − λ g_α(λ).
///
/// Built-in families carry a closed-form residual evaluated without the
/// cancellation in 1 − λg; custom families may supply only g (residual
/// derived) or only r (filter derived as (1 − r)/λ, 0 at λ = 0).
class FilterFamily {
 public:
  using Kernel = std::function<double(double alpha, double lambda)>;

  struct Definition {
    std::string name;
    std::map<std::string, double> params;
    double alpha_max = 1.0;
    Kernel g;
    Kernel r;
    std::optional<double> claimed_order;
    std::optional<IndexFunction> claimed_rho;
    /// Multiples m of α at which g or r changes branch or |g| peaks; grids insert m·α.
    std::vector<double> breakpoints;
  };

  explicit FilterFamily(Definition def);

  const std::string& name() const { return def_.name; }
  const std::map<std::string, double>& params() const { return def_.params; }
  double alpha_max() const { return def_.alpha_max; }
  const std::optional<double>& claimed_order() const { return def_.claimed_order; }
  const std::optional<IndexFunction>& claimed_rho() const { return def_.claimed_rho; }
  const std::vector<double>& breakpoints() const { return def_.breakpoints; }

  /// g_α(λ). Throws InvalidArgument for α ∉ (0, alpha_max) or λ < 0, EvaluationError
  /// for a non-finite result.
  double g(double alpha, double lambda) const;
  /// r_α(λ), same contract as g.
  double r(double alpha, double lambda) const;

  bool in_domain(double alpha) const { return alpha > 0.0 && alpha < def_.alpha_max; }

 private:
  void check_args(double alpha, double lambda) const;

  Definition def_;
};

namespace families {

/// g_α(λ) = 1/(λ+α).
FilterFamily tikhonov(double alpha_max = 1.0);

/// The three-branch family with classical qualification of order k ≥ 1. Default
/// α₀ = min{1/3, ‖T‖²/3}.
FilterFamily example2(double k, double norm_sq = 1.0, std::optional<double> alpha_max = std::nullopt);

/// The logarithmic family with ε ∈ (0, 1) and α₀ < e^{-1}.
FilterFamily example3(double eps, double alpha_max = 0.3);

/// g_α(λ) = e^{λ/ln α}/λ for λ ≥ α, 0 below; α₀ < 1.
FilterFamily example4(double alpha_max = 0.1);

/// Truncated SVD: g_α(λ) = 1/λ for λ ≥ α, 0 below.
FilterFamily tsvd(double alpha_max = 1.0);

/// Parameter schema entry for `families` listings.
struct ParamSchema {
  std::string name;
  std::string constraint;
  std::optional<double> default_value;
};

struct FamilyInfo {
  std::string name;
  std::string description;
  std::vector<ParamSchema> params;
  std::string alpha_max_default;
};

std::vector<FamilyInfo> catalogue();

/// Builds a built-in family by config name ("tikhonov", "example2", "example3",
/// "example4", "tsvd"). Unknown names or parameters throw InvalidArgument.
FilterFamily make(const std::string& name, const std::map<std::string, double>& params,
                  std::optional<double> alpha_max, double norm_sq);

}  // namespace families

/// G_α = sup |g_α| over a log grid of `grid` points on [1e-12·cap, cap], λ = 0, and
/// the family's breakpoints.
double sup_g(const FilterFamily& fam, double alpha, double lambda_cap, std::size_t grid = 256);

}  // namespace specreg
