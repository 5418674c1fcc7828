#pragma once

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specreg/filters.hpp"
#include "specreg/index_function.hpp"
#include "specreg/spectral_model.hpp"

namespace specreg {

/// Outcome of one grid-based hypothesis check.
///
/// `slack` is the smallest normalized margin seen on the grid; a check passes when
/// slack ≥ −kSlackTolerance. Failed checks always carry `worst_point`, passed
/// existence-type checks carry `witnessed_constant`.
struct CheckResult {
  std::string id;
  bool passed = false;
  std::optional<double> witnessed_constant;
  std::optional<std::pair<double, double>> worst_point;  // (α, λ), or (s, t) for LUT
  double slack = 0.0;
};

inline constexpr double kSlackTolerance = 1e-12;

/// Evaluation grids. λ is log-spaced on [lambda_min_rel·cap, cap] plus λ = 0; α is
/// log-spaced on [alpha_min, α₀(1 − 1e-9)]. Every per-α λ grid additionally holds the
/// family breakpoints m·α (and the float just below each) and any caller-supplied
/// multiples.
struct HypothesisGrids {
  double lambda_cap = 1.0;
  std::size_t lambda_points = 512;
  double lambda_min_rel = 1e-12;
  std::size_t alpha_points = 128;
  double alpha_min = 1e-8;

  std::vector<double> alphas(const FilterFamily& fam) const;
  std::vector<double> lambdas(const FilterFamily& fam, double alpha,
                              std::span<const double> extra_multiples = {}, bool with_zero = true,
                              bool below_breakpoints = true) const;
  std::vector<double> base_lambdas() const;
  std::string describe() const;
};

/// H2: sup |λ g_α(λ)| bounded independently of α. With `claimed_bound` the check is
/// sup ≤ C; otherwise the supremum must be finite without growth toward λ → 0 or α → 0.
CheckResult check_H2(const FilterFamily& fam, const HypothesisGrids& grids,
                     std::optional<double> claimed_bound = std::nullopt);

/// H3 in the scaled form |λ g_α(λ) − 1| → 0 along a decreasing α sequence. Passes per λ
/// when the final error is ≤ 1e-6, or when the error is non-increasing over the second
/// half of the sequence and ends at most a quarter of its peak (slow, e.g. logarithmic,
/// convergence).
CheckResult check_H3(const FilterFamily& fam, std::span<const double> lambda_grid,
                     std::span<const double> alpha_sequence);
CheckResult check_H3(const FilterFamily& fam, const HypothesisGrids& grids);

/// H4 in sup-norm form: G_α √α without growth as α → 0 (smallest-decade max ≤ 1.05 ×
/// max over the rest of the grid).
CheckResult check_H4(const FilterFamily& fam, const HypothesisGrids& grids);

/// Weighted H4 (id "H4w"): sup_λ √λ |g_α(λ)| · √α bounded, the form the saturation
/// argument consumes.
CheckResult check_H4_weighted(const FilterFamily& fam, const HypothesisGrids& grids);

/// Constants of hypotheses ii.a–e (equivalently M2 a–e). Missing γ₁/γ₂ switch the
/// corresponding check to search mode: the grid extremum is witnessed and must be > 0.
struct MonotonicityConstants {
  double lambda1 = 1.0;
  std::optional<double> gamma1;
  double c1 = 2.0;
  std::optional<double> gamma2;
};

/// Returns the five checks a–e with ids `<prefix>A..E` for prefix "ii" and
/// `<prefix>a..e` for prefix "M2".
std::vector<CheckResult> check_theorem44_ii(const FilterFamily& fam, const MonotonicityConstants& k,
                                            const HypothesisGrids& grids, const std::string& prefix = "ii");

/// (λ/α)^{μ₀} |r_α(λ)| ≥ γ for c·α ≤ λ ≤ ‖T‖². Search mode without γ.
CheckResult check_iv(const FilterFamily& fam, double mu0, double c, std::optional<double> gamma,
                     const HypothesisGrids& grids);

/// Upper: sup_λ |r_α(λ)| ρ(λ) ≤ γ ρ(α). Lower: ρ(λ)|r_α(λ)|/ρ(α) ≥ a for k·α ≤ λ.
/// Missing γ or a switch to search mode with a decade-trend test.
std::pair<CheckResult, CheckResult> check_M3(const FilterFamily& fam, const IndexFunction& rho,
                                             std::optional<double> a, double k, std::optional<double> gamma,
                                             const HypothesisGrids& grids);

/// λ ↦ |r_α(λ)|² convex on (0, ‖T‖²] for every α on the grid.
CheckResult check_M4(const FilterFamily& fam, const HypothesisGrids& grids);

/// sup_λ √λ |g_α(λ)| ≥ b/√α for every α ≤ alpha_limit on the grid (the bound is
/// derived from ii.d, so it is only claimed where c₁α ≤ λ₁).
CheckResult check_M5(const FilterFamily& fam, double b, const HypothesisGrids& grids,
                     double alpha_limit = std::numeric_limits<double>::infinity());

/// ρ(t) ≤ d s^{-β} ρ(s t) on a (s, t) grid with s ∈ [1e-12, 1], t ∈ [1e-12·a, a].
/// Witnesses the smallest admissible d.
CheckResult check_local_upper_type(const IndexFunction& rho, double beta, double d, double a,
                                   std::size_t points = 128);

/// min_i |r_α(λ_i)| > 0 on the operator spectrum for every α on the grid.
CheckResult check_invertibility(const FilterFamily& fam, const SpectralOperator& op,
                                std::span<const double> alpha_grid);

/// Ratio bound c of the spectrum (M1).
CheckResult check_M1(const SpectralOperator& op);

struct HypothesisReport {
  std::string family;
  std::map<std::string, double> params;
  double lambda_cap = 1.0;
  std::string grids;
  std::vector<CheckResult> checks;

  const CheckResult* find(const std::string& id) const;
};

/// Runs every check that applies to a built-in family with the constants the family
/// is documented to satisfy. Families outside the catalogue get H2–H4 only.
HypothesisReport build_report(const FilterFamily& fam, const SpectralOperator& op,
                              const HypothesisGrids& grids);

}  // namespace specreg
