#pragma once

#include <span>
#include <utility>
#include <vector>

#include "specreg/filters.hpp"
#include "specreg/spectral_model.hpp"

namespace specreg {

/// Maximizer of ‖b + D e‖ over ‖e‖ ≤ δ with D = diag(d).
struct WorstCaseSolution {
  std::vector<double> noise;
  double value = 0.0;
  double multiplier = 0.0;  // ν with D(b + De) = ν e
  bool hard_case = false;
};

/// Core solver on explicit bias b and amplification d. Throws InvalidArgument for δ ≤ 0
/// or mismatched sizes, NumericFailure when the secular iteration does not converge.
WorstCaseSolution worst_case_error(std::span<const double> b, std::span<const double> d, double delta);

/// b_i = −r_α(λ_i) x_i, d_i = √λ_i g_α(λ_i). Throws DegenerateSource for x ≡ 0.
WorstCaseSolution worst_case_error(const SpectralOperator& op, const FilterFamily& fam, double alpha,
                                   const SpectralElement& x, double delta);

/// Stationarity residual ‖D(b + De) − νe‖.
double kkt_residual(std::span<const double> b, std::span<const double> d, const WorstCaseSolution& sol);

struct AlphaGridSpec {
  std::size_t points = 96;
  double alpha_min = 1e-10;
  /// Upper end; ≤ 0 means α₀(1 − 1e-9).
  double alpha_max = 0.0;
  /// Golden-section stops once hi/lo − 1 ≤ rel_width.
  double rel_width = 1e-6;
};

struct TotalErrorResult {
  double alpha_star = 0.0;
  double value = 0.0;
  bool boundary_hit = false;
  std::vector<std::pair<double, double>> profile;  // (α, worst-case value) on the scan grid
};

/// inf over α of the worst case: log-grid scan, then golden-section search in log α
/// inside the best three-point bracket.
TotalErrorResult total_error(const SpectralOperator& op, const FilterFamily& fam, const SpectralElement& x,
                             double delta, const AlphaGridSpec& spec = {});

struct BiasNoiseProfile {
  double bias_norm = 0.0;
  std::vector<double> amplification;
};

BiasNoiseProfile bias_noise_profile(const SpectralOperator& op, const FilterFamily& fam, double alpha,
                                    const SpectralElement& x);

}  // namespace specreg
