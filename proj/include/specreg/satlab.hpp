#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specreg/filters.hpp"
#include "specreg/index_function.hpp"
#include "specreg/spectral_model.hpp"
#include "specreg/toterr.hpp"

namespace specreg {

/// Sampled total error on a descending geometric δ grid.
struct ErrorCurve {
  std::vector<double> deltas;
  std::vector<double> values;
  std::vector<double> alpha_stars;
  std::vector<bool> boundary_flags;
  std::string source_tag;
};

/// Curve from closed-form samples (no α information, no boundary flags).
ErrorCurve make_curve(std::vector<double> deltas, std::vector<double> values, std::string tag = {});

/// `count` points geometric from `largest` down to `smallest`.
std::vector<double> delta_grid(double largest, double smallest, std::size_t count);

/// Thrown when a sample fails; carries every sample completed before it.
class PartialCurveError : public std::runtime_error {
 public:
  PartialCurveError(const std::string& what, ErrorCurve prefix)
      : std::runtime_error(what), prefix_(std::move(prefix)) {}
  const ErrorCurve& prefix() const { return prefix_; }

 private:
  ErrorCurve prefix_;
};

/// Runs total_error per δ. The grid must be strictly decreasing and geometric.
/// Throws PartialCurveError if a sample fails and NumericFailure if the values are not
/// nondecreasing in δ within 1e-9 relative slack.
ErrorCurve sample_total_error(const SpectralOperator& op, const FilterFamily& fam, const SpectralElement& x,
                              const std::vector<double>& deltas, const AlphaGridSpec& alpha_spec = {},
                              std::string tag = {});

struct WindowPolicy {
  bool exclude_boundary = true;
  /// Samples with α* below this floor are dropped: the finite spectrum no longer
  /// resolves the regularization scale there. If fewer than min_samples survive, the
  /// min_samples largest-δ admissible samples are used instead.
  std::optional<double> alpha_floor;
  std::size_t min_samples = 5;
};

struct RateEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
  std::vector<std::size_t> window;
};

/// Least squares of log value on log δ over the policy window. Throws InsufficientData
/// when fewer than min_samples usable samples exist.
RateEstimate fit_rate(const ErrorCurve& curve, const WindowPolicy& policy = {});

enum class Relation { precedes, strictly_precedes, equivalent, incomparable };
const char* to_string(Relation r);

struct ComparisonThresholds {
  double trend = 0.05;
  double band_cap = 100.0;
};

struct ComparisonVerdict {
  Relation relation = Relation::incomparable;
  double ratio_head = 0.0;  // a/b at the largest δ used
  double ratio_tail = 0.0;  // a/b at the smallest δ used
  double trend = 0.0;       // slope of log(a/b) against log δ
  double band = 0.0;        // max/min of a/b
};

/// Empirical order relation of a against b on a shared δ grid. Samples flagged as
/// boundary hits in either curve are left out while at least two others remain.
ComparisonVerdict compare_curves(const ErrorCurve& a, const ErrorCurve& b, const ComparisonThresholds& t = {});

struct SourceRun {
  std::string tag;
  double mu = 0.0;  // NaN for a general index-function source
  ErrorCurve curve;
  std::optional<RateEstimate> rate;
};

struct SaturationSweepReport {
  std::string family;
  std::vector<SourceRun> runs;
  double theoretical_exponent = 0.0;
  bool clamp_verdict = false;
  std::optional<bool> invariance_verdict;
  std::optional<bool> optimality_verdict;
  std::optional<ComparisonVerdict> profile_comparison;
  std::optional<bool> maximal_check_passed;
  std::vector<double> profile;  // ψ(δ) per δ for the maximal sweep
};

inline constexpr double kSlopeTolerance = 0.06;

/// ξ_i = s_i i^{-0.51}, with a balanced ± sign pattern shuffled by the seed.
SpectralElement default_xi(std::size_t n, std::uint64_t seed);

SaturationSweepReport saturation_sweep_classical(const SpectralOperator& op, const FilterFamily& fam, double mu0,
                                                 const std::vector<double>& mu_list, std::uint64_t xi_seed,
                                                 const std::vector<double>& deltas,
                                                 const AlphaGridSpec& alpha_spec = {});

/// Compares E^tot for x = ρ(T*T)ξ with ψ = ρ∘Θ⁻¹. Throws OutOfRange if some δ is not
/// in the invertible range of Θ.
SaturationSweepReport saturation_sweep_maximal(const SpectralOperator& op, const FilterFamily& fam,
                                               const IndexFunction& rho, std::uint64_t xi_seed,
                                               const std::vector<double>& deltas,
                                               const AlphaGridSpec& alpha_spec = {});

}  // namespace specreg
