#include "specreg/satlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "specreg/error.hpp"
#include "specreg/grid.hpp"
#include "specreg/hypotheses.hpp"
#include "specreg/qualification.hpp"
#include "specreg/rng.hpp"

namespace specreg {

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw InsufficientData("least squares needs at least two distinct abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    f.max_abs_residual = std::max(f.max_abs_residual, std::abs(y[i] - f.intercept - f.slope * x[i]));
  }
  return f;
}

void validate_deltas(const std::vector<double>& deltas) {
  if (deltas.size() < 2) throw InvalidArgument("delta grid needs at least two points");
  for (double d : deltas) {
    if (!(d > 0.0) || !std::isfinite(d)) throw InvalidArgument("delta grid entries must be positive");
  }
  const double q = deltas[1] / deltas[0];
  if (!(q < 1.0)) throw InvalidArgument("delta grid must be strictly decreasing");
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    const double qi = deltas[i] / deltas[i - 1];
    if (std::abs(qi - q) > 1e-9 * q) throw InvalidArgument("delta grid must be geometric");
  }
}

}  // namespace

ErrorCurve make_curve(std::vector<double> deltas, std::vector<double> values, std::string tag) {
  if (deltas.size() != values.size()) throw InvalidArgument("make_curve: size mismatch");
  ErrorCurve c;
  c.boundary_flags.assign(deltas.size(), false);
  c.deltas = std::move(deltas);
  c.values = std::move(values);
  c.source_tag = std::move(tag);
  return c;
}

std::vector<double> delta_grid(double largest, double smallest, std::size_t count) {
  if (!(largest > smallest) || !(smallest > 0.0)) throw InvalidArgument("delta_grid: need largest > smallest > 0");
  return log_grid(largest, smallest, count);
}

ErrorCurve sample_total_error(const SpectralOperator& op, const FilterFamily& fam, const SpectralElement& x,
                              const std::vector<double>& deltas, const AlphaGridSpec& alpha_spec, std::string tag) {
  validate_deltas(deltas);
  if (x.is_zero()) throw DegenerateSource("sample_total_error: x is identically zero");
  ErrorCurve c;
  c.source_tag = std::move(tag);
  for (double delta : deltas) {
    TotalErrorResult r;
    try {
      r = total_error(op, fam, x, delta, alpha_spec);
    } catch (const NumericFailure& e) {
      throw PartialCurveError(e.what(), c);
    } catch (const EvaluationError& e) {
      throw PartialCurveError(e.what(), c);
    }
    c.deltas.push_back(delta);
    c.values.push_back(r.value);
    c.alpha_stars.push_back(r.alpha_star);
    c.boundary_flags.push_back(r.boundary_hit);
  }
  for (std::size_t i = 1; i < c.values.size(); ++i) {
    if (c.values[i] > c.values[i - 1] * (1.0 + 1e-9)) {
      throw NumericFailure("sample_total_error: total error increased as delta decreased at delta = " +
                           std::to_string(c.deltas[i]));
    }
  }
  return c;
}

RateEstimate fit_rate(const ErrorCurve& curve, const WindowPolicy& policy) {
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < curve.deltas.size(); ++i) {
    if (policy.exclude_boundary && i < curve.boundary_flags.size() && curve.boundary_flags[i]) continue;
    if (!(curve.values[i] > 0.0)) continue;
    usable.push_back(i);
  }
  if (usable.size() < policy.min_samples || usable.size() < 2) {
    throw InsufficientData("fit_rate: " + std::to_string(usable.size()) + " usable samples, need " +
                           std::to_string(policy.min_samples));
  }
  std::vector<std::size_t> window = usable;
  if (policy.alpha_floor && curve.alpha_stars.size() == curve.deltas.size()) {
    std::vector<std::size_t> resolved;
    for (std::size_t i : usable) {
      if (curve.alpha_stars[i] >= *policy.alpha_floor) resolved.push_back(i);
    }
    if (resolved.size() >= policy.min_samples) {
      window = std::move(resolved);
    } else {
      // Deltas descend, so the head of `usable` holds the largest δ.
      window.assign(usable.begin(), usable.begin() + static_cast<std::ptrdiff_t>(policy.min_samples));
    }
  }
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i : window) {
    lx.push_back(std::log(curve.deltas[i]));
    ly.push_back(std::log(curve.values[i]));
  }
  const auto f = least_squares(lx, ly);
  RateEstimate r;
  r.slope = f.slope;
  r.intercept = f.intercept;
  r.max_abs_residual = f.max_abs_residual;
  r.window = std::move(window);
  return r;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::precedes:
      return "precedes";
    case Relation::strictly_precedes:
      return "strictly_precedes";
    case Relation::equivalent:
      return "equivalent";
    case Relation::incomparable:
      return "incomparable";
  }
  return "incomparable";
}

ComparisonVerdict compare_curves(const ErrorCurve& a, const ErrorCurve& b, const ComparisonThresholds& t) {
  if (a.deltas.size() != b.deltas.size() || a.deltas.size() < 2) {
    throw InvalidArgument("compare_curves: curves must share a delta grid of at least two points");
  }
  for (std::size_t i = 0; i < a.deltas.size(); ++i) {
    if (std::abs(a.deltas[i] - b.deltas[i]) > 1e-12 * a.deltas[i]) {
      throw InvalidArgument("compare_curves: delta grids differ");
    }
    if (!(a.values[i] > 0.0) || !(b.values[i] > 0.0)) throw InvalidArgument("compare_curves: values must be positive");
  }
  auto flagged = [](const ErrorCurve& c, std::size_t i) { return i < c.boundary_flags.size() && c.boundary_flags[i]; };
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.deltas.size(); ++i) {
    if (!flagged(a, i) && !flagged(b, i)) idx.push_back(i);
  }
  if (idx.size() < 2) {
    idx.resize(a.deltas.size());
    std::iota(idx.begin(), idx.end(), 0);
  }
  std::vector<double> lx;
  std::vector<double> lr;
  double rmin = std::numeric_limits<double>::infinity();
  double rmax = 0.0;
  for (std::size_t i : idx) {
    const double r = a.values[i] / b.values[i];
    lx.push_back(std::log(a.deltas[i]));
    lr.push_back(std::log(r));
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  ComparisonVerdict v;
  v.trend = least_squares(lx, lr).slope;
  v.ratio_head = a.values[idx.front()] / b.values[idx.front()];
  v.ratio_tail = a.values[idx.back()] / b.values[idx.back()];
  v.band = rmax / rmin;
  if (v.trend >= t.trend) {
    v.relation = Relation::strictly_precedes;
  } else if (std::abs(v.trend) < t.trend) {
    v.relation = v.band <= t.band_cap ? Relation::equivalent : Relation::precedes;
  } else {
    v.relation = Relation::incomparable;
  }
  return v;
}

SpectralElement default_xi(std::size_t n, std::uint64_t seed) {
  std::vector<double> sign(n);
  for (std::size_t i = 0; i < n; ++i) sign[i] = i % 2 == 0 ? 1.0 : -1.0;
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(sign[i - 1], sign[j]);
  }
  SpectralElement xi;
  xi.coeffs.resize(n);
  for (std::size_t i = 0; i < n; ++i) xi.coeffs[i] = sign[i] * std::pow(static_cast<double>(i + 1), -0.51);
  return xi;
}

SaturationSweepReport saturation_sweep_classical(const SpectralOperator& op, const FilterFamily& fam, double mu0,
                                                 const std::vector<double>& mu_list, std::uint64_t xi_seed,
                                                 const std::vector<double>& deltas,
                                                 const AlphaGridSpec& alpha_spec) {
  if (mu_list.empty()) throw InvalidArgument("saturation sweep: empty mu list");
  SaturationSweepReport rep;
  rep.family = fam.name();
  rep.theoretical_exponent = saturation_rate_classical(mu0);
  const auto xi = default_xi(op.dimension(), xi_seed);
  WindowPolicy policy;
  policy.alpha_floor = op.smallest();

  for (double mu : mu_list) {
    SourceRun run;
    run.mu = mu;
    run.tag = "mu=" + std::to_string(mu);
    const auto x = source_element_power(op, mu, xi);
    run.curve = sample_total_error(op, fam, x, deltas, alpha_spec, run.tag);
    try {
      run.rate = fit_rate(run.curve, policy);
    } catch (const InsufficientData&) {
    }
    rep.runs.push_back(std::move(run));
  }

  const double theory = rep.theoretical_exponent;
  auto at_or_above = [&](const SourceRun& r) { return r.mu >= mu0 - 1e-12; };
  bool clamp = true;
  for (const auto& r : rep.runs) {
    if (!r.rate) {
      clamp = false;
    } else if (at_or_above(r)) {
      clamp = clamp && std::abs(r.rate->slope - theory) <= kSlopeTolerance;
    } else {
      clamp = clamp && r.rate->slope < theory - kSlopeTolerance;
    }
  }
  rep.clamp_verdict = clamp;

  std::vector<const SourceRun*> upper;
  std::vector<const SourceRun*> lower;
  for (const auto& r : rep.runs) (at_or_above(r) ? upper : lower).push_back(&r);
  if (upper.size() >= 2) {
    bool all = true;
    for (std::size_t i = 0; i < upper.size(); ++i) {
      for (std::size_t j = i + 1; j < upper.size(); ++j) {
        all = all && compare_curves(upper[i]->curve, upper[j]->curve).relation == Relation::equivalent;
      }
    }
    rep.invariance_verdict = all;
  }
  if (!lower.empty()) {
    bool all = true;
    for (const auto* r : lower) {
      std::vector<double> psi(deltas.size());
      for (std::size_t i = 0; i < deltas.size(); ++i) psi[i] = std::pow(deltas[i], theory);
      auto profile = make_curve(deltas, std::move(psi), "profile");
      const auto v = compare_curves(profile, r->curve);
      all = all && v.relation == Relation::strictly_precedes && r->rate && r->rate->slope < theory;
    }
    rep.optimality_verdict = all;
  }
  return rep;
}

SaturationSweepReport saturation_sweep_maximal(const SpectralOperator& op, const FilterFamily& fam,
                                               const IndexFunction& rho, std::uint64_t xi_seed,
                                               const std::vector<double>& deltas,
                                               const AlphaGridSpec& alpha_spec) {
  validate_deltas(deltas);
  SaturationSweepReport rep;
  rep.family = fam.name();
  const double cap = op.norm_sq();
  const ThetaMap theta(rho, cap, std::min(cap, fam.alpha_max()));
  rep.profile.resize(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) rep.profile[i] = rho(theta_inv(theta, deltas[i]));

  HypothesisGrids grids;
  grids.lambda_cap = cap;
  const auto alphas = grids.alphas(fam);
  const auto lambdas = grids.base_lambdas();
  const double probes[] = {cap, 0.1 * cap, 0.01 * cap};
  rep.maximal_check_passed = check_maximal(fam, rho, alphas, probes, lambdas).passed;

  SourceRun run;
  run.mu = std::numeric_limits<double>::quiet_NaN();
  run.tag = "rho=" + rho.name;
  const auto x = source_element_general(op, rho, default_xi(op.dimension(), xi_seed));
  run.curve = sample_total_error(op, fam, x, deltas, alpha_spec, run.tag);
  WindowPolicy policy;
  policy.alpha_floor = op.smallest();
  try {
    run.rate = fit_rate(run.curve, policy);
  } catch (const InsufficientData&) {
  }
  const auto profile = make_curve(deltas, rep.profile, "profile");
  rep.profile_comparison = compare_curves(run.curve, profile);
  rep.clamp_verdict = rep.profile_comparison->relation == Relation::equivalent;
  rep.runs.push_back(std::move(run));
  return rep;
}

}  // namespace specreg
