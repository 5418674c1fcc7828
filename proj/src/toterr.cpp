#include "specreg/toterr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specreg/error.hpp"
#include "specreg/grid.hpp"

namespace specreg {

namespace {

constexpr int kMaxIterations = 128;

double norm2(std::span<const double> v) {
  double s = 0.0;
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  for (double x : v) {
    const double y = x / scale;
    s += y * y;
  }
  return scale * std::sqrt(s);
}

double objective(std::span<const double> b, std::span<const double> d, std::span<const double> e) {
  std::vector<double> v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) v[i] = b[i] + d[i] * e[i];
  return norm2(v);
}

struct Secular {
  std::span<const double> p;    // d_i b_i
  std::span<const double> gap;  // dmax² − d_i²

  // log F(w) and d log F / d log w, F(w) = w ‖p/(1 + w gap)‖.
  std::pair<double, double> eval(double w) const {
    double scale = 0.0;
    std::vector<double> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] = p[i] / (1.0 + w * gap[i]);
      scale = std::max(scale, std::abs(q[i]));
    }
    double s = 0.0;
    double ds = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double y = q[i] / scale;
      s += y * y;
      ds += y * y * w * gap[i] / (1.0 + w * gap[i]);
    }
    return {std::log(w) + std::log(scale) + 0.5 * std::log(s), 1.0 - ds / s};
  }
};

}  // namespace

WorstCaseSolution worst_case_error(std::span<const double> b, std::span<const double> d, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw InvalidArgument("worst_case_error: delta must be positive");
  if (b.size() != d.size() || b.empty()) throw InvalidArgument("worst_case_error: b and d must match in size");
  const std::size_t n = b.size();

  double dmax2 = 0.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] * d[i] > dmax2) {
      dmax2 = d[i] * d[i];
      arg = i;
    }
  }
  std::vector<double> gap(n);
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    gap[i] = dmax2 - d[i] * d[i];
    p[i] = d[i] * b[i];
  }

  WorstCaseSolution sol;
  sol.noise.assign(n, 0.0);

  // Hard case: the secular function stays below δ as ν → dmax²⁺.
  bool pinned = false;
  double limit_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (gap[i] == 0.0) {
      if (p[i] != 0.0) pinned = true;
    } else {
      const double q = p[i] / gap[i];
      limit_sq += q * q;
    }
  }
  if (!pinned && limit_sq <= delta * delta) {
    for (std::size_t i = 0; i < n; ++i) {
      if (gap[i] > 0.0) sol.noise[i] = p[i] / gap[i];
    }
    sol.noise[arg] += std::sqrt(delta * delta - limit_sq);
    sol.value = objective(b, d, sol.noise);
    sol.multiplier = dmax2;
    sol.hard_case = true;
    return sol;
  }

  const double pn = norm2(p);
  double lo = delta / pn;
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double excess = std::abs(p[i]) - delta * gap[i];
    if (excess > 0.0) hi = std::min(hi, delta / excess);
  }
  const Secular sec{p, gap};
  const double target = std::log(delta);
  if (!std::isfinite(hi)) {
    hi = lo;
    int doublings = 0;
    while (sec.eval(hi).first < target) {
      lo = hi;
      hi *= 2.0;
      if (++doublings > 2100) throw NumericFailure("worst_case_error: secular bracket did not close");
    }
  }
  hi = std::max(hi, lo);

  double w = std::sqrt(lo) * std::sqrt(hi);
  bool converged = false;
  for (int it = 0; it < kMaxIterations; ++it) {
    const auto [lf, slope] = sec.eval(w);
    const double res = lf - target;
    if (std::abs(res) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(target))) {
      converged = true;
      break;
    }
    if (res < 0.0) lo = w;
    else hi = w;
    if (hi / lo - 1.0 <= 4.0 * std::numeric_limits<double>::epsilon()) {
      converged = true;
      break;
    }
    double next = w * std::exp(-res / std::max(slope, 1e-300));
    if (!(next > lo && next < hi)) next = std::sqrt(lo) * std::sqrt(hi);
    w = next;
  }
  if (!converged) throw NumericFailure("worst_case_error: secular iteration hit the iteration cap");

  for (std::size_t i = 0; i < n; ++i) sol.noise[i] = p[i] * w / (1.0 + w * gap[i]);
  const double en = norm2(sol.noise);
  for (double& e : sol.noise) e *= delta / en;
  sol.value = objective(b, d, sol.noise);
  sol.multiplier = dmax2 + 1.0 / w;
  return sol;
}

namespace {

void bias_and_gain(const SpectralOperator& op, const FilterFamily& fam, double alpha, const SpectralElement& x,
                   std::vector<double>& b, std::vector<double>& d) {
  const auto lam = op.eigenvalues();
  if (x.coeffs.size() != lam.size()) throw InvalidArgument("element dimension does not match the operator");
  b.resize(lam.size());
  d.resize(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    b[i] = -fam.r(alpha, lam[i]) * x.coeffs[i];
    d[i] = std::sqrt(lam[i]) * fam.g(alpha, lam[i]);
  }
}

}  // namespace

WorstCaseSolution worst_case_error(const SpectralOperator& op, const FilterFamily& fam, double alpha,
                                   const SpectralElement& x, double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("worst_case_error: delta must be positive");
  if (x.is_zero()) throw DegenerateSource("worst_case_error: x is identically zero");
  std::vector<double> b;
  std::vector<double> d;
  bias_and_gain(op, fam, alpha, x, b, d);
  return worst_case_error(b, d, delta);
}

double kkt_residual(std::span<const double> b, std::span<const double> d, const WorstCaseSolution& sol) {
  std::vector<double> r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    r[i] = d[i] * (b[i] + d[i] * sol.noise[i]) - sol.multiplier * sol.noise[i];
  }
  return norm2(r);
}

TotalErrorResult total_error(const SpectralOperator& op, const FilterFamily& fam, const SpectralElement& x,
                             double delta, const AlphaGridSpec& spec) {
  if (!(delta > 0.0)) throw InvalidArgument("total_error: delta must be positive");
  if (x.is_zero()) throw DegenerateSource("total_error: x is identically zero");
  if (spec.points < 3) throw InvalidArgument("total_error: alpha grid needs at least three points");
  const double a_hi = spec.alpha_max > 0.0 ? spec.alpha_max : fam.alpha_max() * (1.0 - 1e-9);
  if (!fam.in_domain(a_hi)) throw InvalidArgument("total_error: alpha grid upper end outside the family domain");
  if (!(spec.alpha_min > 0.0) || !(spec.alpha_min < a_hi)) {
    throw InvalidArgument("total_error: alpha grid lower end must lie in (0, upper end)");
  }
  const auto alphas = log_grid(spec.alpha_min, a_hi, spec.points);

  std::vector<double> b;
  std::vector<double> d;
  auto worst = [&](double a) {
    bias_and_gain(op, fam, a, x, b, d);
    return worst_case_error(b, d, delta).value;
  };

  TotalErrorResult out;
  out.profile.reserve(alphas.size());
  std::size_t best = 0;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    out.profile.emplace_back(alphas[j], worst(alphas[j]));
    if (out.profile[j].second < out.profile[best].second) best = j;
  }
  out.alpha_star = alphas[best];
  out.value = out.profile[best].second;

  // Golden section in log α on the bracket around the best grid point.
  double lo = std::log(alphas[best == 0 ? 0 : best - 1]);
  double hi = std::log(alphas[std::min(best + 1, alphas.size() - 1)]);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double stop = std::log1p(spec.rel_width);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = worst(std::exp(x1));
  double f2 = worst(std::exp(x2));
  for (int it = 0; it < 200 && hi - lo > stop; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = worst(std::exp(x1));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = worst(std::exp(x2));
    }
  }
  const double xr = f1 <= f2 ? x1 : x2;
  const double fr = std::min(f1, f2);
  if (fr < out.value) {
    out.value = fr;
    out.alpha_star = std::exp(xr);
  }
  out.boundary_hit = out.alpha_star < alphas[1] || out.alpha_star > alphas[alphas.size() - 2];
  return out;
}

BiasNoiseProfile bias_noise_profile(const SpectralOperator& op, const FilterFamily& fam, double alpha,
                                    const SpectralElement& x) {
  BiasNoiseProfile out;
  out.bias_norm = residual_norm(op, fam, alpha, x);
  const auto lam = op.eigenvalues();
  out.amplification.resize(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) out.amplification[i] = std::sqrt(lam[i]) * fam.g(alpha, lam[i]);
  return out;
}

}  // namespace specreg
