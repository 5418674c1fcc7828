#include "specreg/filters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "specreg/error.hpp"
#include "specreg/grid.hpp"

namespace specreg {

FilterFamily::FilterFamily(Definition def) : def_(std::move(def)) {
  if (!(def_.alpha_max > 0.0) || !std::isfinite(def_.alpha_max)) {
    throw InvalidArgument("family '" + def_.name + "': alpha_max must be positive and finite");
  }
  if (!def_.g && !def_.r) throw InvalidArgument("family '" + def_.name + "': needs g or r");
  if (!def_.r) {
    def_.r = [g = def_.g](double a, double l) { return 1.0 - l * g(a, l); };
  } else if (!def_.g) {
    def_.g = [r = def_.r](double a, double l) { return l == 0.0 ? 0.0 : (1.0 - r(a, l)) / l; };
  }
}

void FilterFamily::check_args(double alpha, double lambda) const {
  if (!in_domain(alpha)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "family '" << def_.name << "': alpha = " << alpha << " outside (0, " << def_.alpha_max << ")";
    throw InvalidArgument(msg.str());
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("family '" + def_.name + "': spectral point must be finite and >= 0");
  }
}

namespace {

double finite_or_throw(double v, const std::string& fam, const char* what, double alpha, double lambda) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "family '" << fam << "': " << what << "(alpha=" << alpha << ", lambda=" << lambda << ") is not finite";
    throw EvaluationError(msg.str());
  }
  return v;
}

}  // namespace

double FilterFamily::g(double alpha, double lambda) const {
  check_args(alpha, lambda);
  return finite_or_throw(def_.g(alpha, lambda), def_.name, "g", alpha, lambda);
}

double FilterFamily::r(double alpha, double lambda) const {
  check_args(alpha, lambda);
  return finite_or_throw(def_.r(alpha, lambda), def_.name, "r", alpha, lambda);
}

namespace families {

FilterFamily tikhonov(double alpha_max) {
  FilterFamily::Definition d;
  d.name = "tikhonov";
  d.alpha_max = alpha_max;
  d.g = [](double a, double l) { return 1.0 / (l + a); };
  d.r = [](double a, double l) { return a / (l + a); };
  d.claimed_order = 1.0;
  d.claimed_rho = index_functions::power(1.0);
  d.breakpoints = {1.0};
  return FilterFamily(std::move(d));
}

FilterFamily example2(double k, double norm_sq, std::optional<double> alpha_max) {
  if (!(k >= 1.0) || !std::isfinite(k)) throw InvalidArgument("example2: parameter k must be >= 1");
  if (!(norm_sq > 0.0)) throw InvalidArgument("example2: norm_sq must be positive");
  FilterFamily::Definition d;
  d.name = "example2";
  d.params = {{"k", k}};
  d.alpha_max = alpha_max.value_or(std::min(1.0 / 3.0, norm_sq / 3.0));
  // λ g = 1 − α^k λ^{3/2} − s_α(λ), written so that small λ does not cancel.
  d.g = [k](double a, double l) {
    if (l == 0.0) return 1.0 / std::sqrt(a);
    const double ak = std::pow(a, k);
    const double z = l < a ? l / std::sqrt(a) : std::sqrt(l / a);
    double out = -std::expm1(-z) / l - ak * std::sqrt(l);
    if (l >= 3.0 * a) out -= std::pow(a / l, k) / l;
    return out;
  };
  d.r = [k](double a, double l) {
    const double ak = std::pow(a, k);
    const double z = l < a ? l / std::sqrt(a) : std::sqrt(l / a);
    double out = ak * l * std::sqrt(l) + std::exp(-z);
    if (l >= 3.0 * a) out += std::pow(a / l, k);
    return out;
  };
  d.claimed_order = k;
  d.claimed_rho = index_functions::power(k);
  d.breakpoints = {1.0, 2.0, 3.0};
  return FilterFamily(std::move(d));
}

FilterFamily example3(double eps, double alpha_max) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("example3: parameter eps must lie in (0, 1)");
  if (!(alpha_max < std::exp(-1.0))) throw InvalidArgument("example3: alpha_max must be < e^-1");
  FilterFamily::Definition d;
  d.name = "example3";
  d.params = {{"eps", eps}};
  d.alpha_max = alpha_max;
  // h depends on α through its branch: α below λ = α, α^{1+ε} above.
  auto h = [eps](double a, double l) { return l < a ? a : std::pow(a, 1.0 + eps); };
  // g and r share λ^{1+ε} and the denominator so that 1 − λg reproduces r to rounding.
  d.g = [eps, h](double a, double l) {
    if (l == 0.0) return 0.0;
    const double la = std::log(a);
    const double p = std::pow(l, 1.0 + eps);
    return -(1.0 + la) * (p / l) / (h(a, l) - p * la);
  };
  d.r = [eps, h](double a, double l) {
    const double hv = h(a, l);
    const double p = std::pow(l, 1.0 + eps);
    return (hv + p) / (hv - p * std::log(a));
  };
  d.claimed_order = 0.0;
  d.claimed_rho = index_functions::inverse_log();
  d.breakpoints = {1.0, 2.0};
  return FilterFamily(std::move(d));
}

FilterFamily example4(double alpha_max) {
  if (!(alpha_max < 1.0)) throw InvalidArgument("example4: alpha_max must be < 1");
  FilterFamily::Definition d;
  d.name = "example4";
  d.alpha_max = alpha_max;
  d.g = [](double a, double l) { return l < a ? 0.0 : std::exp(l / std::log(a)) / l; };
  d.r = [](double a, double l) { return l < a ? 1.0 : -std::expm1(l / std::log(a)); };
  d.claimed_order = 0.0;
  d.claimed_rho = index_functions::exp_log_damped();
  d.breakpoints = {1.0};
  return FilterFamily(std::move(d));
}

FilterFamily tsvd(double alpha_max) {
  FilterFamily::Definition d;
  d.name = "tsvd";
  d.alpha_max = alpha_max;
  d.g = [](double a, double l) { return l < a ? 0.0 : 1.0 / l; };
  d.r = [](double a, double l) { return l < a ? 1.0 : 0.0; };
  d.claimed_order = std::numeric_limits<double>::infinity();
  d.breakpoints = {1.0};
  return FilterFamily(std::move(d));
}

std::vector<FamilyInfo> catalogue() {
  return {
      {"tikhonov", "g(alpha, lambda) = 1/(lambda + alpha)", {}, "1"},
      {"example2",
       "three-branch family with classical qualification of order k",
       {{"k", "k >= 1", 1.0}},
       "min(1/3, norm_sq/3)"},
      {"example3", "logarithmic family, maximal qualification -1/ln(alpha)", {{"eps", "0 < eps < 1", 0.5}}, "0.3"},
      {"example4", "g = exp(lambda/ln alpha)/lambda above alpha, 0 below", {}, "0.1"},
      {"tsvd", "truncated SVD: g = 1/lambda above alpha, 0 below", {}, "1"},
  };
}

FilterFamily make(const std::string& name, const std::map<std::string, double>& params,
                  std::optional<double> alpha_max, double norm_sq) {
  const auto info = catalogue();
  const auto it = std::find_if(info.begin(), info.end(), [&](const FamilyInfo& f) { return f.name == name; });
  if (it == info.end()) throw InvalidArgument("unknown family '" + name + "'");
  for (const auto& [key, value] : params) {
    const bool known = std::any_of(it->params.begin(), it->params.end(),
                                   [&](const ParamSchema& p) { return p.name == key; });
    if (!known) throw InvalidArgument("family '" + name + "' has no parameter '" + key + "'");
  }
  auto param = [&](const char* key, double fallback) {
    const auto p = params.find(key);
    return p == params.end() ? fallback : p->second;
  };
  if (name == "tikhonov") return tikhonov(alpha_max.value_or(1.0));
  if (name == "example2") return example2(param("k", 1.0), norm_sq, alpha_max);
  if (name == "example3") return example3(param("eps", 0.5), alpha_max.value_or(0.3));
  if (name == "example4") return example4(alpha_max.value_or(0.1));
  return tsvd(alpha_max.value_or(1.0));
}

}  // namespace families

double sup_g(const FilterFamily& fam, double alpha, double lambda_cap, std::size_t grid) {
  if (grid < 64) throw InvalidArgument("sup_g: grid must have at least 64 points");
  if (!(lambda_cap > 0.0)) throw InvalidArgument("sup_g: lambda_cap must be positive");
  std::vector<double> extra{0.0};
  for (double m : fam.breakpoints()) {
    extra.push_back(m * alpha);
    extra.push_back(std::nextafter(m * alpha, 0.0));
  }
  const auto base = log_grid(1e-12 * lambda_cap, lambda_cap, grid);
  double best = 0.0;
  for (double l : merge_points(base, extra, 0.0, lambda_cap)) best = std::max(best, std::abs(fam.g(alpha, l)));
  return best;
}

}  // namespace specreg
