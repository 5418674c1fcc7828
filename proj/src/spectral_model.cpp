#include "specreg/spectral_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "specreg/error.hpp"
#include "specreg/filters.hpp"

namespace specreg {

SpectralOperator::SpectralOperator(std::vector<double> eigenvalues) : eigenvalues_(std::move(eigenvalues)) {
  if (eigenvalues_.empty()) throw InvalidArgument("spectrum must contain at least one eigenvalue");
  for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
    const double v = eigenvalues_[i];
    if (!std::isfinite(v) || !(v > 0.0)) {
      std::ostringstream msg;
      msg << "eigenvalue " << i << " = " << v << " is not a positive finite number";
      throw InvalidArgument(msg.str());
    }
    if (i > 0 && !(v < eigenvalues_[i - 1])) {
      std::ostringstream msg;
      msg << "eigenvalues must be strictly descending (index " << i << ")";
      throw InvalidArgument(msg.str());
    }
  }
  for (std::size_t i = 0; i + 1 < eigenvalues_.size(); ++i) {
    ratio_bound_ = std::max(ratio_bound_, eigenvalues_[i] / eigenvalues_[i + 1]);
  }
}

SpectralOperator SpectralOperator::scaled(double factor) const {
  if (!std::isfinite(factor) || !(factor > 0.0)) throw InvalidArgument("spectrum scale must be positive");
  std::vector<double> values(eigenvalues_);
  for (double& v : values) v *= factor;
  return SpectralOperator(std::move(values));
}

SpectralOperator make_power_spectrum(std::size_t n, double s) {
  if (n < 2) throw InvalidArgument("power spectrum needs n >= 2");
  if (!std::isfinite(s) || !(s > 0.0)) throw InvalidArgument("power spectrum needs decay exponent s > 0");
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = std::pow(static_cast<double>(i + 1), -s);
  return SpectralOperator(std::move(values));
}

SpectralOperator make_geometric_spectrum(std::size_t n, double q) {
  if (n < 2) throw InvalidArgument("geometric spectrum needs n >= 2");
  if (!(q > 0.0 && q < 1.0)) throw InvalidArgument("geometric spectrum needs ratio q in (0, 1)");
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = std::pow(q, static_cast<double>(i));
  return SpectralOperator(std::move(values));
}

double SpectralElement::norm() const {
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double c : coeffs) sum += (c / scale) * (c / scale);
  return scale * std::sqrt(sum);
}

bool SpectralElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return c == 0.0; });
}

namespace {

void require_matching(const SpectralOperator& op, const SpectralElement& x) {
  if (x.coeffs.size() != op.dimension()) {
    std::ostringstream msg;
    msg << "element has " << x.coeffs.size() << " coefficients, operator dimension is " << op.dimension();
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

SpectralElement apply_spectral_function(const SpectralOperator& op, const std::function<double(double)>& f,
                                        const SpectralElement& x) {
  require_matching(op, x);
  const auto lambdas = op.eigenvalues();
  SpectralElement out{std::vector<double>(x.coeffs.size())};
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double fv = f(lambdas[i]);
    if (!std::isfinite(fv)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "spectral function is not finite at lambda = " << lambdas[i];
      throw EvaluationError(msg.str());
    }
    out.coeffs[i] = fv * x.coeffs[i];
  }
  return out;
}

SpectralElement source_element_power(const SpectralOperator& op, double mu, const SpectralElement& xi) {
  if (!std::isfinite(mu) || !(mu >= 0.0)) throw InvalidArgument("source smoothness mu must be >= 0");
  SpectralElement x = apply_spectral_function(op, [mu](double t) { return std::pow(t, mu); }, xi);
  if (x.is_zero()) throw DegenerateSource("source element (T*T)^mu xi is identically zero");
  return x;
}

SpectralElement source_element_general(const SpectralOperator& op, const IndexFunction& rho,
                                       const SpectralElement& xi) {
  SpectralElement x = apply_spectral_function(op, rho.eval, xi);
  if (x.is_zero()) throw DegenerateSource("source element rho(T*T) xi is identically zero");
  return x;
}

double residual_norm(const SpectralOperator& op, const FilterFamily& fam, double alpha,
                     const SpectralElement& x) {
  require_matching(op, x);
  const auto lambdas = op.eigenvalues();
  std::vector<double> terms(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) terms[i] = fam.r(alpha, lambdas[i]) * x.coeffs[i];
  return SpectralElement{std::move(terms)}.norm();
}

}  // namespace specreg
