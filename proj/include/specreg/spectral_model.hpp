#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "specreg/index_function.hpp"

namespace specreg {

class FilterFamily;

/// Finite diagonal model of T*T. Eigenvalues are positive and strictly descending;
/// T acts through the singular values √λ_i in the same basis.
class SpectralOperator {
 public:
  /// Validates and wraps an explicit spectrum.
  explicit SpectralOperator(std::vector<double> eigenvalues);

  std::span<const double> eigenvalues() const { return eigenvalues_; }
  std::size_t dimension() const { return eigenvalues_.size(); }
  double norm_sq() const { return eigenvalues_.front(); }
  double smallest() const { return eigenvalues_.back(); }
  /// max_n λ_n / λ_{n+1}; 1 for a one-point spectrum.
  double ratio_bound() const { return ratio_bound_; }

  /// Same spectrum multiplied by `factor` > 0.
  SpectralOperator scaled(double factor) const;

 private:
  std::vector<double> eigenvalues_;
  double ratio_bound_ = 1.0;
};

/// λ_i = i^{-s}, i = 1..n.
SpectralOperator make_power_spectrum(std::size_t n, double s);

/// λ_i = q^{i-1}, i = 1..n.
SpectralOperator make_geometric_spectrum(std::size_t n, double q);

/// Coordinates of an element in the eigenbasis of a SpectralOperator.
struct SpectralElement {
  std::vector<double> coeffs;

  double norm() const;
  bool is_zero() const;
};

/// coeffs_i = f(λ_i) · x_i. Throws EvaluationError naming λ_i when f(λ_i) is not finite.
SpectralElement apply_spectral_function(const SpectralOperator& op,
                                        const std::function<double(double)>& f,
                                        const SpectralElement& x);

/// x = (T*T)^mu ξ. Throws DegenerateSource when the result is identically zero.
SpectralElement source_element_power(const SpectralOperator& op, double mu, const SpectralElement& xi);

/// x = ρ(T*T) ξ.
SpectralElement source_element_general(const SpectralOperator& op, const IndexFunction& rho,
                                       const SpectralElement& xi);

/// ‖r_α(T*T) x‖ = ‖R_α T x − x‖.
double residual_norm(const SpectralOperator& op, const FilterFamily& fam, double alpha,
                     const SpectralElement& x);

}  // namespace specreg
