#pragma once

#include <functional>
#include <string>

namespace specreg {

/// A named scalar function of the spectral variable: source index functions ρ,
/// their Θ transforms, and ad-hoc test functions all use this shape.
struct IndexFunction {
  std::string name;
  std::function<double(double)> eval;

  double operator()(double t) const { return eval(t); }
};

namespace index_functions {

/// t ↦ t^mu
IndexFunction power(double mu);

/// t ↦ −1/ln t, increasing on (0, 1); the logarithmic source condition.
IndexFunction inverse_log();

/// t ↦ t·exp(t/ln t); the index function attached to the fourth built-in family.
IndexFunction exp_log_damped();

/// Constant 1.
IndexFunction one();

/// Resolves a config name: "log", "example4", "power:<mu>", "one".
IndexFunction by_name(const std::string& name);

}  // namespace index_functions
}  // namespace specreg
