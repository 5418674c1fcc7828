#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specreg/error.hpp"
#include "specreg/filters.hpp"
#include "specreg/spectral_model.hpp"
#include "specreg/toterr.hpp"

namespace specreg {

/// Malformed or invalid configuration; the message starts with "line N:" when the
/// offending text could be located.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct FamilySpec {
  std::string name = "tikhonov";
  std::map<std::string, double> params;
  std::optional<double> alpha_max;
};

struct SpectrumSpec {
  std::string kind = "power";  // power | geometric | explicit
  std::size_t n = 400;
  double s = 2.0;
  double q = 0.7;
  std::vector<double> values;
  double scale = 1.0;

  SpectralOperator build() const;
};

struct SourceSpec {
  std::vector<double> mu;
  std::optional<double> mu0;
  std::optional<std::string> rho;
};

struct DeltaSpec {
  double from = 1e-2;
  double to = 1e-8;
  std::size_t count = 12;
  std::vector<double> values;

  std::vector<double> build() const;
};

struct OutputSpec {
  std::string dir;
  std::string csv = "saturate.csv";
  std::string report = "saturate_report.json";
};

struct ExperimentConfig {
  FamilySpec family;
  SpectrumSpec spectrum;
  bool spectrum_given = false;
  SourceSpec source;
  DeltaSpec deltas;
  AlphaGridSpec alpha_grid;
  std::uint64_t seed = 20240611;
  OutputSpec output;

  FilterFamily build_family() const;
  /// Operator from the spectrum spec, or the family's default spectrum when none was given.
  SpectralOperator build_operator() const;
};

/// Parses and validates a JSON config. Unknown keys are rejected.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Parses a spectrum object given on its own (for command-line use).
SpectrumSpec parse_spectrum(const std::string& text);

/// Default spectrum for a built-in family: power(400, 2) for tikhonov, example2 and tsvd;
/// geometric(60, 0.7) scaled to 0.3 for example3 and to 0.1 for example4.
SpectrumSpec default_spectrum(const std::string& family);

}  // namespace specreg
