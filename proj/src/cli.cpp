#include "specreg/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "specreg/config.hpp"
#include "specreg/error.hpp"
#include "specreg/hypotheses.hpp"
#include "specreg/io.hpp"
#include "specreg/qualification.hpp"
#include "specreg/satlab.hpp"

namespace specreg::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct CommonFlags {
  std::string config;
  std::string family;
  std::vector<std::string> params;
  std::optional<double> alpha_max;
  std::string spectrum;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON experiment config");
  cmd->add_option("--family", f.family, "tikhonov | example2 | example3 | example4 | tsvd");
  cmd->add_option("--param", f.params, "family parameter as key=value (repeatable)");
  cmd->add_option("--alpha-max", f.alpha_max, "upper end of the alpha domain");
  cmd->add_option("--spectrum", f.spectrum, R"(spectrum as JSON, e.g. {"kind":"power","n":400,"s":2})");
}

ExperimentConfig resolve(const CommonFlags& f) {
  ExperimentConfig cfg = f.config.empty() ? parse_config("{}") : load_config(f.config);
  if (!f.family.empty()) {
    if (cfg.family.name != f.family) cfg.family.params.clear();
    cfg.family.name = f.family;
  }
  for (const auto& kv : f.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidArgument("--param expects key=value, got '" + kv + "'");
    cfg.family.params[kv.substr(0, eq)] = io::parse_double(kv.substr(eq + 1));
  }
  if (f.alpha_max) cfg.family.alpha_max = *f.alpha_max;
  if (!f.spectrum.empty()) {
    cfg.spectrum = parse_spectrum(f.spectrum);
    cfg.spectrum_given = true;
  }
  cfg.build_family();
  return cfg;
}

fs::path output_path(const std::string& name, const std::string& config_dir) {
  fs::path p(name);
  if (p.is_absolute()) return p;
  if (const char* env = std::getenv("SPECREG_OUT_DIR"); env && *env) return fs::path(env) / p;
  if (!config_dir.empty()) return fs::path(config_dir) / p;
  return p;
}

void emit(const std::string& out, const std::string& config_dir, const std::string& content) {
  if (out.empty()) {
    std::cout << content;
    return;
  }
  io::write_atomic(output_path(out, config_dir), content);
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json family_json(const FilterFamily& fam) {
  json j;
  j["name"] = fam.name();
  j["params"] = fam.params();
  j["alpha_max"] = fam.alpha_max();
  return j;
}

std::string cmd_families() {
  json list = json::array();
  for (const auto& info : families::catalogue()) {
    json params = json::array();
    for (const auto& p : info.params) {
      params.push_back({{"name", p.name}, {"constraint", p.constraint}, {"default", optional_number(p.default_value)}});
    }
    list.push_back({{"name", info.name},
                    {"description", info.description},
                    {"params", params},
                    {"alpha_max_default", info.alpha_max_default}});
  }
  return list.dump(2) + "\n";
}

std::string cmd_check(const ExperimentConfig& cfg) {
  const auto op = cfg.build_operator();
  const auto fam = cfg.build_family();
  HypothesisGrids grids;
  grids.lambda_cap = op.norm_sq();
  const auto rep = build_report(fam, op, grids);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json wp = c.worst_point ? json::array({c.worst_point->first, c.worst_point->second}) : json(nullptr);
    checks.push_back({{"id", c.id},
                      {"passed", c.passed},
                      {"witnessed_constant", optional_number(c.witnessed_constant)},
                      {"worst_point", wp},
                      {"slack", c.slack}});
  }
  json j;
  j["family"] = rep.family;
  j["params"] = rep.params;
  j["lambda_cap"] = rep.lambda_cap;
  j["grids"] = rep.grids;
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string cmd_qualification(const ExperimentConfig& cfg, double mu_max, double tol) {
  const auto op = cfg.build_operator();
  const auto fam = cfg.build_family();
  QualificationGrids grids;
  grids.lambda_cap = op.norm_sq();
  const auto est = estimate_classical_order(fam, mu_max, tol, grids);
  json diag = json::array();
  for (const auto& d : est.per_mu_diagnostics) {
    diag.push_back({{"mu", d.mu}, {"bounded", d.bounded}, {"growth_factor", d.growth_factor}});
  }
  json j;
  j["family"] = fam.name();
  j["params"] = fam.params();
  j["mu_lo"] = est.mu_lo;
  j["mu_hi"] = est.mu_hi;
  j["sentinel_infinite"] = est.sentinel_infinite;
  j["diagnostics"] = diag;
  return j.dump(2) + "\n";
}

SpectralElement source_for(const ExperimentConfig& cfg, const SpectralOperator& op, double mu) {
  const auto xi = default_xi(op.dimension(), cfg.seed);
  if (cfg.source.rho) return source_element_general(op, index_functions::by_name(*cfg.source.rho), xi);
  return source_element_power(op, mu, xi);
}

std::string cmd_toterr(const ExperimentConfig& cfg) {
  if (cfg.source.mu.size() > 1) throw InvalidArgument("toterr takes a single source (one mu or a rho)");
  const auto op = cfg.build_operator();
  const auto fam = cfg.build_family();
  const double mu = cfg.source.mu.empty() ? 1.0 : cfg.source.mu.front();
  const auto x = source_for(cfg, op, mu);
  const auto curve = sample_total_error(op, fam, x, cfg.deltas.build(), cfg.alpha_grid);
  std::string csv = "delta,alpha_star,value,boundary_hit\n";
  for (std::size_t i = 0; i < curve.deltas.size(); ++i) {
    csv += io::format_double(curve.deltas[i]) + "," + io::format_double(curve.alpha_stars[i]) + "," +
           io::format_double(curve.values[i]) + "," + (curve.boundary_flags[i] ? "1" : "0") + "\n";
  }
  return csv;
}

json rate_json(const std::optional<RateEstimate>& r) {
  if (!r) return nullptr;
  return {{"slope", r->slope}, {"intercept", r->intercept}, {"max_abs_residual", r->max_abs_residual},
          {"window", r->window}};
}

json verdict_json(const ComparisonVerdict& v) {
  return {{"relation", to_string(v.relation)}, {"ratio_head", v.ratio_head}, {"ratio_tail", v.ratio_tail},
          {"trend", v.trend}, {"band", v.band}};
}

json optional_flag(const std::optional<bool>& b) { return b ? json(*b) : json("not-evaluated"); }

void cmd_saturate(const ExperimentConfig& cfg, const std::string& config_dir) {
  const auto op = cfg.build_operator();
  const auto fam = cfg.build_family();
  const auto deltas = cfg.deltas.build();
  SaturationSweepReport rep;
  std::string source_kind;
  if (cfg.source.rho) {
    source_kind = "maximal";
    rep = saturation_sweep_maximal(op, fam, index_functions::by_name(*cfg.source.rho), cfg.seed, deltas,
                                   cfg.alpha_grid);
  } else {
    source_kind = "classical";
    const auto mu0 = cfg.source.mu0 ? cfg.source.mu0 : fam.claimed_order();
    if (!mu0 || !std::isfinite(*mu0) || !(*mu0 > 0.0)) {
      throw InvalidArgument("saturate: source.mu0 is required for family '" + fam.name() + "'");
    }
    const auto mus = cfg.source.mu.empty() ? std::vector<double>{0.25, 0.5, 1.0, 2.0, 4.0} : cfg.source.mu;
    rep = saturation_sweep_classical(op, fam, *mu0, mus, cfg.seed, deltas, cfg.alpha_grid);
  }

  std::string csv = "family,mu_or_rho,delta,etot,alpha_star,boundary\n";
  json runs = json::array();
  for (const auto& r : rep.runs) {
    const std::string src = std::isnan(r.mu) ? *cfg.source.rho : io::format_double(r.mu);
    for (std::size_t i = 0; i < r.curve.deltas.size(); ++i) {
      csv += fam.name() + "," + src + "," + io::format_double(r.curve.deltas[i]) + "," +
             io::format_double(r.curve.values[i]) + "," + io::format_double(r.curve.alpha_stars[i]) + "," +
             (r.curve.boundary_flags[i] ? "1" : "0") + "\n";
    }
    runs.push_back({{"source", src}, {"rate", rate_json(r.rate)}});
  }
  json j;
  j["family"] = family_json(fam);
  j["sweep"] = source_kind;
  j["seed"] = cfg.seed;
  j["runs"] = runs;
  j["theoretical_exponent"] = source_kind == "classical" ? json(rep.theoretical_exponent) : json(nullptr);
  j["clamp_verdict"] = rep.clamp_verdict;
  j["invariance_verdict"] = optional_flag(rep.invariance_verdict);
  j["optimality_verdict"] = optional_flag(rep.optimality_verdict);
  if (rep.profile_comparison) j["profile_comparison"] = verdict_json(*rep.profile_comparison);
  if (rep.maximal_check_passed) j["maximal_check_passed"] = *rep.maximal_check_passed;
  j["note"] = "verdicts are empirical trend proxies on finite samples; limit conditions as delta -> 0 are not certified";

  io::write_atomic(output_path(cfg.output.csv, config_dir), csv);
  io::write_atomic(output_path(cfg.output.report, config_dir), j.dump(2) + "\n");
}

}  // namespace

int run(const std::vector<std::string>& argv) {
  CLI::App app{"specreg: spectral regularization saturation laboratory"};
  app.require_subcommand(1);

  std::string families_out;
  auto* fam_cmd = app.add_subcommand("families", "list the built-in filter families");
  fam_cmd->add_option("--out", families_out, "output file (stdout if omitted)");

  CommonFlags check_flags;
  auto* check_cmd = app.add_subcommand("check", "run the hypothesis checks for a family");
  add_common(check_cmd, check_flags);
  check_cmd->add_option("--out", check_flags.out, "report JSON (stdout if omitted)");

  CommonFlags qual_flags;
  double mu_max = 8.0;
  double tol = 0.025;
  auto* qual_cmd = app.add_subcommand("qualification", "estimate the classical qualification order");
  add_common(qual_cmd, qual_flags);
  qual_cmd->add_option("--mu-max", mu_max, "scan ceiling");
  qual_cmd->add_option("--tol", tol, "bisection tolerance");
  qual_cmd->add_option("--out", qual_flags.out, "report JSON (stdout if omitted)");

  CommonFlags tot_flags;
  std::optional<double> tot_mu;
  std::string tot_rho;
  std::optional<std::uint64_t> tot_seed;
  std::vector<double> tot_deltas;
  auto* tot_cmd = app.add_subcommand("toterr", "total error over a delta list for one source");
  add_common(tot_cmd, tot_flags);
  auto* mu_opt = tot_cmd->add_option("--mu", tot_mu, "source smoothness: x = (T*T)^mu xi");
  tot_cmd->add_option("--rho", tot_rho, "source index function: log | example4 | power:<mu>")->excludes(mu_opt);
  tot_cmd->add_option("--seed", tot_seed, "seed for xi");
  tot_cmd->add_option("--delta", tot_deltas, "noise levels, descending geometric")->delimiter(',');
  tot_cmd->add_option("--out", tot_flags.out, "CSV output (stdout if omitted)");

  CommonFlags sat_flags;
  std::string sat_out_dir;
  auto* sat_cmd = app.add_subcommand("saturate", "saturation sweep: CSV curves and a JSON report");
  add_common(sat_cmd, sat_flags);
  sat_cmd->add_option("--out-dir", sat_out_dir, "directory for the CSV and report");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();  // program name
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (fam_cmd->parsed()) {
      emit(families_out, "", cmd_families());
    } else if (check_cmd->parsed()) {
      const auto cfg = resolve(check_flags);
      emit(check_flags.out, cfg.output.dir, cmd_check(cfg));
    } else if (qual_cmd->parsed()) {
      const auto cfg = resolve(qual_flags);
      emit(qual_flags.out, cfg.output.dir, cmd_qualification(cfg, mu_max, tol));
    } else if (tot_cmd->parsed()) {
      auto cfg = resolve(tot_flags);
      if (tot_mu) {
        cfg.source.mu = {*tot_mu};
        cfg.source.rho.reset();
      }
      if (!tot_rho.empty()) {
        index_functions::by_name(tot_rho);
        cfg.source.rho = tot_rho;
        cfg.source.mu.clear();
      }
      if (tot_seed) cfg.seed = *tot_seed;
      if (!tot_deltas.empty()) cfg.deltas.values = tot_deltas;
      emit(tot_flags.out, cfg.output.dir, cmd_toterr(cfg));
    } else if (sat_cmd->parsed()) {
      const auto cfg = resolve(sat_flags);
      cmd_saturate(cfg, sat_out_dir.empty() ? cfg.output.dir : sat_out_dir);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "specreg: error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const OutOfRange& e) {
    std::cerr << "specreg: error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DegenerateSource& e) {
    std::cerr << "specreg: error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "specreg: error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "specreg: numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace specreg::cli
