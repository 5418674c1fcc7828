#include "specreg/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "specreg/satlab.hpp"

namespace specreg {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  // 1-based line of the first occurrence of the key path, searched in order.
  std::optional<std::size_t> line_of(const std::vector<std::string>& path) const {
    std::size_t pos = 0;
    for (const auto& key : path) {
      const auto found = text_.find("\"" + key + "\"", pos);
      if (found == std::string::npos) return std::nullopt;
      pos = found + 1;
    }
    if (path.empty()) return std::nullopt;
    std::size_t line = 1;
    for (std::size_t i = 0; i + 1 < pos; ++i)
      if (text_[i] == '\n') ++line;
    return line;
  }

  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& msg) const {
    std::string where;
    for (const auto& p : path) where += (where.empty() ? "" : ".") + p;
    const auto line = line_of(path);
    throw ConfigError((line ? "line " + std::to_string(*line) + ": " : std::string()) + where + ": " + msg);
  }

  void only_keys(const json& obj, const std::vector<std::string>& path, const std::set<std::string>& allowed) const {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
      if (!allowed.count(k)) {
        auto p = path;
        p.push_back(k);
        fail(p, "unknown key");
      }
    }
  }

  double number(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_number()) fail(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(path, "expected a finite number");
    return d;
  }

  std::size_t count(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return static_cast<std::size_t>(v.get<long long>());
  }

  std::string string(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_array()) fail(path, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) out.push_back(number(e, path));
    return out;
  }

 private:
  const std::string& text_;
};

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ConfigError("line " + std::to_string(line) + ": malformed JSON: " + e.what());
  }
}

SpectrumSpec read_spectrum(const Reader& rd, const json& j, const std::vector<std::string>& path) {
  rd.only_keys(j, path, {"kind", "n", "s", "q", "values", "scale"});
  SpectrumSpec s;
  auto at = [&](const char* k) {
    auto p = path;
    p.push_back(k);
    return p;
  };
  if (!j.contains("kind")) rd.fail(path, "missing 'kind'");
  s.kind = rd.string(j["kind"], at("kind"));
  if (s.kind == "power") {
    if (j.contains("q") || j.contains("values")) rd.fail(path, "power spectrum takes n and s only");
    if (j.contains("n")) s.n = rd.count(j["n"], at("n"));
    if (j.contains("s")) s.s = rd.number(j["s"], at("s"));
    if (s.n < 2) rd.fail(at("n"), "need n >= 2");
    if (!(s.s > 0.0)) rd.fail(at("s"), "need s > 0");
  } else if (s.kind == "geometric") {
    if (j.contains("s") || j.contains("values")) rd.fail(path, "geometric spectrum takes n and q only");
    s.n = 60;
    if (j.contains("n")) s.n = rd.count(j["n"], at("n"));
    if (j.contains("q")) s.q = rd.number(j["q"], at("q"));
    if (s.n < 2) rd.fail(at("n"), "need n >= 2");
    if (!(s.q > 0.0 && s.q < 1.0)) rd.fail(at("q"), "need 0 < q < 1");
  } else if (s.kind == "explicit") {
    if (!j.contains("values")) rd.fail(path, "explicit spectrum needs 'values'");
    if (j.contains("n") || j.contains("s") || j.contains("q")) rd.fail(path, "explicit spectrum takes values only");
    s.values = rd.numbers(j["values"], at("values"));
    try {
      SpectralOperator check(s.values);
    } catch (const InvalidArgument& e) {
      rd.fail(at("values"), e.what());
    }
  } else {
    rd.fail(at("kind"), "unknown spectrum kind '" + s.kind + "' (power, geometric, explicit)");
  }
  if (j.contains("scale")) s.scale = rd.number(j["scale"], at("scale"));
  if (!(s.scale > 0.0)) rd.fail(at("scale"), "need scale > 0");
  return s;
}

}  // namespace

SpectralOperator SpectrumSpec::build() const {
  if (kind == "power") return make_power_spectrum(n, s).scaled(scale);
  if (kind == "geometric") return make_geometric_spectrum(n, q).scaled(scale);
  if (kind == "explicit") return SpectralOperator(values).scaled(scale);
  throw InvalidArgument("unknown spectrum kind '" + kind + "'");
}

std::vector<double> DeltaSpec::build() const {
  if (!values.empty()) return values;
  return delta_grid(from, to, count);
}

SpectrumSpec default_spectrum(const std::string& family) {
  SpectrumSpec s;
  if (family == "example3" || family == "example4") {
    s.kind = "geometric";
    s.n = 60;
    s.q = 0.7;
    s.scale = family == "example3" ? 0.3 : 0.1;
  }
  return s;
}

FilterFamily ExperimentConfig::build_family() const {
  return families::make(family.name, family.params, family.alpha_max, build_operator().norm_sq());
}

SpectralOperator ExperimentConfig::build_operator() const {
  return (spectrum_given ? spectrum : default_spectrum(family.name)).build();
}

SpectrumSpec parse_spectrum(const std::string& text) {
  const json j = parse_json(text);
  Reader rd(text);
  return read_spectrum(rd, j, {"spectrum"});
}

ExperimentConfig parse_config(const std::string& text) {
  const json root = parse_json(text);
  Reader rd(text);
  rd.only_keys(root, {}, {"family", "spectrum", "source", "deltas", "alpha_grid", "seed", "output"});
  ExperimentConfig cfg;

  if (root.contains("family")) {
    const auto& f = root["family"];
    rd.only_keys(f, {"family"}, {"name", "params", "alpha_max"});
    if (f.contains("name")) cfg.family.name = rd.string(f["name"], {"family", "name"});
    if (f.contains("params")) {
      const auto& p = f["params"];
      if (!p.is_object()) rd.fail({"family", "params"}, "expected an object");
      for (const auto& [k, v] : p.items()) cfg.family.params[k] = rd.number(v, {"family", "params", k});
    }
    if (f.contains("alpha_max") && !f["alpha_max"].is_null()) {
      cfg.family.alpha_max = rd.number(f["alpha_max"], {"family", "alpha_max"});
    }
  }
  if (root.contains("spectrum")) {
    cfg.spectrum = read_spectrum(rd, root["spectrum"], {"spectrum"});
    cfg.spectrum_given = true;
  }
  if (root.contains("source")) {
    const auto& s = root["source"];
    rd.only_keys(s, {"source"}, {"mu", "mu0", "rho"});
    if (s.contains("mu")) {
      const auto& m = s["mu"];
      cfg.source.mu = m.is_array() ? rd.numbers(m, {"source", "mu"}) : std::vector{rd.number(m, {"source", "mu"})};
      for (double mu : cfg.source.mu)
        if (!(mu >= 0.0)) rd.fail({"source", "mu"}, "smoothness must be >= 0");
    }
    if (s.contains("mu0")) {
      cfg.source.mu0 = rd.number(s["mu0"], {"source", "mu0"});
      if (!(*cfg.source.mu0 > 0.0)) rd.fail({"source", "mu0"}, "need mu0 > 0");
    }
    if (s.contains("rho")) {
      cfg.source.rho = rd.string(s["rho"], {"source", "rho"});
      try {
        index_functions::by_name(*cfg.source.rho);
      } catch (const InvalidArgument& e) {
        rd.fail({"source", "rho"}, e.what());
      }
    }
    if (!cfg.source.mu.empty() && cfg.source.rho) rd.fail({"source"}, "give either mu or rho, not both");
  }
  if (root.contains("deltas")) {
    const auto& d = root["deltas"];
    rd.only_keys(d, {"deltas"}, {"from", "to", "count", "values"});
    if (d.contains("values")) {
      if (d.contains("from") || d.contains("to") || d.contains("count")) {
        rd.fail({"deltas"}, "give either values or from/to/count");
      }
      cfg.deltas.values = rd.numbers(d["values"], {"deltas", "values"});
    }
    if (d.contains("from")) cfg.deltas.from = rd.number(d["from"], {"deltas", "from"});
    if (d.contains("to")) cfg.deltas.to = rd.number(d["to"], {"deltas", "to"});
    if (d.contains("count")) cfg.deltas.count = rd.count(d["count"], {"deltas", "count"});
    if (cfg.deltas.values.empty()) {
      if (!(cfg.deltas.from > cfg.deltas.to && cfg.deltas.to > 0.0)) rd.fail({"deltas"}, "need from > to > 0");
      if (cfg.deltas.count < 2) rd.fail({"deltas", "count"}, "need at least two points");
    }
  }
  if (root.contains("alpha_grid")) {
    const auto& a = root["alpha_grid"];
    rd.only_keys(a, {"alpha_grid"}, {"points", "min", "max", "rel_width"});
    if (a.contains("points")) cfg.alpha_grid.points = rd.count(a["points"], {"alpha_grid", "points"});
    if (a.contains("min")) cfg.alpha_grid.alpha_min = rd.number(a["min"], {"alpha_grid", "min"});
    if (a.contains("max")) cfg.alpha_grid.alpha_max = rd.number(a["max"], {"alpha_grid", "max"});
    if (a.contains("rel_width")) cfg.alpha_grid.rel_width = rd.number(a["rel_width"], {"alpha_grid", "rel_width"});
    if (cfg.alpha_grid.points < 3) rd.fail({"alpha_grid", "points"}, "need at least three points");
    if (!(cfg.alpha_grid.alpha_min > 0.0)) rd.fail({"alpha_grid", "min"}, "need min > 0");
    if (!(cfg.alpha_grid.rel_width > 0.0)) rd.fail({"alpha_grid", "rel_width"}, "need rel_width > 0");
  }
  if (root.contains("seed")) {
    const auto& s = root["seed"];
    if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<long long>() < 0)) {
      rd.fail({"seed"}, "expected a non-negative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  if (root.contains("output")) {
    const auto& o = root["output"];
    rd.only_keys(o, {"output"}, {"dir", "csv", "report"});
    if (o.contains("dir")) cfg.output.dir = rd.string(o["dir"], {"output", "dir"});
    if (o.contains("csv")) cfg.output.csv = rd.string(o["csv"], {"output", "csv"});
    if (o.contains("report")) cfg.output.report = rd.string(o["report"], {"output", "report"});
  }

  // Module preconditions, checked before any computation.
  try {
    const auto fam = cfg.build_family();
    const auto op = cfg.build_operator();
    if (cfg.alpha_grid.alpha_max > 0.0 && !fam.in_domain(cfg.alpha_grid.alpha_max)) {
      rd.fail({"alpha_grid", "max"}, "outside the family's alpha domain");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    rd.fail({"family"}, e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace specreg
