#include "specreg/index_function.hpp"

#include <cmath>
#include <cstdlib>

#include "specreg/error.hpp"

namespace specreg::index_functions {

IndexFunction power(double mu) {
  return {"power:" + std::to_string(mu), [mu](double t) { return std::pow(t, mu); }};
}

IndexFunction inverse_log() {
  return {"log", [](double t) { return -1.0 / std::log(t); }};
}

IndexFunction exp_log_damped() {
  return {"example4", [](double t) { return t * std::exp(t / std::log(t)); }};
}

IndexFunction one() {
  return {"one", [](double) { return 1.0; }};
}

IndexFunction by_name(const std::string& name) {
  if (name == "log") return inverse_log();
  if (name == "example4") return exp_log_damped();
  if (name == "one") return one();
  if (name.rfind("power:", 0) == 0) {
    const std::string tail = name.substr(6);
    char* end = nullptr;
    const double mu = std::strtod(tail.c_str(), &end);
    if (tail.empty() || *end != '\0' || !(mu >= 0.0)) {
      throw InvalidArgument("index function '" + name + "': exponent must be a number >= 0");
    }
    IndexFunction f = power(mu);
    f.name = name;
    return f;
  }
  throw InvalidArgument("unknown index function '" + name + "' (expected log, example4, one, power:<mu>)");
}

}  // namespace specreg::index_functions
