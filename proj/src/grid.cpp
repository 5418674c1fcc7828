#include "specreg/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specreg/error.hpp"

namespace specreg {

std::vector<double> log_grid(double first, double last, std::size_t count) {
  if (!(first > 0.0) || !(last > 0.0)) throw InvalidArgument("log_grid: endpoints must be positive");
  if (count < 2) throw InvalidArgument("log_grid: need at least two points");
  std::vector<double> out(count);
  const double l0 = std::log(first);
  const double l1 = std::log(last);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = std::exp(l0 + t * (l1 - l0));
  }
  out.front() = first;
  out.back() = last;
  return out;
}

std::vector<double> merge_points(std::span<const double> base, std::span<const double> extra,
                                 double lo, double hi) {
  std::vector<double> out;
  out.reserve(base.size() + extra.size());
  for (double v : base)
    if (v >= lo && v <= hi) out.push_back(v);
  for (double v : extra)
    if (v >= lo && v <= hi) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct Decades {
  double a_min;
  double a_max;
};

Decades span_of(std::span<const double> alphas) {
  if (alphas.empty()) throw InvalidArgument("decade comparison on an empty grid");
  auto [lo, hi] = std::minmax_element(alphas.begin(), alphas.end());
  return {*lo, *hi};
}

double ratio_of(double small, double reference) {
  if (reference == 0.0) return small > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  return small / reference;
}

}  // namespace

DecadeGrowth decade_growth(std::span<const double> alphas, std::span<const double> values,
                           bool reference_rest) {
  if (alphas.size() != values.size()) throw InvalidArgument("decade_growth: size mismatch");
  const auto [a_min, a_max] = span_of(alphas);
  double small = -std::numeric_limits<double>::infinity();
  double reference = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const bool in_small = alphas[i] <= 10.0 * a_min;
    const bool in_ref = reference_rest ? !in_small : alphas[i] >= 0.1 * a_max;
    if (in_small) small = std::max(small, values[i]);
    if (in_ref) reference = std::max(reference, values[i]);
  }
  if (reference == -std::numeric_limits<double>::infinity()) reference = small;
  return {small, reference, ratio_of(small, reference)};
}

DecadeGrowth decade_decay(std::span<const double> alphas, std::span<const double> values) {
  if (alphas.size() != values.size()) throw InvalidArgument("decade_decay: size mismatch");
  const auto [a_min, a_max] = span_of(alphas);
  double small = std::numeric_limits<double>::infinity();
  double reference = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i] <= 10.0 * a_min) small = std::min(small, values[i]);
    if (alphas[i] >= 0.1 * a_max) reference = std::min(reference, values[i]);
  }
  return {small, reference, ratio_of(small, reference)};
}

}  // namespace specreg
