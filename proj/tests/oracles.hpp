#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "specreg/rng.hpp"

namespace oracle {

inline double objective(const std::vector<double>& b, const std::vector<double>& d, const std::vector<double>& e) {
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double v = b[i] + d[i] * e[i];
    s += v * v;
  }
  return std::sqrt(s);
}

// Best of `samples` uniform points on the δ-sphere, then plane-rotation coordinate ascent
// on the sphere until a full sweep improves by less than 1e-16 relative.
inline double worst_case_by_sampling(const std::vector<double>& b, const std::vector<double>& d, double delta,
                                     std::uint64_t seed, int samples = 20000) {
  const std::size_t n = b.size();
  specreg::Rng rng(seed);
  std::vector<double> best(n, 0.0);
  best[0] = delta;
  double fbest = objective(b, d, best);
  std::vector<double> e(n);
  for (int s = 0; s < samples; ++s) {
    double nn = 0.0;
    for (auto& v : e) {
      v = rng.normal();
      nn += v * v;
    }
    nn = std::sqrt(nn);
    for (auto& v : e) v *= delta / nn;
    const double f = objective(b, d, e);
    if (f > fbest) {
      fbest = f;
      best = e;
    }
  }
  if (n == 1) {
    std::vector<double> plus{delta}, minus{-delta};
    return std::max(objective(b, d, plus), objective(b, d, minus));
  }
  for (int sweep = 0; sweep < 4000; ++sweep) {
    const double before = fbest;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double r = std::hypot(best[i], best[j]);
        if (r == 0.0) continue;
        auto f_at = [&](double th) {
          auto t = best;
          t[i] = r * std::cos(th);
          t[j] = r * std::sin(th);
          return objective(b, d, t);
        };
        // dense scan, then golden refinement around the best cell
        const int m = 256;
        const double h = 2.0 * std::numbers::pi / m;
        int k_best = 0;
        double f_best = -1.0;
        for (int k = 0; k < m; ++k) {
          const double f = f_at(k * h);
          if (f > f_best) {
            f_best = f;
            k_best = k;
          }
        }
        double lo = (k_best - 1) * h;
        double hi = (k_best + 1) * h;
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        double f1 = f_at(x1), f2 = f_at(x2);
        for (int it = 0; it < 80; ++it) {
          if (f1 >= f2) {
            hi = x2; x2 = x1; f2 = f1; x1 = hi - g * (hi - lo); f1 = f_at(x1);
          } else {
            lo = x1; x1 = x2; f1 = f2; x2 = lo + g * (hi - lo); f2 = f_at(x2);
          }
        }
        const double th = f1 >= f2 ? x1 : x2;
        if (std::max(f1, f2) > fbest) {
          best[i] = r * std::cos(th);
          best[j] = r * std::sin(th);
          fbest = objective(b, d, best);
        }
      }
    }
    if (fbest - before <= 1e-16 * fbest) break;
  }
  return fbest;
}

}  // namespace oracle
