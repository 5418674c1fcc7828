#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace specreg {

/// `count` points geometrically spaced from `first` to `last` (either order), endpoints exact.
std::vector<double> log_grid(double first, double last, std::size_t count);

/// Sorted union of `base` and `extra`, duplicates removed, restricted to [lo, hi].
std::vector<double> merge_points(std::span<const double> base, std::span<const double> extra,
                                 double lo, double hi);

/// Extremum of a sampled quantity on the smallest-α decade against a reference region.
struct DecadeGrowth {
  double small = 0.0;      // extremum over the decade closest to α → 0
  double reference = 0.0;  // extremum over the reference region
  double ratio = 0.0;      // small / reference (inf when reference == 0 < small)
};

/// Compares max(values) over the smallest decade of `alphas` with the max over the
/// largest decade (`reference_rest == false`) or over everything outside the
/// smallest decade (`reference_rest == true`). `alphas` need not be sorted.
DecadeGrowth decade_growth(std::span<const double> alphas, std::span<const double> values,
                           bool reference_rest = false);

/// Same comparison with minima over the smallest and largest decades, used to detect
/// decay toward zero.
DecadeGrowth decade_decay(std::span<const double> alphas, std::span<const double> values);

}  // namespace specreg
