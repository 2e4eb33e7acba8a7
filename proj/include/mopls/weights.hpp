#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mopls/objective.hpp"
#include "mopls/rng.hpp"

namespace mopls {

struct WeightVector {
  std::vector<double> lambdas;
  // Set once the weights have been divided by per-objective ranges; such
  // weights no longer sum to 1.
  bool range_normalized = false;

  std::size_t dim() const { return lambdas.size(); }
};

// Guard for an all-equal objective column: keeps weight normalization and
// reference-point construction defined when a range collapses to zero.
inline double degenerate_range_guard(double range, double anchor_value) {
  if (range > 0.0) return range;
  return std::max(std::abs(anchor_value) * 1e-9, 1e-9);
}

// Uniform draw from the unit simplex: d i.i.d. standard exponentials
// normalized by their sum.
inline WeightVector draw_weight_vector(std::size_t d, Rng& rng) {
  if (d < 2) throw std::invalid_argument("weight vector needs d >= 2");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  WeightVector w;
  w.lambdas.resize(d);
  double sum = 0.0;
  do {
    sum = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      double e = -std::log1p(-unit(rng));
      w.lambdas[k] = e;
      sum += e;
    }
  } while (sum <= 0.0);
  for (double& l : w.lambdas) l /= sum;
  return w;
}

// Divides each weight by the range of its objective; the sum is deliberately
// not re-normalized.
inline WeightVector normalize_weights(const WeightVector& w, const std::vector<double>& ranges) {
  if (w.dim() != ranges.size())
    throw std::invalid_argument("normalize_weights: dimension mismatch");
  WeightVector out;
  out.lambdas.resize(w.dim());
  out.range_normalized = true;
  for (std::size_t k = 0; k < w.dim(); ++k) {
    if (!(ranges[k] > 0.0))
      throw std::invalid_argument("normalize_weights: non-positive range");
    out.lambdas[k] = w.lambdas[k] / ranges[k];
  }
  return out;
}

// y0 = per-objective maxima pushed up by 10% of the per-objective range.
// Zero ranges fall back to the degenerate-range guard so y0 stays strictly
// above the maxima.
inline ObjectiveVector reference_point_from_extremes(const ObjectiveVector& maxima,
                                                     const std::vector<double>& ranges) {
  if (maxima.size() != ranges.size())
    throw std::invalid_argument("reference_point_from_extremes: dimension mismatch");
  ObjectiveVector y0(maxima.size());
  for (std::size_t k = 0; k < maxima.size(); ++k) {
    if (ranges[k] < 0.0)
      throw std::invalid_argument("reference_point_from_extremes: negative range");
    y0[k] = maxima[k] + 0.1 * degenerate_range_guard(ranges[k], maxima[k]);
  }
  return y0;
}

// Weighted Chebycheff scalarizing function, minimized:
//   s(y) = max_k lambda_k * (reference_k - y_k)
struct ChebycheffFunction {
  WeightVector weights;
  ObjectiveVector reference;

  std::size_t dim() const { return reference.size(); }

  double value(const ObjectiveVector& y) const {
    if (y.size() != reference.size() || weights.dim() != reference.size())
      throw std::invalid_argument("chebycheff_value: dimension mismatch");
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < y.size(); ++k) {
      double term = weights.lambdas[k] * (reference[k] - y[k]);
      if (term > best) best = term;
    }
    return best;
  }
};

inline double chebycheff_value(const ChebycheffFunction& f, const ObjectiveVector& y) {
  return f.value(y);
}

}  // namespace mopls
