#pragma once

// Ordinary least squares for y = intercept + slope x.

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

#include "charsum/residue/summation.hpp"

namespace charsum::experiments {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = std::numeric_limits<double>::quiet_NaN();  // needs n >= 3
  double r_squared = std::numeric_limits<double>::quiet_NaN();
  std::size_t n = 0;
};

inline LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("least_squares: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("least_squares: need at least two points");
  CompensatedSum sx, sy;
  for (std::size_t i = 0; i < n; ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
  }
  const double mx = sx.value() / static_cast<double>(n), my = sy.value() / static_cast<double>(n);
  CompensatedSum sxx, sxy, syy;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx.add(dx * dx);
    sxy.add(dx * dy);
    syy.add(dy * dy);
  }
  if (!(sxx.value() > 0)) throw std::invalid_argument("least_squares: x values are all equal");
  LinearFit fit;
  fit.n = n;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;
  CompensatedSum rss;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - fit.intercept - fit.slope * x[i];
    rss.add(e * e);
  }
  if (syy.value() > 0) fit.r_squared = 1.0 - rss.value() / syy.value();
  if (n >= 3) fit.slope_se = std::sqrt(rss.value() / static_cast<double>(n - 2) / sxx.value());
  return fit;
}

}  // namespace charsum::experiments
