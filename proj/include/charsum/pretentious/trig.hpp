#pragma once

// Trigonometric quantities behind the odd-order savings exponent.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "charsum/residue/arithmetic.hpp"
#include "charsum/residue/constants.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

/// delta_g = 1 - (g/pi) sin(pi/g).
inline double delta_g(u64 g) {
  if (g < 1) throw std::invalid_argument("delta_g: g must be positive");
  const double gd = static_cast<double>(g);
  return 1.0 - gd / constants::pi * std::sin(constants::pi / gd);
}

/// Distance from t to the nearest integer.
inline double nearest_int_distance(double t) { return std::abs(t - std::round(t)); }

struct RootMinTerm {
  double over_roots = 0.0;      // min over z in mu_g of 1 - Re z e(-l/k)
  double with_zero = 0.0;       // min over z in {0} u mu_g
  double closed_form = 0.0;     // 1 - cos((2 pi / g) ||l g / k||)
};

/// For g = 1 the set mu_1 = {1} and z = 0 wins once ||l/k|| > 1/4, so
/// `with_zero` and `closed_form` differ there; for g >= 3 they agree.
inline RootMinTerm root_min_term(u64 g, u64 k, i64 ell) {
  if (g < 1 || k < 1) throw std::invalid_argument("root_min_term: g and k must be positive");
  const i64 kk = static_cast<i64>(k);
  const i64 l = ((ell % kk) + kk) % kk;
  RootMinTerm out;
  out.over_roots = 2.0;
  for (u64 j = 0; j < g; ++j) {
    // 1 - cos(2 pi (j/g - l/k)), with the angle reduced exactly as a fraction.
    const i64 num = static_cast<i64>(j * k) - l * static_cast<i64>(g);
    const i64 den = static_cast<i64>(g * k);
    const double frac = nearest_int_distance(static_cast<double>(num) / static_cast<double>(den));
    out.over_roots = std::min(out.over_roots, 1.0 - std::cos(constants::two_pi * frac));
  }
  out.with_zero = std::min(1.0, out.over_roots);
  const i64 lg = l * static_cast<i64>(g);
  const double t = nearest_int_distance(static_cast<double>(lg % kk) / static_cast<double>(k));
  out.closed_form = 1.0 - std::cos(constants::two_pi / static_cast<double>(g) * t);
  return out;
}

struct RootMinAverage {
  double lhs = 0.0;  // (1/k*) sum_{-k*/2 < l <= k*/2} (1 - cos(2 pi l / (g k*)))
  double rhs = 0.0;  // 1 - sin(pi/g) / (k* tan(pi/(g k*)))
};

inline RootMinAverage root_min_average(u64 g, u64 k_star) {
  if (g < 1) throw std::invalid_argument("root_min_average: g must be positive");
  if (k_star < 2 || k_star % 2 != 0) throw std::invalid_argument("root_min_average: k* must be even and >= 2");
  const double gd = static_cast<double>(g), kd = static_cast<double>(k_star);
  const i64 half = static_cast<i64>(k_star / 2);
  CompensatedSum s;
  for (i64 l = -half + 1; l <= half; ++l) {
    s.add(1.0 - std::cos(constants::two_pi * static_cast<double>(l) / (gd * kd)));
  }
  return {s.value() / kd, 1.0 - std::sin(constants::pi / gd) / (kd * std::tan(constants::pi / (gd * kd)))};
}

}  // namespace charsum
