#pragma once

#include <cmath>
#include <numbers>

namespace charsum::constants {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// e^gamma / pi, the conjectured extremal constant for max |sum_{n<=x} chi(n)| / (sqrt(q) loglog q).
inline double paley() { return std::exp(euler_gamma) / pi; }

/// 2 e^gamma / (pi sqrt 3), the interval-sum analogue.
inline double paley_interval() { return 2.0 * std::exp(euler_gamma) / (pi * std::sqrt(3.0)); }

}  // namespace charsum::constants
