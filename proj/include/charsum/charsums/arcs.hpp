#pragma once

// Major/minor arc classification of alpha in [0, 1).
//
// With thresholds s < S, alpha has a rational approximation b/r, (b, r) = 1,
// |r alpha - b| <= 1/S.  We take the smallest such r; it is always a
// continued-fraction convergent denominator of alpha (every r' < r is a worse
// approximation, so r is a best approximation of the second kind), and one
// with r <= S exists by Dirichlet's theorem.  alpha is major iff r <= s.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "charsum/residue/arithmetic.hpp"

namespace charsum {

struct ArcConfig {
  double big_q = 0.0;  // Q
  double s = 0.0;
  double big_s = 0.0;  // S
  u64 q = 1;           // modulus, caps N
};

/// Q = log q (conditional normalization) or Q = q; s = (log Q)^{1/3},
/// S = exp((log Q)^{5/6}).
inline ArcConfig make_arc_config(u64 q, bool conditional = false) {
  if (q < 3) throw std::invalid_argument("make_arc_config: q must be at least 3");
  ArcConfig cfg;
  cfg.q = q;
  cfg.big_q = conditional ? std::log(static_cast<double>(q)) : static_cast<double>(q);
  const double lq = std::log(cfg.big_q);
  if (!(lq > 0)) throw std::invalid_argument("make_arc_config: log Q must be positive");
  cfg.s = std::cbrt(lq);
  cfg.big_s = std::exp(std::pow(lq, 5.0 / 6.0));
  return cfg;
}

inline ArcConfig make_arc_config(u64 q, double s, double big_s) {
  if (!(s > 0 && s < big_s)) throw std::invalid_argument("make_arc_config: need 0 < s < S");
  return {static_cast<double>(q), s, big_s, q};
}

struct ArcPoint {
  double alpha = 0.0;
  i64 b = 0;
  u64 r = 1;
  double n_value = 0.0;  // N = min(q, 1/|r alpha - b|)
  bool is_major = true;
};

/// Continued-fraction convergent denominators of alpha in ascending order, up
/// to `limit` (the first denominator is always 1).
inline std::vector<u64> convergent_denominators(double alpha, double limit) {
  std::vector<u64> out{1};
  long double x = alpha - std::floor(alpha);
  u64 q_prev = 0, q_cur = 1;
  for (int iter = 0; iter < 64 && x > 1e-18L; ++iter) {
    const long double inv = 1.0L / x;
    const long double a = std::floor(inv);
    x = inv - a;
    const long double next = a * q_cur + q_prev;
    if (next > limit || next > 1e18L) break;
    q_prev = q_cur;
    q_cur = static_cast<u64>(next);
    out.push_back(q_cur);
  }
  return out;
}

inline ArcPoint classify_arc(double alpha, const ArcConfig& cfg) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::out_of_range("classify_arc: alpha must lie in [0, 1)");
  ArcPoint pt;
  pt.alpha = alpha;
  const double tol = 1.0 / cfg.big_s;
  bool found = false;
  for (u64 r : convergent_denominators(alpha, cfg.big_s)) {
    const double ra = static_cast<double>(r) * alpha;
    const double b = std::round(ra);
    if (std::abs(ra - b) <= tol * (1 + 1e-12)) {
      pt.r = r;
      pt.b = static_cast<i64>(b);
      found = true;
      break;
    }
  }
  if (!found) {
    // Only reachable through rounding at the S boundary; fall back to the last
    // convergent, which satisfies the bound up to float error.
    const auto dens = convergent_denominators(alpha, cfg.big_s);
    pt.r = dens.back();
    pt.b = static_cast<i64>(std::round(static_cast<double>(pt.r) * alpha));
  }
  const double g = static_cast<double>(std::gcd(static_cast<u64>(pt.b < 0 ? -pt.b : pt.b), pt.r));
  if (g > 1) {
    pt.r /= static_cast<u64>(g);
    pt.b /= static_cast<i64>(g);
  }
  const double dist = std::abs(static_cast<double>(pt.r) * alpha - static_cast<double>(pt.b));
  const double qd = static_cast<double>(cfg.q);
  pt.n_value = dist == 0.0 ? qd : std::min(qd, 1.0 / dist);
  pt.is_major = static_cast<double>(pt.r) <= cfg.s;
  return pt;
}

}  // namespace charsum
