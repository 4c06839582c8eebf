#pragma once

// Directions of large sums over the odd characters mod a prime, through the
// proxy tau(chi)/(i sqrt q) prod_{p<=y} (1 - conj chi(p)/p)^{-1} with
// y = log q / log log q, plus the Paley-normalized partial sums.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/characters/value_table.hpp"
#include "charsum/charsums/gauss.hpp"
#include "charsum/experiments/emit.hpp"
#include "charsum/pretentious/lfunction.hpp"
#include "charsum/residue/constants.hpp"
#include "charsum/residue/primes.hpp"

namespace charsum::experiments {

struct DirectionReport {
  u64 q = 0;
  u64 x = 0;
  double theta = 0.0;
  double window = 0.0;
  u64 y = 1;
  Table characters;
  std::vector<u64> histogram;  // angle counts over equal bins of (-pi, pi]
  u64 in_window = 0;
  double median_rel_error = 0.0;  // |E_y - L(1, chi)| / |L(1, chi)|
  double max_paley = 0.0;         // max_{odd chi} |S(x)| / (sqrt q log log q)
  double max_interval = 0.0;      // max_{even chi} |sum_{q/3<=n<=2q/3}| / (sqrt q log log q)
};

/// Signed angular distance from a to b, in (-pi, pi].
inline double angle_gap(double a, double b) {
  double d = std::remainder(a - b, constants::two_pi);
  if (d <= -constants::pi) d += constants::two_pi;
  return d;
}

inline u64 direction_y(u64 q) {
  const double lq = std::log(static_cast<double>(q));
  return static_cast<u64>(lq / std::log(lq));
}

inline DirectionReport direction_experiment(u64 q, u64 x, double theta, double window = constants::pi / 4,
                                            std::size_t bins = 16) {
  if (!is_prime(q) || q < 5) throw std::invalid_argument("direction_experiment: q must be a prime >= 5");
  if (x < 1 || x > q) throw std::out_of_range("direction_experiment: x must lie in [1, q]");
  if (bins < 1) throw std::invalid_argument("direction_experiment: need at least one bin");
  DirectionReport rep;
  rep.q = q;
  rep.x = x;
  rep.theta = theta;
  rep.window = window;
  rep.y = direction_y(q);
  rep.histogram.assign(bins, 0);
  const auto modulus = build_modulus(q);
  const CharacterEvaluator ev(modulus);
  const L1Weights weights(q);
  const auto primes = primes_up_to(rep.y);
  const double sq = std::sqrt(static_cast<double>(q));
  const double scale = sq * std::log(std::log(static_cast<double>(q)));
  const u64 lo = (q + 2) / 3, hi = 2 * q / 3;
  rep.characters.columns = {"chi_index", "proxy_re", "proxy_im", "angle", "in_window", "L1_abs", "euler_abs", "rel_error", "paley_ratio"};
  std::vector<double> rel;
  std::vector<std::complex<double>> vals;
  for (const auto& chi : enumerate_characters(modulus)) {
    if (chi.is_principal()) continue;
    ev.values(chi, vals);
    if (character_parity(chi) == 1) {
      CompensatedComplexSum s;
      for (u64 n = lo; n <= hi; ++n) s.add(vals[n]);
      rep.max_interval = std::max(rep.max_interval, std::abs(s.value()) / scale);
      continue;
    }
    CompensatedComplexSum s;
    for (u64 n = 1; n <= x; ++n) s.add(vals[n % q]);
    const double paley = std::abs(s.value()) / scale;
    rep.max_paley = std::max(rep.max_paley, paley);
    const auto l1 = l1_accelerated(vals, weights);
    const auto euler = l1_euler_product(vals, primes);
    const double err = std::abs(euler - l1) / std::abs(l1);
    rel.push_back(err);
    // prod (1 - conj chi(p)/p)^{-1} is the conjugate of the product for chi.
    const auto proxy = gauss_sum_from_values(vals) / (std::complex<double>(0, 1) * sq) * std::conj(euler);
    const double angle = std::arg(proxy);
    const bool hit = std::abs(angle_gap(angle, theta)) <= window;
    rep.in_window += hit ? 1 : 0;
    auto bin = static_cast<std::size_t>((angle + constants::pi) / constants::two_pi * static_cast<double>(bins));
    rep.histogram[std::min(bin, bins - 1)] += 1;
    rep.characters.add({chi.index(), proxy.real(), proxy.imag(), angle, std::string(hit ? "1" : "0"), std::abs(l1),
                        std::abs(euler), err, paley});
  }
  std::sort(rel.begin(), rel.end());
  if (!rel.empty()) {
    const std::size_t n = rel.size();
    rep.median_rel_error = n % 2 ? rel[n / 2] : 0.5 * (rel[n / 2 - 1] + rel[n / 2]);
  }
  return rep;
}

inline Table direction_summary_table(const DirectionReport& rep) {
  Table t;
  t.columns = {"q", "x", "theta", "window", "y", "odd_characters", "in_window", "median_rel_error", "max_paley",
               "paley_constant", "max_interval", "interval_constant"};
  u64 total = 0;
  for (u64 c : rep.histogram) total += c;
  t.add({rep.q, rep.x, rep.theta, rep.window, rep.y, total, rep.in_window, rep.median_rel_error, rep.max_paley,
         constants::paley(), rep.max_interval, constants::paley_interval()});
  return t;
}

inline Table direction_histogram_table(const DirectionReport& rep) {
  Table t;
  t.columns = {"bin", "angle_lo", "angle_hi", "count"};
  const double w = constants::two_pi / static_cast<double>(rep.histogram.size());
  for (std::size_t i = 0; i < rep.histogram.size(); ++i) {
    const double a = -constants::pi + w * static_cast<double>(i);
    t.add({u64{i}, a, a + w, rep.histogram[i]});
  }
  return t;
}

}  // namespace charsum::experiments
