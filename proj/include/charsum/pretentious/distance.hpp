#pragma once

// The distance D(z, w; y)^2 = sum_{p<=y} (1 - Re z(p) conj(w(p))) / p, for
// characters and for general unit-disc sequences, plus the weighted form
// sum_{p<=y} a(p) (1 - Re z(p) conj(w(p))).

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/pretentious/sequence.hpp"
#include "charsum/residue/primes.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

struct DistanceReport {
  u64 chi_q = 0;
  u64 chi_index = 0;
  u64 psi_q = 0;
  u64 psi_index = 0;
  u64 y = 0;
  double dist_sq = 0.0;
  std::vector<std::pair<u64, double>> per_prime;  // filled on request
};

/// sum over the aligned prime list of (1 - Re z conj w)/p.
inline double distance_sq_values(std::span<const std::complex<double>> z, std::span<const std::complex<double>> w,
                                 std::span<const u64> primes) {
  CompensatedSum s;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const double re = z[i].real() * w[i].real() + z[i].imag() * w[i].imag();
    s.add((1.0 - re) / static_cast<double>(primes[i]));
  }
  return s.value();
}

inline DistanceReport distance_sq(const DirichletCharacter& chi, const DirichletCharacter& psi, u64 y,
                                  bool with_per_prime = false) {
  if (y < 2) throw std::invalid_argument("distance_sq: y must be at least 2");
  DistanceReport rep{chi.modulus(), chi.index(), psi.modulus(), psi.index(), y, 0.0, {}};
  CompensatedSum s;
  for (u64 p : primes_up_to(y)) {
    const auto prod = chi.value(static_cast<i64>(p)) * std::conj(psi.value(static_cast<i64>(p)));
    const double term = (1.0 - prod.real()) / static_cast<double>(p);
    s.add(term);
    if (with_per_prime) rep.per_prime.emplace_back(p, term);
  }
  rep.dist_sq = s.value();
  return rep;
}

inline double distance_sq_general(const UnitDiscSequence& z, const UnitDiscSequence& w, u64 y) {
  const std::size_t n = z.count_up_to(y);
  if (w.count_up_to(y) != n) throw std::invalid_argument("distance_sq_general: sequences disagree on primes");
  return distance_sq_values(std::span(z.values()).first(n), std::span(w.values()).first(n),
                            std::span(z.primes()).first(n));
}

/// Weighted form; weights are aligned with the primes of z and must be non-negative.
inline double distance_sq_weighted(const UnitDiscSequence& z, const UnitDiscSequence& w,
                                   std::span<const double> weights, u64 y) {
  const std::size_t n = z.count_up_to(y);
  if (w.count_up_to(y) != n || weights.size() < n) {
    throw std::invalid_argument("distance_sq_weighted: sequences disagree on primes");
  }
  CompensatedSum s;
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] < 0) throw std::invalid_argument("distance_sq_weighted: negative weight");
    const auto prod = z.values()[i] * std::conj(w.values()[i]);
    s.add(weights[i] * (1.0 - prod.real()));
  }
  return s.value();
}

/// D(z1, w1) + D(z2, w2) - D(z1 z2, w1 w2); never negative beyond rounding.
inline double triangle_defect(const UnitDiscSequence& z1, const UnitDiscSequence& w1, const UnitDiscSequence& z2,
                              const UnitDiscSequence& w2, u64 y) {
  const auto d = [y](const UnitDiscSequence& a, const UnitDiscSequence& b) {
    return std::sqrt(std::max(0.0, distance_sq_general(a, b, y)));
  };
  return d(z1, w1) + d(z2, w2) - d(z1 * z2, w1 * w2);
}

inline double triangle_defect_weighted(const UnitDiscSequence& z1, const UnitDiscSequence& w1,
                                       const UnitDiscSequence& z2, const UnitDiscSequence& w2,
                                       std::span<const double> weights, u64 y) {
  const auto d = [&](const UnitDiscSequence& a, const UnitDiscSequence& b) {
    return std::sqrt(std::max(0.0, distance_sq_weighted(a, b, weights, y)));
  };
  return d(z1, w1) + d(z2, w2) - d(z1 * z2, w1 * w2);
}

}  // namespace charsum
