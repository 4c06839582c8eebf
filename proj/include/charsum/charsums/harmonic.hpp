#pragma once

// Twisted harmonic sums sum_{n<=cutoff} conj(chi(n)) e(n alpha) / n, optionally
// restricted to y-smooth n.

#include <cmath>
#include <complex>
#include <optional>

#include "charsum/characters/character.hpp"
#include "charsum/residue/constants.hpp"
#include "charsum/residue/primes.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

namespace detail {

inline std::complex<double> expi_frac(double alpha, u64 n) {
  // Reduce n*alpha mod 1 before scaling so large n keeps full precision.
  const double t = std::fmod(static_cast<double>(n % (u64{1} << 52)) * alpha, 1.0);
  return std::polar(1.0, constants::two_pi * t);
}

}  // namespace detail

inline std::complex<double> twisted_harmonic_sum(const DirichletCharacter& chi, double alpha, u64 cutoff,
                                                 std::optional<u64> smooth_y = std::nullopt) {
  if (cutoff < 1) throw std::invalid_argument("twisted_harmonic_sum: cutoff must be positive");
  const auto conj_chi = chi.conj();
  CompensatedComplexSum s;
  auto term = [&](u64 n) {
    const auto c = conj_chi.value(static_cast<i64>(n));
    if (c == std::complex<double>{}) return;
    s.add(c * detail::expi_frac(alpha, n) / static_cast<double>(n));
  };
  if (smooth_y) {
    for (u64 n : smooth_numbers(*smooth_y, cutoff).members) term(n);
  } else {
    for (u64 n = 1; n <= cutoff; ++n) term(n);
  }
  return s.value();
}

}  // namespace charsum
