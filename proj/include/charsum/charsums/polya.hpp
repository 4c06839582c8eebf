#pragma once

// Polya's truncated Fourier expansion of a character sum:
//   sum_{n<=x} chi(n) = tau(chi)/(2 pi i) sum_{1<=|n|<=N} conj(chi(n))/n (1 - e(-nx/q)) + O(1 + q log q / N).

#include <cmath>
#include <complex>
#include <stdexcept>

#include "charsum/charsums/gauss.hpp"
#include "charsum/charsums/profile.hpp"
#include "charsum/residue/constants.hpp"

namespace charsum {

struct PolyaExpansion {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double residual = 0.0;
};

inline PolyaExpansion polya_expansion(const DirichletCharacter& chi, u64 x, u64 n_max) {
  const u64 q = chi.modulus();
  if (character_conductor(chi) != q) throw std::invalid_argument("polya_expansion: character is not primitive");
  if (x < 1 || x > q) throw std::out_of_range("polya_expansion: x must lie in [1, q]");
  if (n_max < 1) throw std::invalid_argument("polya_expansion: N must be positive");

  CompensatedComplexSum lhs;
  for (u64 n = 1; n <= x; ++n) lhs.add(chi.value(static_cast<i64>(n)));

  const double parity = character_parity(chi);
  const auto conj_chi = chi.conj();
  CompensatedComplexSum series;
  for (u64 n = 1; n <= n_max; ++n) {
    const auto c = conj_chi.value(static_cast<i64>(n));
    if (c == std::complex<double>{}) continue;
    const u64 nx = mulmod(n % q, x % q, q);
    // n and -n together: conj chi(-n)/(-n) = -parity conj chi(n)/n.
    const auto plus = 1.0 - unit_root((q - nx) % q, q);
    const auto minus = 1.0 - unit_root(nx, q);
    series.add(c / static_cast<double>(n) * (plus - parity * minus));
  }
  const auto tau = gauss_sum(chi).value;
  const auto rhs = tau / std::complex<double>(0.0, constants::two_pi) * series.value();
  const auto l = lhs.value();
  return {l, rhs, std::abs(l - rhs)};
}

}  // namespace charsum
