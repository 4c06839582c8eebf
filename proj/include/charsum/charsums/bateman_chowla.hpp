#pragma once

// Mean square of the centred partial sums of a primitive character:
//   (1/q) sum_{N<=q} |S(N) - c|^2 = (q/12) prod_{p|q} (1 - 1/p^2),
//   c = tau(chi)/(i pi) * (1 - chi(-1))/2 * L(1, conj chi).
// For odd chi, c is the mean of S(N) over a period and the identity follows
// from Parseval applied to the Fourier expansion of S.  It holds for each
// primitive character separately, not just on average.

#include <complex>
#include <stdexcept>

#include "charsum/charsums/gauss.hpp"
#include "charsum/charsums/profile.hpp"
#include "charsum/pretentious/lfunction.hpp"
#include "charsum/residue/constants.hpp"

namespace charsum {

struct BatemanChowlaCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  std::complex<double> centre;  // c
};

inline double bateman_chowla_rhs(u64 q) {
  double r = static_cast<double>(q) / 12.0;
  for (const auto& [p, a] : factorize(q)) {
    const double pd = static_cast<double>(p);
    r *= 1.0 - 1.0 / (pd * pd);
  }
  return r;
}

inline BatemanChowlaCheck bateman_chowla_check(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw std::invalid_argument("bateman_chowla_check: principal character");
  const u64 q = chi.modulus();
  if (character_conductor(chi) != q) throw std::invalid_argument("bateman_chowla_check: character is not primitive");
  const auto profile = prefix_profile(chi);
  std::complex<double> centre{};
  if (character_parity(chi) == -1) {
    const auto tau = gauss_sum(chi).value;
    centre = tau / std::complex<double>(0.0, constants::pi) * l1_accelerated(chi.conj());
  }
  CompensatedSum acc;
  for (u64 n = 1; n <= q; ++n) acc.add(std::norm(profile.prefix[n] - centre));
  return {acc.value() / static_cast<double>(q), bateman_chowla_rhs(q), centre};
}

}  // namespace charsum
