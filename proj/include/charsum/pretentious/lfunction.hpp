#pragma once

// Values of L(1, chi) for non-principal chi.
//
// Three routes: the truncated series sum_{n<=x} chi(n)/n, the Euler product
// over p <= y, and an exact finite formula
//   L(1, chi) = -(1/q) sum_{a=1}^{q-1} chi(a) psi(a/q),
// which follows from L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q) near s = 1
// (the pole cancels because sum_a chi(a) = 0).  Its only error is that of the
// digamma evaluations, far below 1e-10 at the moduli used here.

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/characters/value_table.hpp"
#include "charsum/residue/primes.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

/// Digamma function psi(x) for x > 0.
inline double digamma(double x) {
  if (!(x > 0)) throw std::domain_error("digamma: argument must be positive");
  CompensatedSum shift;
  while (x < 10.0) {
    shift.add(-1.0 / x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double z2 = inv * inv;
  // Asymptotic series with Bernoulli coefficients B_2..B_14.
  const double series =
      z2 * (-1.0 / 12 +
            z2 * (1.0 / 120 +
                  z2 * (-1.0 / 252 + z2 * (1.0 / 240 + z2 * (-1.0 / 132 + z2 * (691.0 / 32760 + z2 * (-1.0 / 12)))))));
  shift.add(std::log(x));
  shift.add(-0.5 * inv);
  shift.add(series);
  return shift.value();
}

/// psi(a/q) for a = 0..q-1 (entry 0 unused), shared by every character mod q.
class L1Weights {
 public:
  explicit L1Weights(u64 q) : q_(q), psi_(q, 0.0) {
    for (u64 a = 1; a < q; ++a) psi_[a] = digamma(static_cast<double>(a) / static_cast<double>(q));
  }
  [[nodiscard]] u64 q() const { return q_; }
  [[nodiscard]] double operator[](u64 a) const { return psi_[a]; }

 private:
  u64 q_;
  std::vector<double> psi_;
};

/// L(1, chi) from the values chi(0..q-1).
inline std::complex<double> l1_accelerated(std::span<const std::complex<double>> values, const L1Weights& w) {
  if (values.size() != w.q()) throw std::invalid_argument("l1_accelerated: table size mismatch");
  CompensatedComplexSum s;
  for (u64 a = 1; a < w.q(); ++a) {
    if (values[a] != std::complex<double>{}) s.add(values[a] * w[a]);
  }
  return -s.value() / static_cast<double>(w.q());
}

inline std::complex<double> l1_accelerated(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw std::invalid_argument("l1_accelerated: principal character");
  const CharacterEvaluator ev(chi.modulus_ptr());
  return l1_accelerated(ev.values(chi), L1Weights(chi.modulus()));
}

inline std::complex<double> l1_truncated(const DirichletCharacter& chi, u64 cutoff) {
  if (chi.is_principal()) throw std::invalid_argument("l1_truncated: principal character");
  if (cutoff < 1) throw std::invalid_argument("l1_truncated: cutoff must be positive");
  CompensatedComplexSum s;
  for (u64 n = 1; n <= cutoff; ++n) s.add(chi.value(static_cast<i64>(n)) / static_cast<double>(n));
  return s.value();
}

/// prod_{p<=y} (1 - chi(p)/p)^{-1}, with chi given by its table mod q.
inline std::complex<double> l1_euler_product(std::span<const std::complex<double>> values,
                                             std::span<const u64> primes) {
  const u64 q = values.size();
  // Accumulate the logarithm so long products stay accurate.
  CompensatedComplexSum log_sum;
  for (u64 p : primes) {
    const auto v = values[p % q];
    if (v == std::complex<double>{}) continue;
    log_sum.add(-std::log(1.0 - v / static_cast<double>(p)));
  }
  return std::exp(log_sum.value());
}

inline std::complex<double> l1_euler_product(const DirichletCharacter& chi, u64 y) {
  if (y < 2) return 1.0;
  const auto primes = primes_up_to(y);
  CompensatedComplexSum log_sum;
  for (u64 p : primes) {
    const auto v = chi.value(static_cast<i64>(p));
    if (v == std::complex<double>{}) continue;
    log_sum.add(-std::log(1.0 - v / static_cast<double>(p)));
  }
  return std::exp(log_sum.value());
}

/// prod_{p<=y} (1 - 1/p)^{-1}.
inline double mertens_product(u64 y) {
  CompensatedSum log_sum;
  for (u64 p : primes_up_to(y)) log_sum.add(-std::log1p(-1.0 / static_cast<double>(p)));
  return std::exp(log_sum.value());
}

}  // namespace charsum
