#pragma once

// Multiplicative functions with |f(n)| <= 1 and two bounds on their
// logarithmic partial sums.

#include <cmath>
#include <numeric>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/residue/primes.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

class MultiplicativeFunction {
 public:
  using PrimeFn = std::function<std::complex<double>(u64)>;
  using PrimePowerFn = std::function<std::complex<double>(u64, unsigned)>;

  /// Completely multiplicative: f(p^a) = f(p)^a.
  static MultiplicativeFunction completely(PrimeFn f) {
    MultiplicativeFunction m;
    m.prime_ = std::move(f);
    return m;
  }

  /// Multiplicative with prescribed values at prime powers.
  static MultiplicativeFunction with_prime_powers(PrimePowerFn f) {
    MultiplicativeFunction m;
    m.power_ = std::move(f);
    return m;
  }

  static MultiplicativeFunction from_character(const DirichletCharacter& chi) {
    return completely([chi](u64 p) { return chi.value(static_cast<i64>(p)); });
  }

  [[nodiscard]] bool is_completely_multiplicative() const { return static_cast<bool>(prime_); }

  [[nodiscard]] std::complex<double> at_prime(u64 p) const { return prime_ ? prime_(p) : power_(p, 1); }

  [[nodiscard]] std::complex<double> at_prime_power(u64 p, unsigned a) const {
    if (power_) return power_(p, a);
    std::complex<double> r = 1.0;
    const auto v = prime_(p);
    for (unsigned i = 0; i < a; ++i) r *= v;
    return r;
  }

  [[nodiscard]] std::complex<double> operator()(u64 n) const {
    std::complex<double> r = 1.0;
    for (const auto& [p, a] : factorize(n)) r *= at_prime_power(p, a);
    return r;
  }

  /// f(1..x) with f(0) = 0, by a smallest-prime-factor sieve; throws if any
  /// value leaves the unit disc.
  [[nodiscard]] std::vector<std::complex<double>> table(u64 x) const {
    std::vector<u64> spf(x + 1, 0);
    for (u64 i = 2; i <= x; ++i) {
      if (spf[i] != 0) continue;
      for (u64 j = i; j <= x; j += i) {
        if (spf[j] == 0) spf[j] = i;
      }
    }
    std::vector<std::complex<double>> f(x + 1, 0.0);
    if (x >= 1) f[1] = 1.0;
    for (u64 n = 2; n <= x; ++n) {
      const u64 p = spf[n];
      u64 m = n;
      unsigned a = 0;
      while (m % p == 0) {
        m /= p;
        ++a;
      }
      f[n] = f[m] * at_prime_power(p, a);
      if (std::abs(f[n]) > 1.0 + 1e-12) throw std::domain_error("MultiplicativeFunction: |f(n)| exceeds 1");
    }
    return f;
  }

 private:
  PrimeFn prime_;
  PrimePowerFn power_;
};

struct CoprimeSumReport {
  double lhs = 0.0;     // |sum_{n<=x} f(n)/n|
  double bound1 = 0.0;  // 1 + log x exp(-sum_{p<=x} (2 - |1 + f(p)|)/p)
  double bound2 = 0.0;  // 1 + log x exp(-D(1, f; x)^2 / 2)
  /// bound1 <= bound2, from 2 - |1 + z| >= (1 - Re z)/2 on the unit disc.
  [[nodiscard]] bool bounds_ordered() const { return bound1 <= bound2 * (1 + 1e-12); }
};

inline CoprimeSumReport coprime_sum_report(const MultiplicativeFunction& f, u64 x) {
  if (x < 2) throw std::invalid_argument("coprime_sum_report: x must be at least 2");
  const auto tab = f.table(x);
  CompensatedComplexSum s;
  for (u64 n = 1; n <= x; ++n) s.add(tab[n] / static_cast<double>(n));
  CompensatedSum e1, e2;
  for (u64 p : primes_up_to(x)) {
    const auto v = tab[p];
    e1.add((2.0 - std::abs(1.0 + v)) / static_cast<double>(p));
    e2.add((1.0 - v.real()) / static_cast<double>(p));
  }
  const double lx = std::log(static_cast<double>(x));
  return {std::abs(s.value()), 1.0 + lx * std::exp(-e1.value()), 1.0 + lx * std::exp(-e2.value() / 2.0)};
}

struct EulerFactorStrip {
  std::complex<double> lhs;       // sum_{n<=x} f(n)/n
  std::complex<double> rhs_main;  // prod_{p|l}(1 - f(p)/p)^{-1} sum_{n<=x,(n,l)=1} f(n)/n
  double defect = 0.0;
  double envelope = 0.0;          // 10 (log log (l + 2))^2
};

inline EulerFactorStrip euler_factor_strip(const MultiplicativeFunction& f, u64 ell, u64 x) {
  if (!f.is_completely_multiplicative()) {
    throw std::invalid_argument("euler_factor_strip: f must be completely multiplicative");
  }
  if (ell < 1 || x < 1) throw std::invalid_argument("euler_factor_strip: ell and x must be positive");
  const auto tab = f.table(x);
  CompensatedComplexSum all, coprime;
  for (u64 n = 1; n <= x; ++n) {
    const auto t = tab[n] / static_cast<double>(n);
    all.add(t);
    if (std::gcd(n, ell) == 1) coprime.add(t);
  }
  std::complex<double> factor = 1.0;
  for (const auto& [p, a] : factorize(ell)) factor /= 1.0 - f.at_prime(p) / static_cast<double>(p);
  EulerFactorStrip out{all.value(), factor * coprime.value(), 0.0, 0.0};
  out.defect = std::abs(out.lhs - out.rhs_main);
  const double ll = std::log(std::log(static_cast<double>(ell) + 2.0));
  out.envelope = 10.0 * ll * ll;
  return out;
}

}  // namespace charsum
