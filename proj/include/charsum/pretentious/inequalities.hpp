#pragma once

// Finite inequalities with complete proofs, evaluated exactly in floating point:
// the partial-sum lower bound for primitive characters and the two bounds on
// the local factors lambda_j.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "charsum/characters/character.hpp"
#include "charsum/characters/value_table.hpp"
#include "charsum/residue/arithmetic.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

struct PartialSumLowerBound {
  double max_partial = 0.0;  // max_{N<=r} |sum_{n<=N} eta(n)/n|
  double max_tail = 0.0;     // max_{N<=r} |sum_{N<=n<=r} eta(n)/n|
  double l_shifted = 0.0;    // |sum_{n<=r} eta(n)/n^{1+delta}|, delta = 1/log r
};

/// With A(t) = sum_{n<=t} eta(n)/n and delta = 1/log r,
///   A(r)/e + int_1^r delta t^{-1-delta} A(t) dt = sum_{n<=r} eta(n) n^{-1-delta},
/// and the weights 1/e and 1 - 1/e sum to 1, so max |A| >= l_shifted.  The
/// tail identity sum_{n<=r} eta(n)/n - int_1^r delta t^{-1-delta} T(t) dt with
/// T(t) = sum_{t<=n<=r} eta(n)/n gives (2 - 1/e) max |T| >= l_shifted.
inline PartialSumLowerBound partial_sum_lower_bound_check(const DirichletCharacter& eta) {
  if (eta.is_principal()) throw std::invalid_argument("partial_sum_lower_bound_check: principal character");
  const u64 r = eta.modulus();
  if (r < 3) throw std::invalid_argument("partial_sum_lower_bound_check: modulus must be at least 3");
  const CharacterEvaluator ev(eta.modulus_ptr());
  const auto vals = ev.values(eta);
  const double delta = 1.0 / std::log(static_cast<double>(r));
  PartialSumLowerBound out;
  std::vector<std::complex<double>> terms(r + 1);
  CompensatedComplexSum shifted;
  for (u64 n = 1; n <= r; ++n) {
    const double nd = static_cast<double>(n);
    terms[n] = vals[n % r] / nd;
    shifted.add(vals[n % r] * std::pow(nd, -1.0 - delta));
  }
  out.l_shifted = std::abs(shifted.value());
  CompensatedComplexSum head;
  for (u64 n = 1; n <= r; ++n) {
    head.add(terms[n]);
    out.max_partial = std::max(out.max_partial, std::abs(head.value()));
  }
  CompensatedComplexSum tail;
  for (u64 n = r; n >= 1; --n) {
    tail.add(terms[n]);
    out.max_tail = std::max(out.max_tail, std::abs(tail.value()));
  }
  return out;
}

/// Constant of the tail variant: l_shifted <= kTailFactor * max_tail.
inline const double kTailFactor = 2.0 - std::exp(-1.0);

/// conj(chi) at primes, as used by the lambda bounds.
using PrimeValues = std::function<std::complex<double>(u64)>;

inline PrimeValues conj_character_at_primes(const DirichletCharacter& chi) {
  return [chi](u64 p) { return std::conj(chi.value(static_cast<i64>(p))); };
}

namespace detail {

inline std::complex<double> pow_int(std::complex<double> v, unsigned a) {
  std::complex<double> r = 1.0;
  for (unsigned i = 0; i < a; ++i) r *= v;
  return r;
}

}  // namespace detail

struct LambdaPair {
  std::complex<double> lambda1;
  std::complex<double> lambda2;
  double lhs = 0.0;  // max(|l1|, |l2|, |l1 - l2|) phi(r1 r2)/(r1 r2)
};

inline LambdaPair lambda_values(const PrimeValues& c, u64 r1, u64 r2) {
  if (r1 < 1 || r2 < 1) throw std::invalid_argument("lambda_values: moduli must be positive");
  const auto local = [&](u64 r) {
    std::complex<double> prod = 1.0;
    for (const auto& [p, a] : factorize(r)) {
      const auto v = c(p);
      prod *= detail::pow_int(v, a) - detail::pow_int(v, a - 1);
    }
    return prod / static_cast<double>(totient(r));
  };
  std::complex<double> euler = 1.0;
  const u64 rr = r1 * r2;
  for (const auto& [p, a] : factorize(rr)) euler /= 1.0 - c(p) / static_cast<double>(p);
  LambdaPair out{local(r1) * euler, local(r2) * euler, 0.0};
  const double m = std::max({std::abs(out.lambda1), std::abs(out.lambda2), std::abs(out.lambda1 - out.lambda2)});
  out.lhs = m * static_cast<double>(totient(rr)) / static_cast<double>(rr);
  return out;
}

/// Left side of max(|l1|, |l2|, |l1 - l2|) phi(r1 r2)/(r1 r2) <= 1.
inline double lambda_inequality_check(const DirichletCharacter& chi, u64 r1, u64 r2) {
  return lambda_values(conj_character_at_primes(chi), r1, r2).lhs;
}

/// Left side of |1 - (1/phi(r)) prod_{p^a||r}(c(p^a) - c(p^{a-1}))| prod_{p|r} |(p-1)/(p-c(p))| <= 1.
inline double prime_power_inequality_value(const PrimeValues& c, u64 r) {
  if (r < 1) throw std::invalid_argument("prime_power_inequality_check: r must be positive");
  std::complex<double> prod = 1.0;
  double scale = 1.0;
  for (const auto& [p, a] : factorize(r)) {
    const auto v = c(p);
    prod *= detail::pow_int(v, a) - detail::pow_int(v, a - 1);
    const double pd = static_cast<double>(p);
    scale *= (pd - 1.0) / std::abs(pd - v);
  }
  return std::abs(1.0 - prod / static_cast<double>(totient(r))) * scale;
}

inline double prime_power_inequality_check(const DirichletCharacter& chi, u64 r) {
  return prime_power_inequality_value(conj_character_at_primes(chi), r);
}

}  // namespace charsum
