#pragma once

// Hyper-Kloosterman sums Kl_n(b, q) = sum_{x_1...x_n = b (mod q)} e((x_1 + ... + x_n)/q)
// and their relation to moments of Gauss sums over odd characters.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/charsums/gauss.hpp"
#include "charsum/residue/unit_value.hpp"

namespace charsum {

/// Largest q^{n-1} enumerated directly.
inline constexpr u64 kKloostermanWorkLimit = 10'000'000;

namespace detail {

// Walks all (n-1)-tuples of units and records the sum of each completed n-tuple.
inline void kloosterman_walk(unsigned remaining, u64 product, u64 sum, u64 b, u64 q,
                             const std::vector<u64>& inverse, CyclotomicSum& acc) {
  if (remaining == 0) {
    acc.add_numerator((sum + mulmod(b, inverse[product], q)) % q);
    return;
  }
  for (u64 x = 1; x < q; ++x) {
    if (inverse[x] == 0) continue;
    kloosterman_walk(remaining - 1, mulmod(product, x, q), (sum + x) % q, b, q, inverse, acc);
  }
}

}  // namespace detail

inline std::complex<double> kloosterman(unsigned n, i64 b, u64 q) {
  if (n < 1) throw std::invalid_argument("kloosterman: arity must be positive");
  if (q < 1) throw std::invalid_argument("kloosterman: modulus must be positive");
  const u64 br = reduce_mod(b, q);
  if (std::gcd(br, q) != 1) throw std::domain_error("kloosterman: b is not a unit");
  double work = 1;
  for (unsigned i = 1; i < n; ++i) work *= static_cast<double>(q);
  if (work > static_cast<double>(kKloostermanWorkLimit)) {
    throw std::invalid_argument("kloosterman: q^(n-1) exceeds the enumeration limit");
  }
  if (q == 1) return 1.0;
  if (n == 1) return unit_root(br, q);
  std::vector<u64> inverse(q, 0);
  for (u64 x = 1; x < q; ++x) {
    if (std::gcd(x, q) == 1) inverse[x] = inverse_mod(x, q);
  }
  CyclotomicSum acc(q);
  detail::kloosterman_walk(n - 1, 1 % q, 0, br, q, inverse, acc);
  return acc.embed();
}

struct MomentIdentity {
  std::complex<double> lhs;
  std::complex<double> rhs;
};

/// lhs = (2/phi(q)) sum_{chi odd} chi(a) tau(chi)^n,
/// rhs = Kl_n(a^{-1}, q) - Kl_n(-a^{-1}, q), for q an odd prime.
inline MomentIdentity gauss_moment_identity(unsigned n, i64 a, u64 q) {
  if (q % 2 == 0 || !is_prime(q)) throw std::invalid_argument("gauss_moment_identity: q must be an odd prime");
  const u64 ar = reduce_mod(a, q);
  if (ar == 0) throw std::domain_error("gauss_moment_identity: a is not a unit");
  const auto modulus = build_modulus(q);
  CompensatedComplexSum lhs;
  for (const auto& chi : enumerate_characters(modulus)) {
    if (character_parity(chi) != -1) continue;
    lhs.add(chi.value(static_cast<i64>(ar)) * std::pow(gauss_sum(chi).value, static_cast<int>(n)));
  }
  const u64 abar = inverse_mod(ar, q);
  const auto rhs = kloosterman(n, static_cast<i64>(abar), q) - kloosterman(n, static_cast<i64>(q - abar), q);
  return {2.0 / static_cast<double>(q - 1) * lhs.value(), rhs};
}

}  // namespace charsum
