#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "charsum/residue/arithmetic.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

/// Primes p <= y in ascending order (empty for y < 2).
inline std::vector<u64> primes_up_to(u64 y) {
  std::vector<u64> primes;
  if (y < 2) return primes;
  std::vector<bool> composite(y + 1, false);
  for (u64 p = 2; p <= y; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    if (p <= y / p) {
      for (u64 m = p * p; m <= y; m += p) composite[m] = true;
    }
  }
  return primes;
}

/// Largest-prime-factor table for 0..limit, with entries 0 and 1 set to 1.
inline std::vector<std::uint32_t> largest_prime_factor_table(u64 limit) {
  std::vector<std::uint32_t> lpf(limit + 1, 1);
  for (u64 p = 2; p <= limit; ++p) {
    if (lpf[p] != 1) continue;
    for (u64 m = p; m <= limit; m += p) lpf[m] = static_cast<std::uint32_t>(p);
  }
  return lpf;
}

/// The y-smooth integers up to a limit: every prime factor <= y.
struct SmoothSet {
  u64 y = 1;
  u64 limit = 1;
  std::vector<u64> members;  // ascending

  [[nodiscard]] bool contains(u64 n) const {
    return std::binary_search(members.begin(), members.end(), n);
  }
  [[nodiscard]] std::size_t size() const { return members.size(); }
};

namespace detail {

inline void enumerate_smooth(const std::vector<u64>& primes, std::size_t start, u64 current,
                             u64 limit, std::vector<u64>& out) {
  out.push_back(current);
  for (std::size_t i = start; i < primes.size(); ++i) {
    const u64 p = primes[i];
    if (current > limit / p) break;
    enumerate_smooth(primes, i, current * p, limit, out);
  }
}

}  // namespace detail

inline SmoothSet smooth_numbers(u64 y, u64 limit) {
  if (y < 1 || limit < 1) throw std::invalid_argument("smooth_numbers: bounds must be positive");
  SmoothSet set{y, limit, {}};
  if (y >= limit) {
    set.members.resize(limit);
    std::iota(set.members.begin(), set.members.end(), u64{1});
    return set;
  }
  detail::enumerate_smooth(primes_up_to(y), 0, 1, limit, set.members);
  std::sort(set.members.begin(), set.members.end());
  return set;
}

/// Sum of 1/p over primes p <= y with p = a (mod ell).  With lower_cutoff the
/// sum starts at p >= ell; otherwise every prime p <= y in the class counts.
inline double mertens_progression_sum(u64 ell, i64 a, u64 y, bool lower_cutoff = true) {
  if (ell == 0) throw std::invalid_argument("mertens_progression_sum: modulus must be positive");
  const u64 residue = reduce_mod(a, ell);
  if (std::gcd(residue, ell) != 1) {
    throw std::domain_error("mertens_progression_sum: residue class is not reduced");
  }
  CompensatedSum sum;
  for (u64 p : primes_up_to(y)) {
    if (lower_cutoff && p < ell) continue;
    if (p % ell == residue) sum.add(1.0 / static_cast<double>(p));
  }
  return sum.value();
}

}  // namespace charsum
