#pragma once

// Brute-force reference computations used as independent oracles by the
// test suites.  Nothing here calls into the library's number-theoretic code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using cd = std::complex<double>;

inline std::vector<std::pair<u64, unsigned>> trial_factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a > 0) out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline u64 phi_by_count(u64 q) {
  u64 c = 0;
  for (u64 a = 1; a <= q; ++a) c += std::gcd(a, q) == 1 ? 1 : 0;
  return c;
}

inline u64 phi_by_formula(u64 q) {
  u64 r = q;
  for (auto [p, a] : trial_factor(q)) r = r / p * (p - 1);
  return r;
}

inline u64 mult_order(u64 g, u64 q) {
  u64 x = g % q, k = 1;
  while (x != 1 % q) {
    x = x * g % q;
    ++k;
  }
  return k;
}

inline u64 smallest_primitive_root(u64 q) {
  const u64 phi = phi_by_count(q);
  for (u64 g = 2; g < q; ++g) {
    if (std::gcd(g, q) == 1 && mult_order(g, q) == phi) return g;
  }
  return 1;
}

inline std::vector<u64> sieve_primes(u64 y) {
  std::vector<u64> out;
  for (u64 n = 2; n <= y; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

inline bool is_smooth(u64 n, u64 y) {
  for (auto [p, a] : trial_factor(n)) {
    if (p > y) return false;
  }
  return true;
}

inline u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

/// Legendre symbol via Euler's criterion, p an odd prime.
inline int legendre(long long a, u64 p) {
  const u64 r = static_cast<u64>(((a % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p));
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Jacobi symbol (a/n) for odd positive n, by the reciprocity algorithm.
inline int jacobi(long long a, long long n) {
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long long r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

inline cd e(double x) {
  const double a = 2.0 * std::numbers::pi * x;
  return {std::cos(a), std::sin(a)};
}

/// Direct max_x |sum_{n<=x} f(n)| over x = 1..q with smallest maximizing x.
template <typename F>
std::pair<double, u64> brute_max_partial(F f, u64 q) {
  cd s = 0;
  double best = 0;
  u64 arg = 0;
  for (u64 x = 1; x <= q; ++x) {
    s += f(x);
    if (std::abs(s) > best + 1e-12) {
      best = std::abs(s);
      arg = x;
    }
  }
  return {best, arg};
}

}  // namespace oracle
