#pragma once

// Exact identities and finite inequalities, each over its full checked range.
// Every tolerance is multiplied by `tolerance_scale`, so a scale of 0 turns
// them into exact-equality checks.

#include <chrono>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/charsums/bateman_chowla.hpp"
#include "charsum/charsums/gauss.hpp"
#include "charsum/charsums/kloosterman.hpp"
#include "charsum/experiments/emit.hpp"
#include "charsum/pretentious/distance.hpp"
#include "charsum/pretentious/inequalities.hpp"
#include "charsum/pretentious/sequence.hpp"
#include "charsum/pretentious/trig.hpp"

namespace charsum::experiments {

struct IdentitySuiteOptions {
  double tolerance_scale = 1.0;
  u64 seed = 1;
  std::size_t triangle_cases = 10'000;
  GaussFunction gauss = default_gauss;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_counterexample;
  double seconds = 0.0;
  [[nodiscard]] bool passed() const { return failures == 0; }
};

namespace detail {

class CheckRecorder {
 public:
  explicit CheckRecorder(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

  /// Records one case; `describe` runs only for the first failure.
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_counterexample = describe();
  }

  CheckResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

inline std::string fmt_complex(std::complex<double> z) {
  return "(" + format_double(z.real()) + ", " + format_double(z.imag()) + ")";
}

inline std::string describe_chi(const DirichletCharacter& chi) {
  return "q=" + std::to_string(chi.modulus()) + " chi_index=" + std::to_string(chi.index());
}

}  // namespace detail

/// ||tau(chi)| - sqrt q| < 1e-6 for every primitive chi mod q, 3 <= q <= 200.
inline CheckResult check_gauss_modulus(const IdentitySuiteOptions& opt, u64 q_max = 200) {
  detail::CheckRecorder rec("gauss_modulus");
  const double tol = 1e-6 * opt.tolerance_scale;
  for (u64 q = 3; q <= q_max; ++q) {
    for (const auto& chi : enumerate_characters(build_modulus(q))) {
      if (character_conductor(chi) != q) continue;
      const double dev = std::abs(std::abs(opt.gauss(chi)) - std::sqrt(static_cast<double>(q)));
      rec.expect(dev < tol || (tol == 0 && dev == 0), [&] {
        return detail::describe_chi(chi) + " ||tau| - sqrt q| = " + format_double(dev);
      });
    }
  }
  return rec.finish();
}

/// tau(chi) = mu(q/q') chi'(q/q') tau(chi') within 1e-9 per component, for every
/// imprimitive non-principal chi mod q <= 100.
inline CheckResult check_gauss_induction(const IdentitySuiteOptions& opt, u64 q_max = 100) {
  detail::CheckRecorder rec("gauss_induction");
  const double tol = 1e-9 * opt.tolerance_scale;
  for (u64 q = 2; q <= q_max; ++q) {
    for (const auto& chi : enumerate_characters(build_modulus(q))) {
      if (chi.is_principal() || character_conductor(chi) == q) continue;
      const auto c = gauss_induction_check(chi, opt.gauss);
      const double dr = std::abs(c.lhs.real() - c.rhs.real()), di = std::abs(c.lhs.imag() - c.rhs.imag());
      rec.expect(dr <= tol && di <= tol, [&] {
        return detail::describe_chi(chi) + " conductor=" + std::to_string(c.conductor) +
               " tau=" + detail::fmt_complex(c.lhs) + " induced=" + detail::fmt_complex(c.rhs);
      });
    }
  }
  return rec.finish();
}

/// (2/phi(q)) sum_{chi odd} chi(a) tau(chi)^n = Kl_n(a^{-1}) - Kl_n(-a^{-1}) within
/// 1e-8 q^{n/2}, and |Kl_n(b, q)| <= n q^{(n-1)/2}, for q in {3,5,7,11,13}, n <= 3.
inline CheckResult check_kloosterman(const IdentitySuiteOptions& opt) {
  detail::CheckRecorder rec("kloosterman_moment");
  for (u64 q : {3, 5, 7, 11, 13}) {
    for (unsigned n = 1; n <= 3; ++n) {
      const double qd = static_cast<double>(q);
      const double tol = 1e-8 * std::pow(qd, n / 2.0) * opt.tolerance_scale;
      for (u64 a = 1; a < q; ++a) {
        const auto m = gauss_moment_identity(n, static_cast<i64>(a), q);
        const double dev = std::abs(m.lhs - m.rhs);
        rec.expect(dev <= tol, [&] {
          return "q=" + std::to_string(q) + " n=" + std::to_string(n) + " a=" + std::to_string(a) +
                 " moment=" + detail::fmt_complex(m.lhs) + " kloosterman=" + detail::fmt_complex(m.rhs);
        });
        const double kl = std::abs(kloosterman(n, static_cast<i64>(a), q));
        const double bound = n * std::pow(qd, (n - 1) / 2.0);
        rec.expect(kl <= bound * (1 + 1e-12 * opt.tolerance_scale), [&] {
          return "Deligne bound q=" + std::to_string(q) + " n=" + std::to_string(n) + " b=" + std::to_string(a) +
                 " |Kl|=" + format_double(kl) + " bound=" + format_double(bound);
        });
      }
    }
  }
  return rec.finish();
}

/// Mean square of S(N) - c over N <= q equals (q/12) prod_{p|q} (1 - p^{-2}):
/// 2/9 for the quadratic character mod 3 within 1e-9, and within relative
/// 1e-6 for every primitive chi mod a prime q <= 50.
inline CheckResult check_bateman_chowla(const IdentitySuiteOptions& opt) {
  detail::CheckRecorder rec("bateman_chowla");
  const double s = opt.tolerance_scale;
  const auto chi3 = DirichletCharacter(build_modulus(3), {1});
  const auto c3 = bateman_chowla_check(chi3);
  rec.expect(std::abs(c3.lhs - 2.0 / 9) <= 1e-9 * s && std::abs(c3.rhs - 2.0 / 9) <= 1e-9 * s, [&] {
    return "q=3 lhs=" + format_double(c3.lhs) + " rhs=" + format_double(c3.rhs) + " expected 2/9";
  });
  for (u64 q = 3; q <= 50; ++q) {
    if (!is_prime(q)) continue;
    for (const auto& chi : enumerate_characters(build_modulus(q))) {
      if (chi.is_principal()) continue;
      const auto c = bateman_chowla_check(chi);
      rec.expect(std::abs(c.lhs - c.rhs) <= 1e-6 * c.rhs * s, [&] {
        return detail::describe_chi(chi) + " lhs=" + format_double(c.lhs) + " rhs=" + format_double(c.rhs);
      });
    }
  }
  return rec.finish();
}

/// D(z1 z2, w1 w2) <= D(z1, w1) + D(z2, w2) for seeded random sequences in the
/// unit disc, y <= 1e4, plain and with random weights; slack 1e-12.
inline CheckResult check_triangle(const IdentitySuiteOptions& opt) {
  detail::CheckRecorder rec("triangle_inequality");
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double slack = 1e-12 * opt.tolerance_scale;
  const auto all_primes = primes_up_to(10'000);
  auto draw = [&](u64 y, bool circle) {
    std::vector<u64> primes(all_primes.begin(), std::upper_bound(all_primes.begin(), all_primes.end(), y));
    std::vector<std::complex<double>> vals(primes.size());
    for (auto& v : vals) {
      const double r = circle ? 1.0 : std::sqrt(u(rng));
      v = std::polar(r, constants::two_pi * u(rng));
    }
    return UnitDiscSequence(std::move(primes), std::move(vals));
  };
  for (std::size_t t = 0; t < opt.triangle_cases; ++t) {
    const u64 y = 2 + rng() % 9'999;
    const bool circle = t % 3 == 0;
    const bool weighted = t % 2 == 1;
    const auto z1 = draw(y, circle), w1 = draw(y, circle), z2 = draw(y, circle), w2 = draw(y, circle);
    double defect = 0;
    if (weighted) {
      std::vector<double> a(z1.size());
      for (auto& x : a) x = u(rng);
      defect = triangle_defect_weighted(z1, w1, z2, w2, a, y);
    } else {
      defect = triangle_defect(z1, w1, z2, w2, y);
    }
    rec.expect(defect >= -slack, [&] {
      return "case=" + std::to_string(t) + " y=" + std::to_string(y) + (weighted ? " weighted" : " plain") +
             " defect=" + format_double(defect);
    });
  }
  return rec.finish();
}

/// Brute-force minima over roots of unity against the closed form, the
/// averaged form, and the delta_g values, for odd g <= 9 and even k <= 12.
inline CheckResult check_trig(const IdentitySuiteOptions& opt) {
  detail::CheckRecorder rec("trig_closed_forms");
  const double tol = 1e-12 * opt.tolerance_scale;
  for (u64 g = 1; g <= 9; g += 2) {
    for (u64 k = 2; k <= 12; k += 2) {
      for (i64 l = 0; l < static_cast<i64>(k); ++l) {
        const auto r = root_min_term(g, k, l);
        rec.expect(std::abs(r.over_roots - r.closed_form) <= tol, [&] {
          return "root_min_term g=" + std::to_string(g) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                 " brute=" + format_double(r.over_roots) + " closed=" + format_double(r.closed_form);
        });
      }
      const auto a = root_min_average(g, k);
      rec.expect(std::abs(a.lhs - a.rhs) <= tol, [&] {
        return "average g=" + std::to_string(g) + " k*=" + std::to_string(k) + " lhs=" + format_double(a.lhs) +
               " rhs=" + format_double(a.rhs);
      });
    }
  }
  const double d6 = 5e-7 * opt.tolerance_scale;
  rec.expect(std::abs(delta_g(3) - 0.173007) <= d6, [] { return "delta_3=" + format_double(delta_g(3)); });
  rec.expect(std::abs(delta_g(5) - 0.064511) <= d6, [] { return "delta_5=" + format_double(delta_g(5)); });
  return rec.finish();
}

/// max_N |sum_{n<=N} eta(n)/n| and (2 - 1/e) max_N |sum_{N<=n<=r} eta(n)/n| both
/// dominate |sum_{n<=r} eta(n)/n^{1+1/log r}|, for primitive eta mod r <= 200.
inline CheckResult check_partial_sum_lower_bound(const IdentitySuiteOptions& opt, u64 r_max = 200) {
  detail::CheckRecorder rec("partial_sum_lower_bound");
  const double slack = 1e-12 * opt.tolerance_scale;
  for (u64 r = 3; r <= r_max; ++r) {
    for (const auto& eta : enumerate_characters(build_modulus(r))) {
      if (eta.is_principal() || character_conductor(eta) != r) continue;
      const auto c = partial_sum_lower_bound_check(eta);
      rec.expect(c.max_partial >= c.l_shifted - slack, [&] {
        return detail::describe_chi(eta) + " head max=" + format_double(c.max_partial) +
               " shifted=" + format_double(c.l_shifted);
      });
      rec.expect(kTailFactor * c.max_tail >= c.l_shifted - slack, [&] {
        return detail::describe_chi(eta) + " tail max=" + format_double(c.max_tail) +
               " shifted=" + format_double(c.l_shifted);
      });
    }
  }
  return rec.finish();
}

/// The local-factor bounds: the lambda inequality for every chi mod q <= 50 and
/// r1, r2 <= 60, the prime-power inequality for r <= 200, and the extremal
/// value 2/3 at (r1, r2) = (2, 3) with conj chi(2) = -1, conj chi(3) = 1.
inline CheckResult check_local_factors(const IdentitySuiteOptions& opt) {
  detail::CheckRecorder rec("local_factor_bounds");
  const double tol = 1e-9 * opt.tolerance_scale;
  const auto small_primes = primes_up_to(200);
  for (u64 q = 1; q <= 50; ++q) {
    for (const auto& chi : enumerate_characters(build_modulus(q))) {
      std::vector<std::complex<double>> at(201);
      for (u64 p : small_primes) at[p] = std::conj(chi.value(static_cast<i64>(p)));
      const PrimeValues c = [&at](u64 p) { return at[p]; };
      for (u64 r1 = 1; r1 <= 60; ++r1) {
        for (u64 r2 = r1; r2 <= 60; ++r2) {
          const double v = lambda_values(c, r1, r2).lhs;
          rec.expect(v <= 1 + tol, [&] {
            return "lambda " + detail::describe_chi(chi) + " r1=" + std::to_string(r1) + " r2=" + std::to_string(r2) +
                   " value=" + format_double(v);
          });
        }
      }
      for (u64 r = 1; r <= 200; ++r) {
        const double v = prime_power_inequality_value(c, r);
        rec.expect(v <= 1 + tol, [&] {
          return "prime power " + detail::describe_chi(chi) + " r=" + std::to_string(r) + " value=" + format_double(v);
        });
      }
    }
  }
  const auto extremal = lambda_values([](u64 p) { return std::complex<double>(p == 2 ? -1.0 : 1.0, 0.0); }, 2, 3);
  rec.expect(std::abs(extremal.lhs - 2.0 / 3.0) <= 1e-15 * opt.tolerance_scale, [&] {
    return "lambda (2,3) extremal value " + format_double(extremal.lhs) + " expected 2/3";
  });
  return rec.finish();
}

struct IdentitySuiteReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }

  [[nodiscard]] const CheckResult* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed()) return &c;
    }
    return nullptr;
  }
};

/// Runs every check in a fixed order on the calling thread.
inline IdentitySuiteReport identity_suite(const IdentitySuiteOptions& opt = {}) {
  IdentitySuiteReport rep;
  rep.checks.push_back(check_gauss_modulus(opt));
  rep.checks.push_back(check_gauss_induction(opt));
  rep.checks.push_back(check_kloosterman(opt));
  rep.checks.push_back(check_bateman_chowla(opt));
  rep.checks.push_back(check_triangle(opt));
  rep.checks.push_back(check_trig(opt));
  rep.checks.push_back(check_partial_sum_lower_bound(opt));
  rep.checks.push_back(check_local_factors(opt));
  return rep;
}

inline std::string describe(const IdentitySuiteReport& rep) {
  std::ostringstream out;
  for (const auto& c : rep.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << "  cases=" << c.cases << " failures=" << c.failures
        << " time=" << format_double(c.seconds) << "s\n";
    if (!c.passed()) out << "  first counterexample: " << c.first_counterexample << "\n";
  }
  return out.str();
}

}  // namespace charsum::experiments
