// Acceptance run: one line per criterion with its verdict and wall time.
// Exit status is nonzero iff a hard criterion fails; the soft reports in
// criterion 10 print SOFT-FAIL without affecting it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "charsum/charsum.hpp"
#include "oracles.hpp"

#ifndef CHARSUM_CLI_PATH
#error "CHARSUM_CLI_PATH must point at the charsum executable"
#endif

using namespace charsum;
using namespace charsum::experiments;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

enum class Kind { hard, soft };

int hard_failures = 0;

void run(const std::string& label, double budget_seconds, Kind kind, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_seconds) {
    v.ok = false;
    v.detail += " [over budget " + format_double(budget_seconds) + " s]";
  }
  const char* tag = kind == Kind::hard ? (v.ok ? "PASS" : "FAIL") : (v.ok ? "SOFT-PASS" : "SOFT-FAIL");
  std::printf("%-9s %-44s %8.2f s  %s\n", tag, label.c_str(), secs, v.detail.c_str());
  std::fflush(stdout);
  if (kind == Kind::hard && !v.ok) ++hard_failures;
}

Verdict from_check(const CheckResult& c) {
  Verdict v{c.passed(), "cases=" + std::to_string(c.cases)};
  if (!c.passed()) v.detail += " failures=" + std::to_string(c.failures) + " first: " + c.first_counterexample;
  return v;
}

unsigned worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

Verdict criterion1() {
  std::size_t cases = 0;
  double worst = 0;
  for (u64 q = 3; q <= 200; ++q) {
    for (const auto& chi : enumerate_characters(build_modulus(q))) {
      if (character_conductor(chi) != q) continue;
      ++cases;
      worst = std::max(worst, std::abs(std::abs(gauss_sum(chi).value) - std::sqrt(static_cast<double>(q))));
    }
  }
  return {worst < 1e-6, "primitive=" + std::to_string(cases) + " max ||tau|-sqrt q|=" + format_double(worst)};
}

Verdict criterion2() {
  std::size_t cases = 0;
  double worst = 0;
  for (u64 q = 2; q <= 100; ++q) {
    for (const auto& chi : enumerate_characters(build_modulus(q))) {
      if (chi.is_principal() || character_conductor(chi) == q) continue;
      ++cases;
      const auto c = gauss_induction_check(chi);
      worst = std::max({worst, std::abs(c.lhs.real() - c.rhs.real()), std::abs(c.lhs.imag() - c.rhs.imag())});
    }
  }
  return {worst <= 1e-9, "imprimitive=" + std::to_string(cases) + " max component error=" + format_double(worst)};
}

Verdict criterion3() {
  std::size_t cases = 0;
  double worst_rel = 0, worst_deligne = 0;
  for (u64 q : {3, 5, 7, 11, 13}) {
    for (unsigned n = 1; n <= 3; ++n) {
      const double qd = static_cast<double>(q);
      for (u64 a = 1; a < q; ++a) {
        ++cases;
        const auto m = gauss_moment_identity(n, static_cast<i64>(a), q);
        worst_rel = std::max(worst_rel, std::abs(m.lhs - m.rhs) / std::pow(qd, n / 2.0));
        const double kl = std::abs(kloosterman(n, static_cast<i64>(a), q));
        worst_deligne = std::max(worst_deligne, kl / (n * std::pow(qd, (n - 1) / 2.0)));
      }
    }
  }
  return {worst_rel <= 1e-8 && worst_deligne <= 1 + 1e-12,
          "points=" + std::to_string(cases) + " max err/q^(n/2)=" + format_double(worst_rel) +
              " max |Kl|/(n q^((n-1)/2))=" + format_double(worst_deligne)};
}

Verdict criterion4() {
  const auto c3 = bateman_chowla_check(DirichletCharacter(build_modulus(3), {1}));
  bool ok = std::abs(c3.lhs - 2.0 / 9) <= 1e-9 && std::abs(c3.rhs - 2.0 / 9) <= 1e-9;
  double worst = 0;
  std::size_t cases = 0;
  for (u64 q = 3; q <= 50; ++q) {
    if (!is_prime(q)) continue;
    for (const auto& chi : enumerate_characters(build_modulus(q))) {
      if (chi.is_principal()) continue;
      ++cases;
      const auto c = bateman_chowla_check(chi);
      worst = std::max(worst, std::abs(c.lhs - c.rhs) / c.rhs);
    }
  }
  ok = ok && worst <= 1e-6;
  return {ok, "q=3 lhs=" + format_double(c3.lhs) + " rhs=" + format_double(c3.rhs) + "; characters=" +
                  std::to_string(cases) + " max rel err=" + format_double(worst)};
}

Verdict criterion5() {
  IdentitySuiteOptions opt;
  opt.seed = 20240611;
  opt.triangle_cases = 10'000;
  return from_check(check_triangle(opt));
}

Verdict criterion6() {
  const auto c = check_trig(IdentitySuiteOptions{});
  auto v = from_check(c);
  // Formula values; see the notes on the delta_3 digits.
  const bool digits = std::abs(delta_g(3) - 0.173007) < 5e-7 && std::abs(delta_g(5) - 0.064511) < 5e-7;
  v.ok = v.ok && digits;
  v.detail += " delta_3=" + format_double(delta_g(3)) + " delta_5=" + format_double(delta_g(5));
  return v;
}

Verdict criterion7() { return from_check(check_partial_sum_lower_bound(IdentitySuiteOptions{})); }

Verdict criterion8() {
  auto v = from_check(check_local_factors(IdentitySuiteOptions{}));
  // The extremal point realised by an actual character: the quadratic
  // character mod 11 has chi(2) = -1 and chi(3) = 1.
  const DirichletCharacter quad11(build_modulus(11), {5});
  const bool values = quad11(2) == UnitValue::root(1, 2) && quad11(3) == UnitValue::one();
  const double six = lambda_inequality_check(quad11, 2, 3);
  v.ok = v.ok && values && six == 2.0 / 3.0;
  v.detail += " (2,3) value=" + format_double(six);
  return v;
}

Verdict criterion9() {
  struct Worst {
    double ratio = 0;
    u64 q = 0, idx = 0;
  };
  std::vector<u64> qs;
  for (u64 q = 3; q <= 2000; ++q) qs.push_back(q);
  const auto per_q = parallel_map(qs, worker_count(), [](u64 q) {
    const auto modulus = build_modulus(q);
    const CharacterEvaluator ev(modulus);
    std::vector<std::complex<double>> vals;
    Worst w;
    w.q = q;
    const double scale = std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q));
    for (u64 idx = 1; idx < modulus->phi(); ++idx) {
      const auto chi = DirichletCharacter::from_index(modulus, idx);
      if (chi.conj().index() < idx) continue;  // M(conj chi) = M(chi)
      ev.values(chi, vals);
      const double r = max_partial_sum(vals).m_value / scale;
      if (r > w.ratio) {
        w.ratio = r;
        w.idx = idx;
      }
    }
    return w;
  });
  Worst worst;
  for (const auto& w : per_q) {
    if (w.ratio > worst.ratio) worst = w;
  }
  const auto m3 = prefix_profile(DirichletCharacter(build_modulus(3), {1})).m_value;
  const DirichletCharacter leg7(build_modulus(7), {3});
  const auto m7 = prefix_profile(leg7).m_value;
  const auto brute7 = oracle::brute_max_partial([&](u64 n) { return leg7.value(static_cast<i64>(n)); }, 7).first;
  const bool ok = worst.ratio < 1.0 && m3 == 1.0 && m7 == 2.0 && brute7 == 2.0;
  return {ok, "max M/(sqrt q ln q)=" + format_double(worst.ratio) + " at q=" + std::to_string(worst.q) +
                  " chi_index=" + std::to_string(worst.idx) + "; M(q=3)=" + format_double(m3) +
                  " M(Legendre 7)=" + format_double(m7)};
}

/// Primes q = 1 mod 3, roughly log-spaced over [1e3, 1e5].
std::vector<u64> cubic_grid(std::size_t points) {
  std::vector<u64> out;
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    u64 q = static_cast<u64>(std::pow(10.0, 3.0 + 2.0 * t));
    while (!(q % 3 == 1 && is_prime(q))) --q;
    if (q >= 1000 && (out.empty() || out.back() != q)) out.push_back(q);
  }
  if (out.empty() || out.front() < 1000) throw std::logic_error("cubic grid is empty");
  return out;
}

Verdict criterion10a() {
  const auto grid = cubic_grid(24);
  ScanConfig cfg;
  cfg.conductor_bound = 1;
  cfg.y_policy = YPolicy::log_q;
  const auto mods = parallel_map(grid, worker_count(), [&](u64 q) { return odd_order_modulus(q, 3, cfg); });
  double agg_order = 0, agg_all = 0;
  std::vector<double> xs, ys;
  for (const auto& m : mods) {
    agg_order = std::max(agg_order, m.max_m_order / pv_scale(m.q));
    agg_all = std::max(agg_all, m.max_m_all / pv_scale(m.q));
    const double qd = static_cast<double>(m.q);
    xs.push_back(std::log(std::log(qd)));
    ys.push_back(std::log(m.max_m_order / std::sqrt(qd)));
  }
  const auto fit = least_squares(xs, ys);
  return {agg_order < agg_all, "moduli=" + std::to_string(grid.size()) + " cubic max=" + format_double(agg_order) +
                                   " all max=" + format_double(agg_all) + "; cubic exponent fit " +
                                   format_double(fit.slope) + " +- " + format_double(fit.slope_se) +
                                   " (1 - delta_3/2 = " + format_double(1 - delta_g(3) / 2) + ")"};
}

Verdict criterion10b() {
  const u64 q = 10007;
  const auto modulus = build_modulus(q);
  const CharacterEvaluator ev(modulus);
  const CandidateSet cands(30, q);
  // Diagnostic: candidates restricted to conductor <= s = (log q)^(1/3).
  const auto s_bound = static_cast<u64>(std::floor(std::cbrt(std::log(static_cast<double>(q)))));
  const CandidateSet small(std::max<u64>(1, s_bound), q);
  struct Entry {
    double stat;
    int pp;
  };
  std::vector<Entry> entries, entries_s;
  std::vector<std::complex<double>> vals;
  for (u64 idx = 1; idx < modulus->phi(); ++idx) {
    const auto chi = DirichletCharacter::from_index(modulus, idx);
    ev.values(chi, vals);
    const double m = max_partial_sum(vals).m_value;
    const auto np = nearest_character(chi, cands.at_primes(vals), cands, 0);
    const double md = static_cast<double>(np.m);
    entries.push_back({m * static_cast<double>(totient(np.m)) / std::sqrt(static_cast<double>(q) * md), np.parity_product});
    const auto ns = nearest_character(chi, small.at_primes(vals), small, 0);
    const double ms = static_cast<double>(ns.m);
    entries_s.push_back({m * static_cast<double>(totient(ns.m)) / std::sqrt(static_cast<double>(q) * ms), ns.parity_product});
  }
  struct Shares {
    double top, all;
  };
  auto shares = [](std::vector<Entry>& es) {
    std::stable_sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) { return a.stat > b.stat; });
    auto frac_odd = [&](std::size_t n) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < n; ++i) c += es[i].pp == -1 ? 1 : 0;
      return static_cast<double>(c) / static_cast<double>(n);
    };
    return Shares{frac_odd(es.size() / 10), frac_odd(es.size())};
  };
  const auto d = shares(entries), ds = shares(entries_s);
  const double ratio = d.top / d.all;
  return {ratio > 1.0, "q=10007 conductor<=30: top-decile share(pp=-1)=" + format_double(d.top) +
                           " overall=" + format_double(d.all) + " ratio=" + format_double(ratio) +
                           "; conductor<=" + std::to_string(s_bound) + ": ratio=" + format_double(ds.top / ds.all)};
}

Verdict criterion10c() {
  const auto rep = direction_experiment(10007, 5003, 0.0);
  return {rep.median_rel_error < 0.25, "q=10007 y=" + std::to_string(rep.y) +
                                           " median |E_y - L(1,chi)|/|L(1,chi)|=" +
                                           format_double(rep.median_rel_error)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict criterion11() {
  const auto dir = std::filesystem::temp_directory_path() / "charsum_acceptance";
  std::filesystem::create_directories(dir);
  const std::string cli = CHARSUM_CLI_PATH;
  std::vector<std::string> outs;
  for (int run = 0; run < 2; ++run) {
    const auto out = (dir / ("scan" + std::to_string(run) + ".csv")).string();
    std::filesystem::remove(out);
    const std::string cmd = "\"" + cli + "\" verify 2>/dev/null && \"" + cli +
                            "\" scan --qmin 3 --qmax 500 --threads 8 --out \"" + out + "\" 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) return {false, "run " + std::to_string(run) + " exited with status " + std::to_string(rc)};
    outs.push_back(slurp(out));
  }
  const bool same = outs[0] == outs[1] && !outs[0].empty();
  const auto lines = std::count(outs[0].begin(), outs[0].end(), '\n');
  return {same, std::string(same ? "byte-identical" : "outputs differ") + " (" + std::to_string(lines) +
                    " lines, " + std::to_string(outs[0].size()) + " bytes)"};
}

}  // namespace

int main() {
  std::printf("charsum acceptance run, %u worker thread(s)\n", worker_count());
  run("1  Gauss sum modulus, q <= 200", 10, Kind::hard, criterion1);
  run("2  Gauss sum induction, q <= 100", 10, Kind::hard, criterion2);
  run("3  Kloosterman moments and Deligne bound", 30, Kind::hard, criterion3);
  run("4  Bateman-Chowla mean square", 60, Kind::hard, criterion4);
  run("5  triangle inequality fuzz (1e4 cases)", 60, Kind::hard, criterion5);
  run("6  root-of-unity minima and delta_g", 60, Kind::hard, criterion6);
  run("7  partial-sum lower bound, q <= 200", 60, Kind::hard, criterion7);
  run("8  local-factor inequalities", 60, Kind::hard, criterion8);
  run("9  Polya-Vinogradov envelope, q <= 2000", 120, Kind::hard, criterion9);
  const auto t10 = std::chrono::steady_clock::now();
  run("10a cubic max below global max", 1800, Kind::soft, criterion10a);
  run("10b parity enrichment of top decile", 1800, Kind::soft, criterion10b);
  run("10c short Euler product vs L(1,chi)", 1800, Kind::soft, criterion10c);
  const double s10 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t10).count();
  run("10  soft reports within 30 min total", 1800, Kind::hard,
      [&] { return Verdict{s10 < 1800, "elapsed " + format_double(s10) + " s"}; });
  run("11 deterministic scan CSV", 600, Kind::hard, criterion11);
  std::printf("%s\n", hard_failures == 0 ? "acceptance: all hard criteria passed" : "acceptance: FAILED");
  return hard_failures == 0 ? 0 : 1;
}
