#pragma once

// The twisted harmonic sum sum_{n<=q} conj chi(n)/n (e(-n alpha) - chi(-1) e(n alpha))
// against its predicted major-arc main term
//   (xi(-1) - chi(-1)) xi(b) tau(conj xi) / phi(r)
//     * prod_{p^a || r/m} (conj chi(p^a) - conj xi(p) conj chi(p^{a-1}))
//     * sum_{n<=N} (conj chi xi)(n)/n,
// where xi mod m is the nearest character of conductor <= s.  Off the major
// arcs, or when m does not divide r, the main term is zero.

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "charsum/characters/character.hpp"
#include "charsum/charsums/arcs.hpp"
#include "charsum/charsums/gauss.hpp"
#include "charsum/charsums/harmonic.hpp"
#include "charsum/charsums/profile.hpp"
#include "charsum/experiments/config.hpp"
#include "charsum/experiments/emit.hpp"
#include "charsum/pretentious/nearest.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum::experiments {

struct MainTermComparison {
  double alpha = 0.0;
  ArcPoint arc;
  u64 xi_m = 1;
  u64 xi_index = 0;
  double xi_dist_sq = 0.0;
  bool m_divides_r = false;
  std::complex<double> true_sum;
  std::complex<double> main_term;
  double discrepancy = 0.0;     // |true_sum - main_term|
  double normalizer = 0.0;      // (log Q)^{6/7}
  double minor_envelope = 0.0;  // (log Q)^{5/6}
};

/// `xi_bound` overrides the conductor bound s for the pretender search.
inline MainTermComparison major_arc_compare(const DirichletCharacter& chi, double alpha, const ScanConfig& cfg,
                                            std::optional<u64> xi_bound = std::nullopt) {
  if (character_conductor(chi) != chi.modulus()) {
    throw std::invalid_argument("major_arc_compare: chi must be primitive");
  }
  require_nonprincipal(chi, "major_arc_compare");
  const u64 q = chi.modulus();
  const auto arc_cfg = make_arc_config(q, cfg.conditional());
  const double log_q_big = std::log(arc_cfg.big_q);
  MainTermComparison out;
  out.alpha = alpha;
  out.arc = classify_arc(alpha, arc_cfg);
  out.normalizer = std::pow(log_q_big, 6.0 / 7.0);
  out.minor_envelope = std::pow(log_q_big, 5.0 / 6.0);

  // S(Q^e) only restricts anything when Q^e < q.
  std::optional<u64> smooth;
  const double level = std::pow(arc_cfg.big_q, static_cast<double>(cfg.smoothness_exponent));
  if (level < static_cast<double>(q)) smooth = std::max<u64>(1, static_cast<u64>(level));
  const double parity = character_parity(chi);
  out.true_sum = twisted_harmonic_sum(chi, -alpha, q, smooth) - parity * twisted_harmonic_sum(chi, alpha, q, smooth);

  const u64 bound = xi_bound.value_or(std::max<u64>(1, static_cast<u64>(arc_cfg.s)));
  const u64 y = std::max<u64>(2, static_cast<u64>(arc_cfg.big_q));
  const auto np = nearest_character(chi, bound, y, 0);
  out.xi_m = np.m;
  out.xi_index = np.xi.index();
  out.xi_dist_sq = np.dist_sq;
  out.m_divides_r = out.arc.r % np.m == 0;

  if (out.arc.is_major && out.m_divides_r) {
    const auto& xi = np.xi;
    const auto xi_conj = xi.conj();
    const auto chi_conj = chi.conj();
    const u64 r = out.arc.r;
    std::complex<double> factor = (xi.value(-1) - chi.value(-1)) * xi.value(out.arc.b) *
                                  gauss_sum(xi_conj).value / static_cast<double>(totient(r));
    for (const auto& [p, a] : factorize(r / np.m)) {
      const auto pp = static_cast<i64>(p);
      const auto pa = static_cast<i64>(ipow(p, a));
      factor *= chi_conj.value(pa) - xi_conj.value(pp) * chi_conj.value(pa / pp);
    }
    const auto cutoff = static_cast<u64>(std::floor(out.arc.n_value));
    CompensatedComplexSum s;
    auto term = [&](u64 n) {
      const auto v = chi_conj.value(static_cast<i64>(n)) * xi.value(static_cast<i64>(n));
      if (v != std::complex<double>{}) s.add(v / static_cast<double>(n));
    };
    if (cutoff >= 1) {
      if (smooth) {
        for (u64 n : smooth_numbers(*smooth, cutoff).members) term(n);
      } else {
        for (u64 n = 1; n <= cutoff; ++n) term(n);
      }
    }
    out.main_term = factor * s.value();
  }
  out.discrepancy = std::abs(out.true_sum - out.main_term);
  return out;
}

inline Table comparison_table(const std::vector<MainTermComparison>& rows) {
  Table t;
  t.columns = {"alpha", "b",         "r",           "N",        "major",     "xi_m",       "xi_index",   "m_divides_r",
               "true_re", "true_im", "main_re",     "main_im",  "discrepancy", "normalized", "minor_envelope"};
  for (const auto& c : rows) {
    t.add({c.alpha, c.arc.b, c.arc.r, c.arc.n_value, std::string(c.arc.is_major ? "1" : "0"), c.xi_m, c.xi_index,
           std::string(c.m_divides_r ? "1" : "0"), c.true_sum.real(), c.true_sum.imag(), c.main_term.real(),
           c.main_term.imag(), c.discrepancy, c.discrepancy / c.normalizer, c.minor_envelope});
  }
  return t;
}

}  // namespace charsum::experiments
