#pragma once

// Odd-order characters against the rest: their maximal sums, and their
// distance to odd characters of small conductor compared with the
// delta_g log log y floor.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/characters/value_table.hpp"
#include "charsum/charsums/profile.hpp"
#include "charsum/experiments/config.hpp"
#include "charsum/experiments/emit.hpp"
#include "charsum/experiments/parallel.hpp"
#include "charsum/experiments/scan.hpp"
#include "charsum/pretentious/nearest.hpp"
#include "charsum/pretentious/trig.hpp"

namespace charsum::experiments {

struct OddOrderCharacter {
  u64 chi_index = 0;
  double m_value = 0.0;
  double min_odd_dist_sq = 0.0;  // over odd xi with conductor <= bound
  u64 xi_m = 1;
  u64 xi_index = 0;
};

struct OddOrderModulus {
  u64 q = 0;
  u64 y = 0;
  double floor = 0.0;  // delta_g log log y
  double max_m_order = 0.0;
  double max_m_all = 0.0;
  std::vector<OddOrderCharacter> characters;
};

struct OddOrderReport {
  u64 g = 3;
  std::vector<OddOrderModulus> moduli;
  Table characters;
  Table summary;
  double aggregate_ratio_order = 0.0;  // max over q of max_{ord g} M / (sqrt q log q)
  double aggregate_ratio_all = 0.0;    // same over all non-principal characters
};

/// One prime q = 1 mod g.  `with_all` controls whether the maximum over all
/// characters is computed, which costs O(q^2).
inline OddOrderModulus odd_order_modulus(u64 q, u64 g, const ScanConfig& cfg, bool with_all = true) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("odd_order_modulus: g must be odd and at least 3");
  const auto modulus = build_modulus(q);
  const CharacterEvaluator ev(modulus);
  OddOrderModulus out;
  out.q = q;
  out.y = std::max<u64>(3, cfg.y_for(q));
  out.floor = delta_g(g) * std::log(std::log(static_cast<double>(out.y)));
  const CandidateSet cands(cfg.conductor_bound, out.y);
  std::vector<std::complex<double>> vals;
  for (const auto& chi : characters_of_order(modulus, g)) {
    ev.values(chi, vals);
    OddOrderCharacter c;
    c.chi_index = chi.index();
    c.m_value = max_partial_sum(vals).m_value;
    const auto d = cands.distances(cands.at_primes(vals));
    c.min_odd_dist_sq = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (cands.parity(i) != -1) continue;
      if (d[i] < c.min_odd_dist_sq - kDistanceTieTolerance) {
        c.min_odd_dist_sq = d[i];
        c.xi_m = cands.character(i).modulus();
        c.xi_index = cands.character(i).index();
      }
    }
    out.max_m_order = std::max(out.max_m_order, c.m_value);
    out.characters.push_back(c);
  }
  if (with_all) {
    // chi and conj(chi) share M, so half the characters suffice.
    const u64 phi = modulus->phi();
    for (u64 idx = 1; idx < phi; ++idx) {
      const auto chi = DirichletCharacter::from_index(modulus, idx);
      if (chi.conj().index() < idx) continue;
      ev.values(chi, vals);
      out.max_m_all = std::max(out.max_m_all, max_partial_sum(vals).m_value);
    }
  }
  return out;
}

inline OddOrderReport odd_order_report(const ScanConfig& cfg, u64 g) {
  cfg.validate();
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("odd_order_report: g must be odd and at least 3");
  std::vector<u64> qs;
  for (u64 q = cfg.q_min; q <= cfg.q_max; ++q) {
    if (q % g == 1 && is_prime(q)) qs.push_back(q);
  }
  OddOrderReport rep;
  rep.g = g;
  rep.moduli = parallel_map(qs, cfg.threads, [&](u64 q) { return odd_order_modulus(q, g, cfg); });
  rep.characters.columns = {"q", "chi_index", "M", "ratio_pv", "min_odd_dist_sq", "xi_m", "xi_index", "floor", "margin"};
  rep.summary.columns = {"q", "y", "max_M_order", "max_M_all", "ratio_pv_order", "ratio_pv_all"};
  for (const auto& m : rep.moduli) {
    for (const auto& c : m.characters) {
      rep.characters.add({m.q, c.chi_index, c.m_value, c.m_value / pv_scale(m.q), c.min_odd_dist_sq, c.xi_m,
                          c.xi_index, m.floor, c.min_odd_dist_sq - m.floor});
    }
    const double ro = m.max_m_order / pv_scale(m.q), ra = m.max_m_all / pv_scale(m.q);
    rep.summary.add({m.q, m.y, m.max_m_order, m.max_m_all, ro, ra});
    rep.aggregate_ratio_order = std::max(rep.aggregate_ratio_order, ro);
    rep.aggregate_ratio_all = std::max(rep.aggregate_ratio_all, ra);
  }
  return rep;
}

}  // namespace charsum::experiments
