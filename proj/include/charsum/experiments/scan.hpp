#pragma once

// Modulus scans: M(chi) for every non-principal character in a range of
// moduli, normalized against the Polya-Vinogradov and Montgomery-Vaughan
// scales, together with each character's nearest small-conductor pretender.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/characters/value_table.hpp"
#include "charsum/charsums/profile.hpp"
#include "charsum/experiments/config.hpp"
#include "charsum/experiments/emit.hpp"
#include "charsum/experiments/parallel.hpp"
#include "charsum/experiments/regression.hpp"
#include "charsum/pretentious/nearest.hpp"
#include "charsum/pretentious/trig.hpp"

namespace charsum::experiments {

struct CharacterRow {
  u64 q = 0;
  u64 chi_index = 0;
  u64 order = 1;
  int parity = 1;
  u64 conductor = 1;
  double m_value = 0.0;
  u64 argmax_x = 0;
  double ratio_pv = 0.0;  // M / (sqrt q log q)
  double ratio_mv = 0.0;  // M / (sqrt q log log q); q >= 16 only
  u64 xi_m = 1;
  u64 xi_index = 0;
  double dist_sq = 0.0;
  int parity_product = 1;
};

/// Montgomery-Vaughan ratios are left blank below this modulus, where
/// log log q is too small to be a meaningful scale.
inline constexpr u64 kMvRatioMinModulus = 16;

inline double pv_scale(u64 q) {
  const double qd = static_cast<double>(q);
  return std::sqrt(qd) * std::log(qd);
}

inline double mv_scale(u64 q) {
  const double qd = static_cast<double>(q);
  return std::sqrt(qd) * std::log(std::log(qd));
}

/// Rows for the non-principal characters mod q whose order passes the filter,
/// in character-index order.
inline std::vector<CharacterRow> scan_modulus(u64 q, const ScanConfig& cfg) {
  const auto modulus = build_modulus(q);
  const CharacterEvaluator ev(modulus);
  const CandidateSet cands(cfg.conductor_bound, std::max<u64>(2, cfg.y_for(q)));
  std::vector<CharacterRow> out;
  std::vector<std::complex<double>> vals;
  for (const auto& chi : enumerate_characters(modulus)) {
    if (chi.is_principal()) continue;
    const auto meta = character_meta(chi);
    if (!cfg.wants_order(meta.order)) continue;
    ev.values(chi, vals);
    const auto best = max_partial_sum(vals);
    const auto np = nearest_character(chi, cands.at_primes(vals), cands, 0);
    CharacterRow row;
    row.q = q;
    row.chi_index = chi.index();
    row.order = meta.order;
    row.parity = meta.parity;
    row.conductor = meta.conductor;
    row.m_value = best.m_value;
    row.argmax_x = best.argmax_x;
    row.ratio_pv = best.m_value / pv_scale(q);
    row.ratio_mv = q >= kMvRatioMinModulus ? best.m_value / mv_scale(q) : std::nan("");
    row.xi_m = np.m;
    row.xi_index = np.xi.index();
    row.dist_sq = np.dist_sq;
    row.parity_product = np.parity_product;
    out.push_back(row);
  }
  return out;
}

struct ScanResult {
  std::vector<CharacterRow> rows;
  Table aggregates;  // per q: the max over all characters and over each odd order
  Table regression;  // exponent fits of log(max M / sqrt q) against log log q
};

inline Table rows_table(const std::vector<CharacterRow>& rows) {
  Table t;
  t.columns = {"q",        "chi_index", "order", "parity",  "conductor", "M",       "argmax_x",
               "ratio_pv", "ratio_mv",  "xi_m",  "xi_index", "dist_sq",  "parity_product"};
  t.rows.reserve(rows.size());
  for (const auto& r : rows) {
    t.add({r.q, r.chi_index, r.order, i64{r.parity}, r.conductor, r.m_value, r.argmax_x, r.ratio_pv,
           std::isnan(r.ratio_mv) ? Cell{} : Cell{r.ratio_mv}, r.xi_m, r.xi_index, r.dist_sq,
           i64{r.parity_product}});
  }
  return t;
}

namespace detail {

struct GroupMax {
  std::size_t count = 0;
  double m_value = -1.0;
  u64 chi_index = 0;
};

}  // namespace detail

/// Aggregates and regressions for rows sorted by (q, chi_index).  Group 0
/// stands for "all characters".
inline ScanResult summarize_scan(std::vector<CharacterRow> rows) {
  ScanResult res;
  res.aggregates.columns = {"q", "order", "count", "max_M", "chi_index", "max_ratio_pv", "max_ratio_mv"};
  std::map<u64, std::vector<std::pair<double, double>>> fit_points;  // group -> (log log q, log(M/sqrt q))
  std::size_t i = 0;
  while (i < rows.size()) {
    const u64 q = rows[i].q;
    std::map<u64, detail::GroupMax> groups;
    for (; i < rows.size() && rows[i].q == q; ++i) {
      const auto& r = rows[i];
      for (u64 g : {u64{0}, r.order}) {
        if (g != 0 && (g % 2 == 0 || g < 3)) continue;
        auto& gm = groups[g];
        ++gm.count;
        if (r.m_value > gm.m_value) {
          gm.m_value = r.m_value;
          gm.chi_index = r.chi_index;
        }
      }
    }
    for (const auto& [g, gm] : groups) {
      const Cell mv = q >= kMvRatioMinModulus ? Cell{gm.m_value / mv_scale(q)} : Cell{};
      res.aggregates.add({q, g, u64{gm.count}, gm.m_value, gm.chi_index, gm.m_value / pv_scale(q), mv});
      if (q >= kMvRatioMinModulus && gm.m_value > 0) {
        const double qd = static_cast<double>(q);
        fit_points[g].emplace_back(std::log(std::log(qd)), std::log(gm.m_value / std::sqrt(qd)));
      }
    }
  }
  res.regression.columns = {"order", "points", "slope", "slope_se", "r_squared", "pv_exponent", "odd_order_exponent"};
  for (const auto& [g, pts] : fit_points) {
    std::vector<double> xs, ys;
    for (const auto& [x, y] : pts) {
      xs.push_back(x);
      ys.push_back(y);
    }
    const bool enough = xs.size() >= 2 && std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) != xs.end();
    if (!enough) continue;
    const auto fit = least_squares(xs, ys);
    const Cell ref = g == 0 ? Cell{} : Cell{1.0 - delta_g(g) / 2.0};
    res.regression.add({g, u64{fit.n}, fit.slope, std::isnan(fit.slope_se) ? Cell{} : Cell{fit.slope_se},
                        std::isnan(fit.r_squared) ? Cell{} : Cell{fit.r_squared}, 1.0, ref});
  }
  res.rows = std::move(rows);
  return res;
}

/// Full scan over the configured moduli, one modulus per work item.
inline ScanResult pv_scan(const ScanConfig& cfg) {
  cfg.validate();
  const auto qs = moduli(cfg);
  auto per_q = parallel_map(qs, cfg.threads, [&](u64 q) { return scan_modulus(q, cfg); });
  std::vector<CharacterRow> rows;
  for (auto& v : per_q) rows.insert(rows.end(), v.begin(), v.end());
  return summarize_scan(std::move(rows));
}

}  // namespace charsum::experiments
