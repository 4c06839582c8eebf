#pragma once

// Tuples of characters whose product is principal: their maximal sums,
// nearest pretenders, and whether the pretenders multiply to the trivial
// character.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/characters/value_table.hpp"
#include "charsum/charsums/profile.hpp"
#include "charsum/experiments/config.hpp"
#include "charsum/experiments/emit.hpp"
#include "charsum/pretentious/distance.hpp"
#include "charsum/pretentious/nearest.hpp"

namespace charsum::experiments {

struct ProductReport {
  std::size_t g = 0;
  Table characters;
  double normalized_product = 1.0;  // prod_j M(chi_j) / sqrt(q_j)
  u64 xi_product_conductor = 1;     // conductor of prod_j xi_j
  bool xi_product_trivial = true;
  double xi_product_dist_sq = 0.0;  // D(1, prod_j xi_j; y)^2
  u64 y = 2;
};

/// Throws std::invalid_argument unless the product of `chis` is principal.
inline ProductReport product_structure_report(const std::vector<DirichletCharacter>& chis, const ScanConfig& cfg) {
  if (chis.empty()) throw std::invalid_argument("product_structure_report: no characters given");
  auto prod = chis.front();
  for (std::size_t j = 1; j < chis.size(); ++j) prod = multiply(prod, chis[j]);
  if (!prod.is_principal()) {
    throw std::invalid_argument("product_structure_report: the product of the characters is not principal");
  }
  u64 q_max = 3;
  for (const auto& chi : chis) {
    if (chi.is_principal()) throw std::invalid_argument("product_structure_report: principal factor");
    q_max = std::max(q_max, chi.modulus());
  }
  ProductReport rep;
  rep.g = chis.size();
  rep.y = std::max<u64>(2, cfg.y_for(q_max));
  const CandidateSet cands(cfg.conductor_bound, rep.y);
  rep.characters.columns = {"j", "q", "chi_index", "order", "parity", "M", "M_over_sqrt_q", "xi_m", "xi_index", "dist_sq"};
  std::optional<DirichletCharacter> xi_prod;
  for (std::size_t j = 0; j < chis.size(); ++j) {
    const auto& chi = chis[j];
    const CharacterEvaluator ev(chi.modulus_ptr());
    const auto vals = ev.values(chi);
    const double m = max_partial_sum(vals).m_value;
    const auto np = nearest_character(chi, cands.at_primes(chi), cands, 0);
    const double norm = m / std::sqrt(static_cast<double>(chi.modulus()));
    rep.normalized_product *= norm;
    rep.characters.add({u64{j + 1}, chi.modulus(), chi.index(), character_order(chi), i64{character_parity(chi)}, m,
                        norm, np.m, np.xi.index(), np.dist_sq});
    xi_prod = xi_prod ? multiply(*xi_prod, np.xi) : np.xi;
  }
  const auto xi_prim = primitivize(*xi_prod);
  rep.xi_product_conductor = xi_prim.modulus();
  rep.xi_product_trivial = xi_prim.modulus() == 1;
  rep.xi_product_dist_sq =
      distance_sq(DirichletCharacter::principal(build_modulus(1)), xi_prim, rep.y).dist_sq;
  return rep;
}

inline Table product_summary_table(const ProductReport& rep) {
  Table t;
  t.columns = {"g", "y", "normalized_product", "xi_product_conductor", "xi_product_trivial", "xi_product_dist_sq"};
  t.add({u64{rep.g}, rep.y, rep.normalized_product, rep.xi_product_conductor,
         std::string(rep.xi_product_trivial ? "true" : "false"), rep.xi_product_dist_sq});
  return t;
}

}  // namespace charsum::experiments
