#pragma once

// Search for the primitive character of small conductor closest to chi in
// the distance D(chi, xi; y).  Candidates are all primitive characters with
// conductor <= bound, the trivial character mod 1 included, listed by
// conductor then index; ties keep the earlier candidate.

#include <algorithm>
#include <complex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "charsum/characters/character.hpp"
#include "charsum/characters/value_table.hpp"
#include "charsum/pretentious/distance.hpp"
#include "charsum/residue/primes.hpp"

namespace charsum {

/// Distances closer than this are treated as equal for tie-breaking.
inline constexpr double kDistanceTieTolerance = 1e-12;

/// Candidate characters with their values at every prime <= y, reusable
/// across all chi searched with the same (bound, y).
class CandidateSet {
 public:
  CandidateSet(u64 conductor_bound, u64 y) : bound_(conductor_bound), y_(y) {
    if (conductor_bound < 1) throw std::invalid_argument("CandidateSet: conductor bound must be positive");
    if (y < 2) throw std::invalid_argument("CandidateSet: y must be at least 2");
    primes_ = primes_up_to(y);
    chars_ = primitive_characters_up_to(conductor_bound);
    values_.reserve(chars_.size());
    parity_.reserve(chars_.size());
    for (const auto& xi : chars_) {
      const CharacterEvaluator ev(xi.modulus_ptr());
      const auto table = ev.values(xi);
      std::vector<std::complex<double>> at_primes(primes_.size());
      for (std::size_t i = 0; i < primes_.size(); ++i) at_primes[i] = table[primes_[i] % xi.modulus()];
      values_.push_back(std::move(at_primes));
      parity_.push_back(character_parity(xi));
    }
  }

  [[nodiscard]] u64 conductor_bound() const { return bound_; }
  [[nodiscard]] u64 y() const { return y_; }
  [[nodiscard]] const std::vector<u64>& primes() const { return primes_; }
  [[nodiscard]] std::size_t size() const { return chars_.size(); }
  [[nodiscard]] const DirichletCharacter& character(std::size_t i) const { return chars_[i]; }
  [[nodiscard]] const std::vector<std::complex<double>>& values(std::size_t i) const { return values_[i]; }
  [[nodiscard]] int parity(std::size_t i) const { return parity_[i]; }

  /// chi at each prime <= y, from a table of chi mod q.
  [[nodiscard]] std::vector<std::complex<double>> at_primes(std::span<const std::complex<double>> table) const {
    std::vector<std::complex<double>> out(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) out[i] = table[primes_[i] % table.size()];
    return out;
  }

  [[nodiscard]] std::vector<std::complex<double>> at_primes(const DirichletCharacter& chi) const {
    std::vector<std::complex<double>> out(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) out[i] = chi.value(static_cast<i64>(primes_[i]));
    return out;
  }

  /// D(chi, candidate_i; y)^2 for every candidate.
  [[nodiscard]] std::vector<double> distances(std::span<const std::complex<double>> chi_at_primes) const {
    std::vector<double> out(chars_.size());
    for (std::size_t i = 0; i < chars_.size(); ++i) out[i] = distance_sq_values(chi_at_primes, values_[i], primes_);
    return out;
  }

 private:
  u64 bound_;
  u64 y_;
  std::vector<u64> primes_;
  std::vector<DirichletCharacter> chars_;
  std::vector<std::vector<std::complex<double>>> values_;
  std::vector<int> parity_;
};

struct RankedCandidate {
  DirichletCharacter xi;
  double dist_sq = 0.0;
};

struct NearestPretender {
  DirichletCharacter xi;
  u64 m = 1;
  double dist_sq = 0.0;
  int parity_product = 1;
  std::vector<RankedCandidate> runners_up;
};

namespace detail {

/// Candidate positions by ascending distance; equal distances keep list order.
inline std::vector<std::size_t> rank_candidates(const std::vector<double>& d) {
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d[a] < d[b];
  });
  return order;
}

}  // namespace detail

inline NearestPretender nearest_character(const DirichletCharacter& chi,
                                          std::span<const std::complex<double>> chi_at_primes,
                                          const CandidateSet& candidates, std::size_t runners_up = 4) {
  const auto d = candidates.distances(chi_at_primes);
  // Linear pass for the winner so ties resolve to the first candidate exactly.
  std::size_t best = 0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] < d[best] - kDistanceTieTolerance) best = i;
  }
  const auto& xi = candidates.character(best);
  NearestPretender out{xi, xi.modulus(), d[best], character_parity(chi) * candidates.parity(best), {}};
  const auto order = detail::rank_candidates(d);
  for (std::size_t pos : order) {
    if (out.runners_up.size() >= runners_up) break;
    if (pos == best) continue;
    out.runners_up.push_back({candidates.character(pos), d[pos]});
  }
  return out;
}

inline NearestPretender nearest_character(const DirichletCharacter& chi, const CandidateSet& candidates,
                                          std::size_t runners_up = 4) {
  return nearest_character(chi, candidates.at_primes(chi), candidates, runners_up);
}

inline NearestPretender nearest_character(const DirichletCharacter& chi, u64 conductor_bound, u64 y,
                                          std::size_t runners_up = 4) {
  return nearest_character(chi, CandidateSet(conductor_bound, y), runners_up);
}

/// The A smallest values of D(chi, psi_j; y)^2 in ascending order.
inline std::vector<double> ordered_distances(const DirichletCharacter& chi, const CandidateSet& candidates,
                                             std::size_t count) {
  if (count > candidates.size()) throw std::invalid_argument("ordered_distances: fewer candidates than requested");
  auto d = candidates.distances(candidates.at_primes(chi));
  std::sort(d.begin(), d.end());
  d.resize(count);
  return d;
}

inline std::vector<double> ordered_distances(const DirichletCharacter& chi, u64 conductor_bound, u64 y,
                                             std::size_t count) {
  return ordered_distances(chi, CandidateSet(conductor_bound, y), count);
}

inline nlohmann::json to_json(const NearestPretender& np, const DirichletCharacter& chi) {
  nlohmann::json runners = nlohmann::json::array();
  for (const auto& r : np.runners_up) {
    runners.push_back({{"m", r.xi.modulus()}, {"xi_index", r.xi.index()}, {"dist_sq", r.dist_sq}});
  }
  return {{"q", chi.modulus()},       {"chi_index", chi.index()},
          {"m", np.m},                {"xi_index", np.xi.index()},
          {"dist_sq", np.dist_sq},    {"parity_product", np.parity_product},
          {"runners_up", runners}};
}

}  // namespace charsum
