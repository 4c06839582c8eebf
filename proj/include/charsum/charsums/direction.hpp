#pragma once

// Polar decomposition of sum_{n<=x} chi(n) over the odd characters mod a prime.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/characters/value_table.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

struct DirectionEntry {
  u64 chi_index = 0;
  std::complex<double> sum;
  double angle = 0.0;       // arg of the sum, in (-pi, pi]
  double normalized = 0.0;  // |sum| / (sqrt(q) log log q)
};

/// Entries sorted by decreasing magnitude, ties by character index.
inline std::vector<DirectionEntry> direction_statistics(u64 q, u64 x) {
  if (!is_prime(q)) throw std::invalid_argument("direction_statistics: q must be prime");
  if (x < 1 || x > q) throw std::out_of_range("direction_statistics: x must lie in [1, q]");
  const auto modulus = build_modulus(q);
  const CharacterEvaluator ev(modulus);
  const double scale = std::sqrt(static_cast<double>(q)) * std::log(std::log(static_cast<double>(q)));
  std::vector<DirectionEntry> out;
  std::vector<std::complex<double>> vals;
  for (const auto& chi : enumerate_characters(modulus)) {
    if (character_parity(chi) != -1) continue;
    ev.values(chi, vals);
    CompensatedComplexSum s;
    for (u64 n = 1; n <= x; ++n) s.add(vals[n % q]);
    const auto v = s.value();
    out.push_back({chi.index(), v, std::arg(v), std::abs(v) / scale});
  }
  std::stable_sort(out.begin(), out.end(), [](const DirectionEntry& a, const DirectionEntry& b) {
    return std::abs(a.sum) > std::abs(b.sum);
  });
  return out;
}

}  // namespace charsum
