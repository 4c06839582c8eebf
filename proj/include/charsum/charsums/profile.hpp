#pragma once

// Prefix sums S(x) = sum_{n<=x} chi(n) and the maximum M(chi) = max_x |S(x)|.

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/characters/value_table.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

struct CharSumProfile {
  u64 q = 0;
  u64 chi_index = 0;
  /// prefix[x] for x = 0..q; left empty in streaming mode.
  std::vector<std::complex<double>> prefix;
  double m_value = 0.0;
  u64 argmax_x = 0;
};

struct PartialSumMax {
  double m_value = 0.0;
  u64 argmax_x = 0;
};

/// Two partial sums whose moduli differ by less than this are treated as tied.
inline constexpr double kArgmaxTieTolerance = 1e-9;

/// Running max of |sum_{n<=x} values[n]| for x = 1..size-1, values indexed
/// from 0 (values[0] is chi(0) and never counted, matching n >= 1).
inline PartialSumMax max_partial_sum(std::span<const std::complex<double>> values,
                                     std::vector<std::complex<double>>* prefix = nullptr) {
  const std::size_t q = values.size();
  if (prefix) prefix->assign(q + 1, {});
  PartialSumMax best;
  double best_norm = 0.0;
  CompensatedComplexSum s;
  // The period wraps: values[q % q] = values[0] is chi(q).
  for (std::size_t x = 1; x <= q; ++x) {
    s.add(values[x % q]);
    const auto v = s.value();
    if (prefix) (*prefix)[x] = v;
    const double nrm = std::norm(v);
    if (nrm > best_norm && std::sqrt(nrm) > best.m_value + kArgmaxTieTolerance) {
      best_norm = nrm;
      best.m_value = std::abs(v);
      best.argmax_x = x;
    }
  }
  return best;
}

inline void require_nonprincipal(const DirichletCharacter& chi, const char* where) {
  if (chi.is_principal()) throw std::invalid_argument(std::string(where) + ": principal character");
}

/// Profiles are dense up to this modulus; larger ones are computed streaming.
inline constexpr u64 kDenseProfileLimit = 1'000'000;

inline CharSumProfile prefix_profile(const DirichletCharacter& chi, const CharacterEvaluator& ev) {
  require_nonprincipal(chi, "prefix_profile");
  CharSumProfile out{chi.modulus(), chi.index(), {}, 0.0, 0};
  const auto values = ev.values(chi);
  const auto best = max_partial_sum(values, &out.prefix);
  out.m_value = best.m_value;
  out.argmax_x = best.argmax_x;
  return out;
}

inline CharSumProfile prefix_profile(const DirichletCharacter& chi) {
  require_nonprincipal(chi, "prefix_profile");
  if (chi.modulus() <= kDenseProfileLimit) return prefix_profile(chi, CharacterEvaluator(chi.modulus_ptr()));
  CharSumProfile out{chi.modulus(), chi.index(), {}, 0.0, 0};
  CompensatedComplexSum s;
  const u64 q = chi.modulus();
  for (u64 x = 1; x <= q; ++x) {
    s.add(chi.value(static_cast<i64>(x)));
    const double m = std::abs(s.value());
    if (m > out.m_value + kArgmaxTieTolerance) {
      out.m_value = m;
      out.argmax_x = x;
    }
  }
  return out;
}

/// sum_{x<=n<=x+y} chi(n) from a dense profile.
inline std::complex<double> interval_sum(const CharSumProfile& profile, u64 x, u64 y) {
  if (profile.prefix.empty()) throw std::invalid_argument("interval_sum: profile has no stored prefix");
  if (x + y > profile.q || x + y < x) throw std::out_of_range("interval_sum: interval leaves [0, q]");
  return profile.prefix[x + y] - (x == 0 ? std::complex<double>{} : profile.prefix[x - 1]);
}

inline std::complex<double> interval_sum(const DirichletCharacter& chi, u64 x, u64 y) {
  if (x + y > chi.modulus() || x + y < x) throw std::out_of_range("interval_sum: interval leaves [0, q]");
  CompensatedComplexSum s;
  for (u64 n = x; n <= x + y; ++n) s.add(chi.value(static_cast<i64>(n)));
  return s.value();
}

}  // namespace charsum
