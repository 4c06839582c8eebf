#pragma once

// Bulk evaluation of characters mod a fixed q.  A CharacterEvaluator owns the
// per-modulus tables (discrete logs of every residue and the group-exponent
// roots of unity); filling the q values of one character then costs a few
// table lookups per residue and no divisions.

#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/residue/unit_value.hpp"

namespace charsum {

class CharacterEvaluator {
 public:
  explicit CharacterEvaluator(ModulusPtr modulus) : modulus_(std::move(modulus)) {
    const u64 q = modulus_->q();
    const std::size_t k = modulus_->rank();
    const u64 big_l = modulus_->group_exponent();
    logs_.assign(q * k, 0);
    unit_.assign(q, 0);
    std::vector<u64> buf(k);
    for (u64 n = 0; n < q; ++n) {
      if (std::gcd(n, q) != 1) continue;
      unit_[n] = 1;
      modulus_->dlog(static_cast<i64>(n), buf);
      for (std::size_t j = 0; j < k; ++j) logs_[n * k + j] = static_cast<std::uint32_t>(buf[j]);
    }
    roots_.resize(big_l);
    for (u64 c = 0; c < big_l; ++c) roots_[c] = unit_root(c, big_l);
  }

  [[nodiscard]] const ModulusPtr& modulus() const { return modulus_; }
  [[nodiscard]] u64 q() const { return modulus_->q(); }
  [[nodiscard]] bool is_unit(u64 n) const { return unit_[n % q()] != 0; }
  [[nodiscard]] const std::vector<std::complex<double>>& roots() const { return roots_; }

  /// Phase numerators c(n), chi(n) = e(c(n)/L) on units; kNonUnit elsewhere.
  static constexpr std::uint32_t kNonUnit = std::numeric_limits<std::uint32_t>::max();

  void phases(const DirichletCharacter& chi, std::vector<std::uint32_t>& out) const {
    const u64 q = modulus_->q();
    const std::size_t k = modulus_->rank();
    const u64 big_l = modulus_->group_exponent();
    const auto& orders = modulus_->component_orders();
    // Per component j: step_j = e_j * L / ord_j, and table_j[i] = i * step_j mod L.
    std::vector<std::vector<std::uint32_t>> tables(k);
    for (std::size_t j = 0; j < k; ++j) {
      const u64 step = chi.exponents()[j] * (big_l / orders[j]) % big_l;
      tables[j].resize(orders[j]);
      u64 acc = 0;
      for (u64 i = 0; i < orders[j]; ++i) {
        tables[j][i] = static_cast<std::uint32_t>(acc);
        acc += step;
        if (acc >= big_l) acc -= big_l;
      }
    }
    out.resize(q);
    for (u64 n = 0; n < q; ++n) {
      if (unit_[n] == 0) {
        out[n] = kNonUnit;
        continue;
      }
      u64 c = 0;
      for (std::size_t j = 0; j < k; ++j) {
        c += tables[j][logs_[n * k + j]];
        if (c >= big_l) c -= big_l;
      }
      out[n] = static_cast<std::uint32_t>(c);
    }
  }

  /// values[n] = chi(n) for n = 0..q-1.
  void values(const DirichletCharacter& chi, std::vector<std::complex<double>>& out) const {
    std::vector<std::uint32_t> ph;
    phases(chi, ph);
    out.resize(ph.size());
    for (std::size_t n = 0; n < ph.size(); ++n) {
      out[n] = ph[n] == kNonUnit ? std::complex<double>{} : roots_[ph[n]];
    }
  }

  [[nodiscard]] std::vector<std::complex<double>> values(const DirichletCharacter& chi) const {
    std::vector<std::complex<double>> out;
    values(chi, out);
    return out;
  }

 private:
  ModulusPtr modulus_;
  std::vector<std::uint32_t> logs_;
  std::vector<std::uint8_t> unit_;
  std::vector<std::complex<double>> roots_;
};

}  // namespace charsum
