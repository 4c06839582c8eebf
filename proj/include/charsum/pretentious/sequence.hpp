#pragma once

// Sequences (z(2), z(3), z(5), ...) indexed by the primes up to y, with |z(p)| <= 1.

#include <algorithm>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/residue/primes.hpp"

namespace charsum {

class UnitDiscSequence {
 public:
  static constexpr double kModulusSlack = 1e-12;

  UnitDiscSequence() = default;

  /// primes must be the ascending primes up to some bound; values aligned.
  UnitDiscSequence(std::vector<u64> primes, std::vector<std::complex<double>> values)
      : primes_(std::move(primes)), values_(std::move(values)) {
    if (primes_.size() != values_.size()) throw std::invalid_argument("UnitDiscSequence: size mismatch");
    for (const auto& v : values_) {
      if (std::abs(v) > 1.0 + kModulusSlack) throw std::invalid_argument("UnitDiscSequence: value outside the unit disc");
    }
  }

  static UnitDiscSequence generate(u64 y, const std::function<std::complex<double>(u64)>& f) {
    auto primes = primes_up_to(y);
    std::vector<std::complex<double>> values;
    values.reserve(primes.size());
    for (u64 p : primes) values.push_back(f(p));
    return {std::move(primes), std::move(values)};
  }

  static UnitDiscSequence constant(u64 y, std::complex<double> c = 1.0) {
    return generate(y, [c](u64) { return c; });
  }

  static UnitDiscSequence from_character(const DirichletCharacter& chi, u64 y) {
    return generate(y, [&](u64 p) { return chi.value(static_cast<i64>(p)); });
  }

  [[nodiscard]] std::size_t size() const { return primes_.size(); }
  [[nodiscard]] const std::vector<u64>& primes() const { return primes_; }
  [[nodiscard]] const std::vector<std::complex<double>>& values() const { return values_; }
  /// Largest prime covered (0 when empty).
  [[nodiscard]] u64 bound() const { return primes_.empty() ? 0 : primes_.back(); }

  /// Number of leading primes that are <= y; throws if the sequence stops short of y.
  [[nodiscard]] std::size_t count_up_to(u64 y) const {
    const auto it = std::upper_bound(primes_.begin(), primes_.end(), y);
    for (u64 n = bound() + 1; n <= y; ++n) {
      if (is_prime(n)) throw std::out_of_range("UnitDiscSequence: no value at some prime <= y");
    }
    return static_cast<std::size_t>(it - primes_.begin());
  }

  friend UnitDiscSequence operator*(const UnitDiscSequence& a, const UnitDiscSequence& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<u64> primes(a.primes_.begin(), a.primes_.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::complex<double>> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a.values_[i] * b.values_[i];
    return {std::move(primes), std::move(values)};
  }

  [[nodiscard]] UnitDiscSequence conj() const {
    std::vector<std::complex<double>> values(values_.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::conj(values_[i]);
    return {primes_, std::move(values)};
  }

 private:
  std::vector<u64> primes_;
  std::vector<std::complex<double>> values_;
};

}  // namespace charsum
