#pragma once

// Exact values of Dirichlet characters: either 0 or a root of unity e(k/d),
// kept as a reduced fraction k/d.  Sums of such values are accumulated
// exactly as integer multiplicities over a common denominator and embedded
// into the complex numbers once, at the end.

#include <complex>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "charsum/residue/arithmetic.hpp"
#include "charsum/residue/constants.hpp"
#include "charsum/residue/summation.hpp"

namespace charsum {

/// e(k/d) = exp(2 pi i k/d); exact at 1, i, -1, -i.
inline std::complex<double> unit_root(u64 k, u64 d) {
  k %= d;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == d) return {-1.0, 0.0};
  if (4 * k == d) return {0.0, 1.0};
  if (4 * k == 3 * d) return {0.0, -1.0};
  // Map to (-d/2, d/2] so the angle argument stays small.
  const double signed_k =
      2 * k > d ? -static_cast<double>(d - k) : static_cast<double>(k);
  const double angle = constants::two_pi * (signed_k / static_cast<double>(d));
  return {std::cos(angle), std::sin(angle)};
}

class UnitValue {
 public:
  constexpr UnitValue() = default;

  static UnitValue zero() {
    UnitValue v;
    v.zero_ = true;
    return v;
  }
  static UnitValue one() { return {}; }
  static UnitValue root(i64 k, u64 d) {
    if (d == 0) throw std::invalid_argument("UnitValue: denominator must be positive");
    UnitValue v;
    v.k_ = reduce_mod(k, d);
    v.d_ = d;
    v.normalize();
    return v;
  }

  [[nodiscard]] bool is_zero() const { return zero_; }
  [[nodiscard]] u64 numerator() const { return k_; }
  [[nodiscard]] u64 denominator() const { return d_; }

  [[nodiscard]] std::complex<double> embed() const {
    return zero_ ? std::complex<double>{0.0, 0.0} : unit_root(k_, d_);
  }

  [[nodiscard]] UnitValue conj() const {
    if (zero_) return *this;
    return root(static_cast<i64>((d_ - k_) % d_), d_);
  }

  [[nodiscard]] UnitValue pow(i64 e) const {
    if (zero_) {
      if (e == 0) return one();
      return *this;
    }
    const u64 exp = reduce_mod(e, d_);
    return root(static_cast<i64>(mulmod(k_, exp, d_)), d_);
  }

  friend UnitValue operator*(const UnitValue& a, const UnitValue& b) {
    if (a.zero_ || b.zero_) return zero();
    const u64 l = lcm_u64(a.d_, b.d_);
    const u64 k = (mulmod(a.k_, l / a.d_, l) + mulmod(b.k_, l / b.d_, l)) % l;
    return root(static_cast<i64>(k), l);
  }
  UnitValue& operator*=(const UnitValue& other) { return *this = *this * other; }

  friend bool operator==(const UnitValue& a, const UnitValue& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.k_ == b.k_ && a.d_ == b.d_;
  }

  friend std::ostream& operator<<(std::ostream& os, const UnitValue& v) {
    if (v.zero_) return os << "0";
    return os << "e(" << v.k_ << "/" << v.d_ << ")";
  }

 private:
  void normalize() {
    const u64 g = std::gcd(k_, d_);
    if (k_ == 0) {
      d_ = 1;
    } else {
      k_ /= g;
      d_ /= g;
    }
  }

  bool zero_ = false;
  u64 k_ = 0;
  u64 d_ = 1;
};

/// Exact sum of roots of unity over a fixed common denominator: stores the
/// multiplicity of each e(j/D).  Dense storage for D up to 2^22, sparse above.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(u64 denominator) : denominator_(denominator) {
    if (denominator == 0) throw std::invalid_argument("CyclotomicSum: zero denominator");
    if (denominator <= kDenseLimit) dense_.assign(denominator, 0);
  }

  void add(const UnitValue& v, i64 multiplicity = 1) {
    if (v.is_zero()) return;
    if (denominator_ % v.denominator() != 0) {
      throw std::invalid_argument("CyclotomicSum: value denominator does not divide the common one");
    }
    add_numerator(v.numerator() * (denominator_ / v.denominator()), multiplicity);
  }

  void add_numerator(u64 j, i64 multiplicity = 1) {
    j %= denominator_;
    if (!dense_.empty()) {
      dense_[j] += multiplicity;
    } else {
      sparse_[j] += multiplicity;
    }
  }

  [[nodiscard]] u64 denominator() const { return denominator_; }

  [[nodiscard]] std::complex<double> embed() const {
    CompensatedComplexSum sum;
    if (!dense_.empty()) {
      for (u64 j = 0; j < denominator_; ++j) {
        if (dense_[j] != 0) sum.add(static_cast<double>(dense_[j]) * unit_root(j, denominator_));
      }
    } else {
      for (const auto& [j, count] : sparse_) {
        if (count != 0) sum.add(static_cast<double>(count) * unit_root(j, denominator_));
      }
    }
    return sum.value();
  }

 private:
  static constexpr u64 kDenseLimit = u64{1} << 22U;
  u64 denominator_;
  std::vector<i64> dense_;
  std::map<u64, i64> sparse_;
};

}  // namespace charsum
