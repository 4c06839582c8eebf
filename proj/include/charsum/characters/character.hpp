#pragma once

// Dirichlet characters as exponent vectors on the unit-group generators of a
// FactoredModulus.  chi(g_j) = e(e_j / ord_j) for the j-th generator g_j.
//
// Enumeration order is part of the public contract: characters mod q are
// listed lexicographically by exponent vector (first component most
// significant), so index 0 is the principal character and the index of a
// character equals its exponent vector read as a mixed-radix number.

#include <algorithm>
#include <complex>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "charsum/residue/arithmetic.hpp"
#include "charsum/residue/modulus.hpp"
#include "charsum/residue/unit_value.hpp"

namespace charsum {

class DirichletCharacter {
 public:
  DirichletCharacter(ModulusPtr modulus, std::vector<u64> exponents)
      : modulus_(std::move(modulus)), exponents_(std::move(exponents)) {
    if (!modulus_) throw std::invalid_argument("DirichletCharacter: null modulus");
    const auto& orders = modulus_->component_orders();
    if (exponents_.size() != orders.size()) {
      throw std::invalid_argument("DirichletCharacter: exponent vector has the wrong length");
    }
    for (std::size_t j = 0; j < orders.size(); ++j) exponents_[j] %= orders[j];
  }

  static DirichletCharacter principal(ModulusPtr modulus) {
    const std::size_t k = modulus->rank();
    return {std::move(modulus), std::vector<u64>(k, 0)};
  }

  static DirichletCharacter from_index(ModulusPtr modulus, u64 index) {
    if (index >= modulus->phi()) throw std::out_of_range("DirichletCharacter::from_index");
    const auto& orders = modulus->component_orders();
    std::vector<u64> exps(orders.size(), 0);
    for (std::size_t j = orders.size(); j-- > 0;) {
      exps[j] = index % orders[j];
      index /= orders[j];
    }
    return {std::move(modulus), std::move(exps)};
  }

  [[nodiscard]] u64 modulus() const { return modulus_->q(); }
  [[nodiscard]] const FactoredModulus& group() const { return *modulus_; }
  [[nodiscard]] const ModulusPtr& modulus_ptr() const { return modulus_; }
  [[nodiscard]] const std::vector<u64>& exponents() const { return exponents_; }

  [[nodiscard]] u64 index() const {
    u64 idx = 0;
    const auto& orders = modulus_->component_orders();
    for (std::size_t j = 0; j < orders.size(); ++j) idx = idx * orders[j] + exponents_[j];
    return idx;
  }

  [[nodiscard]] bool is_principal() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](u64 e) { return e == 0; });
  }

  /// Numerator c of chi(n) = e(c / group_exponent) for a unit n.
  [[nodiscard]] u64 phase(i64 n) const {
    const auto& g = *modulus_;
    const u64 big_l = g.group_exponent();
    std::vector<u64> logs(g.rank());
    g.dlog(n, logs);
    u64 c = 0;
    for (std::size_t j = 0; j < logs.size(); ++j) {
      const u64 weight = big_l / g.component_orders()[j];
      c = (c + mulmod(mulmod(exponents_[j], weight, big_l), logs[j], big_l)) % big_l;
    }
    return c;
  }

  [[nodiscard]] UnitValue operator()(i64 n) const {
    if (!modulus_->is_unit(n)) return UnitValue::zero();
    return UnitValue::root(static_cast<i64>(phase(n)), modulus_->group_exponent());
  }

  [[nodiscard]] std::complex<double> value(i64 n) const { return (*this)(n).embed(); }

  [[nodiscard]] DirichletCharacter conj() const {
    std::vector<u64> exps(exponents_.size());
    const auto& orders = modulus_->component_orders();
    for (std::size_t j = 0; j < exps.size(); ++j) exps[j] = (orders[j] - exponents_[j]) % orders[j];
    return {modulus_, std::move(exps)};
  }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  ModulusPtr modulus_;
  std::vector<u64> exponents_;
};

inline UnitValue evaluate(const DirichletCharacter& chi, i64 n) { return chi(n); }

struct CharacterMeta {
  u64 order = 1;
  int parity = 1;
  u64 conductor = 1;
  bool is_primitive = true;
  bool is_principal = true;
};

inline u64 character_order(const DirichletCharacter& chi) {
  u64 order = 1;
  const auto& orders = chi.group().component_orders();
  for (std::size_t j = 0; j < orders.size(); ++j) {
    order = lcm_u64(order, orders[j] / std::gcd(chi.exponents()[j], orders[j]));
  }
  return order;
}

inline int character_parity(const DirichletCharacter& chi) {
  const auto v = chi(static_cast<i64>(chi.modulus()) - 1);
  return v.numerator() == 0 ? 1 : -1;
}

/// Smallest d | q such that chi is trivial on every unit u = 1 (mod d),
/// found by checking the units 1 + kd directly.
inline u64 character_conductor(const DirichletCharacter& chi) {
  const u64 q = chi.modulus();
  if (chi.is_principal()) return 1;
  for (u64 d : divisors(q)) {
    if (d == 1) continue;  // only the principal character is trivial on all units
    if (d == q) return q;
    bool trivial = true;
    for (u64 u = 1 + d; u < q && trivial; u += d) {
      if (std::gcd(u, q) != 1) continue;
      if (chi(static_cast<i64>(u)).numerator() != 0) trivial = false;
    }
    if (trivial) return d;
  }
  return q;
}

inline CharacterMeta character_meta(const DirichletCharacter& chi) {
  CharacterMeta meta;
  meta.order = character_order(chi);
  meta.parity = character_parity(chi);
  meta.conductor = character_conductor(chi);
  meta.is_primitive = meta.conductor == chi.modulus();
  meta.is_principal = chi.is_principal();
  return meta;
}

namespace detail {

/// The character mod `target` agreeing with `value_at` on a representative of
/// each target generator; value_at(n) must return a value whose denominator
/// divides the component order.
template <typename ValueAt>
DirichletCharacter character_from_generator_values(const ModulusPtr& target, ValueAt value_at) {
  const auto& comps = target->components();
  std::vector<u64> exps(comps.size(), 0);
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const UnitValue v = value_at(comps[j].generator);
    if (v.is_zero() || comps[j].order % v.denominator() != 0) {
      throw std::logic_error("character_from_generator_values: value is not a root of the component order");
    }
    exps[j] = v.numerator() * (comps[j].order / v.denominator());
  }
  return {target, std::move(exps)};
}

/// Smallest n = r (mod d) with gcd(n, q) = 1, for r a unit mod d and d | q.
inline u64 unit_lift(u64 r, u64 d, u64 q) {
  for (u64 n = r % d == 0 ? d : r % d; n < 2 * q + d; n += d) {
    if (std::gcd(n, q) == 1) return n;
  }
  throw std::logic_error("unit_lift: no coprime lift found");
}

}  // namespace detail

/// The primitive character mod the conductor that induces chi.
inline DirichletCharacter primitivize(const DirichletCharacter& chi) {
  const u64 conductor = character_conductor(chi);
  if (conductor == chi.modulus()) return chi;
  const auto target = build_modulus(conductor);
  const u64 q = chi.modulus();
  return detail::character_from_generator_values(target, [&](u64 g) {
    return chi(static_cast<i64>(detail::unit_lift(g, conductor, q)));
  });
}

/// chi1 * chi2 as a character mod lcm(q1, q2).
inline DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b) {
  const u64 l = lcm_u64(a.modulus(), b.modulus());
  ModulusPtr target;
  if (l == a.modulus()) {
    target = a.modulus_ptr();
  } else if (l == b.modulus()) {
    target = b.modulus_ptr();
  } else {
    target = build_modulus(l);
  }
  if (a.modulus() == b.modulus()) {
    const auto& orders = target->component_orders();
    std::vector<u64> exps(orders.size());
    for (std::size_t j = 0; j < exps.size(); ++j) exps[j] = (a.exponents()[j] + b.exponents()[j]) % orders[j];
    return {target, std::move(exps)};
  }
  return detail::character_from_generator_values(target, [&](u64 g) {
    return a(static_cast<i64>(g)) * b(static_cast<i64>(g));
  });
}

inline std::vector<DirichletCharacter> enumerate_characters(const ModulusPtr& modulus) {
  std::vector<DirichletCharacter> out;
  out.reserve(modulus->phi());
  for (u64 i = 0; i < modulus->phi(); ++i) out.push_back(DirichletCharacter::from_index(modulus, i));
  return out;
}

inline std::vector<DirichletCharacter> characters_of_order(const ModulusPtr& modulus, u64 g) {
  if (g == 0) throw std::invalid_argument("characters_of_order: order must be positive");
  std::vector<DirichletCharacter> out;
  if (modulus->phi() % g != 0) return out;
  for (u64 i = 0; i < modulus->phi(); ++i) {
    auto chi = DirichletCharacter::from_index(modulus, i);
    if (character_order(chi) == g) out.push_back(std::move(chi));
  }
  return out;
}

/// Every primitive character with conductor <= bound, ordered by conductor
/// then by index; the trivial character mod 1 comes first.
inline std::vector<DirichletCharacter> primitive_characters_up_to(u64 bound) {
  std::vector<DirichletCharacter> out;
  for (u64 m = 1; m <= bound; ++m) {
    const auto modulus = build_modulus(m);
    for (u64 i = 0; i < modulus->phi(); ++i) {
      auto chi = DirichletCharacter::from_index(modulus, i);
      if (character_conductor(chi) == m) out.push_back(std::move(chi));
    }
  }
  return out;
}

}  // namespace charsum
