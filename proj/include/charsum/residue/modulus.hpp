#pragma once

// Structure of the unit group (Z/qZ)^* as a product of cyclic components.
//
// Components are listed prime by prime in ascending order.  An odd prime
// power p^a contributes one cyclic component generated by the smallest
// primitive root mod p^a.  For 2^a: a = 1 contributes nothing, a = 2 one
// component {-1}, a >= 3 two components {-1, 5}.  Every generator is lifted
// to a residue mod q that is 1 modulo the other prime-power parts.

#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "charsum/residue/arithmetic.hpp"

namespace charsum {

struct CyclicComponent {
  u64 prime = 0;
  unsigned exponent = 0;
  u64 prime_power = 1;      // p^a, the modulus this component lives on
  u64 local_generator = 1;  // generator mod p^a
  u64 generator = 1;        // lift mod q
  u64 order = 1;
};

class FactoredModulus {
 public:
  /// Moduli up to this size keep a dlog table indexed by the full residue.
  static constexpr u64 kFullTableLimit = 1'000'000;

  explicit FactoredModulus(u64 q) : q_(q) {
    if (q == 0) throw std::invalid_argument("FactoredModulus: q must be positive");
    factors_ = factorize(q);
    for (const auto& [p, a] : factors_) add_prime_power(p, a);
    phi_ = 1;
    exponent_ = 1;
    for (const auto& c : components_) {
      phi_ *= c.order;
      exponent_ = lcm_u64(exponent_, c.order);
      generators_.push_back(c.generator);
      orders_.push_back(c.order);
    }
    if (q_ <= kFullTableLimit && !components_.empty()) build_full_table();
  }

  [[nodiscard]] u64 q() const { return q_; }
  [[nodiscard]] const std::vector<PrimePower>& factors() const { return factors_; }
  [[nodiscard]] const std::vector<CyclicComponent>& components() const { return components_; }
  [[nodiscard]] const std::vector<u64>& generators() const { return generators_; }
  [[nodiscard]] const std::vector<u64>& component_orders() const { return orders_; }
  [[nodiscard]] std::size_t rank() const { return components_.size(); }
  [[nodiscard]] u64 phi() const { return phi_; }
  /// Exponent of the group: lcm of the component orders.
  [[nodiscard]] u64 group_exponent() const { return exponent_; }
  [[nodiscard]] bool has_full_table() const { return !full_table_.empty(); }

  [[nodiscard]] u64 reduce(i64 n) const { return reduce_mod(n, q_); }
  [[nodiscard]] bool is_unit(i64 n) const { return std::gcd(reduce(n), q_) == 1; }

  /// Exponent vector of a unit on the generators; throws on non-units.
  void dlog(i64 n, std::span<u64> out) const {
    const u64 r = reduce(n);
    if (std::gcd(r, q_) != 1) throw std::domain_error("FactoredModulus::dlog: not a unit");
    const std::size_t k = components_.size();
    if (!full_table_.empty()) {
      const std::uint32_t* row = full_table_.data() + r * k;
      for (std::size_t j = 0; j < k; ++j) out[j] = row[j];
      return;
    }
    for (std::size_t j = 0; j < k; ++j) {
      out[j] = local_tables_[j][r % components_[j].prime_power];
    }
  }

  [[nodiscard]] std::vector<u64> dlog(i64 n) const {
    std::vector<u64> out(components_.size());
    dlog(n, out);
    return out;
  }

  /// prod_j generator_j^{e_j} mod q.
  [[nodiscard]] u64 power_product(std::span<const u64> exponents) const {
    if (exponents.size() != components_.size()) {
      throw std::invalid_argument("power_product: exponent vector has the wrong length");
    }
    u64 acc = 1 % q_;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      acc = mulmod(acc, powmod(generators_[j], exponents[j], q_), q_);
    }
    return acc;
  }

 private:
  static bool generates_odd_prime_power(u64 g, u64 p, unsigned a, const std::vector<PrimePower>& pm1) {
    if (g % p == 0) return false;
    for (const auto& f : pm1) {
      if (powmod(g, (p - 1) / f.prime, p) == 1) return false;
    }
    if (a >= 2 && powmod(g, p - 1, p * p) == 1) return false;
    return true;
  }

  u64 lift(u64 local, u64 pa) const {
    const u64 rest = q_ / pa;
    if (rest == 1) return local % q_;
    // x = local (mod pa), x = 1 (mod rest)
    const u64 t = mulmod((1 + rest - local % rest) % rest, inverse_mod(pa % rest, rest), rest);
    return (local + mulmod(pa, t, q_)) % q_;
  }

  void add_prime_power(u64 p, unsigned a) {
    const u64 pa = ipow(p, a);
    if (p == 2) {
      if (a == 1) return;
      std::vector<std::uint32_t> sign_table(pa, 0);
      if (a == 2) {
        sign_table[1] = 0;
        sign_table[3] = 1;
        components_.push_back({2, a, pa, 3, lift(3, pa), 2});
        local_tables_.push_back(std::move(sign_table));
        return;
      }
      const u64 order5 = pa / 4;
      std::vector<std::uint32_t> log5(pa, 0);
      u64 v = 1;
      for (u64 t = 0; t < order5; ++t) {
        log5[v] = static_cast<std::uint32_t>(t);
        log5[pa - v] = static_cast<std::uint32_t>(t);
        sign_table[v] = 0;
        sign_table[pa - v] = 1;
        v = v * 5 % pa;
      }
      components_.push_back({2, a, pa, pa - 1, lift(pa - 1, pa), 2});
      local_tables_.push_back(std::move(sign_table));
      components_.push_back({2, a, pa, 5, lift(5, pa), order5});
      local_tables_.push_back(std::move(log5));
      return;
    }
    const auto pm1 = factorize(p - 1);
    u64 g = 2;
    while (!generates_odd_prime_power(g, p, a, pm1)) ++g;
    const u64 order = pa / p * (p - 1);
    std::vector<std::uint32_t> table(pa, 0);
    u64 v = 1;
    for (u64 t = 0; t < order; ++t) {
      table[v] = static_cast<std::uint32_t>(t);
      v = mulmod(v, g, pa);
    }
    components_.push_back({p, a, pa, g, lift(g, pa), order});
    local_tables_.push_back(std::move(table));
  }

  void build_full_table() {
    const std::size_t k = components_.size();
    full_table_.assign(q_ * k, 0);
    for (u64 r = 0; r < q_; ++r) {
      if (std::gcd(r, q_) != 1) continue;
      for (std::size_t j = 0; j < k; ++j) {
        full_table_[r * k + j] = local_tables_[j][r % components_[j].prime_power];
      }
    }
  }

  u64 q_;
  u64 phi_ = 1;
  u64 exponent_ = 1;
  std::vector<PrimePower> factors_;
  std::vector<CyclicComponent> components_;
  std::vector<u64> generators_;
  std::vector<u64> orders_;
  std::vector<std::vector<std::uint32_t>> local_tables_;
  std::vector<std::uint32_t> full_table_;
};

using ModulusPtr = std::shared_ptr<const FactoredModulus>;

inline ModulusPtr build_modulus(u64 q) { return std::make_shared<const FactoredModulus>(q); }

}  // namespace charsum
