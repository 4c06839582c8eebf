#pragma once

// Gauss sums tau(chi) = sum_{a mod q} chi(a) e(a/q), computed exactly in the
// cyclotomic field Q(zeta_D), D = lcm(group exponent, q), and embedded once.

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "charsum/characters/character.hpp"
#include "charsum/residue/summation.hpp"
#include "charsum/residue/unit_value.hpp"

namespace charsum {

struct GaussSumResult {
  std::complex<double> value;
  double modulus_sqrt_ratio = 0.0;
};

/// sum_{a mod q} chi(a) e(ab/q), exact up to the final embedding.
inline std::complex<double> twisted_gauss_sum(const DirichletCharacter& chi, i64 b) {
  const u64 q = chi.modulus();
  const u64 big_l = chi.group().group_exponent();
  const u64 d = lcm_u64(big_l, q);
  const u64 bq = reduce_mod(b, q);
  CyclotomicSum acc(d);
  for (u64 a = 0; a < q; ++a) {
    if (!chi.group().is_unit(static_cast<i64>(a))) continue;
    const u64 c = chi.phase(static_cast<i64>(a));
    const u64 add = mulmod(mulmod(a, bq, q), d / q, d);
    acc.add_numerator((mulmod(c, d / big_l, d) + add) % d);
  }
  return acc.embed();
}

inline GaussSumResult gauss_sum(const DirichletCharacter& chi) {
  const auto v = twisted_gauss_sum(chi, 1);
  return {v, std::abs(v) / std::sqrt(static_cast<double>(chi.modulus()))};
}

/// Floating-point Gauss sum from a table of character values mod q.  Used in
/// bulk experiments where the exact accumulator would dominate the cost.
inline std::complex<double> gauss_sum_from_values(std::span<const std::complex<double>> values) {
  const u64 q = values.size();
  CompensatedComplexSum s;
  for (u64 a = 0; a < q; ++a) {
    if (values[a] != std::complex<double>{}) s.add(values[a] * unit_root(a, q));
  }
  return s.value();
}

struct TwistedGaussCheck {
  std::complex<double> lhs;
  std::complex<double> rhs;
};

/// lhs = sum_a chi(a) e(ab/q); rhs = conj(chi(b)) tau(chi).
inline TwistedGaussCheck twisted_gauss_check(const DirichletCharacter& chi, i64 b) {
  return {twisted_gauss_sum(chi, b), chi.conj().value(b) * gauss_sum(chi).value};
}

struct GaussInductionCheck {
  std::complex<double> lhs;  // tau(chi)
  std::complex<double> rhs;  // mu(q/q') chi'(q/q') tau(chi')
  u64 conductor = 1;
};

using GaussFunction = std::function<std::complex<double>(const DirichletCharacter&)>;

inline std::complex<double> default_gauss(const DirichletCharacter& chi) { return gauss_sum(chi).value; }

/// Relation between the Gauss sum of chi and that of the primitive character
/// inducing it.  `gauss` defaults to the exact evaluation.
inline GaussInductionCheck gauss_induction_check(const DirichletCharacter& chi,
                                                 const GaussFunction& gauss = default_gauss) {
  const auto prim = primitivize(chi);
  const u64 ratio = chi.modulus() / prim.modulus();
  const double mu = mobius(ratio);
  return {gauss(chi), mu * prim.value(static_cast<i64>(ratio)) * gauss(prim), prim.modulus()};
}

}  // namespace charsum
