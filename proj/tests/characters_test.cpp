#include <gtest/gtest.h>

#include <random>

#include "charsum/characters/character.hpp"
#include "charsum/characters/serialize.hpp"
#include "charsum/characters/value_table.hpp"
#include "oracles.hpp"

using namespace charsum;

namespace {

DirichletCharacter find_character(const ModulusPtr& m, auto predicate) {
  for (const auto& chi : enumerate_characters(m)) {
    if (predicate(chi)) return chi;
  }
  throw std::logic_error("no such character");
}

bool is_real_value(const UnitValue& v, int sign) {
  if (sign == 0) return v.is_zero();
  if (v.is_zero()) return false;
  return sign == 1 ? v.numerator() == 0 : v.denominator() == 2;
}

}  // namespace

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_characters(build_modulus(5)).size(), 4u);
  const auto eight = enumerate_characters(build_modulus(8));
  ASSERT_EQ(eight.size(), 4u);
  for (const auto& chi : eight) EXPECT_LE(character_order(chi), 2u);
  const auto one = enumerate_characters(build_modulus(1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].is_principal());
  EXPECT_EQ(one[0](17), UnitValue::one());
}

TEST(Enumerate, IndexIsMixedRadixAndZeroIsPrincipal) {
  for (u64 q : {1ULL, 7ULL, 8ULL, 15ULL, 24ULL, 63ULL}) {
    const auto m = build_modulus(q);
    const auto all = enumerate_characters(m);
    EXPECT_TRUE(all.front().is_principal());
    for (u64 i = 0; i < all.size(); ++i) {
      EXPECT_EQ(all[i].index(), i);
      if (i > 0) {
        EXPECT_LT(all[i - 1].exponents(), all[i].exponents());
      }
    }
  }
}

TEST(Evaluate, Examples) {
  const auto five = build_modulus(5);
  EXPECT_EQ(evaluate(DirichletCharacter::principal(five), 3), UnitValue::one());
  for (const auto& chi : enumerate_characters(build_modulus(6))) EXPECT_TRUE(evaluate(chi, 3).is_zero());
  const DirichletCharacter chi7(build_modulus(7), {1});
  EXPECT_EQ(chi7(3), UnitValue::root(1, 6));
  EXPECT_EQ(chi7(2), UnitValue::root(1, 3));
  EXPECT_EQ(chi7(-5), chi7(2));
  EXPECT_EQ(chi7(2 + 7 * 1000), chi7(2));
}

TEST(Evaluate, QuadraticCharactersMatchLegendre) {
  for (u64 p : oracle::sieve_primes(400)) {
    if (p == 2) continue;
    const auto m = build_modulus(p);
    const DirichletCharacter quad(m, {(p - 1) / 2});
    for (long long n = -5; n < static_cast<long long>(p) + 5; ++n) {
      ASSERT_TRUE(is_real_value(quad(n), oracle::legendre(n, p))) << p << " " << n;
    }
  }
}

TEST(Meta, Examples) {
  const auto three = build_modulus(3);
  const DirichletCharacter quad3(three, {1});
  const auto meta = character_meta(quad3);
  EXPECT_EQ(meta.order, 2u);
  EXPECT_EQ(meta.parity, -1);
  EXPECT_EQ(meta.conductor, 3u);
  EXPECT_TRUE(meta.is_primitive);
  EXPECT_FALSE(meta.is_principal);

  const auto eight = build_modulus(8);
  const auto chi8 = find_character(eight, [](const DirichletCharacter& c) {
    return c(3).denominator() == 2 && c(5).numerator() == 0;
  });
  EXPECT_EQ(character_conductor(chi8), 4u);
  const DirichletCharacter chi4(build_modulus(4), {1});
  for (i64 n = 1; n < 8; n += 2) EXPECT_EQ(chi8(n), chi4(n));

  for (u64 q : {1ULL, 2ULL, 12ULL, 100ULL}) {
    const auto meta0 = character_meta(DirichletCharacter::principal(build_modulus(q)));
    EXPECT_EQ(meta0.conductor, 1u);
    EXPECT_EQ(meta0.order, 1u);
    EXPECT_EQ(meta0.is_primitive, q == 1);
  }
}

TEST(Meta, InvariantsUpTo300) {
  for (u64 q = 1; q <= 300; ++q) {
    const auto m = build_modulus(q);
    u64 primitive_count = 0;
    for (const auto& chi : enumerate_characters(m)) {
      const auto meta = character_meta(chi);
      ASSERT_EQ(m->phi() % meta.order, 0u);
      ASSERT_EQ(q % meta.conductor, 0u);
      // The order really is the multiplicative order of the value group.
      for (u64 g : m->generators()) {
        const auto v = chi(static_cast<i64>(g));
        ASSERT_EQ(meta.order % v.denominator(), 0u);
      }
      primitive_count += meta.is_primitive ? 1 : 0;
    }
    // Number of primitive characters is the Dirichlet convolution (mu * phi)(q).
    i64 want = 0;
    for (u64 d : divisors(q)) want += mobius(q / d) * static_cast<i64>(totient(d));
    ASSERT_EQ(static_cast<i64>(primitive_count), want) << q;
  }
}

TEST(Primitivize, Examples) {
  const auto six = build_modulus(6);
  const auto chi6 = find_character(six, [](const DirichletCharacter& c) { return c(5).denominator() == 2; });
  const auto prim = primitivize(chi6);
  EXPECT_EQ(prim.modulus(), 3u);
  EXPECT_EQ(prim, DirichletCharacter(build_modulus(3), {1}));

  const DirichletCharacter chi7(build_modulus(7), {1});
  EXPECT_EQ(primitivize(chi7), chi7);

  const auto trivial = primitivize(DirichletCharacter::principal(build_modulus(30)));
  EXPECT_EQ(trivial.modulus(), 1u);
}

TEST(Primitivize, InducesEveryCharacterUpTo200) {
  for (u64 q = 1; q <= 200; ++q) {
    const auto m = build_modulus(q);
    for (const auto& chi : enumerate_characters(m)) {
      const auto prim = primitivize(chi);
      ASSERT_EQ(character_conductor(prim), prim.modulus());
      for (i64 n = 1; n <= static_cast<i64>(q); ++n) {
        if (std::gcd(static_cast<u64>(n), q) != 1) continue;
        ASSERT_EQ(prim(n), chi(n)) << "q=" << q << " index=" << chi.index() << " n=" << n;
      }
    }
  }
}

TEST(Multiply, Examples) {
  const auto m = build_modulus(13);
  const DirichletCharacter chi(m, {5});
  EXPECT_EQ(multiply(chi, DirichletCharacter::principal(m)), chi);
  EXPECT_TRUE(multiply(chi, chi.conj()).is_principal());

  const DirichletCharacter q3(build_modulus(3), {1});
  const DirichletCharacter q5(build_modulus(5), {2});
  const auto prod = multiply(q3, q5);
  ASSERT_EQ(prod.modulus(), 15u);
  for (long long n = 0; n < 60; ++n) EXPECT_TRUE(is_real_value(prod(n), oracle::jacobi(n, 15))) << n;
}

TEST(Multiply, AcrossModuliAgreesPointwise) {
  const std::vector<u64> moduli{4, 6, 8, 9, 10, 12, 21};
  for (u64 q1 : moduli) {
    for (u64 q2 : moduli) {
      const auto a_all = enumerate_characters(build_modulus(q1));
      const auto b_all = enumerate_characters(build_modulus(q2));
      for (const auto& a : a_all) {
        for (const auto& b : b_all) {
          const auto c = multiply(a, b);
          ASSERT_EQ(c.modulus(), lcm_u64(q1, q2));
          for (i64 n = 1; n <= static_cast<i64>(c.modulus()); ++n) {
            if (std::gcd(static_cast<u64>(n), c.modulus()) != 1) continue;
            ASSERT_EQ(c(n), a(n) * b(n));
          }
        }
      }
    }
  }
}

TEST(OfOrder, Examples) {
  const auto seven = build_modulus(7);
  EXPECT_EQ(characters_of_order(seven, 3).size(), 2u);
  EXPECT_TRUE(characters_of_order(seven, 5).empty());
  const auto five = characters_of_order(build_modulus(5), 1);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_TRUE(five[0].is_principal());
  // C2 x C4 x C4 (q = 80) has no element of order 8.
  EXPECT_TRUE(characters_of_order(build_modulus(80), 8).empty());
}

TEST(Properties, OrthogonalityUpTo500) {
  for (u64 q = 1; q <= 500; ++q) {
    const auto m = build_modulus(q);
    const CharacterEvaluator ev(m);
    const u64 big_l = m->group_exponent();
    // counts[a][c] = #{chi : chi(a) = e(c/L)}, accumulated exactly.
    std::vector<std::vector<u64>> counts(q, std::vector<u64>(big_l, 0));
    std::vector<std::uint32_t> ph;
    for (const auto& chi : enumerate_characters(m)) {
      ev.phases(chi, ph);
      for (u64 a = 0; a < q; ++a) {
        if (ph[a] != CharacterEvaluator::kNonUnit) ++counts[a][ph[a]];
      }
    }
    for (u64 a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      std::complex<double> s = 0;
      for (u64 c = 0; c < big_l; ++c) s += static_cast<double>(counts[a][c]) * unit_root(c, big_l);
      if (a == 1 % q) {
        ASSERT_EQ(counts[a][0], m->phi());
      } else {
        ASSERT_LT(std::abs(s), 1e-9) << "q=" << q << " a=" << a;
      }
    }
  }
}

TEST(Properties, EvaluatorMatchesDirectEvaluation) {
  for (u64 q : {1ULL, 2ULL, 16ULL, 45ULL, 97ULL, 120ULL, 343ULL}) {
    const auto m = build_modulus(q);
    const CharacterEvaluator ev(m);
    for (const auto& chi : enumerate_characters(m)) {
      const auto vals = ev.values(chi);
      for (u64 n = 0; n < q; ++n) ASSERT_LT(std::abs(vals[n] - chi.value(static_cast<i64>(n))), 1e-12);
    }
  }
}

TEST(Properties, CompletelyMultiplicative) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const u64 q = 1 + rng() % 5000;
    const auto m = build_modulus(q);
    const auto chi = DirichletCharacter::from_index(m, rng() % m->phi());
    const i64 a = static_cast<i64>(rng() % 1'000'000) - 500'000;
    const i64 b = static_cast<i64>(rng() % 1'000'000) - 500'000;
    ASSERT_EQ(chi(a * b), chi(a) * chi(b)) << "q=" << q;
    ASSERT_EQ(chi(a).is_zero(), std::gcd(reduce_mod(a, q), q) != 1);
    ASSERT_EQ(chi(a + static_cast<i64>(q)), chi(a));
  }
}

TEST(Properties, OddOrderImpliesEvenParity) {
  for (u64 q = 1; q <= 500; ++q) {
    const auto m = build_modulus(q);
    for (const auto& chi : enumerate_characters(m)) {
      if (character_order(chi) % 2 == 1) {
        ASSERT_EQ(character_parity(chi), 1) << q;
      }
    }
  }
}

TEST(Serialize, RoundTrip) {
  const auto m = build_modulus(15);
  for (const auto& chi : enumerate_characters(m)) {
    const auto j = to_json(chi);
    EXPECT_EQ(character_from_json(j), chi);
    EXPECT_EQ(character_from_json(nlohmann::json{{"q", 15}, {"index", chi.index()}}), chi);
  }
  EXPECT_THROW(character_from_json(nlohmann::json{{"q", 15}, {"index", 0}, {"exponents", {1, 1}}}),
               std::invalid_argument);
}
