#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "largeness/abelian.hpp"
#include "largeness/error.hpp"
#include "oracles.hpp"

using namespace largeness;
using fixtures::pres;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<std::size_t> J_of(const Presentation& p) { return finite_deletions(removal_spectrum(p)); }

}  // namespace

TEST(Abelianisation, Examples) {
  auto a = abelianisation(pres("< x, y | x^2, y^3 >"));
  EXPECT_EQ(a.invariant_factors, ints({6}));
  EXPECT_EQ(a.free_rank, 0u);
  EXPECT_EQ(a.order, Order::finite(6));
  EXPECT_EQ(a.to_string(), "Z/6");

  a = abelianisation(pres("< a, t | a^2 >"));
  EXPECT_EQ(a.invariant_factors, ints({2}));
  EXPECT_EQ(a.free_rank, 1u);
  EXPECT_TRUE(a.order.is_infinite());
  EXPECT_EQ(a.to_string(), "Z/2 x Z");

  EXPECT_EQ(abelianisation(pres("< x | x >")).to_string(), "1");
}

TEST(Abelianisation, PairedFamilySmall) {
  Presentation p = fixtures::paired_family_uniform(2, 2);
  auto a = abelianisation(p);
  ASSERT_TRUE(a.order.is_finite());
  EXPECT_EQ(a.invariant_factors, ints({2, 2, 2, 2}));
  EXPECT_EQ(oracles::brute_abelian_order(p.exponent_matrix(), 100000), a.order.value());
  EXPECT_GE(abelianisation(p.without_relator(0)).free_rank, 1u);
}

TEST(Abelianisation, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    oracles::SampleSpec spec;
    spec.generators = 2 + seed % 3;
    spec.relators = spec.generators + seed % 2;
    spec.power_min = 1;
    spec.power_max = 4;
    Presentation p = oracles::sample_presentation(spec, seed);
    auto a = abelianisation(p);
    auto brute = oracles::brute_abelian_order(p.exponent_matrix(), 10000);
    if (a.order.is_finite() && a.order.value() <= 10000) {
      ASSERT_TRUE(brute);
      EXPECT_EQ(*brute, a.order.value());
    } else {
      EXPECT_FALSE(brute);
    }
  }
}

TEST(WordOrder, Examples) {
  auto p = pres("< x, y | x^2, y^3 >");
  EXPECT_EQ(word_order(p, parse_word("x y", p.generators)), Order::finite(6));
  EXPECT_EQ(word_order(p, Word()), Order::finite(1));
  auto q = pres("< x, y, z | x^3, y^3, z^3 >");
  EXPECT_EQ(word_order(q, parse_word("x", q.generators)), Order::finite(3));
  EXPECT_TRUE(word_order(pres("< a, t | a^2 >"), Word::generator(1)).is_infinite());
}

TEST(Surjection, Examples) {
  auto phi = surjection_to_Z(pres("< a, t | a^2 >"));
  ASSERT_TRUE(phi);
  EXPECT_EQ(phi->values, ints({0, 1}));
  EXPECT_FALSE(surjection_to_Z(pres("< x, y | x^2, y^3 >")));
  auto p = pres("< x, y | (x y)^3 >");
  phi = surjection_to_Z(p);
  ASSERT_TRUE(phi);
  EXPECT_EQ(phi->values[0] + phi->values[1], 0);
  EXPECT_TRUE(is_valid_zmap(p, *phi));
}

TEST(Surjection, CommutatorFamilySendsTToOne) {
  auto phi = surjection_to_Z(pres("< a, t | [a,t]^2, [a,t^2]^2, [a,[a,t]]^2 >"));
  ASSERT_TRUE(phi);
  EXPECT_EQ(phi->values, ints({0, 1}));
}

TEST(Surjection, AlwaysValidOnSamples) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    oracles::SampleSpec spec;
    spec.generators = 2 + seed % 4;
    spec.relators = 1 + seed % spec.generators;
    Presentation p = oracles::sample_presentation(spec, seed);
    auto phi = surjection_to_Z(p);
    EXPECT_EQ(phi.has_value(), abelianisation(p).order.is_infinite());
    if (phi) EXPECT_TRUE(is_valid_zmap(p, *phi));
  }
}

TEST(ValidateZMap, Rejects) {
  auto p = pres("< a, t | a^2 >");
  EXPECT_THROW(validate_zmap(p, ZMap{ints({1, 0})}), Error);
  EXPECT_THROW(validate_zmap(p, ZMap{ints({0, 2})}), Error);
  EXPECT_THROW(validate_zmap(p, ZMap{ints({0})}), Error);
  EXPECT_NO_THROW(validate_zmap(p, ZMap{ints({0, -1})}));
}

TEST(RemovalSpectrum, Examples) {
  EXPECT_EQ(J_of(fixtures::paired_family_uniform(2, 2)), (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_TRUE(J_of(pres("< x, y | x^2, y^3 >")).empty());
  EXPECT_EQ(J_of(fixtures::paired_family_uniform(5, 2)), (std::vector<std::size_t>{1, 3, 5, 7, 9, 10}));
}

TEST(RemovalSpectrum, DeletionDeterminantMatchesOracle) {
  Presentation p = fixtures::paired_family_uniform(2, 2);
  IntMatrix g2 = p.without_relator(1).exponent_matrix();
  EXPECT_EQ(abs(oracles::rational_determinant(g2)), 16);
  EXPECT_EQ(oracles::brute_abelian_order(g2, 1000), 16);
}

TEST(Evidence, Examples) {
  auto e = nontriviality_evidence(fixtures::paired_family_uniform(2, 2));
  EXPECT_TRUE(e.nontrivial);
  ASSERT_TRUE(e.infinite_deletion_with_power);
  EXPECT_EQ(*e.infinite_deletion_with_power, 0u);

  e = nontriviality_evidence(pres("< x | x >"));
  EXPECT_FALSE(e.nontrivial);
  EXPECT_FALSE(e.infinite_deletion_with_power);
  EXPECT_FALSE(e.finite_deletion_shared_factor);

  e = nontriviality_evidence(pres("< x, y, z | x^6, y^6, z^6, (x y z)^4 >"));
  EXPECT_TRUE(e.nontrivial);
  EXPECT_TRUE(e.shared_factor_rule_applicable);
  ASSERT_TRUE(e.finite_deletion_shared_factor);
  EXPECT_EQ(e.abelian.invariant_factors, ints({2, 6, 6}));
}

TEST(Evidence, NeverContradictsDirectVerdict) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    oracles::SampleSpec spec;
    spec.generators = 1 + seed % 4;
    spec.relators = spec.generators + 1;
    spec.power_max = 6;
    auto e = nontriviality_evidence(oracles::sample_presentation(spec, seed));
    if (e.infinite_deletion_with_power || e.finite_deletion_shared_factor) EXPECT_TRUE(e.nontrivial);
  }
}
