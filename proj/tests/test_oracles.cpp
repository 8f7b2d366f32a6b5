#include <gtest/gtest.h>

#include "largeness/abelian.hpp"
#include "largeness/error.hpp"
#include "oracles.hpp"

using namespace largeness;
using oracles::SampleSpec;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(BruteAbelianOrder, Examples) {
  EXPECT_EQ(oracles::brute_abelian_order(IntMatrix{{2, 0}, {0, 3}}, 100), 6);
  EXPECT_EQ(oracles::brute_abelian_order(IntMatrix{{2, 2}, {0, 2}}, 100), 4);
  EXPECT_EQ(oracles::brute_abelian_order(IntMatrix{{1}}, 100), 1);
  EXPECT_FALSE(oracles::brute_abelian_order(IntMatrix{{3, 3}}, 100));
  EXPECT_FALSE(oracles::brute_abelian_order(IntMatrix{{1000, 0}, {0, 1000}}, 100));
}

TEST(BruteWordOrder, Examples) {
  IntMatrix d{{2, 0}, {0, 3}};
  EXPECT_EQ(oracles::brute_word_order(d, ints({1, 1}), 100), 6);
  EXPECT_EQ(oracles::brute_word_order(d, ints({0, 0}), 100), 1);
  EXPECT_FALSE(oracles::brute_word_order(IntMatrix{{3, 3}}, ints({1, 0}), 100));
}

TEST(Oracles, DeterminantAndMinors) {
  IntMatrix m{{4, 6}, {2, 2}};
  EXPECT_EQ(oracles::rational_determinant(m), -4);
  EXPECT_EQ(oracles::minor_gcd(m, 1), 2);
  EXPECT_EQ(oracles::minor_gcd(m, 2), 4);
}

TEST(SamplePresentation, Triangular) {
  SampleSpec spec;
  spec.kind = SampleSpec::Kind::Triangular;
  spec.generators = spec.relators = 3;
  spec.power_min = 2;
  spec.power_max = 5;
  Presentation p = oracles::sample_presentation(spec, 1);
  EXPECT_EQ(p, oracles::sample_presentation(spec, 1));
  IntMatrix m = p.root_matrix();
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NE(m(i, i), 0);
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_EQ(m(i, j), 0);
    EXPECT_GE(p.relators[i].power, 2u);
    EXPECT_LE(p.relators[i].power, 5u);
  }
}

TEST(SamplePresentation, CommutatorFamily) {
  SampleSpec spec;
  spec.kind = SampleSpec::Kind::Commutator;
  spec.height = 3;
  spec.depth = 2;
  spec.family_power = 2;
  Presentation p = oracles::sample_presentation(spec, 0);
  ASSERT_EQ(p.relators.size(), 2u);
  Word a = Word::generator(0), t3 = Word::generator(1).pow(3);
  Word c = a * t3 * a.inverse() * t3.inverse();
  EXPECT_EQ(p.relators[0].full(), c.pow(2));
  EXPECT_EQ(p.relators[1].full(), (c * a * c.inverse() * a.inverse()).pow(2));
}

TEST(SamplePresentation, EvenDeficiencyMinusOne) {
  SampleSpec spec;
  spec.generators = 4;
  spec.relators = 5;
  spec.power_min = 2;
  spec.power_max = 8;
  spec.even_powers = true;
  Presentation p = oracles::sample_presentation(spec, 7);
  EXPECT_EQ(p.deficiency(), -1);
  for (const auto& r : p.relators) EXPECT_EQ(r.power % 2, 0u);
}

TEST(SamplePresentation, ZeroSum) {
  SampleSpec spec;
  spec.generators = 3;
  spec.relators = 4;
  spec.zero_sum_generator = 2;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Presentation p = oracles::sample_presentation(spec, seed);
    for (const auto& r : p.relators) EXPECT_EQ(exponent_vector(r.root, 3)[2], 0);
  }
}

TEST(SamplePresentation, BadSpecs) {
  SampleSpec spec;
  spec.generators = 0;
  EXPECT_THROW(oracles::sample_presentation(spec, 0), Error);
  spec = {};
  spec.power_min = 4;
  spec.power_max = 2;
  EXPECT_THROW(oracles::sample_presentation(spec, 0), Error);
  spec = {};
  spec.kind = SampleSpec::Kind::Triangular;
  spec.generators = 3;
  spec.relators = 2;
  EXPECT_THROW(oracles::sample_presentation(spec, 0), Error);
  spec = {};
  spec.even_powers = true;
  spec.power_min = spec.power_max = 3;
  EXPECT_THROW(oracles::sample_presentation(spec, 0), Error);
  spec = {};
  spec.kind = SampleSpec::Kind::Commutator;
  spec.height = 0;
  EXPECT_THROW(oracles::sample_presentation(spec, 0), Error);
}
