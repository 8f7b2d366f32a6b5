#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "largeness/certify.hpp"
#include "largeness/error.hpp"
#include "oracles.hpp"

using namespace largeness;
using fixtures::pres;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

const Certificate& cert(const CheckOutcome& o) {
  const Certificate* c = certificate_of(o);
  if (!c) throw std::runtime_error("rejected: " + rejection_of(o)->clause + " " + rejection_of(o)->detail);
  return *c;
}

const Rejection& rej(const CheckOutcome& o) {
  const Rejection* r = rejection_of(o);
  if (!r) throw std::runtime_error("unexpected certificate");
  return *r;
}

}  // namespace

TEST(Rational, Strings) {
  EXPECT_EQ(rational_string(q(3, 2)), "3/2");
  EXPECT_EQ(rational_string(q(4, 2)), "2/1");
  EXPECT_EQ(rational_string(q(-1, 3)), "-1/3");
}

TEST(RuleNames, RoundTrip) {
  for (Rule r : {Rule::DeficiencyGe2, Rule::CorInfAbel, Rule::ThmFinAbelP1, Rule::ThmFinAbelP2})
    EXPECT_EQ(rule_from_name(rule_name(r)), r);
  EXPECT_FALSE(rule_from_name("NOPE"));
}

TEST(Deficiency, Rule) {
  auto c = cert(check_deficiency(pres("< x, y, z | x^2 >")));
  EXPECT_EQ(c.inequality_lhs, 2);
  EXPECT_EQ(rej(check_deficiency(pres("< x, y | x^2 >"))).clause, "DEFICIENCY_BELOW_2");
}

TEST(PartOne, PairedFamilyN5) {
  auto c = cert(check_fin_abel_part1(fixtures::paired_family_uniform(5, 2)));
  EXPECT_EQ(c.inequality_lhs, q(3, 2));
  const auto& w = std::get<FinAbelPart1Witness>(c.witness);
  EXPECT_EQ(w.J.size(), 6u);
}

TEST(PartOne, PairedFamilyN2Rejects) {
  auto r = rej(check_fin_abel_part1(fixtures::paired_family_uniform(2, 2)));
  EXPECT_EQ(r.clause, "INEQUALITY_FAILS");
  ASSERT_TRUE(r.lhs);
  EXPECT_EQ(*r.lhs, 0);
}

TEST(PartOne, PairedFamilyN3) {
  auto r = rej(check_fin_abel_part1(fixtures::paired_family(3, {3, 2, 3, 2, 3, 2})));
  EXPECT_EQ(*r.lhs, 1);
  auto c = cert(check_fin_abel_part1(fixtures::paired_family(3, {4, 2, 3, 2, 3, 2})));
  EXPECT_EQ(c.inequality_lhs, q(13, 12));
}

TEST(PartOne, Guards) {
  EXPECT_THROW(check_fin_abel_part1(pres("< x, y | x^2, y^3 >")), Error);
  EXPECT_EQ(rej(check_fin_abel_part1(pres("< x, y | x^2, [x,y], [x,y^2] >"))).clause,
            "ABELIANISATION_INFINITE");
  EXPECT_EQ(rej(check_fin_abel_part1(pres("< x, y | x, y, x y >"))).clause, "ABELIANISATION_TRIVIAL");
  EXPECT_EQ(rej(check_fin_abel_part1(pres("< x | x^2, x^3 >"))).clause, "TOO_FEW_GENERATORS");
}

TEST(PartOne, MonotoneInPowersOutsideJ) {
  // Raising m_i for i outside J never loses a certificate.
  for (unsigned m1 = 2; m1 <= 6; ++m1) {
    auto lo = check_fin_abel_part1(fixtures::paired_family(4, {m1, 2, 2, 2, 2, 2, 2, 2}));
    auto hi = check_fin_abel_part1(fixtures::paired_family(4, {m1 + 1, 2, 2, 2, 2, 2, 2, 2}));
    Rational a = certificate_of(lo) ? certificate_of(lo)->inequality_lhs : *rejection_of(lo)->lhs;
    Rational b = certificate_of(hi) ? certificate_of(hi)->inequality_lhs : *rejection_of(hi)->lhs;
    EXPECT_LE(a, b);
    if (certificate_of(lo)) EXPECT_TRUE(certificate_of(hi));
  }
}

TEST(PartTwo, CyclicWithExtraPower) {
  auto c = cert(check_fin_abel_part2(fixtures::cyclic_with_extra(3, 3, 3)));
  EXPECT_EQ(c.inequality_lhs, q(5, 3));
  const auto& w = std::get<FinAbelPart2Witness>(c.witness);
  EXPECT_EQ(w.k, 3);
  EXPECT_EQ(w.j, 0u);
  auto r = rej(check_fin_abel_part2(fixtures::cyclic_with_extra(3, 2, 2)));
  EXPECT_EQ(r.clause, "INEQUALITY_FAILS");
  EXPECT_EQ(*r.lhs, 1);
  for (std::size_t d = 4; d <= 7; ++d) EXPECT_TRUE(certificate_of(check_fin_abel_part2(fixtures::cyclic_with_extra(d, 2, 2))));
}

TEST(PartTwo, NoCommutatorImage) {
  // ab = Z/2 and no relator exponent vector lies in the span of the other two.
  auto r = rej(check_fin_abel_part2(pres("< x, y | x^2, y^4, (x y)^5 >")));
  EXPECT_EQ(r.clause, "NO_COMMUTATOR_IMAGE");
}

TEST(InfAbel, Examples) {
  auto c = cert(check_inf_abel(pres("< a, t | [a,t]^2, [a,t^2]^2, [a,[a,t]]^2 >")));
  const auto& w = std::get<InfAbelWitness>(c.witness);
  EXPECT_EQ(w.prime, 2u);
  EXPECT_TRUE(w.exempt.empty());
  EXPECT_EQ(w.bound, 2);

  auto r = rej(check_inf_abel(pres("< a, t | [a,t]^2, [a,t^2]^3, [a,t^3]^5 >")));
  EXPECT_EQ(r.clause, "NO_COMMON_PRIME");

  cert(check_inf_abel(pres("< x, y | x^2 >")));
  EXPECT_EQ(rej(check_inf_abel(pres("< x, y | x^2, y^3 >"))).clause, "ABELIANISATION_FINITE");
  EXPECT_EQ(rej(check_inf_abel(pres("< x | x^2 >"))).clause, "TOO_FEW_GENERATORS");
}

TEST(InfAbel, UserPhi) {
  auto p = pres("< a, t | [a,t]^2 >");
  ZMap phi{{Integer(1), Integer(0)}};
  auto c = cert(check_inf_abel(p, phi));
  const auto& w = std::get<InfAbelWitness>(c.witness);
  EXPECT_TRUE(w.user_supplied_phi);
  EXPECT_EQ(w.bound, 1);
  EXPECT_THROW(check_inf_abel(p, ZMap{{Integer(2), Integer(0)}}), Error);
}

TEST(InfAbel, SmallestPrime) {
  auto c = cert(check_inf_abel(pres("< a, t, s | [a,t]^6, [a,s]^15, [t,s]^10 >")));
  // 2 exempts one relator, n - 2 = 1
  EXPECT_EQ(std::get<InfAbelWitness>(c.witness).prime, 2u);
}

TEST(Bound, Examples) {
  auto b = deficiency_bound(pres("< x, y | x^2, y^3 >"));
  EXPECT_EQ(b.rdef, q(7, 6));
  EXPECT_EQ(b.index, 6);
  EXPECT_EQ(b.bound, 2);
  b = deficiency_bound(pres("< x | x^2 >"));
  EXPECT_EQ(b.rdef, q(1, 2));
  EXPECT_EQ(b.bound, 0);
  b = deficiency_bound(fixtures::cyclic_with_extra(3, 3, 3));
  EXPECT_EQ(b.index, 27);
  EXPECT_EQ(b.rdef, q(5, 3));
  EXPECT_EQ(b.bound, 19);
  EXPECT_THROW(deficiency_bound(pres("< a, t | a^2 >")), Error);
}

TEST(Bound, TriangularOrdersEqualPowers) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    oracles::SampleSpec spec;
    spec.kind = oracles::SampleSpec::Kind::Triangular;
    spec.generators = spec.relators = 2 + seed % 3;
    spec.power_min = 2;
    spec.power_max = 5;
    Presentation p = oracles::sample_presentation(spec, seed);
    auto b = deficiency_bound(p);
    for (std::size_t i = 0; i < p.relators.size(); ++i) EXPECT_EQ(b.orders[i], p.relators[i].power);
  }
}

TEST(Certify, Orchestration) {
  auto r = certify(pres("< x, y, z | x^2 >"));
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->rule, Rule::DeficiencyGe2);

  r = certify(fixtures::paired_family_uniform(5, 2));
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->rule, Rule::ThmFinAbelP1);

  r = certify(pres("< x, y | x^2, y^3 >"));
  EXPECT_FALSE(r.certificate);
  ASSERT_EQ(r.rejections.size(), 4u);
  EXPECT_EQ(r.rejections[2].clause, "NOT_DEFICIENCY_MINUS_ONE");

  CertifyOptions only_p2;
  only_p2.order = {Rule::ThmFinAbelP2};
  r = certify(fixtures::paired_family_uniform(5, 2), only_p2);
  EXPECT_EQ(r.rejections.size() + (r.certificate ? 1 : 0), 1u);
}

TEST(Certify, HypothesesExclusive) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    oracles::SampleSpec spec;
    spec.generators = 2 + seed % 3;
    spec.relators = spec.generators + 1;
    spec.power_min = 2;
    spec.power_max = 4;
    Presentation p = oracles::sample_presentation(spec, seed);
    auto ab = abelianisation(p);
    auto inf = check_inf_abel(p);
    auto p1 = check_fin_abel_part1(p);
    auto p2 = check_fin_abel_part2(p);
    if (ab.is_finite()) EXPECT_FALSE(certificate_of(inf));
    if (!ab.is_finite() || ab.is_trivial()) {
      EXPECT_FALSE(certificate_of(p1));
      EXPECT_FALSE(certificate_of(p2));
    }
  }
}

TEST(Certify, SoundnessReplay) {
  std::vector<Presentation> corpus{
      fixtures::paired_family_uniform(5, 2), fixtures::paired_family(4, {3, 2, 2, 2, 2, 2, 2, 2}),
      fixtures::cyclic_with_extra(3, 3, 3), fixtures::cyclic_with_extra(5, 2, 2),
      pres("< a, t | [a,t]^2, [a,t^2]^2, [a,[a,t]]^2 >"), pres("< x, y, z | x^2 >"),
      pres("< x, y, t | (x t y^-1 t^-1)^4, [x,y]^2 >")};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    oracles::SampleSpec spec;
    spec.generators = 2 + seed % 3;
    spec.relators = spec.generators + (seed % 3 == 0 ? 1 : 0);
    spec.power_min = 2;
    spec.power_max = 6;
    spec.zero_sum_generator = seed % 2 ? std::optional<std::size_t>(0) : std::nullopt;
    corpus.push_back(oracles::sample_presentation(spec, seed));
  }
  int certified = 0;
  for (const auto& p : corpus) {
    auto r = certify(p);
    if (!r.certificate) continue;
    ++certified;
    EXPECT_EQ(revalidate(p, *r.certificate), std::nullopt) << format_presentation(p);
  }
  EXPECT_GT(certified, 10);
}

TEST(Certify, RevalidateCatchesTampering) {
  auto p = fixtures::paired_family_uniform(5, 2);
  auto c = *certify(p).certificate;
  c.inequality_lhs = q(2);
  EXPECT_TRUE(revalidate(p, c));
  auto c2 = *certify(p).certificate;
  std::get<FinAbelPart1Witness>(c2.witness).J.pop_back();
  EXPECT_TRUE(revalidate(p, c2));
  auto ip = pres("< a, t | [a,t]^2, [a,t^2]^2 >");
  auto c3 = *certify(ip).certificate;
  std::get<InfAbelWitness>(c3.witness).bound = 7;
  EXPECT_TRUE(revalidate(ip, c3));
}
