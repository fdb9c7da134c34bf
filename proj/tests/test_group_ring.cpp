#include <gtest/gtest.h>

#include <map>

#include "generators.hpp"
#include "oracles.hpp"
#include "torelli/errors.hpp"
#include "torelli/group_ring.hpp"

using namespace torelli;

namespace {

const std::vector<std::string> kGens{"E1", "E2", "F"};

GroupRingElement random_element(gen::Random& rng, const std::vector<std::string>& gens) {
  GroupRingElement x(gens);
  const long terms = rng.uniform(0, 5);
  for (long t = 0; t < terms; ++t) {
    Exponent e(gens.size());
    for (auto& a : e) a = rng.uniform(-3, 3);
    x.add_term(e, rng.uniform(-4, 4));
  }
  return x;
}

// Product straight from the definition, over a plain map.
std::map<Exponent, Integer> naive_product(const GroupRingElement& a, const GroupRingElement& b) {
  std::map<Exponent, Integer> out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST(GroupRing, UnitAndSquares) {
  const GroupRingElement one = GroupRingElement::one({"E"});
  const GroupRingElement e = GroupRingElement::generator({"E"}, "E");
  const GroupRingElement e_inv = GroupRingElement::monomial({"E"}, {-1});
  EXPECT_EQ(e * one, e);
  EXPECT_EQ(one * e, e);
  const GroupRingElement s = e + e_inv;
  const GroupRingElement sq = s * s;
  EXPECT_EQ(sq.terms().size(), 3u);
  EXPECT_EQ(sq.coefficient({2}), 1);
  EXPECT_EQ(sq.coefficient({0}), 2);
  EXPECT_EQ(sq.coefficient({-2}), 1);
  EXPECT_EQ(e * e_inv, one);
  EXPECT_TRUE((e - e).is_zero());
  EXPECT_EQ(s.conjugate(), s);
}

TEST(GroupRing, ZeroCoefficientsAreDropped) {
  GroupRingElement x(kGens);
  x.add_term({1, 0, 0}, 3);
  x.add_term({1, 0, 0}, -3);
  EXPECT_TRUE(x.is_zero());
  x.add_term({0, 0, 0}, 0);
  EXPECT_TRUE(x.terms().empty());
  EXPECT_THROW(x.add_term({1, 0}, 1), DimensionMismatch);
}

TEST(GroupRing, Errors) {
  EXPECT_THROW(GroupRingElement({"E", "E"}), InvalidInput);
  EXPECT_THROW(GroupRingElement::generator({"E"}, "F"), UnknownGenerator);
  EXPECT_THROW(GroupRingElement(kGens).generator_index("G"), UnknownGenerator);
  const GroupRingElement a = GroupRingElement::one({"E"});
  const GroupRingElement b = GroupRingElement::one({"F"});
  EXPECT_THROW(a * b, GeneratorMismatch);
  EXPECT_THROW(a + b, GeneratorMismatch);
  EXPECT_THROW(a - b, GeneratorMismatch);
  EXPECT_THROW(pairwise_distinct({a, b}), GeneratorMismatch);
}

TEST(GroupRing, ToString) {
  const GroupRingElement e = GroupRingElement::generator({"E"}, "E");
  EXPECT_EQ(to_string(GroupRingElement({"E"})), "0");
  EXPECT_EQ(to_string(GroupRingElement::one({"E"})), "1");
  const GroupRingElement x = GroupRingElement::monomial({"E"}, {-2}, -3) + e;
  EXPECT_EQ(to_string(x), "-3*E^-2 + E");
}

TEST(GroupRingProperty, RingAxioms) {
  gen::Random rng(31337);
  for (int t = 0; t < 200; ++t) {
    const GroupRingElement a = random_element(rng, kGens);
    const GroupRingElement b = random_element(rng, kGens);
    const GroupRingElement c = random_element(rng, kGens);
    const GroupRingElement ab = a * b;
    EXPECT_EQ(ab.terms(), naive_product(a, b));
    EXPECT_EQ(ab, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(ab.conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ(a * GroupRingElement::one(kGens), a);
  }
}

TEST(Alexander, Validation) {
  EXPECT_THROW(AlexanderPolynomial({{0, 1}, {1, 1}}), InvalidInput);
  EXPECT_THROW(AlexanderPolynomial(std::map<std::int64_t, Integer>{{0, 3}}), InvalidInput);
  EXPECT_THROW(alexander_twist(0), InvalidInput);
  const AlexanderPolynomial trefoil({{-1, 1}, {0, -1}, {1, 1}});
  EXPECT_EQ(trefoil.evaluate_at_one(), 1);
  EXPECT_EQ(AlexanderPolynomial::unknot().evaluate_at_one(), 1);
}

TEST(Alexander, TwistKnots) {
  for (unsigned n = 1; n <= 100; ++n) {
    const AlexanderPolynomial d = alexander_twist(n);
    EXPECT_EQ(d.coefficient(0), -(2 * static_cast<long>(n) - 1));
    EXPECT_EQ(d.coefficient(1), n);
    EXPECT_EQ(d.coefficient(-1), n);
    EXPECT_EQ(d.coefficient(2), 0);
    EXPECT_EQ(d.evaluate_at_one(), 1);
  }
}

TEST(KnotSurgery, UnknotIsIdentity) {
  gen::Random rng(4);
  for (int t = 0; t < 50; ++t) {
    const GroupRingElement x = random_element(rng, kGens);
    EXPECT_EQ(knot_surgery(x, AlexanderPolynomial::unknot(), "F"), x);
  }
  EXPECT_THROW(knot_surgery(GroupRingElement::one(kGens), alexander_twist(1), "T"), UnknownGenerator);
}

TEST(KnotSurgery, FamilyMatchesExpansion) {
  for (unsigned n = 1; n <= 20; ++n) {
    SCOPED_TRACE(n);
    const GroupRingElement sw = knot_surgery_family_sw(n);
    EXPECT_EQ(sw.generators(), kGens);
    EXPECT_EQ(sw.terms(), oracle::knot_surgery_sw(n));
    EXPECT_EQ(basic_classes(sw).size(), 12u);
    EXPECT_EQ(sw.coefficient({1, 1, 0}), -(2 * static_cast<long>(n) - 1));
    EXPECT_EQ(sw.conjugate(), sw);
    // Built from the operations rather than the closed form.
    GroupRingElement built = GroupRingElement::one(kGens);
    built = blowup(built, "E1");
    built = blowup(built, "E2");
    built = knot_surgery(built, alexander_twist(n), "F");
    EXPECT_EQ(built, sw);
  }
}

TEST(KnotSurgery, PairwiseDistinct) {
  std::vector<GroupRingElement> family;
  for (unsigned n = 1; n <= 20; ++n) family.push_back(knot_surgery_family_sw(n));
  EXPECT_TRUE(pairwise_distinct(family).all_distinct());

  family.push_back(knot_surgery_family_sw(3));
  const DistinctnessReport r = pairwise_distinct(family);
  ASSERT_EQ(r.equal_pairs.size(), 1u);
  EXPECT_EQ(r.equal_pairs[0], (std::pair<std::size_t, std::size_t>{2, 20}));
  EXPECT_FALSE(r.all_distinct());
}
