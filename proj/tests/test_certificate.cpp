#include <gtest/gtest.h>

#include "torelli/certificate.hpp"
#include "torelli/errors.hpp"
#include "torelli/families.hpp"
#include "torelli/presentation.hpp"
#include "torelli/variation.hpp"

using namespace torelli;

namespace {

CertificateInput xn_input(unsigned n) {
  const XnPresentation x = xn_family(n);
  CertificateInput in;
  in.trace = x.trace;
  in.c1_restriction = make_vector({2 * static_cast<long>(n), 0});
  in.invariant_nonzero = true;
  in.cap.cap_h1_vanishes = true;
  return in;
}

CertificateInput z_input() {
  const ZFixture z = z_fixture();
  CertificateInput in;
  in.trace = z.trace;
  in.c1_restriction = z.cap.basic_class_restriction;
  in.invariant_nonzero = true;
  in.cap = z.cap;
  return in;
}

}  // namespace

TEST(Certificate, XnFamily) {
  for (unsigned n = 1; n <= 10; ++n) {
    SCOPED_TRACE(n);
    const long d = 2 * static_cast<long>(n);
    const Certificate c = stein_certify(xn_front(n));
    ASSERT_TRUE(c.ok()) << c.failure->detail;
    EXPECT_EQ(c.b1_boundary, 2u);
    EXPECT_EQ(c.d, d);
    EXPECT_EQ(c.torelli_rank, 1u);
    EXPECT_TRUE(c.infinitely_many_nonsmoothable);
    EXPECT_TRUE(c.all_nontrivial_nonsmoothable);
    ASSERT_TRUE(c.variation.has_value());
    EXPECT_TRUE(is_poincare(*c.variation));
    EXPECT_TRUE(is_torelli(*c.variation));
    ASSERT_EQ(c.displacement_witness.size(), 7u);
    for (std::int64_t k = -kWitnessRange; k <= kWitnessRange; ++k) {
      EXPECT_EQ(c.displacement_witness.at(k), make_vector({0, k * d}));
      EXPECT_EQ(c.displacement_witness.at(k), c.displacement_chain.at(k));
    }

    // The explicit source agrees with the Stein source.
    const Certificate e = certify(xn_input(n));
    ASSERT_TRUE(e.ok());
    EXPECT_EQ(e.d, c.d);
    EXPECT_EQ(e.displacement_witness, c.displacement_witness);
  }
}

TEST(Certificate, ZFixture) {
  const ZFixture z = z_fixture();
  EXPECT_EQ(intersection_form(z.trace), direct_sum(IntMatrix{{0, 1}, {1, -2}}, IntMatrix::zeros(2, 2)));
  const BoundaryData bd = boundary_homology(z.trace);
  EXPECT_EQ(bd.h1.describe(), "Z^2");

  // The basic class restricts to -2 (v_1 + v_2) on the boundary.
  IntVector expected(2, 0);
  for (const auto& g : z.boundary_generators) {
    const IntVector fc = bd.h1.free_coordinates(g);
    for (std::size_t i = 0; i < 2; ++i) expected[i] += -2 * fc[i];
  }
  EXPECT_EQ(bd.h1.free_coordinates(z.cap.basic_class_restriction), expected);

  const Certificate c = certify(z_input());
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c.d, 2);
  EXPECT_EQ(c.torelli_rank, 1u);
  EXPECT_TRUE(c.infinitely_many_nonsmoothable);
  EXPECT_TRUE(c.all_nontrivial_nonsmoothable);
  for (std::int64_t k = -kWitnessRange; k <= kWitnessRange; ++k)
    EXPECT_EQ(c.displacement_witness.at(k), c.displacement_chain.at(k));
  EXPECT_FALSE(c.assumptions.empty());
}

TEST(Certificate, HypothesisFailures) {
  CertificateInput torsion = xn_input(2);
  torsion.c1_restriction = make_vector({0, 0});
  Certificate c = certify(torsion);
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.failure->which, Hypothesis::Nontorsion);
  EXPECT_FALSE(c.infinitely_many_nonsmoothable);

  c = stein_certify(FrontDiagram({left_cusp(0), right_cusp(0)}));
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.failure->which, Hypothesis::BoundaryRank);
  EXPECT_EQ(c.b1_boundary, 0u);

  CertificateInput no_invariant = xn_input(1);
  no_invariant.invariant_nonzero = false;
  c = certify(no_invariant);
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.failure->which, Hypothesis::InvariantNonzero);

  CertificateInput cap = xn_input(1);
  cap.cap.cap_h1_vanishes = false;
  c = certify(cap);
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.failure->which, Hypothesis::CapCohomology);

  CertificateInput squash = xn_input(1);
  squash.embed = IntMatrix{{1, 0}, {0, 0}, {0, 0}};
  c = certify(squash);
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.failure->which, Hypothesis::Injectivity);

  CertificateInput bigger = xn_input(1);
  bigger.embed = IntMatrix{{1, 0}, {0, 1}, {0, 0}};
  c = certify(bigger);
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c.displacement_witness.at(1), make_vector({0, 2, 0}));
}

TEST(Certificate, MalformedInput) {
  CertificateInput wrong_len = xn_input(1);
  wrong_len.c1_restriction = make_vector({2});
  EXPECT_THROW(certify(wrong_len), DimensionMismatch);

  CertificateInput stein = xn_input(3);
  stein.front = xn_front(3);
  stein.c1_restriction = make_vector({4, 0});
  EXPECT_THROW(certify(stein), InvalidInput);
  stein.c1_restriction = make_vector({6, 0});
  EXPECT_TRUE(certify(stein).ok());
  stein.c1_restriction.clear();
  EXPECT_TRUE(certify(stein).ok());
}

TEST(Certificate, Deterministic) {
  const Certificate a = certify(z_input());
  const Certificate b = certify(z_input());
  EXPECT_EQ(a.v1, b.v1);
  EXPECT_EQ(a.v2, b.v2);
  EXPECT_EQ(a.eta, b.eta);
  EXPECT_EQ(a.variation, b.variation);
  EXPECT_EQ(a.displacement_witness, b.displacement_witness);
}

TEST(Certificate, HypothesisNames) {
  EXPECT_EQ(to_string(Hypothesis::InvariantNonzero), "invariant");
  EXPECT_EQ(to_string(Hypothesis::BoundaryRank), "b1");
  EXPECT_EQ(to_string(Hypothesis::Nontorsion), "nontorsion");
  EXPECT_EQ(to_string(Hypothesis::CapCohomology), "cap");
  EXPECT_EQ(to_string(Hypothesis::Injectivity), "injectivity");
}

TEST(DehnTwist, TruthTable) {
  using V = DehnTwistVerdict;
  struct Row {
    std::int64_t b1;
    bool t3;
    bool seifert;
    V expected;
  };
  const std::vector<Row> table{
      {0, false, false, V::Realizable},    {0, false, true, V::Realizable},
      {1, false, false, V::Realizable},    {1, false, true, V::Realizable},
      {2, false, false, V::NotRealizable}, {2, false, true, V::Realizable},
      {3, false, false, V::NotRealizable}, {3, false, true, V::NotRealizable},
      {3, true, false, V::Realizable},     {3, true, true, V::Realizable},
      {4, false, false, V::NotRealizable}, {4, false, true, V::NotRealizable},
  };
  ASSERT_EQ(table.size(), 12u);
  for (const Row& r : table) {
    SCOPED_TRACE(std::to_string(r.b1) + (r.t3 ? " T3" : "") + (r.seifert ? " seifert" : ""));
    EXPECT_EQ(dehn_twist_realizability({r.b1, true, r.t3, r.seifert}), r.expected);
  }
  for (std::int64_t b1 = 5; b1 <= 50; ++b1)
    EXPECT_EQ(dehn_twist_realizability({b1, true, false, true}), V::NotRealizable);
}

TEST(DehnTwist, ScopeAndConsistency) {
  EXPECT_EQ(dehn_twist_realizability({2, false, false, true}), DehnTwistVerdict::OutOfScope);
  EXPECT_THROW(dehn_twist_realizability({-1, true, false, false}), InconsistentProfile);
  EXPECT_THROW(dehn_twist_realizability({2, true, true, false}), InconsistentProfile);
  EXPECT_EQ(to_string(DehnTwistVerdict::Realizable), "Realizable");
  EXPECT_EQ(to_string(DehnTwistVerdict::OutOfScope), "OutOfScope");
}
