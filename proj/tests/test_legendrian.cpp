#include <gtest/gtest.h>

#include "oracles.hpp"
#include "torelli/errors.hpp"
#include "torelli/families.hpp"
#include "torelli/legendrian.hpp"
#include "torelli/presentation.hpp"

using namespace torelli;

namespace {

FrontDiagram unknot() { return FrontDiagram({left_cusp(0), right_cusp(0)}); }

Integer pow2(unsigned k) {
  Integer p = 1;
  for (unsigned i = 0; i < k; ++i) p *= 2;
  return p;
}

}  // namespace

TEST(Front, StandardUnknot) {
  const ClassicalInvariants c = classical_invariants(unknot(), 0);
  EXPECT_EQ(c.tb, -1);
  EXPECT_EQ(c.rot, 0);
  EXPECT_EQ(c.writhe, 0);
  EXPECT_EQ(c.right_cusps, 1u);
  EXPECT_EQ(c.crossings, 0u);
}

TEST(Front, StabilizedUnknotRotation) {
  // A zigzag on the upper strand: two extra cusps of the same orientation.
  const FrontDiagram z({left_cusp(0), left_cusp(0), right_cusp(1), right_cusp(0)});
  const ClassicalInvariants c = classical_invariants(z, 0);
  EXPECT_EQ(c.tb, -2);
  EXPECT_EQ(abs(c.rot), 1);
  const ClassicalInvariants r = classical_invariants(z.with_orientation(0, -1), 0);
  EXPECT_EQ(r.tb, c.tb);
  EXPECT_EQ(r.rot, -c.rot);
}

TEST(Front, OrientationReversalNegatesRotation) {
  for (unsigned n = 1; n <= 5; ++n) {
    const FrontDiagram f = xn_front(n);
    for (std::size_t k = 0; k < f.component_count(); ++k) {
      const ClassicalInvariants c = classical_invariants(f, k);
      const ClassicalInvariants r = classical_invariants(f.with_orientation(k, -1), k);
      EXPECT_EQ(r.tb, c.tb);
      EXPECT_EQ(r.rot, -c.rot);
    }
    // Linking numbers flip sign with one reversed component.
    EXPECT_EQ(linking_number(f.with_orientation(1, -1), 0, 1), -linking_number(f, 0, 1));
  }
}

TEST(Front, XnClassicalInvariants) {
  for (unsigned n = 1; n <= 10; ++n) {
    SCOPED_TRACE(n);
    const FrontDiagram f = xn_front(n);
    ASSERT_EQ(f.component_count(), 2u);
    const ClassicalInvariants k1 = classical_invariants(f, 0);
    const ClassicalInvariants k2 = classical_invariants(f, 1);
    EXPECT_EQ(k1.crossings, 2 * n + 3);
    EXPECT_EQ(k1.right_cusps, 2 * n + 2);
    EXPECT_EQ(k1.tb, 1);
    EXPECT_EQ(k1.rot, 2 * static_cast<long>(n));
    EXPECT_EQ(k2.tb, 1);
    EXPECT_EQ(k2.rot, 0);
    EXPECT_EQ(linking_number(f, 0, 1), 0);
    EXPECT_EQ(linking_number(f, 1, 0), 0);
  }
}

TEST(SteinTrace, Examples) {
  EXPECT_EQ(stein_trace(unknot()).linking(), IntMatrix{{-2}});
  const FrontDiagram split({left_cusp(0), right_cusp(0), left_cusp(0), right_cusp(0)});
  EXPECT_EQ(split.component_count(), 2u);
  EXPECT_EQ(stein_trace(split).linking(), (IntMatrix{{-2, 0}, {0, -2}}));
  for (unsigned n = 1; n <= 10; ++n) {
    EXPECT_EQ(stein_trace(xn_front(n)).linking(), IntMatrix::zeros(2, 2));
    EXPECT_EQ(xn_family(n).trace.linking(), IntMatrix::zeros(2, 2));
  }
  EXPECT_THROW(xn_family(0), InvalidInput);
}

TEST(ChernClass, XnAndNontorsion) {
  for (unsigned n = 1; n <= 10; ++n) {
    const IntVector c1 = chern_class(xn_front(n));
    EXPECT_EQ(c1, make_vector({2 * static_cast<long>(n), 0}));
    const auto nt = nontorsion_test(c1, xn_family(n).trace);
    ASSERT_TRUE(nt.has_value());
    EXPECT_EQ(nt->d, 2 * static_cast<long>(n));
    EXPECT_EQ(content(nt->v1), 1);
  }
  EXPECT_FALSE(nontorsion_test(make_vector({0, 0}), xn_family(1).trace).has_value());
  // Rational homology sphere boundary: every class is torsion.
  EXPECT_FALSE(nontorsion_test(make_vector({3, 5}), LinkTrace(IntMatrix::identity(2))).has_value());
  EXPECT_FALSE(nontorsion_test(make_vector({1}), LinkTrace(IntMatrix{{4}})).has_value());
  EXPECT_THROW(nontorsion_test(make_vector({1}), xn_family(1).trace), DimensionMismatch);
}

TEST(Adjunction, Examples) {
  const AdjunctionBounds id = adjunction_bounds(make_vector({2, 0}), IntMatrix::identity(2), 1);
  EXPECT_EQ(id.closed_form, 3);
  EXPECT_EQ(id.universal, 3);
  EXPECT_EQ(id.from_pairing, 2);
  const AdjunctionBounds swap = adjunction_bounds(make_vector({4, 0}), IntMatrix{{0, 1}, {1, 0}}, 2);
  EXPECT_EQ(swap.closed_form, 5);
  EXPECT_EQ(adjunction_lower_bound(make_vector({4, 0}), IntMatrix{{0, 1}, {1, 0}}, 2), 5);
  EXPECT_THROW(adjunction_bounds(make_vector({2, 0}), IntMatrix{{2, 0}, {0, 1}}, 1), NotUnimodular);
  EXPECT_THROW(adjunction_bounds(make_vector({2, 1}), IntMatrix::identity(2), 1), InvalidInput);
  EXPECT_THROW(adjunction_bounds(make_vector({0, 0}), IntMatrix::identity(2), 0), InvalidInput);
}

TEST(AdjunctionProperty, UniversalBoundIsAttained) {
  for (long n = 1; n <= 4; ++n) {
    Integer best = -1;
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c)
          for (long d = -3; d <= 3; ++d) {
            const IntMatrix m{{a, b}, {c, d}};
            if (abs(oracle::cofactor_determinant(m)) != 1) continue;
            const AdjunctionBounds bounds = adjunction_bounds(make_vector({2 * n, 0}), m, n);
            // Some column of a unimodular matrix has a nonzero first-column entry.
            const Integer expected = 1 + 2 * n * std::max(abs(Integer(a)), abs(Integer(c)));
            EXPECT_EQ(bounds.closed_form, expected);
            EXPECT_GE(bounds.closed_form, bounds.universal);
            EXPECT_EQ(bounds.universal, 1 + 2 * n);
            if (best < 0 || bounds.closed_form < best) best = bounds.closed_form;
          }
    EXPECT_EQ(best, 1 + 2 * n);
  }
}

TEST(Distinguish, ExplicitPair) {
  const BoundaryDistinction b = distinguish_boundaries(2, 3);
  EXPECT_EQ(b.n_r, 7);
  EXPECT_EQ(b.n_m, 17);
  EXPECT_EQ(b.upper, 17);
  EXPECT_EQ(b.lower, 35);
  EXPECT_TRUE(b.distinct);
  // Argument order does not matter.
  const BoundaryDistinction s = distinguish_boundaries(3, 2);
  EXPECT_EQ(s.r, 2u);
  EXPECT_EQ(s.m, 3u);
  EXPECT_EQ(s.upper, b.upper);
  EXPECT_THROW(distinguish_boundaries(2, 2), InvalidInput);
  EXPECT_THROW(distinguish_boundaries(0, 2), InvalidInput);
}

TEST(Distinguish, AllPairsUpToSix) {
  for (unsigned r = 1; r <= 6; ++r)
    for (unsigned m = r + 1; m <= 6; ++m) {
      SCOPED_TRACE(std::to_string(r) + "," + std::to_string(m));
      const BoundaryDistinction b = distinguish_boundaries(r, m);
      EXPECT_EQ(b.n_r, 5 * pow2(r - 1) - 3);
      EXPECT_EQ(b.upper, 5 * pow2(r) - 3);
      EXPECT_EQ(b.lower, 5 * pow2(m) - 5);
      EXPECT_LT(b.upper, b.lower);
      EXPECT_TRUE(b.distinct);
    }
}

TEST(Distinguish, SurfaceGenera) {
  for (long n = 1; n <= 20; ++n) {
    const SurfaceGenera g = explicit_surface_genera(n);
    EXPECT_EQ(g.first, 2 * n + 3);
    EXPECT_EQ(g.second, 7);
  }
  EXPECT_EQ(separated_parameter(1), 2);
  EXPECT_EQ(separated_parameter(4), 37);
}

TEST(Front, MalformedInputs) {
  EXPECT_THROW(FrontDiagram({left_cusp(0)}), MalformedFront);
  EXPECT_THROW(FrontDiagram({right_cusp(0)}), MalformedFront);
  EXPECT_THROW(FrontDiagram({left_cusp(0), crossing(1), right_cusp(0)}), MalformedFront);
  EXPECT_THROW(FrontDiagram({left_cusp(0), right_cusp(1)}), MalformedFront);
  EXPECT_THROW(FrontDiagram({left_cusp(3), right_cusp(0)}), MalformedFront);
  EXPECT_THROW(FrontDiagram({left_cusp(0), right_cusp(0)}, {1, 1}), MalformedFront);
  EXPECT_THROW(FrontDiagram({left_cusp(0), right_cusp(0)}, {2}), MalformedFront);
  EXPECT_THROW(parse_event("Q1"), MalformedFront);
  EXPECT_THROW(parse_event("L"), MalformedFront);
  EXPECT_THROW(parse_event("X-1"), MalformedFront);
  EXPECT_EQ(parse_event("X12"), crossing(12));
  EXPECT_EQ(to_string(left_cusp(3)), "L3");
}

TEST(Front, TextRoundTrip) {
  for (unsigned n = 1; n <= 4; ++n) {
    const FrontDiagram f = xn_front(n).with_orientation(1, -1);
    const std::string text = front_to_text(f);
    const FrontDiagram back = front_from_text(text);
    EXPECT_EQ(back.events(), f.events());
    EXPECT_EQ(back.orientations(), f.orientations());
    EXPECT_EQ(front_to_text(back), text);
  }
  // The header is optional.
  EXPECT_EQ(front_from_text("L0, R0\n").orientations(), std::vector<int>{1});
  EXPECT_THROW(front_from_text("orientations: 2\nL0, R0\n"), MalformedFront);
  EXPECT_THROW(front_from_text("orientations: 1\nL0, Z0\n"), MalformedFront);
}
