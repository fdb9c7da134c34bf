#include "torelli/families.hpp"

#include <utility>

#include "torelli/errors.hpp"

namespace torelli {

FrontDiagram xn_front(unsigned n) {
  if (n == 0) throw InvalidInput("X_n is defined for n >= 1");
  std::vector<FrontEvent> w;
  // K_1: two-bridge plat, strands a b c d.
  w.push_back(left_cusp(0));
  w.push_back(left_cusp(2));
  // 2n zigzags on the rightward top strand, each adding +1 to rot and -1 to tb.
  for (unsigned k = 0; k < 2 * n; ++k) {
    w.push_back(left_cusp(1));
    w.push_back(right_cusp(0));
  }
  for (unsigned k = 0; k < 2 * n + 3; ++k) w.push_back(crossing(1));

  // K_2: trefoil plat below K_1 on positions 4..7.
  w.push_back(left_cusp(4));
  w.push_back(left_cusp(6));
  for (int k = 0; k < 3; ++k) w.push_back(crossing(5));
  // K_1's bottom strand passes K_2's rightward top strand (+1), then the
  // leftward strand below it (-1).
  w.push_back(crossing(3));
  w.push_back(crossing(4));
  w.push_back(right_cusp(3));
  w.push_back(right_cusp(4));

  w.push_back(right_cusp(2));
  w.push_back(right_cusp(0));
  return FrontDiagram(std::move(w));
}

XnPresentation xn_family(unsigned n) {
  XnPresentation out;
  out.n = n;
  out.front = xn_front(n);
  out.trace = LinkTrace(stein_trace(out.front).linking(), {"K1", "K2"});
  return out;
}

ZFixture z_fixture() {
  ZFixture z;
  IntMatrix form = direct_sum(IntMatrix{{0, 1}, {1, -2}}, IntMatrix::zeros(2, 2));
  z.trace = LinkTrace(std::move(form), {"a", "b", "c", "d"});
  z.cap.cap_h1_vanishes = true;
  z.cap.basic_class_restriction = make_vector({0, 0, -2, -2});
  z.boundary_generators = {make_vector({0, 0, 1, 0}), make_vector({0, 0, 0, 1})};
  z.generator_labels = {"mu2+mu3", "mu5"};
  return z;
}

}  // namespace torelli
