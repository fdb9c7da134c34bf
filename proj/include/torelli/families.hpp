#pragma once

#include <string>
#include <vector>

#include "torelli/int_matrix.hpp"
#include "torelli/legendrian.hpp"
#include "torelli/presentation.hpp"

namespace torelli {

/// The Stein domain X_n: a two-component Legendrian link, both components
/// with tb = 1 (so 0-framed) and linking number 0.
///
/// K_1 is the (2, 2n+3) torus-knot plat with 2n zigzags on its top strand:
/// 2n+3 crossings, 2n+2 right cusps, rot = 2n. K_2 is a tb = 1 trefoil plat
/// with rot = 0, threaded under K_1 through one positive and one negative
/// crossing.
struct XnPresentation {
  unsigned n = 0;
  LinkTrace trace;
  FrontDiagram front;
};

/// Throws InvalidInput for n == 0.
XnPresentation xn_family(unsigned n);

/// The front of X_n alone.
FrontDiagram xn_front(unsigned n);

/// The knot-surgery base Z: intersection form [[0,1],[1,-2]] + 0 on four
/// handles, boundary H_1 = Z^2.
///
/// Handles 3 and 4 are 0-framed and split from the rest; their meridians
/// stand for the boundary generators v_1 = mu_2 + mu_3 and v_2 = mu_5 of the
/// original diagram. The cap is built from 2-handles and one 4-handle, and
/// the basic class E_1 + E_2 restricts to -2(v_1 + v_2).
struct ZFixture {
  LinkTrace trace;
  CapData cap;
  /// v_1, v_2 as relative classes (f-coordinates) whose boundaries generate H_1.
  std::vector<IntVector> boundary_generators;
  std::vector<std::string> generator_labels;
};

ZFixture z_fixture();

}  // namespace torelli
