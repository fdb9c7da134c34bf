#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torelli/int_matrix.hpp"
#include "torelli/smith.hpp"

namespace torelli {

// Coordinates used throughout the library, for a trace on an n-component
// framed link:
//   H_2(X)       free on the handle classes e_1..e_n
//   H_2(X, dX)   free on the dual classes f_1..f_n, <e_i, f_j> = delta_ij
//   H^2(X)       free on the handle cochains h_i^*; PD(h_i^*) = f_i
//   j_* = q : H_2(X) -> H_2(X, dX) has matrix Lambda (the linking matrix)
//   d : H_2(X, dX) -> H_1(dX) = coker(Lambda) sends f_i to the meridian mu_i
//   H_2(dX) = ker(Lambda), included into H_2(X)

/// A 4-manifold obtained from B^4 by attaching 2-handles along a framed link.
/// The linking matrix is symmetric with the framings on its diagonal.
class LinkTrace {
 public:
  LinkTrace() = default;
  /// Throws InvalidInput if linking is not square and symmetric, or if labels
  /// are given with the wrong count.
  explicit LinkTrace(IntMatrix linking, std::vector<std::string> labels = {});

  std::size_t components() const { return linking_.rows(); }
  const IntMatrix& linking() const { return linking_; }
  IntVector framings() const;
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const LinkTrace& a, const LinkTrace& b) {
    return a.linking_ == b.linking_ && a.labels_ == b.labels_;
  }

 private:
  IntMatrix linking_;
  std::vector<std::string> labels_;
};

/// Properties of a cap X \ W used when gluing W into a closed manifold.
struct CapData {
  /// H^1 of the cap vanishes (e.g. the cap is built from 2-handles and a
  /// single 4-handle). Asserted by the caller.
  bool cap_h1_vanishes = false;
  /// Restriction to W of the basic class, in handle-cochain coordinates.
  IntVector basic_class_restriction;

  friend bool operator==(const CapData&, const CapData&) = default;
};

/// Homology of the boundary 3-manifold in the fixed handle coordinates.
struct BoundaryData {
  /// H_1(dX) = coker(Lambda).
  FGAbelianGroup h1;
  /// n x r matrix whose columns are a saturated basis of H_2(dX) = ker(Lambda).
  IntMatrix kernel;
  /// r x n left inverse of kernel: kernel_left_inverse * kernel == I_r.
  IntMatrix kernel_left_inverse;
  /// duality(i, j) = kernel column i . free_lift column j. Always unimodular.
  IntMatrix duality;

  std::size_t b1() const { return h1.free_rank(); }
};

IntMatrix intersection_form(const LinkTrace& trace);

/// Throws NonUnimodularDuality if the computed pairing is not unimodular.
BoundaryData boundary_homology(const LinkTrace& trace);

struct BettiReport {
  std::size_t b2 = 0;
  std::size_t b1_boundary = 0;
  std::size_t form_rank = 0;
  std::vector<std::string> violations;

  bool consistent() const { return violations.empty(); }
};

/// Checks b_2(X) >= b_1(dX), and that equality forces a vanishing form.
BettiReport betti_sanity(const LinkTrace& trace);

/// Lambda + H + ... + H with m hyperbolic summands [[0,1],[1,0]] appended:
/// the trace of X # m(S^2 x S^2).
LinkTrace stabilize(const LinkTrace& trace, std::size_t m);

}  // namespace torelli
