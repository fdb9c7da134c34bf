#pragma once

#include <cstddef>

#include "torelli/int_matrix.hpp"
#include "torelli/presentation.hpp"

namespace torelli {

/// A homomorphism H_2(X, dX) -> H_2(X), stored as its matrix D in the bases
/// f_i (source) and e_j (target). Its umkehr map has matrix D^T in these
/// bases, so the Poincare condition reads D + D^T == D Lambda D^T.
class Variation {
 public:
  /// Throws DimensionMismatch unless matrix is n x n for an n-component trace.
  Variation(LinkTrace trace, IntMatrix matrix);

  const LinkTrace& trace() const { return trace_; }
  const IntMatrix& matrix() const { return matrix_; }

  static Variation identity(const LinkTrace& trace);

  friend bool operator==(const Variation&, const Variation&) = default;

 private:
  LinkTrace trace_;
  IntMatrix matrix_;
};

/// An alternating form eta on the free part of H_1(dX), as the matrix
/// N(i, j) = eta(b_i, b_j) in the chosen free generators b_i.
class SkewForm {
 public:
  SkewForm() = default;
  /// Throws InvalidInput unless matrix is square and skew-symmetric.
  explicit SkewForm(IntMatrix matrix);

  static SkewForm zero(std::size_t rank);
  /// a ^ b for functionals a, b: (x, y) -> a(x) b(y) - b(x) a(y).
  static SkewForm wedge(const IntVector& a, const IntVector& b);
  /// The basis form e_i^* ^ e_j^*.
  static SkewForm elementary(std::size_t rank, std::size_t i, std::size_t j);

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rows(); }

  SkewForm operator+(const SkewForm& other) const;
  SkewForm operator*(const Integer& k) const;
  friend bool operator==(const SkewForm&, const SkewForm&) = default;

 private:
  IntMatrix matrix_;
};

/// D + D^T == D Lambda D^T. Throws DimensionMismatch on a malformed variation.
bool is_poincare(const Variation& v);

/// D1 + (I - D1 Lambda) D2. Throws DimensionMismatch if the traces differ and
/// NotPoincare if either input fails the Poincare condition.
Variation compose(const Variation& a, const Variation& b);

/// -(I - D^T Lambda) D. Equals -(I - D Lambda) D exactly when D is Torelli.
Variation inverse(const Variation& v);

/// A = I - D Lambda, an isometry of the intersection form.
IntMatrix induced_automorphism(const Variation& v);

/// D Lambda == 0. Throws NotPoincare.
bool is_torelli(const Variation& v);

/// The variation H_2(X,dX) -> H_1(dX) -> H_1(dX)^* -> H_2(dX) -> H_2(X)
/// obtained from eta. The result is Poincare and Torelli.
Variation variation_from_skew(const SkewForm& eta, const LinkTrace& trace);

/// Inverse of variation_from_skew on Torelli variations. Throws NotTorelli
/// when the image of D does not lift to H_2(dX).
SkewForm skew_from_variation(const Variation& v);

/// D + 0 on the trace of X # m(S^2 x S^2).
Variation stabilize(const Variation& v, std::size_t m);

/// Rank of the Torelli lattice { variation_from_skew(eta) }: r(r-1)/2 with
/// r = b_1(dX). Computed from the generated lattice, not from the formula.
std::size_t torelli_rank(const LinkTrace& trace);

/// The amount by which the homeomorphism extended over the closed manifold
/// moves a class: embed * D * x_rel, where x_rel is the restriction of the
/// class to H_2(W, dW) and embed is the matrix of H_2(W) -> H_2(X).
///
/// Throws InjectivityUnverified unless cap.cap_h1_vanishes, or if embed is
/// not injective on H_2(dW). Throws NotTorelli for a non-Torelli variation.
IntVector gluing_displacement(const Variation& v, const IntVector& x_rel, const IntMatrix& embed,
                              const CapData& cap);

/// Matrix of the identification H_1(dX)/tors -> H_1(dX')/tors induced by an
/// inclusion of handle coordinates Z^n -> Z^n' (free coordinates on both
/// sides). Used to compare skew forms across stabilizations.
IntMatrix boundary_transport(const LinkTrace& from, const LinkTrace& to, const IntMatrix& inclusion);

/// eta pulled back along a map of free H_1 coordinates: T^T N T.
SkewForm pullback(const SkewForm& eta, const IntMatrix& transport);

}  // namespace torelli
