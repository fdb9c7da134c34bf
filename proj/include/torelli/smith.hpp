#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torelli/int_matrix.hpp"

namespace torelli {

/// U * source * V == S with U, V unimodular and S diagonal, diagonal entries
/// nonnegative and forming a divisibility chain. The inverses of U and V are
/// tracked alongside so callers never need to invert them separately.
///
/// Only the diagonal of S is canonical; U and V depend on the pivoting order.
struct SmithDecomposition {
  IntMatrix source;
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t rank = 0;

  /// The min(rows, cols) diagonal entries of S.
  IntVector diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Integer inverse of a unimodular matrix. Throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// A basis of the integer kernel {x : m x = 0}. The basis spans a direct
/// summand of Z^cols (it is saturated).
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Same basis as kernel_basis, packed as the columns of a cols x k matrix.
IntMatrix kernel_matrix(const IntMatrix& m);

/// A unimodular matrix whose first column is v. Throws NonPrimitive unless the
/// entries of v have gcd 1.
IntMatrix complete_to_basis(const IntVector& v);

/// A finitely generated abelian group Z^ambient / im(presentation), together
/// with the change of coordinates to its normal form
///   Z/d_1 + ... + Z/d_t + Z^free_rank.
/// Normal coordinates list the torsion summands first, then the free ones.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  const IntMatrix& presentation() const { return presentation_; }
  std::size_t ambient_rank() const { return presentation_.rows(); }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  /// (t + f) x ambient: ambient coordinates -> normal coordinates (torsion
  /// entries not yet reduced).
  const IntMatrix& to_normal() const { return to_normal_; }
  /// ambient x (t + f): normal coordinates -> a lift in ambient coordinates.
  const IntMatrix& from_normal() const { return from_normal_; }

  /// The free part: f x ambient projection and ambient x f lift, with
  /// free_projection() * free_lift() == identity.
  IntMatrix free_projection() const;
  IntMatrix free_lift() const;

  /// Normal coordinates of the class of x, torsion entries reduced into [0, d).
  IntVector normalize(const IntVector& x) const;
  /// Coordinates of the class of x in the free quotient.
  IntVector free_coordinates(const IntVector& x) const;

  /// Human readable, e.g. "Z^2 + Z/3".
  std::string describe() const;

  friend FGAbelianGroup cokernel(const IntMatrix& m);

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
  IntMatrix presentation_;
  IntMatrix to_normal_;
  IntMatrix from_normal_;
};

/// Cokernel of m viewed as a map Z^cols -> Z^rows.
FGAbelianGroup cokernel(const IntMatrix& m);

}  // namespace torelli
