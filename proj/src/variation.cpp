#include "torelli/variation.hpp"

#include <string>
#include <utility>
#include <vector>

#include "torelli/errors.hpp"
#include "torelli/smith.hpp"

namespace torelli {

namespace {

void require_poincare(const Variation& v, const char* where) {
  if (!is_poincare(v)) throw NotPoincare(std::string(where) + ": variation fails D + D^T = D Lambda D^T");
}

}  // namespace

Variation::Variation(LinkTrace trace, IntMatrix matrix) : trace_(std::move(trace)), matrix_(std::move(matrix)) {
  const std::size_t n = trace_.components();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw DimensionMismatch("variation matrix must be " + std::to_string(n) + "x" + std::to_string(n));
}

Variation Variation::identity(const LinkTrace& trace) {
  return Variation(trace, IntMatrix::zeros(trace.components(), trace.components()));
}

SkewForm::SkewForm(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_skew_symmetric()) throw InvalidInput("skew form matrix must be skew-symmetric");
}

SkewForm SkewForm::zero(std::size_t rank) { return SkewForm(IntMatrix::zeros(rank, rank)); }

SkewForm SkewForm::wedge(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("wedge: functionals of different length");
  IntMatrix n(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) n(i, j) = a[i] * b[j] - b[i] * a[j];
  return SkewForm(std::move(n));
}

SkewForm SkewForm::elementary(std::size_t rank, std::size_t i, std::size_t j) {
  return wedge(unit_vector(rank, i), unit_vector(rank, j));
}

SkewForm SkewForm::operator+(const SkewForm& other) const {
  if (rank() != other.rank()) throw DimensionMismatch("skew form sum: ranks differ");
  return SkewForm(matrix_ + other.matrix_);
}

SkewForm SkewForm::operator*(const Integer& k) const { return SkewForm(k * matrix_); }

bool is_poincare(const Variation& v) {
  const IntMatrix& d = v.matrix();
  const IntMatrix& form = v.trace().linking();
  if (d.rows() != form.rows() || d.cols() != form.cols())
    throw DimensionMismatch("variation and trace dimensions differ");
  const IntMatrix dt = d.transpose();
  return d + dt == d * form * dt;
}

Variation compose(const Variation& a, const Variation& b) {
  if (a.trace().linking() != b.trace().linking())
    throw DimensionMismatch("compose: variations live on different traces");
  require_poincare(a, "compose");
  require_poincare(b, "compose");
  const std::size_t n = a.trace().components();
  const IntMatrix& d1 = a.matrix();
  const IntMatrix m = d1 + (IntMatrix::identity(n) - d1 * a.trace().linking()) * b.matrix();
  return Variation(a.trace(), m);
}

Variation inverse(const Variation& v) {
  require_poincare(v, "inverse");
  const std::size_t n = v.trace().components();
  const IntMatrix& d = v.matrix();
  // (I - D Lambda)^-1 = I - D^T Lambda by the Poincare condition.
  return Variation(v.trace(), -((IntMatrix::identity(n) - d.transpose() * v.trace().linking()) * d));
}

IntMatrix induced_automorphism(const Variation& v) {
  require_poincare(v, "induced_automorphism");
  const std::size_t n = v.trace().components();
  return IntMatrix::identity(n) - v.matrix() * v.trace().linking();
}

bool is_torelli(const Variation& v) {
  require_poincare(v, "is_torelli");
  return (v.matrix() * v.trace().linking()).is_zero();
}

Variation variation_from_skew(const SkewForm& eta, const LinkTrace& trace) {
  const BoundaryData bd = boundary_homology(trace);
  if (eta.rank() != bd.b1())
    throw DimensionMismatch("skew form has rank " + std::to_string(eta.rank()) + " but b1(dX) = " +
                            std::to_string(bd.b1()));
  // f-coordinates --d--> free H_1 --eta^ad--> H_1^* --(duality)^{-1}--> H_2(dX) --incl--> H_2(X).
  // eta^ad(x) = eta(x, -) has matrix N^T; the duality map H_2(dX) -> H_1^* has
  // matrix duality^T, so its inverse is (duality^{-1})^T.
  const IntMatrix dual_inv_t = unimodular_inverse(bd.duality).transpose();
  const IntMatrix d = bd.kernel * dual_inv_t * eta.matrix().transpose() * bd.h1.free_projection();
  return Variation(trace, d);
}

SkewForm skew_from_variation(const Variation& v) {
  if (!is_torelli(v)) throw NotTorelli("skew_from_variation: D Lambda != 0");
  const BoundaryData bd = boundary_homology(v.trace());
  const IntMatrix image = v.matrix() * bd.h1.free_lift();
  const IntMatrix lifted = bd.kernel_left_inverse * image;
  if (bd.kernel * lifted != image)
    throw NotTorelli("skew_from_variation: image of the variation does not lie in H_2(dX)");
  const IntMatrix adjoint = bd.duality.transpose() * lifted;
  const IntMatrix n = adjoint.transpose();
  if (!n.is_skew_symmetric())
    throw NotPoincare("skew_from_variation: associated pairing is not alternating");
  return SkewForm(n);
}

Variation stabilize(const Variation& v, std::size_t m) {
  require_poincare(v, "stabilize");
  LinkTrace bigger = stabilize(v.trace(), m);
  const std::size_t extra = bigger.components() - v.trace().components();
  return Variation(std::move(bigger), direct_sum(v.matrix(), IntMatrix::zeros(extra, extra)));
}

std::size_t torelli_rank(const LinkTrace& trace) {
  const std::size_t r = boundary_homology(trace).b1();
  const std::size_t n = trace.components();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const IntMatrix d = variation_from_skew(SkewForm::elementary(r, i, j), trace).matrix();
      IntVector flat;
      flat.reserve(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) flat.push_back(d(a, b));
      rows.push_back(std::move(flat));
    }
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(rows));
}

IntVector gluing_displacement(const Variation& v, const IntVector& x_rel, const IntMatrix& embed,
                              const CapData& cap) {
  if (!cap.cap_h1_vanishes)
    throw InjectivityUnverified("gluing_displacement: cap data does not certify H^1(cap) = 0");
  const std::size_t n = v.trace().components();
  if (x_rel.size() != n) throw DimensionMismatch("gluing_displacement: x_rel has wrong length");
  if (embed.cols() != n) throw DimensionMismatch("gluing_displacement: embed has wrong column count");
  if (!is_torelli(v)) throw NotTorelli("gluing_displacement: variation is not Torelli");
  const BoundaryData bd = boundary_homology(v.trace());
  if (rank(embed * bd.kernel) != bd.b1())
    throw InjectivityUnverified("gluing_displacement: H_2(dW) -> H_2(X) is not injective");
  return embed * (v.matrix() * x_rel);
}

IntMatrix boundary_transport(const LinkTrace& from, const LinkTrace& to, const IntMatrix& inclusion) {
  if (inclusion.rows() != to.components() || inclusion.cols() != from.components())
    throw DimensionMismatch("boundary_transport: inclusion has wrong shape");
  const BoundaryData src = boundary_homology(from);
  const BoundaryData dst = boundary_homology(to);
  return dst.h1.free_projection() * inclusion * src.h1.free_lift();
}

SkewForm pullback(const SkewForm& eta, const IntMatrix& transport) {
  return SkewForm(transport.transpose() * eta.matrix() * transport);
}

}  // namespace torelli
