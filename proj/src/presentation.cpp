#include "torelli/presentation.hpp"

#include <string>
#include <utility>

#include "torelli/errors.hpp"

namespace torelli {

LinkTrace::LinkTrace(IntMatrix linking, std::vector<std::string> labels)
    : linking_(std::move(linking)), labels_(std::move(labels)) {
  if (!linking_.is_square()) throw InvalidInput("linking matrix must be square");
  if (!linking_.is_symmetric()) throw InvalidInput("linking matrix must be symmetric");
  if (!labels_.empty() && labels_.size() != linking_.rows())
    throw InvalidInput("expected " + std::to_string(linking_.rows()) + " labels, got " +
                       std::to_string(labels_.size()));
}

IntVector LinkTrace::framings() const {
  IntVector f(components());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = linking_(i, i);
  return f;
}

IntMatrix intersection_form(const LinkTrace& trace) { return trace.linking(); }

BoundaryData boundary_homology(const LinkTrace& trace) {
  const IntMatrix& form = trace.linking();
  const auto snf = smith_normal_form(form);
  const std::size_t n = form.rows();

  BoundaryData out;
  out.h1 = cokernel(form);

  std::vector<std::size_t> kernel_idx;
  for (std::size_t j = snf.rank; j < n; ++j) kernel_idx.push_back(j);
  out.kernel = snf.V.select_cols(kernel_idx);
  out.kernel_left_inverse = snf.V_inv.select_rows(kernel_idx);

  out.duality = out.kernel.transpose() * out.h1.free_lift();
  if (!is_unimodular(out.duality))
    throw NonUnimodularDuality("boundary duality pairing has determinant " +
                               determinant(out.duality).get_str());
  return out;
}

BettiReport betti_sanity(const LinkTrace& trace) {
  BettiReport r;
  r.b2 = trace.components();
  r.form_rank = rank(trace.linking());
  r.b1_boundary = r.b2 - r.form_rank;
  if (r.b2 < r.b1_boundary) r.violations.push_back("b2(X) < b1(dX)");
  if (r.b1_boundary == r.b2 && !trace.linking().is_zero())
    r.violations.push_back("b1(dX) == b2(X) but the intersection form is nonzero");
  const std::size_t kernel_rank = kernel_basis(trace.linking()).size();
  if (kernel_rank != r.b1_boundary)
    r.violations.push_back("rank H_2(dX) != b1(dX)");
  return r;
}

LinkTrace stabilize(const LinkTrace& trace, std::size_t m) {
  IntMatrix form = trace.linking();
  const IntMatrix hyperbolic{{0, 1}, {1, 0}};
  std::vector<std::string> labels = trace.labels();
  for (std::size_t k = 0; k < m; ++k) {
    form = direct_sum(form, hyperbolic);
    if (!labels.empty()) {
      labels.push_back("s" + std::to_string(k + 1) + "a");
      labels.push_back("s" + std::to_string(k + 1) + "b");
    }
  }
  return LinkTrace(std::move(form), std::move(labels));
}

}  // namespace torelli
