#include "torelli/certificate.hpp"

#include <utility>

#include "torelli/errors.hpp"
#include "torelli/smith.hpp"

namespace torelli {

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::InvariantNonzero: return "invariant";
    case Hypothesis::BoundaryRank: return "b1";
    case Hypothesis::Nontorsion: return "nontorsion";
    case Hypothesis::CapCohomology: return "cap";
    case Hypothesis::Injectivity: return "injectivity";
  }
  return "unknown";
}

std::string to_string(DehnTwistVerdict v) {
  switch (v) {
    case DehnTwistVerdict::Realizable: return "Realizable";
    case DehnTwistVerdict::NotRealizable: return "NotRealizable";
    case DehnTwistVerdict::OutOfScope: return "OutOfScope";
  }
  return "unknown";
}

namespace {

Certificate failed(Certificate c, Hypothesis which, std::string detail) {
  c.failure = HypothesisFailure{which, std::move(detail)};
  c.infinitely_many_nonsmoothable = false;
  c.all_nontrivial_nonsmoothable = false;
  return c;
}

}  // namespace

Certificate certify(const CertificateInput& raw) {
  CertificateInput in = raw;
  Certificate c;

  if (in.front) {
    const LinkTrace derived = stein_trace(*in.front);
    if (in.trace.components() == 0) {
      in.trace = LinkTrace(derived.linking(), raw.trace.labels().size() == derived.components()
                                                  ? raw.trace.labels()
                                                  : std::vector<std::string>{});
    } else if (in.trace.linking() != derived.linking()) {
      throw InvalidInput("certify: trace does not match the Stein trace of the front");
    }
    const IntVector c1 = chern_class(*in.front);
    if (!in.c1_restriction.empty() && in.c1_restriction != c1)
      throw InvalidInput("certify: c1_restriction differs from the rotation numbers of the front (" +
                         to_string(c1) + ")");
    in.c1_restriction = c1;
  }

  const std::size_t n = in.trace.components();
  if (in.c1_restriction.size() != n)
    throw DimensionMismatch("certify: c1_restriction must have one entry per handle");
  if (in.cap.basic_class_restriction.size() != 0 && in.cap.basic_class_restriction.size() != n)
    throw DimensionMismatch("certify: cap basic_class_restriction has wrong length");
  const IntMatrix embed = in.embed ? *in.embed : IntMatrix::identity(n);
  if (embed.cols() != n) throw DimensionMismatch("certify: embed must have one column per handle");

  const BoundaryData bd = boundary_homology(in.trace);
  const std::size_t r = bd.b1();
  c.b1_boundary = r;
  if (in.front) {
    c.assumptions.push_back(
        "invariant_nonzero: c1 of a Stein filling is a basic class of any symplectic cap with b+ > 1");
    c.assumptions.push_back("cap_h1_vanishes: the symplectic cap can be chosen simply connected");
  } else {
    c.assumptions.push_back("invariant_nonzero: asserted by caller");
    c.assumptions.push_back("cap_h1_vanishes: asserted by caller");
  }

  // (a)
  if (!in.invariant_nonzero)
    return failed(std::move(c), Hypothesis::InvariantNonzero, "no spin^c structure with nonzero invariant supplied");
  if (r < 2)
    return failed(std::move(c), Hypothesis::BoundaryRank,
                  "b1 of the boundary is " + std::to_string(r) + ", the Torelli group is trivial");

  // (b)
  const auto nt = nontorsion_test(in.c1_restriction, in.trace);
  if (!nt) return failed(std::move(c), Hypothesis::Nontorsion, "restriction of c1 to the boundary is torsion");
  c.d = nt->d;
  c.v1 = nt->v1;

  // (e)
  if (!in.cap.cap_h1_vanishes)
    return failed(std::move(c), Hypothesis::CapCohomology, "H^1 of the cap is not known to vanish");
  if (rank(embed * bd.kernel) != r)
    return failed(std::move(c), Hypothesis::Injectivity, "H_2 of the boundary does not inject into H_2(X)");

  // (c)
  const IntMatrix basis = complete_to_basis(c.v1);
  const IntMatrix basis_inv = unimodular_inverse(basis);
  c.v2 = basis.col(1);
  const IntMatrix e12 = SkewForm::elementary(r, 0, 1).matrix();
  const SkewForm eta(basis_inv.transpose() * e12 * basis_inv);
  c.eta = eta;

  // (d)
  c.variation = variation_from_skew(eta, in.trace);
  c.torelli_rank = torelli_rank(in.trace);

  // (f)
  const IntVector v2_dual = basis_inv.transpose().col(1);
  const IntVector chain_unit = embed * (bd.kernel * (unimodular_inverse(bd.duality).transpose() * v2_dual));
  IntVector unit;
  for (std::int64_t k = -kWitnessRange; k <= kWitnessRange; ++k) {
    const Variation vk = variation_from_skew(eta * Integer(static_cast<long>(k)), in.trace);
    const IntVector disp = gluing_displacement(vk, in.c1_restriction, embed, in.cap);
    c.displacement_witness.emplace(k, disp);
    c.displacement_chain.emplace(k, Integer(static_cast<long>(k)) * c.d * chain_unit);
  }
  unit = c.displacement_witness.at(1);
  for (const auto& [k, disp] : c.displacement_witness) {
    if (disp != Integer(static_cast<long>(k)) * unit)
      throw Error("certify: displacement is not linear in k (internal inconsistency)");
    if (k != 0 && is_zero(disp)) throw Error("certify: zero displacement for k != 0 (internal inconsistency)");
    if (disp != c.displacement_chain.at(k))
      throw Error("certify: displacement disagrees with the boundary chain (internal inconsistency)");
  }

  // (g)
  c.infinitely_many_nonsmoothable = true;
  c.all_nontrivial_nonsmoothable = (r == 2);
  return c;
}

Certificate stein_certify(const FrontDiagram& front) {
  CertificateInput in;
  in.front = front;
  in.invariant_nonzero = true;
  in.cap.cap_h1_vanishes = true;
  return certify(in);
}

DehnTwistVerdict dehn_twist_realizability(const DehnTwistProfile& p) {
  if (!p.is_prime) return DehnTwistVerdict::OutOfScope;
  if (p.b1 < 0) throw InconsistentProfile("b1 must be non-negative");
  if (p.is_T3 && p.b1 != 3) throw InconsistentProfile("T^3 has b1 = 3");
  if (p.b1 < 2 || p.is_T3 || (p.b1 == 2 && p.seifert_over_T2)) return DehnTwistVerdict::Realizable;
  return DehnTwistVerdict::NotRealizable;
}

}  // namespace torelli
