#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torelli/int_matrix.hpp"
#include "torelli/legendrian.hpp"
#include "torelli/presentation.hpp"
#include "torelli/variation.hpp"

namespace torelli {

/// Input to the non-smoothability certificate for a compact W inside a
/// closed X with basic class xi.
struct CertificateInput {
  LinkTrace trace;
  /// xi restricted to W, in handle-cochain coordinates. Recomputed from the
  /// front for a Stein source; may be left empty in that case.
  IntVector c1_restriction;
  /// xi comes from a spin^c structure with nonzero invariant (asserted).
  bool invariant_nonzero = false;
  CapData cap;
  /// Stein source when set: trace and c1 are derived from the front.
  std::optional<FrontDiagram> front;
  /// Matrix of H_2(W) -> H_2(X). Identity (i.e. W itself) when absent.
  std::optional<IntMatrix> embed;
};

enum class Hypothesis { InvariantNonzero, BoundaryRank, Nontorsion, CapCohomology, Injectivity };

/// "invariant", "b1", "nontorsion", "cap", "injectivity".
std::string to_string(Hypothesis h);

struct HypothesisFailure {
  Hypothesis which;
  std::string detail;
};

struct Certificate {
  std::size_t b1_boundary = 0;
  Integer d;
  IntVector v1;
  IntVector v2;
  std::size_t torelli_rank = 0;
  bool infinitely_many_nonsmoothable = false;
  bool all_nontrivial_nonsmoothable = false;
  /// k -> embed * Delta_{k eta}(PD xi) for k = -3..3.
  std::map<std::int64_t, IntVector> displacement_witness;
  /// k d embed K (duality^{-T}) v2^*: the expected witness, computed without
  /// building any variation.
  std::map<std::int64_t, IntVector> displacement_chain;
  std::optional<SkewForm> eta;
  std::optional<Variation> variation;
  std::optional<HypothesisFailure> failure;
  /// Hypotheses taken on trust, with their justification.
  std::vector<std::string> assumptions;

  bool ok() const { return !failure.has_value(); }
};

inline constexpr std::int64_t kWitnessRange = 3;

/// Runs the certificate pipeline. Hypothesis failures are reported in the
/// certificate; malformed input throws (InvalidInput, DimensionMismatch,
/// MalformedFront).
Certificate certify(const CertificateInput& in);

/// The certificate for the Stein domain of a front, capped as a symplectic
/// filling with b^+ > 1.
Certificate stein_certify(const FrontDiagram& front);

struct DehnTwistProfile {
  std::int64_t b1 = 0;
  bool is_prime = true;
  bool is_T3 = false;
  bool seifert_over_T2 = false;
};

enum class DehnTwistVerdict { Realizable, NotRealizable, OutOfScope };

std::string to_string(DehnTwistVerdict v);

/// Whether every Torelli class of a filling of a prime boundary is realized
/// by generalised Dehn twists. Throws InconsistentProfile for b1 < 0 or a
/// T^3 profile with b1 != 3.
DehnTwistVerdict dehn_twist_realizability(const DehnTwistProfile& profile);

}  // namespace torelli
