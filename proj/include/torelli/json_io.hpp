#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "torelli/certificate.hpp"
#include "torelli/group_ring.hpp"
#include "torelli/int_matrix.hpp"
#include "torelli/legendrian.hpp"
#include "torelli/presentation.hpp"
#include "torelli/smith.hpp"
#include "torelli/variation.hpp"

namespace torelli::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "torelli-kit/1";

/// Parses text as JSON; throws InvalidInput on a syntax error.
Json parse(const std::string& text);
/// Two-space indented, trailing newline.
std::string dump(const Json& j);

/// Adds the schema tag as the first key.
Json document(const std::string& kind, Json body);
/// Throws InvalidInput if j carries a schema tag other than kSchema.
void check_schema(const Json& j);

// Integers fitting in 64 bits are written as numbers, larger ones as
// decimal strings. Readers accept both.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"components", "framings", "linking", "labels"}.
Json trace_to_json(const LinkTrace& t);
/// Throws InvalidInput when components or framings disagree with linking.
LinkTrace trace_from_json(const Json& j);

Json cap_to_json(const CapData& c);
CapData cap_from_json(const Json& j);

/// {"trace", "matrix"}.
Json variation_to_json(const Variation& v);
Variation variation_from_json(const Json& j);

/// {"matrix"}.
Json skew_to_json(const SkewForm& s);
SkewForm skew_from_json(const Json& j);

/// {"generators", "terms": [{"exp", "coeff"}]}, terms in lexicographic order.
Json group_ring_to_json(const GroupRingElement& x);
GroupRingElement group_ring_from_json(const Json& j);

/// {"orientations": [1, -1], "events": ["L0", ...]}.
Json front_to_json(const FrontDiagram& f);
FrontDiagram front_from_json(const Json& j);

Json smith_to_json(const SmithDecomposition& s);
Json group_to_json(const FGAbelianGroup& g);
Json homology_to_json(const LinkTrace& t);
Json invariants_to_json(const ClassicalInvariants& c);

/// {"trace", "c1_restriction", "invariant_nonzero", "cap", "source", "front", "embed"}.
CertificateInput certificate_input_from_json(const Json& j);
Json certificate_to_json(const Certificate& c);

Json distinction_to_json(const BoundaryDistinction& b);

DehnTwistProfile profile_from_json(const Json& j);
Json profile_to_json(const DehnTwistProfile& p);

}  // namespace torelli::io
