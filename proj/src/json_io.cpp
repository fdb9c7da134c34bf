#include "torelli/json_io.hpp"

#include <algorithm>
#include <utility>

#include "torelli/errors.hpp"

namespace torelli::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput(std::string("expected a JSON object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key) && !j.at(key).is_null(); }

bool boolean(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) throw InvalidInput(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

bool boolean_or(const Json& j, const char* key, bool fallback) { return has(j, key) ? boolean(j, key) : fallback; }

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw InvalidInput(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::int64_t small_integer(const Json& j, const char* what) {
  const Integer x = integer_from_json(j);
  if (!x.fits_slong_p()) throw InvalidInput(std::string(what) + " out of range");
  return x.get_si();
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

bool is_scalar(const Json& j) {
  return j.is_number() || j.is_boolean() || j.is_null() || (j.is_string() && j.get_ref<const std::string&>().size() <= 12);
}

bool is_scalar_array(const Json& j) { return j.is_array() && std::all_of(j.begin(), j.end(), is_scalar); }

/// Scalars, integer vectors and matrices, and records of at most three such
/// fields are written on one line.
bool is_flat(const Json& j) {
  if (j.is_primitive()) return true;
  if (j.is_array())
    return std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x) || is_scalar_array(x); });
  return j.size() <= 3 &&
         std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x) || is_scalar_array(x); });
}

void write(const Json& j, int indent, std::string& out) {
  if (is_flat(j)) {
    out += j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool object = j.is_object();
  if (j.empty()) {
    out += object ? "{}" : "[]";
    return;
  }
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    write(it.value(), indent + 2, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (object ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, 0, out);
  return out + "\n";
}

Json document(const std::string& kind, Json body) {
  Json out;
  out["schema"] = kSchema;
  out["kind"] = kind;
  for (auto it = body.begin(); it != body.end(); ++it)
    if (it.key() != "schema" && it.key() != "kind") out[it.key()] = it.value();
  return out;
}

void check_schema(const Json& j) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  if (j.contains("schema")) {
    const Json& s = j.at("schema");
    if (!s.is_string() || s.get<std::string>() != kSchema)
      throw InvalidInput(std::string("unsupported schema, expected '") + kSchema + "'");
  }
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const bool ok = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                              [](char c) { return c >= '0' && c <= '9'; }) &&
                    s != "-";
    if (!ok) throw InvalidInput("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an integer array, got " + j.dump());
  IntVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a matrix (array of rows)");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw InvalidInput("matrix rows have different lengths");
  if (rows.empty()) return IntMatrix(0, 0);
  return IntMatrix::from_rows(rows);
}

Json trace_to_json(const LinkTrace& t) {
  Json out;
  out["components"] = t.components();
  out["framings"] = vector_to_json(t.framings());
  out["linking"] = matrix_to_json(t.linking());
  out["labels"] = t.labels();
  return out;
}

LinkTrace trace_from_json(const Json& j) {
  check_schema(j);
  IntMatrix linking = matrix_from_json(field(j, "linking"));
  if (has(j, "components")) {
    const std::int64_t n = small_integer(field(j, "components"), "components");
    if (n < 0 || static_cast<std::size_t>(n) != linking.rows())
      throw InvalidInput("'components' disagrees with the size of 'linking'");
  }
  if (has(j, "framings")) {
    const IntVector f = vector_from_json(field(j, "framings"));
    if (f.size() != linking.rows()) throw InvalidInput("'framings' has the wrong length");
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] != linking(i, i)) throw InvalidInput("'framings' disagrees with the diagonal of 'linking'");
  }
  std::vector<std::string> labels;
  if (has(j, "labels")) labels = strings(field(j, "labels"), "labels");
  return LinkTrace(std::move(linking), std::move(labels));
}

Json cap_to_json(const CapData& c) {
  Json out;
  out["cap_h1_vanishes"] = c.cap_h1_vanishes;
  out["basic_class_restriction"] = vector_to_json(c.basic_class_restriction);
  return out;
}

CapData cap_from_json(const Json& j) {
  check_schema(j);
  CapData c;
  c.cap_h1_vanishes = boolean(j, "cap_h1_vanishes");
  if (has(j, "basic_class_restriction"))
    c.basic_class_restriction = vector_from_json(field(j, "basic_class_restriction"));
  return c;
}

Json variation_to_json(const Variation& v) {
  Json out;
  out["trace"] = trace_to_json(v.trace());
  out["matrix"] = matrix_to_json(v.matrix());
  return out;
}

Variation variation_from_json(const Json& j) {
  check_schema(j);
  return Variation(trace_from_json(field(j, "trace")), matrix_from_json(field(j, "matrix")));
}

Json skew_to_json(const SkewForm& s) {
  Json out;
  out["matrix"] = matrix_to_json(s.matrix());
  return out;
}

SkewForm skew_from_json(const Json& j) {
  check_schema(j);
  return SkewForm(matrix_from_json(field(j, "matrix")));
}

Json group_ring_to_json(const GroupRingElement& x) {
  Json out;
  out["generators"] = x.generators();
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms()) {
    Json t;
    t["exp"] = e;
    t["coeff"] = integer_to_json(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

GroupRingElement group_ring_from_json(const Json& j) {
  check_schema(j);
  GroupRingElement x(strings(field(j, "generators"), "generators"));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InvalidInput("'terms' must be an array");
  for (const auto& t : terms) {
    Exponent e;
    const Json& exp = field(t, "exp");
    if (!exp.is_array()) throw InvalidInput("'exp' must be an integer array");
    for (const auto& a : exp) e.push_back(small_integer(a, "exponent"));
    if (e.size() != x.generators().size()) throw InvalidInput("'exp' length differs from the generator count");
    x.add_term(e, integer_from_json(field(t, "coeff")));
  }
  return x;
}

Json front_to_json(const FrontDiagram& f) {
  Json out;
  out["orientations"] = f.orientations();
  Json events = Json::array();
  for (const auto& e : f.events()) events.push_back(to_string(e));
  out["events"] = std::move(events);
  return out;
}

FrontDiagram front_from_json(const Json& j) {
  check_schema(j);
  std::vector<FrontEvent> events;
  for (const auto& s : strings(field(j, "events"), "events")) events.push_back(parse_event(s));
  std::vector<int> orientations;
  if (has(j, "orientations")) {
    const Json& o = field(j, "orientations");
    if (!o.is_array()) throw InvalidInput("'orientations' must be an array of +1/-1");
    for (const auto& s : o) orientations.push_back(static_cast<int>(small_integer(s, "orientation")));
  }
  return FrontDiagram(std::move(events), std::move(orientations));
}

Json smith_to_json(const SmithDecomposition& s) {
  Json out;
  out["rank"] = s.rank;
  out["diagonal"] = vector_to_json(s.diagonal());
  out["S"] = matrix_to_json(s.S);
  out["U"] = matrix_to_json(s.U);
  out["V"] = matrix_to_json(s.V);
  out["U_inv"] = matrix_to_json(s.U_inv);
  out["V_inv"] = matrix_to_json(s.V_inv);
  return out;
}

Json group_to_json(const FGAbelianGroup& g) {
  Json out;
  out["free_rank"] = g.free_rank();
  out["torsion"] = vector_to_json(g.torsion());
  out["description"] = g.describe();
  return out;
}

Json homology_to_json(const LinkTrace& t) {
  const BoundaryData bd = boundary_homology(t);
  const BettiReport betti = betti_sanity(t);
  Json out;
  out["trace"] = trace_to_json(t);
  out["h2"] = t.components();
  out["intersection_form"] = matrix_to_json(intersection_form(t));
  out["h1_boundary"] = group_to_json(bd.h1);
  out["b1_boundary"] = bd.b1();
  out["h2_boundary_basis"] = matrix_to_json(bd.kernel);
  out["duality"] = matrix_to_json(bd.duality);
  out["betti_consistent"] = betti.consistent();
  out["betti_violations"] = betti.violations;
  return out;
}

Json invariants_to_json(const ClassicalInvariants& c) {
  Json out;
  out["tb"] = integer_to_json(c.tb);
  out["rot"] = integer_to_json(c.rot);
  out["writhe"] = integer_to_json(c.writhe);
  out["crossings"] = c.crossings;
  out["right_cusps"] = c.right_cusps;
  out["up_cusps"] = c.up_cusps;
  out["down_cusps"] = c.down_cusps;
  return out;
}

CertificateInput certificate_input_from_json(const Json& j) {
  check_schema(j);
  CertificateInput in;
  std::string source = "explicit";
  if (has(j, "source")) {
    const Json& s = field(j, "source");
    if (!s.is_string()) throw InvalidInput("'source' must be \"explicit\" or \"stein\"");
    source = s.get<std::string>();
  }
  if (source == "stein") {
    in.front = front_from_json(field(j, "front"));
    if (has(j, "trace")) in.trace = trace_from_json(field(j, "trace"));
    in.invariant_nonzero = boolean_or(j, "invariant_nonzero", true);
    if (has(j, "cap")) in.cap = cap_from_json(field(j, "cap"));
    else in.cap.cap_h1_vanishes = true;
  } else if (source == "explicit") {
    in.trace = trace_from_json(field(j, "trace"));
    in.invariant_nonzero = boolean(j, "invariant_nonzero");
    in.cap = cap_from_json(field(j, "cap"));
  } else {
    throw InvalidInput("'source' must be \"explicit\" or \"stein\"");
  }
  if (has(j, "c1_restriction")) in.c1_restriction = vector_from_json(field(j, "c1_restriction"));
  else if (!in.front) in.c1_restriction = in.cap.basic_class_restriction;
  if (has(j, "embed")) in.embed = matrix_from_json(field(j, "embed"));
  return in;
}

Json certificate_to_json(const Certificate& c) {
  Json out;
  out["status"] = c.ok() ? "certified" : "hypothesis_failed";
  out["b1_boundary"] = c.b1_boundary;
  if (c.failure) {
    out["failure_reason"] = to_string(c.failure->which);
    out["failure_detail"] = c.failure->detail;
    if (c.d != 0) {
      out["d"] = integer_to_json(c.d);
      out["v1"] = vector_to_json(c.v1);
    }
  } else {
    out["d"] = integer_to_json(c.d);
    out["v1"] = vector_to_json(c.v1);
    out["v2"] = vector_to_json(c.v2);
    out["torelli_rank"] = c.torelli_rank;
    out["infinitely_many_nonsmoothable"] = c.infinitely_many_nonsmoothable;
    out["all_nontrivial_nonsmoothable"] = c.all_nontrivial_nonsmoothable;
    if (c.eta) out["eta"] = skew_to_json(*c.eta);
    if (c.variation) out["variation"] = matrix_to_json(c.variation->matrix());
    Json witness = Json::array();
    for (const auto& [k, v] : c.displacement_witness) {
      Json w;
      w["k"] = k;
      w["class"] = vector_to_json(v);
      witness.push_back(std::move(w));
    }
    out["displacement_witness"] = std::move(witness);
    bool chain = !c.displacement_chain.empty();
    for (const auto& [k, v] : c.displacement_witness) {
      auto it = c.displacement_chain.find(k);
      chain = chain && it != c.displacement_chain.end() && it->second == v;
    }
    out["chain_agrees"] = chain;
  }
  out["assumptions"] = c.assumptions;
  return out;
}

Json distinction_to_json(const BoundaryDistinction& b) {
  Json out;
  out["r"] = b.r;
  out["m"] = b.m;
  out["n_r"] = integer_to_json(b.n_r);
  out["n_m"] = integer_to_json(b.n_m);
  out["upper"] = integer_to_json(b.upper);
  out["lower"] = integer_to_json(b.lower);
  out["distinct"] = b.distinct;
  out["summary"] = b.summary();
  return out;
}

DehnTwistProfile profile_from_json(const Json& j) {
  check_schema(j);
  DehnTwistProfile p;
  p.b1 = small_integer(field(j, "b1"), "b1");
  p.is_prime = boolean_or(j, "is_prime", true);
  p.is_T3 = boolean_or(j, "is_T3", false);
  p.seifert_over_T2 = boolean_or(j, "seifert_over_T2", false);
  return p;
}

Json profile_to_json(const DehnTwistProfile& p) {
  Json out;
  out["b1"] = p.b1;
  out["is_prime"] = p.is_prime;
  out["is_T3"] = p.is_T3;
  out["seifert_over_T2"] = p.seifert_over_T2;
  return out;
}

}  // namespace torelli::io
