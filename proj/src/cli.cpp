#include "torelli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <typeinfo>

#include "CLI11.hpp"
#include "torelli/certificate.hpp"
#include "torelli/errors.hpp"
#include "torelli/families.hpp"
#include "torelli/group_ring.hpp"
#include "torelli/json_io.hpp"
#include "torelli/smith.hpp"
#include "torelli/variation.hpp"

namespace torelli {

namespace {

using io::Json;

struct Options {
  std::string format = "json";
  std::string output;
  std::string input;
  std::string family;
  std::string n_range;
  bool check_distinct = false;
  unsigned r = 0;
  unsigned m = 0;
  unsigned max_r = 0;
  std::int64_t b1 = -1;
  bool not_prime = false;
  bool t3 = false;
  bool seifert = false;
  bool table = false;
};

/// One unit of output: a JSON body and its text rendering.
struct Item {
  std::string label;
  Json json;
  std::string text;
  bool failed = false;
};

struct Report {
  std::string kind;
  std::vector<Item> items;
  /// Extra top-level fields for JSON and trailing text lines.
  Json extra = Json::object();
  std::string trailer{};
  bool failed = false;
  bool headers = true;
};

std::string read_all(std::istream& s) { return std::string(std::istreambuf_iterator<char>(s), {}); }

std::string read_input(const Options& o, std::istream& in) {
  if (o.input.empty() || o.input == "-") return read_all(in);
  std::ifstream f(o.input);
  if (!f) throw InvalidInput("cannot open input file '" + o.input + "'");
  return read_all(f);
}

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  auto number = [&](const std::string& t) -> unsigned {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        t.size() > 6)
      throw InvalidInput("bad --n value '" + s + "', expected N or A..B");
    return static_cast<unsigned>(std::stoul(t));
  };
  const auto dots = s.find("..");
  unsigned lo = 0;
  unsigned hi = 0;
  if (dots == std::string::npos) {
    lo = hi = number(s);
  } else {
    lo = number(s.substr(0, dots));
    hi = number(s.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw InvalidInput("bad --n range '" + s + "', need 1 <= A <= B");
  return {lo, hi};
}

std::vector<unsigned> n_values(const Options& o) {
  if (o.n_range.empty()) throw InvalidInput("--family " + o.family + " needs --n");
  const auto [lo, hi] = parse_range(o.n_range);
  std::vector<unsigned> out;
  for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Json parse_object(const std::string& text) {
  Json j = io::parse(text);
  io::check_schema(j);
  return j;
}

FrontDiagram parse_front(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return io::front_from_json(io::parse(t));
  return front_from_text(text);
}

/// A link trace from --family or from the input, which may be a LinkTrace
/// object or a bare linking matrix.
std::vector<std::pair<std::string, LinkTrace>> traces(const Options& o, std::istream& in) {
  std::vector<std::pair<std::string, LinkTrace>> out;
  if (o.family == "xn") {
    for (unsigned n : n_values(o)) out.emplace_back("X_" + std::to_string(n), xn_family(n).trace);
  } else if (o.family == "z" || o.family == "zn") {
    out.emplace_back("Z", z_fixture().trace);
  } else if (!o.family.empty()) {
    throw InvalidInput("unknown family '" + o.family + "' (expected xn or z)");
  } else {
    const Json j = io::parse(read_input(o, in));
    if (j.is_array()) out.emplace_back("input", LinkTrace(io::matrix_from_json(j)));
    else out.emplace_back("input", io::trace_from_json(j));
  }
  return out;
}

std::string vec(const IntVector& v) { return to_string(v); }
std::string mat(const IntMatrix& m) { return to_string(m); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---- subcommands ----

Report cmd_snf(const Options& o, std::istream& in) {
  const Json j = io::parse(read_input(o, in));
  if (!j.is_array()) {
    io::check_schema(j);
    if (!j.contains("matrix")) throw InvalidInput("snf input needs a 'matrix' field or a bare matrix");
  }
  const IntMatrix m = io::matrix_from_json(j.is_array() ? j : j.at("matrix"));
  const SmithDecomposition s = smith_normal_form(m);
  std::ostringstream t;
  t << "rank: " << s.rank << "\n"
    << "diagonal: " << vec(s.diagonal()) << "\n"
    << "U: " << mat(s.U) << "\n"
    << "S: " << mat(s.S) << "\n"
    << "V: " << mat(s.V) << "\n";
  Report r{"snf", {}};
  r.items.push_back({"snf", io::smith_to_json(s), t.str()});
  return r;
}

Report cmd_homology(const Options& o, std::istream& in) {
  Report r{"homology", {}};
  for (const auto& [label, trace] : traces(o, in)) {
    const BoundaryData bd = boundary_homology(trace);
    const BettiReport betti = betti_sanity(trace);
    std::ostringstream t;
    t << "H_2: Z^" << trace.components() << "\n"
      << "intersection form: " << mat(intersection_form(trace)) << "\n"
      << "H_1(boundary): " << bd.h1.describe() << "\n"
      << "b1(boundary): " << bd.b1() << "\n"
      << "H_2(boundary) basis: " << mat(bd.kernel) << "\n"
      << "betti sanity: " << (betti.consistent() ? "ok" : "violated") << "\n";
    Json body = io::homology_to_json(trace);
    r.items.push_back({label, body, t.str()});
  }
  return r;
}

Report cmd_torelli(const Options& o, std::istream& in) {
  Report r{"torelli", {}};
  for (const auto& [label, trace] : traces(o, in)) {
    const std::size_t b1 = boundary_homology(trace).b1();
    const std::size_t rk = torelli_rank(trace);
    Json gens = Json::array();
    std::ostringstream t;
    t << "b1(boundary): " << b1 << "\n"
      << "torelli rank: " << rk << "\n";
    for (std::size_t i = 0; i < b1; ++i)
      for (std::size_t j = i + 1; j < b1; ++j) {
        const Variation v = variation_from_skew(SkewForm::elementary(b1, i, j), trace);
        Json g;
        g["form"] = Json::array({i + 1, j + 1});
        g["variation"] = io::matrix_to_json(v.matrix());
        gens.push_back(std::move(g));
        t << "b" << i + 1 << "*^b" << j + 1 << "*: " << mat(v.matrix()) << "\n";
      }
    Json body;
    body["trace"] = io::trace_to_json(trace);
    body["b1_boundary"] = b1;
    body["torelli_rank"] = rk;
    body["generators"] = std::move(gens);
    r.items.push_back({label, std::move(body), t.str()});
  }
  return r;
}

Report cmd_variation(const Options& o, std::istream& in) {
  const Json j = parse_object(read_input(o, in));
  if (!j.contains("trace")) throw InvalidInput("variation input needs 'trace' and 'matrix' or 'skew'");
  const LinkTrace trace = io::trace_from_json(j.at("trace"));
  Json body;
  std::ostringstream t;
  if (j.contains("skew")) {
    const SkewForm eta = io::skew_from_json(j.at("skew"));
    const Variation v = variation_from_skew(eta, trace);
    body["skew"] = io::skew_to_json(eta);
    body["variation"] = io::matrix_to_json(v.matrix());
    body["poincare"] = is_poincare(v);
    body["torelli"] = is_torelli(v);
    t << "variation: " << mat(v.matrix()) << "\n";
  } else if (j.contains("matrix")) {
    const Variation v(trace, io::matrix_from_json(j.at("matrix")));
    const bool poincare = is_poincare(v);
    body["variation"] = io::matrix_to_json(v.matrix());
    body["poincare"] = poincare;
    t << "poincare: " << yes_no(poincare) << "\n";
    if (poincare) {
      const bool tor = is_torelli(v);
      const IntMatrix a = induced_automorphism(v);
      body["torelli"] = tor;
      body["induced_automorphism"] = io::matrix_to_json(a);
      body["inverse"] = io::matrix_to_json(inverse(v).matrix());
      t << "torelli: " << yes_no(tor) << "\n"
        << "induced automorphism: " << mat(a) << "\n";
      if (tor) {
        const SkewForm eta = skew_from_variation(v);
        body["skew"] = io::skew_to_json(eta);
        t << "skew form: " << mat(eta.matrix()) << "\n";
      }
    }
  } else {
    throw InvalidInput("variation input needs 'matrix' or 'skew'");
  }
  Report r{"variation", {}};
  r.items.push_back({"input", std::move(body), t.str()});
  return r;
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream t;
  if (!c.ok()) {
    t << "certificate: hypothesis failed (" << to_string(c.failure->which) << ")\n"
      << "detail: " << c.failure->detail << "\n"
      << "b1(boundary): " << c.b1_boundary << "\n";
    return t.str();
  }
  t << "certificate: certified\n"
    << "b1(boundary): " << c.b1_boundary << "\n"
    << "d: " << c.d << "\n"
    << "v1: " << vec(c.v1) << "\n"
    << "v2: " << vec(c.v2) << "\n"
    << "torelli rank: " << c.torelli_rank << "\n"
    << "infinitely many non-smoothable: " << yes_no(c.infinitely_many_nonsmoothable) << "\n"
    << "all non-trivial non-smoothable: " << yes_no(c.all_nontrivial_nonsmoothable) << "\n";
  if (c.eta) t << "eta: " << mat(c.eta->matrix()) << "\n";
  if (c.variation) t << "variation: " << mat(c.variation->matrix()) << "\n";
  for (const auto& [k, v] : c.displacement_witness) t << "displacement k=" << k << ": " << vec(v) << "\n";
  for (const auto& a : c.assumptions) t << "assumes " << a << "\n";
  return t.str();
}

Item certificate_item(std::string label, const Certificate& c) {
  return {std::move(label), io::certificate_to_json(c), certificate_text(c), !c.ok()};
}

Report cmd_certify(const Options& o, std::istream& in) {
  Report r{"certificate", {}};
  if (o.family == "xn") {
    for (unsigned n : n_values(o)) {
      const XnPresentation x = xn_family(n);
      CertificateInput ci;
      ci.trace = x.trace;
      ci.front = x.front;
      ci.invariant_nonzero = true;
      ci.cap.cap_h1_vanishes = true;
      r.items.push_back(certificate_item("X_" + std::to_string(n), certify(ci)));
    }
  } else if (o.family == "z" || o.family == "zn") {
    const ZFixture z = z_fixture();
    CertificateInput ci;
    ci.trace = z.trace;
    ci.c1_restriction = z.cap.basic_class_restriction;
    ci.invariant_nonzero = true;
    ci.cap = z.cap;
    r.items.push_back(certificate_item("Z", certify(ci)));
  } else if (!o.family.empty()) {
    throw InvalidInput("unknown family '" + o.family + "' (expected xn or z)");
  } else {
    r.items.push_back(certificate_item("input", certify(io::certificate_input_from_json(parse_object(read_input(o, in))))));
  }
  return r;
}

Report cmd_stein_certify(const Options& o, std::istream& in) {
  Report r{"certificate", {}};
  if (o.family == "xn") {
    for (unsigned n : n_values(o))
      r.items.push_back(certificate_item("X_" + std::to_string(n), stein_certify(xn_front(n))));
  } else if (!o.family.empty()) {
    throw InvalidInput("stein-certify supports --family xn only");
  } else {
    r.items.push_back(certificate_item("input", stein_certify(parse_front(read_input(o, in)))));
  }
  return r;
}

Item legendrian_item(std::string label, const FrontDiagram& f) {
  Json comps = Json::array();
  std::ostringstream t;
  for (std::size_t c = 0; c < f.component_count(); ++c) {
    const ClassicalInvariants ci = classical_invariants(f, c);
    Json cj = io::invariants_to_json(ci);
    Json row;
    row["component"] = c + 1;
    for (auto it = cj.begin(); it != cj.end(); ++it) row[it.key()] = it.value();
    comps.push_back(std::move(row));
    t << "component " << c + 1 << ": tb " << ci.tb << ", rot " << ci.rot << ", writhe " << ci.writhe << ", "
      << ci.right_cusps << " right cusps\n";
  }
  const LinkTrace trace = stein_trace(f);
  const IntVector c1 = chern_class(f);
  t << "stein framing matrix: " << mat(trace.linking()) << "\n"
    << "c1: " << vec(c1) << "\n";
  Json body;
  body["front"] = io::front_to_json(f);
  body["components"] = std::move(comps);
  body["stein_trace"] = io::trace_to_json(trace);
  body["c1"] = io::vector_to_json(c1);
  return {std::move(label), std::move(body), t.str()};
}

Report cmd_legendrian(const Options& o, std::istream& in) {
  Report r{"legendrian", {}};
  if (o.family == "xn") {
    for (unsigned n : n_values(o)) r.items.push_back(legendrian_item("X_" + std::to_string(n), xn_front(n)));
  } else if (!o.family.empty()) {
    throw InvalidInput("legendrian supports --family xn only");
  } else {
    r.items.push_back(legendrian_item("input", parse_front(read_input(o, in))));
  }
  return r;
}

std::string distinctness_verdict(const DistinctnessReport& d, const std::vector<std::string>& labels) {
  if (d.all_distinct()) return "all distinct";
  std::string s = "equal:";
  for (const auto& [i, j] : d.equal_pairs) s += " (" + labels[i] + ", " + labels[j] + ")";
  return s;
}

Report cmd_sw(const Options& o, std::istream& in) {
  Report r{"sw", {}};
  std::vector<GroupRingElement> family;
  std::vector<std::string> labels;
  if (o.family == "zn" || o.family == "xn") {
    for (unsigned n : n_values(o)) {
      const GroupRingElement sw = knot_surgery_family_sw(n);
      Json body;
      body["n"] = n;
      body["sw"] = io::group_ring_to_json(sw);
      body["basic_classes"] = basic_classes(sw).size();
      body["e1e2_coefficient"] = io::integer_to_json(sw.coefficient({1, 1, 0}));
      std::ostringstream t;
      t << "SW = " << to_string(sw) << "\n"
        << "basic classes: " << basic_classes(sw).size() << "\n";
      r.items.push_back({"n=" + std::to_string(n), std::move(body), t.str()});
      family.push_back(sw);
      labels.push_back("n=" + std::to_string(n));
    }
  } else if (!o.family.empty()) {
    throw InvalidInput("sw supports --family zn only");
  } else {
    const Json j = parse_object(read_input(o, in));
    if (!j.contains("elements") || !j.at("elements").is_array())
      throw InvalidInput("sw input needs an 'elements' array");
    std::size_t i = 0;
    for (const auto& e : j.at("elements")) {
      const GroupRingElement sw = io::group_ring_from_json(e);
      Json body;
      body["sw"] = io::group_ring_to_json(sw);
      body["basic_classes"] = basic_classes(sw).size();
      r.items.push_back({"#" + std::to_string(i + 1), std::move(body),
                         "SW = " + to_string(sw) + "\nbasic classes: " + std::to_string(basic_classes(sw).size()) +
                             "\n"});
      family.push_back(sw);
      labels.push_back("#" + std::to_string(++i));
    }
  }
  if (o.check_distinct) {
    const DistinctnessReport d = pairwise_distinct(family);
    const std::string verdict = distinctness_verdict(d, labels);
    Json pairs = Json::array();
    for (const auto& [a, b] : d.equal_pairs) pairs.push_back(Json::array({labels[a], labels[b]}));
    r.extra["equal_pairs"] = std::move(pairs);
    r.extra["verdict"] = verdict;
    r.trailer = verdict + "\n";
    r.failed = !d.all_distinct();
  }
  return r;
}

Report cmd_distinguish(const Options& o) {
  Report r{"distinguish", {}};
  std::vector<std::pair<unsigned, unsigned>> pairs;
  if (o.max_r > 0) {
    for (unsigned a = 1; a <= o.max_r; ++a)
      for (unsigned b = a + 1; b <= o.max_r; ++b) pairs.emplace_back(a, b);
  } else {
    pairs.emplace_back(o.r, o.m);
  }
  r.headers = false;
  for (const auto& [a, b] : pairs) {
    const BoundaryDistinction d = distinguish_boundaries(a, b);
    r.items.push_back({"r=" + std::to_string(d.r) + ",m=" + std::to_string(d.m), io::distinction_to_json(d),
                       d.summary() + "\n", !d.distinct});
  }
  return r;
}

Item profile_item(const DehnTwistProfile& p) {
  const DehnTwistVerdict v = dehn_twist_realizability(p);
  Json body = io::profile_to_json(p);
  body["verdict"] = to_string(v);
  std::ostringstream t;
  t << "b1 " << p.b1 << (p.is_prime ? ", prime" : ", not prime") << (p.is_T3 ? ", T^3" : "")
    << (p.seifert_over_T2 ? ", Seifert over T^2" : "") << ": " << to_string(v) << "\n";
  return {"b1=" + std::to_string(p.b1), std::move(body), t.str()};
}

Report cmd_dehn_twist(const Options& o, std::istream& in) {
  Report r{"dehn-twist", {}};
  if (o.table) {
    r.headers = false;
    for (std::int64_t b1 = 0; b1 <= 4; ++b1)
      for (int t3 = 0; t3 <= 1; ++t3)
        for (int sf = 0; sf <= 1; ++sf) {
          if (t3 && b1 != 3) continue;
          r.items.push_back(profile_item({b1, true, t3 == 1, sf == 1}));
        }
  } else if (o.b1 >= 0 || o.t3 || o.seifert || o.not_prime) {
    if (o.b1 < 0) throw InvalidInput("dehn-twist needs --b1");
    r.items.push_back(profile_item({o.b1, !o.not_prime, o.t3, o.seifert}));
  } else {
    r.items.push_back(profile_item(io::profile_from_json(parse_object(read_input(o, in)))));
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream t;
  const bool headers = r.headers && r.items.size() > 1;
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    if (headers) t << (i ? "\n" : "") << "== " << r.items[i].label << "\n";
    t << r.items[i].text;
  }
  if (!r.trailer.empty()) t << (headers ? "\n" : "") << r.trailer;
  return t.str();
}

Json render_json(const Report& r) {
  Json body;
  if (r.items.size() == 1 && r.extra.empty()) {
    body = r.items.front().json;
  } else {
    Json items = Json::array();
    for (const auto& it : r.items) {
      Json entry;
      entry["label"] = it.label;
      for (auto kv = it.json.begin(); kv != it.json.end(); ++kv) entry[kv.key()] = kv.value();
      items.push_back(std::move(entry));
    }
    body["items"] = std::move(items);
    for (auto kv = r.extra.begin(); kv != r.extra.end(); ++kv) body[kv.key()] = kv.value();
  }
  return io::document(r.kind, std::move(body));
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--output,-o", o.output, "Write the report here instead of stdout");
  sub->add_option("--input,-i", o.input, "Read input from this file ('-' or absent: stdin)");
}

void add_family(CLI::App* sub, Options& o, const std::string& help) {
  sub->add_option("--family", o.family, help);
  sub->add_option("--n", o.n_range, "Family parameter: N or A..B");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Torelli-group and non-smoothability toolkit", "torelli-kit"};
  app.require_subcommand(1);
  Options o;

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  add_common(snf, o);
  auto* homology = app.add_subcommand("homology", "Homology of a link trace and its boundary");
  add_common(homology, o);
  add_family(homology, o, "xn or z");
  auto* variation = app.add_subcommand("variation", "Check a variation, or build one from a skew form");
  add_common(variation, o);
  auto* torelli = app.add_subcommand("torelli", "Torelli rank and generators of a link trace");
  add_common(torelli, o);
  add_family(torelli, o, "xn or z");
  auto* certify_cmd = app.add_subcommand("certify", "Non-smoothability certificate");
  add_common(certify_cmd, o);
  add_family(certify_cmd, o, "xn or z");
  auto* stein = app.add_subcommand("stein-certify", "Certificate for the Stein domain of a front");
  add_common(stein, o);
  add_family(stein, o, "xn");
  auto* legendrian = app.add_subcommand("legendrian", "Classical invariants of a Legendrian front");
  add_common(legendrian, o);
  add_family(legendrian, o, "xn");
  auto* sw = app.add_subcommand("sw", "Seiberg-Witten group-ring elements of the knot-surgery family");
  add_common(sw, o);
  add_family(sw, o, "zn");
  sw->add_flag("--check-distinct", o.check_distinct, "Report whether the elements are pairwise distinct");
  auto* distinguish = app.add_subcommand("distinguish", "Separate the boundaries of X_{n_r} and X_{n_m}");
  add_common(distinguish, o);
  auto* r_opt = distinguish->add_option("--r", o.r, "First index (>= 1)");
  auto* m_opt = distinguish->add_option("--m", o.m, "Second index (>= 1)");
  auto* max_opt = distinguish->add_option("--max", o.max_r, "Check every pair 1 <= r < m <= MAX");
  max_opt->excludes(r_opt)->excludes(m_opt);
  r_opt->needs(m_opt);
  m_opt->needs(r_opt);
  auto* dehn = app.add_subcommand("dehn-twist", "Whether Torelli classes are realized by generalised Dehn twists");
  add_common(dehn, o);
  dehn->add_option("--b1", o.b1, "First Betti number of the boundary");
  dehn->add_flag("--not-prime", o.not_prime, "The boundary is not prime");
  dehn->add_flag("--t3", o.t3, "The boundary is the 3-torus");
  dehn->add_flag("--seifert-over-t2", o.seifert, "The boundary is Seifert fibred over T^2");
  dehn->add_flag("--table", o.table, "Print the verdict for every consistent prime profile with b1 <= 4");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  try {
    Report r;
    if (snf->parsed()) r = cmd_snf(o, in);
    else if (homology->parsed()) r = cmd_homology(o, in);
    else if (variation->parsed()) r = cmd_variation(o, in);
    else if (torelli->parsed()) r = cmd_torelli(o, in);
    else if (certify_cmd->parsed()) r = cmd_certify(o, in);
    else if (stein->parsed()) r = cmd_stein_certify(o, in);
    else if (legendrian->parsed()) r = cmd_legendrian(o, in);
    else if (sw->parsed()) r = cmd_sw(o, in);
    else if (distinguish->parsed()) {
      if (o.max_r == 0 && (r_opt->count() == 0 || m_opt->count() == 0))
        throw InvalidInput("distinguish needs --r and --m, or --max");
      r = cmd_distinguish(o);
    } else r = cmd_dehn_twist(o, in);

    const std::string text = o.format == "text" ? render_text(r) : io::dump(render_json(r));
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) throw InvalidInput("cannot write output file '" + o.output + "'");
      f << text;
    }
    bool failed = r.failed;
    for (const auto& it : r.items) failed = failed || it.failed;
    return failed ? kExitHypothesisFailed : kExitOk;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const NonUnimodularDuality& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    // Plain Error is only raised by internal consistency checks.
    if (typeid(e) == typeid(Error)) {
      err << "internal error: " << e.what() << "\n";
      return kExitInternal;
    }
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
}

}  // namespace torelli
