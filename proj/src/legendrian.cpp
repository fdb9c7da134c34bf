#include "torelli/legendrian.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

#include "torelli/errors.hpp"
#include "torelli/smith.hpp"

namespace torelli {

FrontEvent left_cusp(std::size_t i) { return {FrontEventKind::LeftCusp, i}; }
FrontEvent right_cusp(std::size_t i) { return {FrontEventKind::RightCusp, i}; }
FrontEvent crossing(std::size_t i) { return {FrontEventKind::Crossing, i}; }

std::string to_string(const FrontEvent& e) {
  const char tag = e.kind == FrontEventKind::LeftCusp ? 'L' : e.kind == FrontEventKind::RightCusp ? 'R' : 'X';
  return tag + std::to_string(e.position);
}

FrontEvent parse_event(const std::string& token) {
  std::string t;
  for (char ch : token)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.size() < 2) throw MalformedFront("bad front event '" + token + "'");
  FrontEventKind kind;
  switch (std::toupper(static_cast<unsigned char>(t[0]))) {
    case 'L': kind = FrontEventKind::LeftCusp; break;
    case 'R': kind = FrontEventKind::RightCusp; break;
    case 'X': kind = FrontEventKind::Crossing; break;
    default: throw MalformedFront("bad front event '" + token + "'");
  }
  std::size_t pos = 0;
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw MalformedFront("bad front event '" + token + "'");
    pos = pos * 10 + static_cast<std::size_t>(t[k] - '0');
    if (pos > 1'000'000) throw MalformedFront("front event position too large");
  }
  return {kind, pos};
}

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events, std::vector<int> orientations)
    : events_(std::move(events)), orientations_(std::move(orientations)) {
  analyse();
}

FrontDiagram FrontDiagram::with_orientation(std::size_t component, int sign) const {
  if (component >= component_count()) throw InvalidInput("with_orientation: no such component");
  std::vector<int> o = orientations_;
  o[component] = sign;
  return FrontDiagram(events_, std::move(o));
}

void FrontDiagram::analyse() {
  struct RawSegment {
    std::size_t left_cusp;
    std::size_t right_cusp = static_cast<std::size_t>(-1);
  };
  std::vector<RawSegment> raw;
  std::vector<std::size_t> strands;

  for (std::size_t k = 0; k < events_.size(); ++k) {
    const FrontEvent& e = events_[k];
    const std::size_t i = e.position;
    const std::string where = "event " + std::to_string(k) + " (" + to_string(e) + ")";
    switch (e.kind) {
      case FrontEventKind::LeftCusp: {
        if (i > strands.size()) throw MalformedFront(where + ": position beyond the strand list");
        const std::size_t cusp = cusps_.size();
        const std::size_t upper = raw.size();
        raw.push_back({cusp});
        raw.push_back({cusp});
        cusps_.push_back({true, upper, upper + 1});
        strands.insert(strands.begin() + static_cast<std::ptrdiff_t>(i), {upper, upper + 1});
        break;
      }
      case FrontEventKind::RightCusp: {
        if (i + 1 >= strands.size()) throw MalformedFront(where + ": needs two strands at this position");
        const std::size_t cusp = cusps_.size();
        const std::size_t upper = strands[i];
        const std::size_t lower = strands[i + 1];
        raw[upper].right_cusp = cusp;
        raw[lower].right_cusp = cusp;
        cusps_.push_back({false, upper, lower});
        strands.erase(strands.begin() + static_cast<std::ptrdiff_t>(i),
                      strands.begin() + static_cast<std::ptrdiff_t>(i + 2));
        break;
      }
      case FrontEventKind::Crossing: {
        if (i + 1 >= strands.size()) throw MalformedFront(where + ": needs two strands at this position");
        crossings_.push_back({strands[i], strands[i + 1]});
        std::swap(strands[i], strands[i + 1]);
        break;
      }
    }
  }
  if (!strands.empty())
    throw MalformedFront(std::to_string(strands.size()) + " strands left open at the end of the word");

  // Walk each closed curve: a rightward segment ends at a right cusp and
  // continues leftward along the partner branch, and vice versa.
  segments_.assign(raw.size(), Segment{0, 0});
  std::vector<bool> seen(raw.size(), false);
  auto partner = [&](std::size_t cusp, std::size_t seg) {
    return cusps_[cusp].upper == seg ? cusps_[cusp].lower : cusps_[cusp].upper;
  };
  std::size_t component = 0;
  for (std::size_t c = 0; c < cusps_.size(); ++c) {
    if (!cusps_[c].is_left || seen[cusps_[c].upper]) continue;
    std::size_t seg = cusps_[c].upper;
    int dir = +1;
    while (!seen[seg]) {
      seen[seg] = true;
      segments_[seg] = {component, dir};
      seg = dir > 0 ? partner(raw[seg].right_cusp, seg) : partner(raw[seg].left_cusp, seg);
      dir = -dir;
    }
    ++component;
  }

  if (orientations_.empty()) orientations_.assign(component, +1);
  if (orientations_.size() != component)
    throw MalformedFront("front has " + std::to_string(component) + " components but " +
                         std::to_string(orientations_.size()) + " orientations");
  for (int o : orientations_)
    if (o != 1 && o != -1) throw MalformedFront("orientation signs must be +1 or -1");
}

int FrontDiagram::direction(std::size_t segment) const {
  const Segment& s = segments_.at(segment);
  return s.reference_direction * orientations_[s.component];
}

int FrontDiagram::crossing_sign(const Crossing& c) const {
  return direction(c.first) == direction(c.second) ? +1 : -1;
}

bool FrontDiagram::is_down_cusp(const Cusp& c) const {
  // Left cusp: traversal enters along the leftward branch. Right cusp: along
  // the rightward branch. Down means that branch is the upper one.
  const int entering = c.is_left ? -1 : +1;
  return direction(c.upper) == entering;
}

ClassicalInvariants classical_invariants(const FrontDiagram& front, std::size_t component) {
  if (component >= front.component_count()) throw InvalidInput("classical_invariants: no such component");
  ClassicalInvariants inv;
  inv.writhe = 0;
  for (const auto& x : front.crossings()) {
    if (front.segments()[x.first].component != component || front.segments()[x.second].component != component)
      continue;
    ++inv.crossings;
    inv.writhe += front.crossing_sign(x);
  }
  for (const auto& c : front.cusps()) {
    if (front.segments()[c.upper].component != component) continue;
    if (!c.is_left) ++inv.right_cusps;
    if (front.is_down_cusp(c))
      ++inv.down_cusps;
    else
      ++inv.up_cusps;
  }
  if ((inv.down_cusps + inv.up_cusps) % 2 != 0) throw MalformedFront("odd number of cusps on a component");
  inv.tb = inv.writhe - Integer(static_cast<unsigned long>(inv.right_cusps));
  inv.rot = (Integer(static_cast<unsigned long>(inv.down_cusps)) - Integer(static_cast<unsigned long>(inv.up_cusps))) / 2;
  return inv;
}

Integer linking_number(const FrontDiagram& front, std::size_t a, std::size_t b) {
  if (a >= front.component_count() || b >= front.component_count() || a == b)
    throw InvalidInput("linking_number: need two distinct components");
  Integer total = 0;
  for (const auto& x : front.crossings()) {
    const std::size_t ca = front.segments()[x.first].component;
    const std::size_t cb = front.segments()[x.second].component;
    if ((ca == a && cb == b) || (ca == b && cb == a)) total += front.crossing_sign(x);
  }
  if (!mpz_even_p(total.get_mpz_t())) throw MalformedFront("odd signed crossing count between two components");
  return total / 2;
}

LinkTrace stein_trace(const FrontDiagram& front) {
  const std::size_t n = front.component_count();
  IntMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    form(i, i) = classical_invariants(front, i).tb - 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      form(i, j) = linking_number(front, i, j);
      form(j, i) = form(i, j);
    }
  }
  return LinkTrace(std::move(form));
}

IntVector chern_class(const FrontDiagram& front) {
  IntVector c(front.component_count());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = classical_invariants(front, i).rot;
  return c;
}

std::optional<NonTorsionClass> nontorsion_test(const IntVector& c1, const LinkTrace& trace) {
  if (c1.size() != trace.components()) throw DimensionMismatch("nontorsion_test: c1 has wrong length");
  const FGAbelianGroup h1 = cokernel(trace.linking());
  // PD(c1) = sum c1_i f_i; the boundary map then takes its free coordinates.
  IntVector image = h1.free_coordinates(c1);
  const Integer d = content(image);
  if (d == 0) return std::nullopt;
  for (auto& x : image) x /= d;
  return NonTorsionClass{d, std::move(image)};
}

AdjunctionBounds adjunction_bounds(const IntVector& c1, const IntMatrix& a, const Integer& n) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionMismatch("adjunction bound needs a 2x2 matrix");
  if (!is_unimodular(a)) throw NotUnimodular("adjunction bound needs |det A| = 1");
  if (n < 1 || c1.size() != 2 || c1[0] != 2 * n || c1[1] != 0)
    throw InvalidInput("adjunction bound is scoped to c1 = (2n, 0), n >= 1");
  Integer pairing_max = 0;
  for (std::size_t i = 0; i < 2; ++i) pairing_max = std::max(pairing_max, Integer(abs(dot(c1, a.col(i)))));
  AdjunctionBounds b;
  b.from_pairing = 1 + pairing_max / 2;
  b.closed_form = 1 + 2 * n * std::max(Integer(abs(a(0, 0))), Integer(abs(a(1, 0))));
  b.universal = 1 + 2 * n;
  return b;
}

Integer adjunction_lower_bound(const IntVector& c1, const IntMatrix& a, const Integer& n) {
  return adjunction_bounds(c1, a, n).closed_form;
}

Integer separated_parameter(unsigned r) {
  if (r < 1) throw InvalidInput("separated_parameter: r must be >= 1");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, r - 1);
  return 5 * p - 3;
}

SurfaceGenera explicit_surface_genera(const Integer& n) { return {2 * n + 3, Integer(7)}; }

std::string BoundaryDistinction::summary() const {
  std::ostringstream os;
  os << (distinct ? "Distinct" : "Undecided") << ": upper " << upper << (distinct ? " < " : " >= ") << "lower "
     << lower;
  return os.str();
}

BoundaryDistinction distinguish_boundaries(unsigned r, unsigned m) {
  if (r < 1 || m < 1) throw InvalidInput("distinguish_boundaries: indices must be >= 1");
  if (r == m) throw InvalidInput("distinguish_boundaries: indices must differ");
  if (r > m) std::swap(r, m);
  BoundaryDistinction v;
  v.r = r;
  v.m = m;
  v.n_r = separated_parameter(r);
  v.n_m = separated_parameter(m);
  const SurfaceGenera g = explicit_surface_genera(v.n_r);
  v.upper = std::max(g.first, g.second);
  v.lower = 1 + 2 * v.n_m;
  v.distinct = v.upper < v.lower;
  return v;
}

std::string front_to_text(const FrontDiagram& front) {
  std::ostringstream os;
  os << "orientations:";
  for (int o : front.orientations()) os << ' ' << (o > 0 ? '+' : '-');
  os << '\n';

  // Re-simulate to know when a component's last strand closes.
  std::vector<std::size_t> alive(front.component_count(), 0);
  std::size_t segment = 0;
  std::size_t cusp = 0;
  bool line_open = false;
  for (const auto& e : front.events()) {
    if (line_open) os << ", ";
    os << to_string(e);
    line_open = true;
    if (e.kind == FrontEventKind::LeftCusp) {
      alive[front.segments()[segment].component] += 2;
      segment += 2;
      ++cusp;
    } else if (e.kind == FrontEventKind::RightCusp) {
      const std::size_t comp = front.segments()[front.cusps()[cusp].upper].component;
      alive[comp] -= 2;
      ++cusp;
      if (alive[comp] == 0) {
        os << '\n';
        line_open = false;
      }
    }
  }
  if (line_open) os << '\n';
  return os.str();
}

FrontDiagram front_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<int> orientations;
  std::vector<FrontEvent> events;
  bool header_seen = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string body = line.substr(first);
    if (!header_seen && body.rfind("orientations:", 0) == 0) {
      header_seen = true;
      std::istringstream signs(body.substr(13));
      std::string s;
      while (signs >> s) {
        if (s == "+" || s == "+1" || s == "1")
          orientations.push_back(1);
        else if (s == "-" || s == "-1")
          orientations.push_back(-1);
        else
          throw MalformedFront("bad orientation sign '" + s + "'");
      }
      continue;
    }
    std::istringstream tokens(body);
    std::string tok;
    while (std::getline(tokens, tok, ',')) {
      if (tok.find_first_not_of(" \t\r") == std::string::npos) continue;
      events.push_back(parse_event(tok));
    }
  }
  return FrontDiagram(std::move(events), std::move(orientations));
}

}  // namespace torelli
