#include "torelli/group_ring.hpp"

#include <algorithm>
#include <sstream>

#include "torelli/errors.hpp"

namespace torelli {

GroupRingElement::GroupRingElement(std::vector<std::string> generators) : generators_(std::move(generators)) {
  std::vector<std::string> sorted = generators_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("group ring generators must have distinct names");
}

GroupRingElement GroupRingElement::one(std::vector<std::string> generators) {
  GroupRingElement x(std::move(generators));
  x.add_term(Exponent(x.generators_.size(), 0), 1);
  return x;
}

GroupRingElement GroupRingElement::monomial(std::vector<std::string> generators, Exponent exponent,
                                            const Integer& coefficient) {
  GroupRingElement x(std::move(generators));
  x.add_term(exponent, coefficient);
  return x;
}

GroupRingElement GroupRingElement::generator(std::vector<std::string> generators, const std::string& name) {
  GroupRingElement x(std::move(generators));
  Exponent e(x.generators_.size(), 0);
  e[x.generator_index(name)] = 1;
  x.add_term(e, 1);
  return x;
}

std::size_t GroupRingElement::generator_index(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw UnknownGenerator("unknown group ring generator '" + name + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

void GroupRingElement::add_term(const Exponent& exponent, const Integer& coefficient) {
  if (exponent.size() != generators_.size())
    throw DimensionMismatch("exponent vector length differs from the generator count");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer GroupRingElement::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

GroupRingElement GroupRingElement::conjugate() const {
  GroupRingElement x(generators_);
  for (const auto& [e, c] : terms_) {
    Exponent neg = e;
    for (auto& a : neg) a = -a;
    x.add_term(neg, c);
  }
  return x;
}

namespace {

void require_same_generators(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.generators() != b.generators()) throw GeneratorMismatch("group ring elements use different generators");
}

}  // namespace

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_generators(a, b);
  GroupRingElement x = a;
  for (const auto& [e, c] : b.terms()) x.add_term(e, c);
  return x;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_generators(a, b);
  GroupRingElement x = a;
  for (const auto& [e, c] : b.terms()) x.add_term(e, -c);
  return x;
}

GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_generators(a, b);
  GroupRingElement x(a.generators());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      x.add_term(e, ca * cb);
    }
  return x;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return multiply(a, b); }

std::string to_string(const GroupRingElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    const bool constant = std::all_of(e.begin(), e.end(), [](std::int64_t a) { return a == 0; });
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Integer mag = abs(c);
    if (constant || mag != 1) os << mag;
    bool need_sep = !constant && mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_sep) os << '*';
      os << x.generators()[i];
      if (e[i] != 1) os << '^' << e[i];
      need_sep = true;
    }
  }
  return os.str();
}

AlexanderPolynomial::AlexanderPolynomial(std::map<std::int64_t, Integer> coefficients) {
  for (auto& [k, c] : coefficients)
    if (c != 0) coefficients_.emplace(k, c);
  for (const auto& [k, c] : coefficients_)
    if (coefficient(-k) != c) throw InvalidInput("Alexander polynomial must be symmetric under t -> 1/t");
  if (abs(evaluate_at_one()) != 1) throw InvalidInput("Alexander polynomial must evaluate to +-1 at t = 1");
}

AlexanderPolynomial AlexanderPolynomial::unknot() { return AlexanderPolynomial({{0, Integer(1)}}); }

Integer AlexanderPolynomial::coefficient(std::int64_t k) const {
  auto it = coefficients_.find(k);
  return it == coefficients_.end() ? Integer(0) : it->second;
}

Integer AlexanderPolynomial::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [k, c] : coefficients_) s += c;
  return s;
}

AlexanderPolynomial alexander_twist(unsigned n) {
  if (n == 0) throw InvalidInput("twist knot K(n) is defined for n >= 1");
  const Integer nn(n);
  return AlexanderPolynomial({{-1, nn}, {0, -(2 * nn - 1)}, {1, nn}});
}

GroupRingElement knot_surgery(const GroupRingElement& sw, const AlexanderPolynomial& delta,
                              const std::string& torus_class) {
  const std::size_t idx = sw.generator_index(torus_class);
  GroupRingElement factor(sw.generators());
  for (const auto& [k, c] : delta.coefficients()) {
    Exponent e(sw.generators().size(), 0);
    e[idx] = 2 * k;
    factor.add_term(e, c);
  }
  return multiply(sw, factor);
}

GroupRingElement blowup(const GroupRingElement& sw, const std::string& exceptional_class) {
  const std::size_t idx = sw.generator_index(exceptional_class);
  GroupRingElement factor(sw.generators());
  Exponent e(sw.generators().size(), 0);
  e[idx] = 1;
  factor.add_term(e, 1);
  e[idx] = -1;
  factor.add_term(e, 1);
  return multiply(sw, factor);
}

std::set<Exponent> basic_classes(const GroupRingElement& sw) {
  std::set<Exponent> out;
  for (const auto& [e, c] : sw.terms()) out.insert(e);
  return out;
}

GroupRingElement knot_surgery_family_sw(unsigned n) {
  const std::vector<std::string> gens{"E1", "E2", "F"};
  GroupRingElement sw = GroupRingElement::one(gens);
  sw = blowup(sw, "E1");
  sw = blowup(sw, "E2");
  return knot_surgery(sw, alexander_twist(n), "F");
}

DistinctnessReport pairwise_distinct(const std::vector<GroupRingElement>& family) {
  DistinctnessReport r;
  for (std::size_t i = 1; i < family.size(); ++i) require_same_generators(family[0], family[i]);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i] == family[j]) r.equal_pairs.emplace_back(i, j);
  return r;
}

}  // namespace torelli
