#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torelli/int_matrix.hpp"

namespace torelli {

using Exponent = std::vector<std::int64_t>;

/// An element of the integral group ring of a free abelian group with named
/// generators, i.e. a Laurent polynomial sum c_a E^a. Zero coefficients are
/// never stored; terms iterate in lexicographic order of exponent vectors.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(std::vector<std::string> generators);

  static GroupRingElement one(std::vector<std::string> generators);
  static GroupRingElement monomial(std::vector<std::string> generators, Exponent exponent,
                                   const Integer& coefficient = 1);
  /// The generator g itself. Throws UnknownGenerator.
  static GroupRingElement generator(std::vector<std::string> generators, const std::string& name);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  std::size_t generator_index(const std::string& name) const;

  /// Adds c * E^exponent. Throws DimensionMismatch on a wrong-length exponent.
  void add_term(const Exponent& exponent, const Integer& coefficient);
  Integer coefficient(const Exponent& exponent) const;
  bool is_zero() const { return terms_.empty(); }

  /// g -> g^{-1} applied to every term.
  GroupRingElement conjugate() const;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::vector<std::string> generators_;
  std::map<Exponent, Integer> terms_;
};

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
/// Convolution product. Throws GeneratorMismatch.
GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

std::string to_string(const GroupRingElement& x);

/// Symmetric Laurent polynomial in t with Delta(1) = +-1.
class AlexanderPolynomial {
 public:
  /// coefficients[k] is the coefficient of t^k. Throws InvalidInput when not
  /// symmetric or when Delta(1) != +-1.
  explicit AlexanderPolynomial(std::map<std::int64_t, Integer> coefficients);

  static AlexanderPolynomial unknot();

  const std::map<std::int64_t, Integer>& coefficients() const { return coefficients_; }
  Integer coefficient(std::int64_t k) const;
  Integer evaluate_at_one() const;

  friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;

 private:
  std::map<std::int64_t, Integer> coefficients_;
};

/// -(2n - 1) + n (t + t^{-1}). Throws InvalidInput for n == 0.
AlexanderPolynomial alexander_twist(unsigned n);

/// sw * Delta(t -> T^2) where T is the named torus class.
GroupRingElement knot_surgery(const GroupRingElement& sw, const AlexanderPolynomial& delta,
                              const std::string& torus_class);

/// sw * (E + E^{-1}).
GroupRingElement blowup(const GroupRingElement& sw, const std::string& exceptional_class);

/// Support of sw.
std::set<Exponent> basic_classes(const GroupRingElement& sw);

/// (E1 + E1^-1)(E2 + E2^-1)(-(2n-1) + n(F^2 + F^-2)) over generators E1, E2, F:
/// two blow-ups of 1 followed by knot surgery along the twist knot K(n).
GroupRingElement knot_surgery_family_sw(unsigned n);

struct DistinctnessReport {
  /// Index pairs (i < j) whose elements coincide.
  std::vector<std::pair<std::size_t, std::size_t>> equal_pairs;
  bool all_distinct() const { return equal_pairs.empty(); }
};

/// Throws GeneratorMismatch when the elements do not share a generator list.
DistinctnessReport pairwise_distinct(const std::vector<GroupRingElement>& family);

}  // namespace torelli
