#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torelli/int_matrix.hpp"
#include "torelli/presentation.hpp"

namespace torelli {

enum class FrontEventKind { LeftCusp, RightCusp, Crossing };

/// One step of a left-to-right sweep over a front. Strand positions count
/// from the top (position 0 is the highest strand).
///   LeftCusp(i):  two new strands are born at positions i, i+1
///   RightCusp(i): the strands at i, i+1 meet and end
///   Crossing(i):  the strands at i, i+1 swap
struct FrontEvent {
  FrontEventKind kind;
  std::size_t position;

  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

FrontEvent left_cusp(std::size_t i);
FrontEvent right_cusp(std::size_t i);
FrontEvent crossing(std::size_t i);
std::string to_string(const FrontEvent& e);
/// Parses "L3", "R0", "X12". Throws MalformedFront.
FrontEvent parse_event(const std::string& token);

/// A Legendrian link front given as an event word over a running strand list.
///
/// Components are numbered in order of their first left cusp. Each component
/// has a reference orientation: it leaves its first left cusp along the upper
/// branch, moving right. orientation(c) == -1 reverses component c.
class FrontDiagram {
 public:
  FrontDiagram() = default;
  /// Validates the strand bookkeeping; throws MalformedFront. An empty
  /// orientation list means every component uses its reference orientation.
  explicit FrontDiagram(std::vector<FrontEvent> events, std::vector<int> orientations = {});

  const std::vector<FrontEvent>& events() const { return events_; }
  const std::vector<int>& orientations() const { return orientations_; }
  std::size_t component_count() const { return orientations_.size(); }

  FrontDiagram with_orientation(std::size_t component, int sign) const;

  struct Cusp {
    bool is_left;
    std::size_t upper;  // segment ids
    std::size_t lower;
  };
  struct Crossing {
    std::size_t first;  // segment at the upper position before the swap
    std::size_t second;
  };
  struct Segment {
    std::size_t component;
    int reference_direction;  // +1 rightward, -1 leftward
  };

  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<Cusp>& cusps() const { return cusps_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  /// Direction of a segment under the chosen orientations.
  int direction(std::size_t segment) const;
  /// +1 when both strands move the same way across the page, -1 otherwise.
  int crossing_sign(const Crossing& c) const;
  /// Whether the oriented traversal runs from the upper to the lower branch.
  bool is_down_cusp(const Cusp& c) const;

 private:
  void analyse();

  std::vector<FrontEvent> events_;
  std::vector<int> orientations_;
  std::vector<Segment> segments_;
  std::vector<Cusp> cusps_;
  std::vector<Crossing> crossings_;
};

struct ClassicalInvariants {
  Integer tb;
  Integer rot;
  Integer writhe;
  std::size_t right_cusps = 0;
  std::size_t up_cusps = 0;
  std::size_t down_cusps = 0;
  std::size_t crossings = 0;
};

/// tb = writhe - right cusps and rot = (down - up) / 2, counting only the
/// self-crossings and cusps of the given component.
ClassicalInvariants classical_invariants(const FrontDiagram& front, std::size_t component);

/// Linking number of two distinct components: half the signed count of the
/// crossings between them.
Integer linking_number(const FrontDiagram& front, std::size_t a, std::size_t b);

/// The Stein handlebody: framings tb - 1, off-diagonal linking numbers.
LinkTrace stein_trace(const FrontDiagram& front);

/// c_1 of the Stein structure in the handle-cochain basis: the rotation numbers.
IntVector chern_class(const FrontDiagram& front);

/// PD(c_1) restricted to the boundary, written as d * v1 with v1 primitive in
/// free H_1(dX) coordinates and d > 0.
struct NonTorsionClass {
  Integer d;
  IntVector v1;
};

/// Returns nullopt when the restriction of c1 to H_1(dX) is torsion.
std::optional<NonTorsionClass> nontorsion_test(const IntVector& c1, const LinkTrace& trace);

/// Genus bounds from the adjunction inequality for the Stein family X_n,
/// where c1 = (2n, 0) and the form vanishes.
struct AdjunctionBounds {
  /// 1 + (1/2) max_i |<c1, A e_i>|.
  Integer from_pairing;
  /// 1 + 2n max(|A_11|, |A_21|), the closed form used to separate boundaries.
  Integer closed_form;
  /// 1 + 2n, the minimum of closed_form over all unimodular A.
  Integer universal;
};

/// Throws NotUnimodular unless |det A| == 1, and InvalidInput unless
/// c1 == (2n, 0) with n >= 1.
AdjunctionBounds adjunction_bounds(const IntVector& c1, const IntMatrix& a, const Integer& n);

/// The closed-form lower bound 1 + 2n max(|A_11|, |A_21|).
Integer adjunction_lower_bound(const IntVector& c1, const IntMatrix& a, const Integer& n);

/// Parameter of the boundary-separated subsequence: n_r = 5 * 2^(r-1) - 3.
Integer separated_parameter(unsigned r);

/// Genera of the explicit surfaces representing e_1, e_2 in dX_n.
struct SurfaceGenera {
  Integer first;   // 2n + 3
  Integer second;  // 7
};
SurfaceGenera explicit_surface_genera(const Integer& n);

struct BoundaryDistinction {
  unsigned r = 0;  // after ordering r < m
  unsigned m = 0;
  Integer n_r;
  Integer n_m;
  Integer upper;  // max(2 n_r + 3, 7): genus of explicit surfaces in dX_{n_r}
  Integer lower;  // 1 + 2 n_m: adjunction bound in X_{n_m}
  bool distinct = false;

  std::string summary() const;
};

/// Throws InvalidInput unless r, m >= 1 and r != m.
BoundaryDistinction distinguish_boundaries(unsigned r, unsigned m);

/// Text format: an "orientations:" header line with one sign per component,
/// then comma separated events. Event lines are concatenated; the writer
/// breaks the line after each event that closes a component.
std::string front_to_text(const FrontDiagram& front);
FrontDiagram front_from_text(const std::string& text);

}  // namespace torelli
