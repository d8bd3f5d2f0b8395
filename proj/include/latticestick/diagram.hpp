#pragma once

// Knot diagrams. A Diagram is stored as a signed Gauss code: the cyclic
// sequence of crossing passages met along the knot, each marked over or
// under, plus a sign per crossing. The rotation order at every crossing
// (and so the PD code) follows from over/under and the sign.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "latticestick/lattice_core.hpp"

namespace latticestick {

struct Passage {
  int crossing = 0;
  bool over = false;

  friend bool operator==(const Passage&, const Passage&) = default;
};

/// Planar-diagram code: per crossing (a, b, c, d), a = incoming under arc,
/// then counterclockwise. Arcs are numbered 1..2n along the orientation.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  /// "X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)"
  std::string to_string() const;
  static PDCode parse(std::string_view text);

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

class Diagram {
 public:
  /// The crossingless unknot diagram.
  Diagram() = default;
  /// Every crossing index in [0, signs.size()) must occur exactly twice in
  /// `passages`, once over and once under. Signs are +1 or -1.
  Diagram(std::vector<Passage> passages, std::vector<int> signs);

  /// Inverse of pd_code() for codes whose arcs are numbered consecutively
  /// along the orientation.
  static Diagram from_pd(const PDCode& pd);
  /// Closure of a braid word on `strands` strands; letter +i / -i is the
  /// generator sigma_i or its inverse (1-based). Must close to one component.
  static Diagram braid_closure(int strands, const std::vector<int>& word);

  const std::vector<Passage>& passages() const { return passages_; }
  const std::vector<int>& signs() const { return signs_; }
  std::size_t crossing_count() const { return signs_.size(); }
  int writhe() const;
  /// Reflection through the projection plane: over/under and signs flip.
  Diagram mirror() const;

  /// Crossings renumbered 1..n by first appearance; +k over, -k under.
  std::vector<int> gauss_code() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Passage> passages_;
  std::vector<int> signs_;
};

/// Projection to the xy-plane after the exact shear
/// (x, y, z) -> (x + z*e, y + z*e^2), e = 1/(4D), D the coordinate diameter.
/// Over/under by original z. Traversal starts at the lexicographically least
/// vertex and follows the polygon's vertex order.
Diagram project(const LatticePolygon& p);

std::size_t crossing_number(const Diagram& d);

/// Throws UnknottedNoCrossings for a 0-crossing diagram.
PDCode pd_code(const Diagram& d);

/// Applies crossing-removing Reidemeister I and II moves until none applies.
Diagram simplify(const Diagram& d);

struct MiddleLevelReport {
  int transverse_count = 0;
  int tangency_count = 0;
  int overlap_count = 0;

  friend bool operator==(const MiddleLevelReport&, const MiddleLevelReport&) = default;
};

/// True when `p` is properly leveled with four z-sticks joining z-levels
/// (1,4), (1,3), (2,4), (2,3).
bool has_middle_level_structure(const LatticePolygon& p);

/// Intersections between the plain xy-projections of the open arcs on z-levels
/// 2 and 3. Throws NotProperlyLeveled or WrongZStructure.
MiddleLevelReport middle_level_crossings(const LatticePolygon& p);

/// Looks for a one-stick arc piece on one middle z-level and a three-stick U
/// on the other whose projections cross twice around an empty rectangle, and
/// slides the U's base past the single stick. Returns std::nullopt (NoMove)
/// when no such pattern exists. Throws NotProperlyLeveled.
std::optional<LatticePolygon> lattice_r2_reduce(const LatticePolygon& p);

nlohmann::json to_json(const MiddleLevelReport& r);

}  // namespace latticestick
