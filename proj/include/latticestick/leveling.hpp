#pragma once

// Level bookkeeping. An a-level is a plane a = k containing at least one stick
// of the other two axes; a polygon is properly leveled when every level of
// every axis holds exactly two endpoints of same-axis sticks.

#include <array>
#include <utility>
#include <vector>

#include "json.hpp"
#include "latticestick/lattice_core.hpp"

namespace latticestick {

struct LevelEntry {
  int coordinate = 0;
  int endpoints = 0;  // endpoints of axis-sticks in this plane
  int sticks = 0;     // sticks of the other two axes lying in this plane

  friend bool operator==(const LevelEntry&, const LevelEntry&) = default;
};

struct LevelProfile {
  Axis axis = Axis::X;
  std::vector<LevelEntry> levels;  // increasing coordinate

  int total_endpoints() const;
};

LevelProfile level_profile(const LatticePolygon& p, Axis a);

/// False for planar polygons: their single perpendicular level carries no
/// endpoints of same-axis sticks.
bool is_properly_leveled(const LatticePolygon& p);

/// Splits every level holding several arcs into one plane per arc, then
/// remaps each axis monotonically onto 1..n. Throws PlanarPolygon when some
/// axis has no sticks.
LatticePolygon make_properly_leveled(const LatticePolygon& p);

struct LevelPair {
  Axis axis = Axis::X;
  int low = 0;
  int high = 0;

  friend bool operator==(const LevelPair&, const LevelPair&) = default;
};

inline LevelPair level_pair(const Stick& s) { return {s.axis, s.lo, s.hi}; }

/// Unordered pairs of same-axis sticks spanning the same two levels.
/// Throws NotProperlyLeveled.
std::vector<std::pair<Stick, Stick>> duplicate_level_pairs(const LatticePolygon& p);

struct BoundaryLevel {
  int coordinate = 0;
  int stick_count = 0;          // sticks lying in the level
  bool connected = false;       // those sticks form one run of the cycle
  int min_incident_length = 0;  // shortest axis-stick with an endpoint here

  bool conforms() const { return (stick_count == 1 || stick_count == 2) && connected && min_incident_length >= 2; }
};

struct AxisBoundaryReport {
  Axis axis = Axis::X;
  BoundaryLevel low;
  BoundaryLevel high;

  bool conforms() const { return low.conforms() && high.conforms(); }
};

struct BoundaryReport {
  std::array<AxisBoundaryReport, 3> axes;

  bool conforms() const;
};

/// Throws NotProperlyLeveled.
BoundaryReport boundary_level_report(const LatticePolygon& p);

nlohmann::json to_json(const LevelProfile& profile);
nlohmann::json to_json(const BoundaryLevel& level);
/// {"axis": "x", "levels": [...], "boundary": {...} or null}
nlohmann::json level_report_json(const LatticePolygon& p, Axis a);

}  // namespace latticestick
