#pragma once

// Cubic-lattice polygons: points, sticks, validated polygons, the 48 cube
// symmetries and symmetry-invariant canonical keys.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latticestick/errors.hpp"

namespace latticestick {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

constexpr int axis_index(Axis a) { return static_cast<int>(a); }
constexpr Axis axis_at(int i) { return static_cast<Axis>(i); }
char axis_name(Axis a);
std::optional<Axis> axis_from_name(char c);

/// The two axes other than `a`, in X < Y < Z order.
constexpr std::array<Axis, 2> other_axes(Axis a) {
  switch (a) {
    case Axis::X: return {Axis::Y, Axis::Z};
    case Axis::Y: return {Axis::X, Axis::Z};
    default: return {Axis::X, Axis::Y};
  }
}

struct LatticePoint {
  int x = 0;
  int y = 0;
  int z = 0;

  constexpr int operator[](Axis a) const { return a == Axis::X ? x : a == Axis::Y ? y : z; }
  constexpr int& operator[](Axis a) { return a == Axis::X ? x : a == Axis::Y ? y : z; }

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

/// A maximal axis-parallel segment. `cross` holds the two fixed coordinates
/// on the other axes, ordered as in other_axes(axis).
struct Stick {
  Axis axis = Axis::X;
  int lo = 0;
  int hi = 0;
  std::array<int, 2> cross{};

  int length() const { return hi - lo; }
  LatticePoint low_end() const;
  LatticePoint high_end() const;
  bool contains(const LatticePoint& p) const;

  friend bool operator==(const Stick&, const Stick&) = default;
};

/// Closed-segment intersection of two sticks.
bool sticks_intersect(const Stick& a, const Stick& b);

struct Composition {
  int nx = 0;
  int ny = 0;
  int nz = 0;

  int operator[](Axis a) const { return a == Axis::X ? nx : a == Axis::Y ? ny : nz; }
  int& operator[](Axis a) { return a == Axis::X ? nx : a == Axis::Y ? ny : nz; }
  int total() const { return nx + ny + nz; }
  bool is_sorted() const { return nx >= ny && ny >= nz; }
  Composition sorted() const;
  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Extent bound per axis (bounding-box side) enforced at construction.
inline constexpr int kMaxExtent = 32;
/// Absolute coordinate bound; keeps sheared projections inside 64-bit range.
inline constexpr int kMaxAbsCoordinate = 1 << 20;

/// A closed self-avoiding lattice polygon, stored as its corner vertices in
/// cyclic order. Edge i joins vertex i to vertex i+1 (mod size). Immutable.
class LatticePolygon {
 public:
  /// Validates and normalizes: drops repeated points, merges collinear runs
  /// into single sticks. Throws PolygonError.
  static LatticePolygon from_vertices(std::span<const LatticePoint> points);

  /// Wraps corners that the caller has already proven valid (used by the
  /// census engine, whose search maintains every invariant incrementally).
  static LatticePolygon from_trusted_corners(std::vector<LatticePoint> corners);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const LatticePoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Axis edge_axis(std::size_t i) const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  explicit LatticePolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}
  std::vector<LatticePoint> vertices_;
};

/// One stick per edge, in traversal order.
std::vector<Stick> sticks(const LatticePolygon& p);
Stick stick_at(const LatticePolygon& p, std::size_t edge);
Composition stick_counts(const LatticePolygon& p);

/// Per-axis minimum and maximum coordinates.
std::pair<LatticePoint, LatticePoint> bounding_box(const LatticePolygon& p);

/// Signed coordinate permutation plus translation: out[i] = sign[i] * p[perm[i]] + t[i].
class LatticeSymmetry {
 public:
  LatticeSymmetry() = default;
  LatticeSymmetry(std::array<Axis, 3> perm, std::array<int, 3> signs, LatticePoint translation = {});

  /// The 48 linear symmetries of the cube (no translation); element 0 is the identity.
  static const std::array<LatticeSymmetry, 48>& all();

  LatticePoint apply(const LatticePoint& p) const;
  /// Symmetry equal to applying *this first, then `next`.
  LatticeSymmetry then(const LatticeSymmetry& next) const;
  LatticeSymmetry inverse() const;
  LatticeSymmetry with_translation(LatticePoint t) const;

  /// Axis whose sticks the image of an `a`-stick lies along.
  Axis image_axis(Axis a) const;
  bool preserves_orientation() const;

  const std::array<Axis, 3>& perm() const { return perm_; }
  const std::array<int, 3>& signs() const { return signs_; }
  const LatticePoint& translation() const { return translation_; }

  friend bool operator==(const LatticeSymmetry&, const LatticeSymmetry&) = default;

 private:
  std::array<Axis, 3> perm_{Axis::X, Axis::Y, Axis::Z};
  std::array<int, 3> signs_{1, 1, 1};
  LatticePoint translation_{};
};

LatticePolygon apply_symmetry(const LatticePolygon& p, const LatticeSymmetry& g);

/// Byte key: three bytes per vertex, minimum over cube symmetries, cyclic
/// starts and both directions, with the bounding-box corner at the origin.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string hex() const;
  static CanonicalKey from_hex(std::string_view hex);
  /// The polygon whose vertex list is the key's sequence.
  LatticePolygon decode() const;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

CanonicalKey canonical_form(const LatticePolygon& p);

/// Lexicographically least vertex sequence over cyclic starts and both
/// directions, without any symmetry or translation.
std::vector<LatticePoint> least_rotation(std::span<const LatticePoint> cycle);

}  // namespace latticestick
