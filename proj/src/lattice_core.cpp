#include "latticestick/lattice_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace latticestick {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotAxisAligned: return "NotAxisAligned";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::DegenerateBacktrack: return "DegenerateBacktrack";
    case ErrorCode::TooFewSticks: return "TooFewSticks";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::PlanarPolygon: return "PlanarPolygon";
    case ErrorCode::NotProperlyLeveled: return "NotProperlyLeveled";
    case ErrorCode::UnknottedNoCrossings: return "UnknottedNoCrossings";
    case ErrorCode::WrongZStructure: return "WrongZStructure";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::CompositionTooLarge: return "CompositionTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

char axis_name(Axis a) { return "xyz"[axis_index(a)]; }

std::optional<Axis> axis_from_name(char c) {
  switch (c) {
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
    default: return std::nullopt;
  }
}

LatticePoint Stick::low_end() const {
  LatticePoint p;
  auto [a, b] = other_axes(axis);
  p[axis] = lo;
  p[a] = cross[0];
  p[b] = cross[1];
  return p;
}

LatticePoint Stick::high_end() const {
  LatticePoint p = low_end();
  p[axis] = hi;
  return p;
}

bool Stick::contains(const LatticePoint& p) const {
  auto [a, b] = other_axes(axis);
  return p[a] == cross[0] && p[b] == cross[1] && p[axis] >= lo && p[axis] <= hi;
}

bool sticks_intersect(const Stick& s, const Stick& t) {
  // Axis-aligned segments meet iff their bounding boxes overlap.
  const LatticePoint s0 = s.low_end(), s1 = s.high_end();
  const LatticePoint t0 = t.low_end(), t1 = t.high_end();
  for (Axis a : kAxes) {
    if (std::max(s0[a], t0[a]) > std::min(s1[a], t1[a])) return false;
  }
  return true;
}

Composition Composition::sorted() const {
  std::array<int, 3> v{nx, ny, nz};
  std::sort(v.begin(), v.end(), std::greater<>());
  return {v[0], v[1], v[2]};
}

std::string Composition::to_string() const {
  std::ostringstream out;
  out << '(' << nx << ',' << ny << ',' << nz << ')';
  return out.str();
}

namespace {

std::optional<Axis> step_axis(const LatticePoint& a, const LatticePoint& b) {
  int changed = 0;
  Axis axis = Axis::X;
  for (Axis ax : kAxes) {
    if (a[ax] != b[ax]) {
      ++changed;
      axis = ax;
    }
  }
  if (changed != 1) return std::nullopt;
  return axis;
}

int sign_of(int v) { return (v > 0) - (v < 0); }

std::string point_string(const LatticePoint& p) {
  std::ostringstream out;
  out << '(' << p.x << ',' << p.y << ',' << p.z << ')';
  return out.str();
}

}  // namespace

LatticePolygon LatticePolygon::from_vertices(std::span<const LatticePoint> points) {
  if (points.empty()) throw PolygonError(ErrorCode::EmptyInput, "no vertices");

  for (const auto& p : points) {
    for (Axis a : kAxes) {
      if (std::abs(p[a]) > kMaxAbsCoordinate) {
        throw PolygonError(ErrorCode::CoordinateOutOfRange,
                           "coordinate magnitude exceeds bound at " + point_string(p));
      }
    }
  }

  std::vector<LatticePoint> q;
  q.reserve(points.size());
  for (const auto& p : points) {
    if (q.empty() || q.back() != p) q.push_back(p);
  }
  while (q.size() > 1 && q.back() == q.front()) q.pop_back();
  if (q.size() < 2) throw PolygonError(ErrorCode::TooFewSticks, "fewer than two distinct points");

  const std::size_t m = q.size();
  std::vector<Axis> axes(m);
  std::vector<int> dirs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = q[i];
    const auto& b = q[(i + 1) % m];
    auto axis = step_axis(a, b);
    if (!axis) {
      if (i + 1 == m) {
        throw PolygonError(ErrorCode::NotClosed,
                           "closing edge " + point_string(a) + " -> " + point_string(b) +
                               " is not axis-aligned");
      }
      throw PolygonError(ErrorCode::NotAxisAligned,
                         "edge " + point_string(a) + " -> " + point_string(b) + " is not axis-aligned");
    }
    axes[i] = *axis;
    dirs[i] = sign_of(b[*axis] - a[*axis]);
  }

  std::vector<LatticePoint> corners;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t prev = (i + m - 1) % m;
    if (axes[prev] == axes[i]) {
      if (dirs[prev] != dirs[i]) {
        throw PolygonError(ErrorCode::DegenerateBacktrack,
                           "polygon reverses along itself at " + point_string(q[i]));
      }
      continue;
    }
    corners.push_back(q[i]);
  }
  if (corners.size() < 4) {
    throw PolygonError(ErrorCode::TooFewSticks, "a lattice polygon needs at least four sticks");
  }

  LatticePolygon poly(std::move(corners));
  auto [lo, hi] = bounding_box(poly);
  for (Axis a : kAxes) {
    if (hi[a] - lo[a] > kMaxExtent) {
      throw PolygonError(ErrorCode::CoordinateOutOfRange,
                         std::string("extent along ") + axis_name(a) + " exceeds " +
                             std::to_string(kMaxExtent));
    }
  }

  // Each lattice point on the polygon is covered by exactly one half-open
  // stick [start, end); any second cover is a self-intersection.
  const int ex = hi.x - lo.x + 1, ey = hi.y - lo.y + 1, ez = hi.z - lo.z + 1;
  std::vector<int> owner(static_cast<std::size_t>(ex) * ey * ez, -1);
  const auto& v = poly.vertices_;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint from = v[i];
    const LatticePoint to = v[(i + 1) % n];
    const Axis a = poly.edge_axis(i);
    const int step = to[a] > from[a] ? 1 : -1;
    LatticePoint c = from;
    for (; c[a] != to[a]; c[a] += step) {
      const std::size_t cell = (static_cast<std::size_t>(c.x - lo.x) * ey + (c.y - lo.y)) * ez + (c.z - lo.z);
      if (owner[cell] >= 0) {
        const std::size_t first = static_cast<std::size_t>(owner[cell]);
        throw PolygonError(ErrorCode::SelfIntersecting,
                           "sticks " + std::to_string(first) + " and " + std::to_string(i) +
                               " meet at " + point_string(c),
                           std::make_pair(first, i));
      }
      owner[cell] = static_cast<int>(i);
    }
  }
  return poly;
}

LatticePolygon LatticePolygon::from_trusted_corners(std::vector<LatticePoint> corners) {
  return LatticePolygon(std::move(corners));
}

Axis LatticePolygon::edge_axis(std::size_t i) const {
  const auto& a = vertex(i);
  const auto& b = vertex(i + 1);
  if (a.x != b.x) return Axis::X;
  if (a.y != b.y) return Axis::Y;
  return Axis::Z;
}

Stick stick_at(const LatticePolygon& p, std::size_t edge) {
  const auto& a = p.vertex(edge);
  const auto& b = p.vertex(edge + 1);
  Stick s;
  s.axis = p.edge_axis(edge);
  s.lo = std::min(a[s.axis], b[s.axis]);
  s.hi = std::max(a[s.axis], b[s.axis]);
  auto [u, w] = other_axes(s.axis);
  s.cross = {a[u], a[w]};
  return s;
}

std::vector<Stick> sticks(const LatticePolygon& p) {
  std::vector<Stick> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(stick_at(p, i));
  return out;
}

Composition stick_counts(const LatticePolygon& p) {
  Composition c;
  for (std::size_t i = 0; i < p.size(); ++i) ++c[p.edge_axis(i)];
  return c;
}

std::pair<LatticePoint, LatticePoint> bounding_box(const LatticePolygon& p) {
  LatticePoint lo = p.vertex(0), hi = p.vertex(0);
  for (const auto& v : p.vertices()) {
    for (Axis a : kAxes) {
      lo[a] = std::min(lo[a], v[a]);
      hi[a] = std::max(hi[a], v[a]);
    }
  }
  return {lo, hi};
}

// --- symmetries -------------------------------------------------------------

LatticeSymmetry::LatticeSymmetry(std::array<Axis, 3> perm, std::array<int, 3> signs,
                                 LatticePoint translation)
    : perm_(perm), signs_(signs), translation_(translation) {
  std::array<bool, 3> seen{};
  for (Axis a : perm_) {
    if (seen[axis_index(a)]) throw Error(ErrorCode::InvalidArgument, "axis map is not a permutation");
    seen[axis_index(a)] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidArgument, "signs must be +1 or -1");
  }
}

const std::array<LatticeSymmetry, 48>& LatticeSymmetry::all() {
  static const std::array<LatticeSymmetry, 48> group = [] {
    std::array<LatticeSymmetry, 48> out;
    std::array<int, 3> perm{0, 1, 2};
    std::size_t k = 0;
    do {
      for (int mask = 0; mask < 8; ++mask) {
        out[k++] = LatticeSymmetry({axis_at(perm[0]), axis_at(perm[1]), axis_at(perm[2])},
                                   {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return group;
}

LatticePoint LatticeSymmetry::apply(const LatticePoint& p) const {
  return {signs_[0] * p[perm_[0]] + translation_.x, signs_[1] * p[perm_[1]] + translation_.y,
          signs_[2] * p[perm_[2]] + translation_.z};
}

LatticeSymmetry LatticeSymmetry::then(const LatticeSymmetry& next) const {
  // next(this(p))[i] = next.s[i] * (s[j] p[perm[j]] + t[j]) + next.t[i], j = next.perm[i]
  std::array<Axis, 3> perm{};
  std::array<int, 3> signs{};
  LatticePoint t;
  for (int i = 0; i < 3; ++i) {
    const int j = axis_index(next.perm_[i]);
    perm[i] = perm_[j];
    signs[i] = next.signs_[i] * signs_[j];
    t[axis_at(i)] = next.signs_[i] * translation_[axis_at(j)] + next.translation_[axis_at(i)];
  }
  return LatticeSymmetry(perm, signs, t);
}

LatticeSymmetry LatticeSymmetry::inverse() const {
  // p[perm[i]] = s[i] (out[i] - t[i])
  std::array<Axis, 3> perm{};
  std::array<int, 3> signs{};
  LatticePoint t;
  for (int i = 0; i < 3; ++i) {
    const int j = axis_index(perm_[i]);
    perm[j] = axis_at(i);
    signs[j] = signs_[i];
    t[axis_at(j)] = -signs_[i] * translation_[axis_at(i)];
  }
  return LatticeSymmetry(perm, signs, t);
}

LatticeSymmetry LatticeSymmetry::with_translation(LatticePoint t) const {
  return LatticeSymmetry(perm_, signs_, t);
}

Axis LatticeSymmetry::image_axis(Axis a) const {
  for (int i = 0; i < 3; ++i) {
    if (perm_[i] == a) return axis_at(i);
  }
  return a;
}

bool LatticeSymmetry::preserves_orientation() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (axis_index(perm_[i]) > axis_index(perm_[j])) ++inversions;
    }
  }
  const int parity = inversions % 2 == 0 ? 1 : -1;
  return parity * signs_[0] * signs_[1] * signs_[2] == 1;
}

LatticePolygon apply_symmetry(const LatticePolygon& p, const LatticeSymmetry& g) {
  std::vector<LatticePoint> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(g.apply(v));
  return LatticePolygon::from_trusted_corners(std::move(out));
}

// --- canonical keys ---------------------------------------------------------

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  if (hex.size() % 6 != 0) throw Error(ErrorCode::MalformedInput, "key length is not a multiple of 3 bytes");
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::MalformedInput, "key is not lowercase hex");
    bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  return CanonicalKey(std::move(bytes));
}

LatticePolygon CanonicalKey::decode() const {
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i + 2 < bytes_.size(); i += 3) pts.push_back({bytes_[i], bytes_[i + 1], bytes_[i + 2]});
  return LatticePolygon::from_vertices(pts);
}

namespace {

// Writes the cycle starting at `start`, walking in `dir`, into `out` if it is
// lexicographically smaller than `out` (or `out` is unset).
bool improve(std::span<const LatticePoint> pts, std::size_t start, int dir, std::vector<LatticePoint>& out,
             bool have) {
  const std::size_t n = pts.size();
  std::size_t idx = start;
  if (have) {
    bool smaller = false;
    for (std::size_t k = 0; k < n; ++k) {
      const auto c = pts[idx] <=> out[k];
      if (c < 0) {
        smaller = true;
        break;
      }
      if (c > 0) return false;
      idx = dir > 0 ? (idx + 1) % n : (idx + n - 1) % n;
    }
    if (!smaller) return false;
  }
  idx = start;
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = pts[idx];
    idx = dir > 0 ? (idx + 1) % n : (idx + n - 1) % n;
  }
  return true;
}

}  // namespace

std::vector<LatticePoint> least_rotation(std::span<const LatticePoint> cycle) {
  std::vector<LatticePoint> best(cycle.size());
  if (cycle.empty()) return best;
  const std::size_t m = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  improve(cycle, m, +1, best, false);
  improve(cycle, m, -1, best, true);
  return best;
}

CanonicalKey canonical_form(const LatticePolygon& p) {
  const std::size_t n = p.size();
  std::vector<LatticePoint> image(n), best(n);
  bool have = false;
  for (const auto& g : LatticeSymmetry::all()) {
    LatticePoint lo{1 << 30, 1 << 30, 1 << 30};
    for (std::size_t i = 0; i < n; ++i) {
      image[i] = g.apply(p.vertex(i));
      for (Axis a : kAxes) lo[a] = std::min(lo[a], image[i][a]);
    }
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      image[i] = image[i] - lo;
      if (image[i] < image[m]) m = i;
    }
    if (improve(image, m, +1, best, have)) have = true;
    improve(image, m, -1, best, have);
  }
  std::vector<std::uint8_t> bytes;
  bytes.reserve(3 * n);
  for (const auto& v : best) {
    bytes.push_back(static_cast<std::uint8_t>(v.x));
    bytes.push_back(static_cast<std::uint8_t>(v.y));
    bytes.push_back(static_cast<std::uint8_t>(v.z));
  }
  return CanonicalKey(std::move(bytes));
}

}  // namespace latticestick
