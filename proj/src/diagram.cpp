#include "latticestick/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "latticestick/leveling.hpp"

namespace latticestick {

// --- PD codes ---------------------------------------------------------------

std::string PDCode::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& x = crossings[i];
    if (i > 0) out << ", ";
    out << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  return out.str();
}

PDCode PDCode::parse(std::string_view text) {
  PDCode pd;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto fail = [&] { return Error(ErrorCode::MalformedInput, "cannot parse PD code '" + std::string(text) + "'"); };
  skip_space();
  while (i < text.size()) {
    if (text[i] != 'X') throw fail();
    ++i;
    if (i >= text.size() || (text[i] != '(' && text[i] != '[')) throw fail();
    const char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw fail();
      x[k] = std::stoi(std::string(text.substr(i, j - i)));
      i = j;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (k < 3) {
        if (i >= text.size() || text[i] != ',') throw fail();
        ++i;
      }
    }
    if (i >= text.size() || text[i] != close) throw fail();
    ++i;
    pd.crossings.push_back(x);
    skip_space();
  }
  return pd;
}

// --- Diagram ----------------------------------------------------------------

namespace {

// Renumbers crossings 0..n-1 by first appearance along the passage sequence.
Diagram renumbered(const std::vector<Passage>& passages, const std::vector<int>& signs) {
  std::vector<int> new_id(signs.size(), -1);
  std::vector<int> new_signs;
  std::vector<Passage> out;
  out.reserve(passages.size());
  for (const auto& p : passages) {
    int& id = new_id[static_cast<std::size_t>(p.crossing)];
    if (id < 0) {
      id = static_cast<int>(new_signs.size());
      new_signs.push_back(signs[static_cast<std::size_t>(p.crossing)]);
    }
    out.push_back({id, p.over});
  }
  return Diagram(std::move(out), std::move(new_signs));
}

}  // namespace

Diagram::Diagram(std::vector<Passage> passages, std::vector<int> signs)
    : passages_(std::move(passages)), signs_(std::move(signs)) {
  if (passages_.size() != 2 * signs_.size()) {
    throw Error(ErrorCode::MalformedInput, "a knot diagram has two passages per crossing");
  }
  std::vector<int> overs(signs_.size(), 0), unders(signs_.size(), 0);
  for (const auto& p : passages_) {
    if (p.crossing < 0 || static_cast<std::size_t>(p.crossing) >= signs_.size()) {
      throw Error(ErrorCode::MalformedInput, "passage refers to an unknown crossing");
    }
    ++(p.over ? overs : unders)[static_cast<std::size_t>(p.crossing)];
  }
  for (std::size_t c = 0; c < signs_.size(); ++c) {
    if (overs[c] != 1 || unders[c] != 1) {
      throw Error(ErrorCode::MalformedInput, "crossing " + std::to_string(c) + " needs one over and one under passage");
    }
    if (signs_[c] != 1 && signs_[c] != -1) throw Error(ErrorCode::MalformedInput, "crossing signs are +1 or -1");
  }
}

int Diagram::writhe() const {
  int w = 0;
  for (int s : signs_) w += s;
  return w;
}

Diagram Diagram::mirror() const {
  std::vector<Passage> p = passages_;
  for (auto& x : p) x.over = !x.over;
  std::vector<int> s = signs_;
  for (auto& x : s) x = -x;
  return Diagram(std::move(p), std::move(s));
}

std::vector<int> Diagram::gauss_code() const {
  std::vector<int> label(signs_.size(), 0);
  int next = 0;
  std::vector<int> out;
  out.reserve(passages_.size());
  for (const auto& p : passages_) {
    int& l = label[static_cast<std::size_t>(p.crossing)];
    if (l == 0) l = ++next;
    out.push_back(p.over ? l : -l);
  }
  return out;
}

Diagram Diagram::from_pd(const PDCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  if (n == 0) return {};
  const int L = 2 * n;
  auto next = [L](int label) { return label % L + 1; };
  std::vector<Passage> passages(static_cast<std::size_t>(L), Passage{-1, false});
  std::vector<int> signs(static_cast<std::size_t>(n));
  auto place = [&](int label, Passage p) {
    if (label < 1 || label > L) throw Error(ErrorCode::MalformedInput, "PD arc label out of range");
    auto& slot = passages[static_cast<std::size_t>(label - 1)];
    if (slot.crossing >= 0) throw Error(ErrorCode::MalformedInput, "PD arc label enters two crossings");
    slot = p;
  };
  for (int k = 0; k < n; ++k) {
    const auto& [a, b, c, d] = pd.crossings[static_cast<std::size_t>(k)];
    if (c != next(a)) throw Error(ErrorCode::MalformedInput, "PD under-strand labels are not consecutive");
    place(a, {k, false});
    if (b == next(d)) {
      signs[static_cast<std::size_t>(k)] = 1;
      place(d, {k, true});
    } else if (d == next(b)) {
      signs[static_cast<std::size_t>(k)] = -1;
      place(b, {k, true});
    } else {
      throw Error(ErrorCode::MalformedInput, "PD over-strand labels are not consecutive");
    }
  }
  return renumbered(passages, signs);
}

Diagram Diagram::braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw Error(ErrorCode::InvalidArgument, "braid needs at least one strand");
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) >= strands) throw Error(ErrorCode::InvalidArgument, "braid letter out of range");
  }
  // Strands run downward, positions increase to the right. For sigma_i the
  // strand moving from position i+1 to i passes over (a positive crossing);
  // for its inverse the strand moving from i to i+1 passes over.
  std::vector<Passage> passages;
  int pos = 0;
  do {
    for (std::size_t k = 0; k < word.size(); ++k) {
      const int i = std::abs(word[k]) - 1;
      if (pos != i && pos != i + 1) continue;
      const bool moving_left = pos == i + 1;
      const bool over = word[k] > 0 ? moving_left : !moving_left;
      passages.push_back({static_cast<int>(k), over});
      pos = moving_left ? i : i + 1;
    }
  } while (pos != 0);
  if (passages.size() != 2 * word.size()) {
    throw Error(ErrorCode::InvalidArgument, "braid closure has more than one component");
  }
  std::vector<int> signs;
  for (int letter : word) signs.push_back(letter > 0 ? 1 : -1);
  return renumbered(passages, signs);
}

std::size_t crossing_number(const Diagram& d) { return d.crossing_count(); }

PDCode pd_code(const Diagram& d) {
  if (d.crossing_count() == 0) {
    throw Error(ErrorCode::UnknottedNoCrossings, "a crossingless diagram has no PD code");
  }
  const int L = static_cast<int>(d.passages().size());
  std::vector<int> under_at(d.crossing_count()), over_at(d.crossing_count());
  for (int i = 0; i < L; ++i) {
    const auto& p = d.passages()[static_cast<std::size_t>(i)];
    (p.over ? over_at : under_at)[static_cast<std::size_t>(p.crossing)] = i;
  }
  auto in_label = [](int i) { return i + 1; };
  auto out_label = [L](int i) { return (i + 1) % L + 1; };
  PDCode pd;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const int u = under_at[c], o = over_at[c];
    if (d.signs()[c] > 0) {
      pd.crossings.push_back({in_label(u), out_label(o), out_label(u), in_label(o)});
    } else {
      pd.crossings.push_back({in_label(u), in_label(o), out_label(u), out_label(o)});
    }
  }
  return pd;
}

// --- simplification -----------------------------------------------------------

namespace {

Diagram without(const Diagram& d, int c1, int c2) {
  std::vector<Passage> kept;
  for (const auto& p : d.passages()) {
    if (p.crossing != c1 && p.crossing != c2) kept.push_back(p);
  }
  // Keep the removed crossings' slots, renumbering drops them.
  return renumbered(kept, d.signs());
}

std::optional<Diagram> reidemeister_one(const Diagram& d) {
  const auto& ps = d.passages();
  const std::size_t L = ps.size();
  for (std::size_t i = 0; i < L; ++i) {
    if (ps[i].crossing == ps[(i + 1) % L].crossing) return without(d, ps[i].crossing, ps[i].crossing);
  }
  return std::nullopt;
}

// A bigon: two crossings met consecutively on both strands, the same strand
// over at both, with opposite signs (equal signs mean the two strand pieces
// bound regions on opposite sides, which is not a face).
std::optional<Diagram> reidemeister_two(const Diagram& d) {
  const auto& ps = d.passages();
  const std::size_t L = ps.size();
  std::vector<std::array<std::size_t, 2>> at(d.crossing_count(), {L, L});
  for (std::size_t i = 0; i < L; ++i) {
    auto& slots = at[static_cast<std::size_t>(ps[i].crossing)];
    (slots[0] == L ? slots[0] : slots[1]) = i;
  }
  auto other = [&](std::size_t i) {
    const auto& slots = at[static_cast<std::size_t>(ps[i].crossing)];
    return slots[0] == i ? slots[1] : slots[0];
  };
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t j = (i + 1) % L;
    const int c1 = ps[i].crossing, c2 = ps[j].crossing;
    if (c1 == c2 || ps[i].over != ps[j].over) continue;
    if (d.signs()[static_cast<std::size_t>(c1)] == d.signs()[static_cast<std::size_t>(c2)]) continue;
    const std::size_t a = other(i), b = other(j);
    if ((a + 1) % L == b || (b + 1) % L == a) return without(d, c1, c2);
  }
  return std::nullopt;
}

}  // namespace

Diagram simplify(const Diagram& d) {
  Diagram cur = d;
  while (cur.crossing_count() > 0) {
    if (auto r1 = reidemeister_one(cur)) {
      cur = std::move(*r1);
      continue;
    }
    if (auto r2 = reidemeister_two(cur)) {
      cur = std::move(*r2);
      continue;
    }
    break;
  }
  return cur;
}

// --- projection ---------------------------------------------------------------

namespace {

using i128 = __int128;

struct P2 {
  long long x = 0;
  long long y = 0;
};

i128 orient(const P2& a, const P2& b, const P2& c) {
  return static_cast<i128>(b.x - a.x) * (c.y - a.y) - static_cast<i128>(b.y - a.y) * (c.x - a.x);
}

int sgn(i128 v) { return (v > 0) - (v < 0); }

struct Hit {
  i128 num;  // parameter num/den along the segment, den > 0
  i128 den;
  int crossing;
  bool over;
};

bool param_less(const Hit& a, const Hit& b) { return a.num * b.den < b.num * a.den; }

}  // namespace

Diagram project(const LatticePolygon& poly) {
  const std::size_t n = poly.size();
  const auto [lo, hi] = bounding_box(poly);
  int diameter = 1;
  for (Axis a : kAxes) diameter = std::max(diameter, hi[a] - lo[a]);
  const long long K = 4LL * diameter;

  // Traverse from the lexicographically least vertex, keeping orientation.
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (poly.vertex(i) < poly.vertex(start)) start = i;
  }
  std::vector<LatticePoint> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = poly.vertex(start + i) - lo;

  // Scaled by K^2 the sheared coordinates are integers.
  std::vector<P2> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = {K * K * v[i].x + K * v[i].z, K * K * v[i].y + v[i].z};
  }

  std::vector<std::vector<Hit>> hits(n);
  std::vector<int> signs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const P2 &p1 = s[i], &p2 = s[(i + 1) % n], &q1 = s[j], &q2 = s[(j + 1) % n];
      const i128 o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
      const i128 o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
      const bool separated = (sgn(o1) * sgn(o2) > 0) || (sgn(o3) * sgn(o4) > 0);
      if (separated) continue;
      if (o1 == 0 && o2 == 0) {
        // Collinear: the shear guarantees disjoint projections here.
        auto dot_range = [](const P2& a, const P2& b, const P2& c) {
          return static_cast<i128>(c.x - a.x) * (b.x - a.x) + static_cast<i128>(c.y - a.y) * (b.y - a.y);
        };
        const i128 len = dot_range(p1, p2, p2);
        const i128 t1 = dot_range(p1, p2, q1), t2 = dot_range(p1, p2, q2);
        if (std::max(t1, t2) < 0 || std::min(t1, t2) > len) continue;
        throw std::logic_error("degenerate projection: overlapping segments");
      }
      if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
        throw std::logic_error("degenerate projection: segment touches a vertex");
      }
      // Proper crossing. Parameters along each segment.
      i128 ti_num = o3, ti_den = o3 - o4;
      i128 tj_num = o1, tj_den = o1 - o2;
      if (ti_den < 0) ti_num = -ti_num, ti_den = -ti_den;
      if (tj_den < 0) tj_num = -tj_num, tj_den = -tj_den;
      // Heights at the crossing, compared exactly.
      const i128 zi0 = v[i].z, dzi = v[(i + 1) % n].z - v[i].z;
      const i128 zj0 = v[j].z, dzj = v[(j + 1) % n].z - v[j].z;
      const i128 zi = (zi0 * ti_den + dzi * ti_num) * tj_den;
      const i128 zj = (zj0 * tj_den + dzj * tj_num) * ti_den;
      if (zi == zj) throw std::logic_error("projection crossing between intersecting sticks");
      const bool i_over = zi > zj;
      const P2 di{p2.x - p1.x, p2.y - p1.y}, dj{q2.x - q1.x, q2.y - q1.y};
      const P2& over_dir = i_over ? di : dj;
      const P2& under_dir = i_over ? dj : di;
      const i128 cross = static_cast<i128>(over_dir.x) * under_dir.y - static_cast<i128>(over_dir.y) * under_dir.x;
      const int id = static_cast<int>(signs.size());
      signs.push_back(cross > 0 ? 1 : -1);
      hits[i].push_back({ti_num, ti_den, id, i_over});
      hits[j].push_back({tj_num, tj_den, id, !i_over});
    }
  }
  std::vector<Passage> passages;
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(hits[i].begin(), hits[i].end(), param_less);
    for (const auto& h : hits[i]) passages.push_back({h.crossing, h.over});
  }
  return renumbered(passages, signs);
}

// --- middle z-levels -------------------------------------------------------------

namespace {

struct ZLevels {
  std::vector<int> coords;  // sorted; rank r+1 is coords[r]
  int rank(int z) const {
    return static_cast<int>(std::lower_bound(coords.begin(), coords.end(), z) - coords.begin()) + 1;
  }
};

ZLevels z_levels(const LatticePolygon& p) {
  ZLevels out;
  for (const auto& l : level_profile(p, Axis::Z).levels) out.coords.push_back(l.coordinate);
  return out;
}

bool z_structure_matches(const LatticePolygon& p, const ZLevels& zl) {
  if (stick_counts(p).nz != 4 || zl.coords.size() != 4) return false;
  std::multiset<std::pair<int, int>> pairs;
  for (const auto& s : sticks(p)) {
    if (s.axis == Axis::Z) pairs.insert({zl.rank(s.lo), zl.rank(s.hi)});
  }
  const std::multiset<std::pair<int, int>> expected{{1, 4}, {1, 3}, {2, 4}, {2, 3}};
  return pairs == expected;
}

// Vertex indices of the single arc lying in the plane z = k, in traversal
// order from one z-stick endpoint to the other.
std::vector<std::size_t> arc_in_z_plane(const LatticePolygon& p, int k) {
  const std::size_t n = p.size();
  std::size_t first = n;
  for (std::size_t i = 0; i < n; ++i) {
    // Arc start: vertex on the plane entered by a z-edge.
    if (p.vertex(i).z == k && p.edge_axis((i + n - 1) % n) == Axis::Z) {
      first = i;
      break;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = first; out.empty() || p.edge_axis(out.back()) != Axis::Z; i = (i + 1) % n) {
    out.push_back(i % n);
  }
  return out;
}

constexpr int kEast = 1, kNorth = 2, kWest = 4, kSouth = 8;

struct ArcTrace {
  std::map<std::pair<int, int>, int> interior_dirs;       // lattice point -> direction mask
  std::set<std::pair<int, int>> endpoints;                 // the two arc ends
  std::set<std::array<int, 4>> unit_edges;                 // (x0,y0,x1,y1), lexicographically ordered ends
};

ArcTrace trace_arc(const LatticePolygon& p, const std::vector<std::size_t>& arc) {
  ArcTrace t;
  const auto& a = p.vertex(arc.front());
  const auto& b = p.vertex(arc.back());
  t.endpoints = {{a.x, a.y}, {b.x, b.y}};
  for (std::size_t k = 0; k + 1 < arc.size(); ++k) {
    const auto& from = p.vertex(arc[k]);
    const auto& to = p.vertex(arc[k + 1]);
    const int dx = (to.x > from.x) - (to.x < from.x);
    const int dy = (to.y > from.y) - (to.y < from.y);
    const int fwd = dx > 0 ? kEast : dx < 0 ? kWest : dy > 0 ? kNorth : kSouth;
    const int back = fwd == kEast ? kWest : fwd == kWest ? kEast : fwd == kNorth ? kSouth : kNorth;
    int x = from.x, y = from.y;
    while (x != to.x || y != to.y) {
      const int nx = x + dx, ny = y + dy;
      t.interior_dirs[{x, y}] |= fwd;
      t.interior_dirs[{nx, ny}] |= back;
      t.unit_edges.insert(std::min(std::array<int, 4>{x, y, nx, ny}, std::array<int, 4>{nx, ny, x, y}));
      x = nx;
      y = ny;
    }
  }
  for (const auto& e : t.endpoints) t.interior_dirs.erase(e);
  return t;
}

}  // namespace

bool has_middle_level_structure(const LatticePolygon& p) {
  if (!is_properly_leveled(p)) return false;
  return z_structure_matches(p, z_levels(p));
}

MiddleLevelReport middle_level_crossings(const LatticePolygon& p) {
  if (!is_properly_leveled(p)) throw Error(ErrorCode::NotProperlyLeveled, "polygon is not properly leveled");
  const ZLevels zl = z_levels(p);
  if (!z_structure_matches(p, zl)) {
    throw Error(ErrorCode::WrongZStructure, "expected four z-sticks joining z-levels 14, 13, 24, 23");
  }
  const ArcTrace two = trace_arc(p, arc_in_z_plane(p, zl.coords[1]));
  const ArcTrace three = trace_arc(p, arc_in_z_plane(p, zl.coords[2]));

  MiddleLevelReport r;
  // Overlaps: connected runs of shared unit edges.
  std::vector<std::array<int, 4>> shared;
  for (const auto& e : two.unit_edges) {
    if (three.unit_edges.count(e)) shared.push_back(e);
  }
  std::vector<int> parent(shared.size());
  for (std::size_t i = 0; i < shared.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < shared.size(); ++i) {
    for (std::size_t j = i + 1; j < shared.size(); ++j) {
      const auto& a = shared[i];
      const auto& b = shared[j];
      const bool touch = (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[2] && a[1] == b[3]) ||
                         (a[2] == b[0] && a[3] == b[1]) || (a[2] == b[2] && a[3] == b[3]);
      if (touch) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    }
  }
  for (std::size_t i = 0; i < shared.size(); ++i) {
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++r.overlap_count;
  }
  // Isolated contact points.
  for (const auto& [pt, d2] : two.interior_dirs) {
    auto it = three.interior_dirs.find(pt);
    if (it == three.interior_dirs.end()) continue;
    const int d3 = it->second;
    if (d2 & d3) continue;  // part of an overlap
    const bool straight2 = d2 == (kEast | kWest) || d2 == (kNorth | kSouth);
    const bool straight3 = d3 == (kEast | kWest) || d3 == (kNorth | kSouth);
    if (straight2 && straight3) {
      ++r.transverse_count;
    } else {
      ++r.tangency_count;
    }
  }
  return r;
}

nlohmann::json to_json(const MiddleLevelReport& r) {
  return {{"transverse", r.transverse_count}, {"tangency", r.tangency_count}, {"overlap", r.overlap_count}};
}

// --- lattice Reidemeister II ------------------------------------------------------

namespace {

struct BoxRegion {
  LatticePoint lo;
  LatticePoint hi;
};

bool stick_meets_box(const Stick& s, const BoxRegion& box) {
  const LatticePoint a = s.low_end(), b = s.high_end();
  for (Axis ax : kAxes) {
    if (std::max(a[ax], box.lo[ax]) > std::min(b[ax], box.hi[ax])) return false;
  }
  return true;
}

// Tries to slide the base t2 of the U formed by edges (e1, e2, e3) past the
// single stick `single`. Returns the re-leveled polygon on success.
std::optional<LatticePolygon> try_slide(const LatticePolygon& p, std::size_t single, std::size_t e1, std::size_t e2,
                                        std::size_t e3, std::size_t crossings_before) {
  const std::size_t n = p.size();
  const Stick s = stick_at(p, single);
  const Stick t1 = stick_at(p, e1), t2 = stick_at(p, e2), t3 = stick_at(p, e3);
  if (t2.axis != s.axis || t1.axis != t3.axis || t1.axis == s.axis || t1.axis == Axis::Z || s.axis == Axis::Z) {
    return std::nullopt;
  }
  const Axis u = s.axis;   // direction of s and of the U's base
  const Axis w = t1.axis;  // direction of the U's legs
  const int base_w = p.vertex(e2)[w];
  const int s_w = p.vertex(single)[w];
  const int a1 = p.vertex(e1 + 1)[u];  // leg positions along u
  const int a3 = p.vertex(e3)[u];
  const int far1 = p.vertex(e1)[w];
  const int far3 = p.vertex(e3 + 1)[w];
  auto strictly_between = [](int x, int lo, int hi) { return std::min(lo, hi) < x && x < std::max(lo, hi); };
  // Both legs leave the base on the same side and cross the line of s.
  if (!strictly_between(s_w, base_w, far1) || !strictly_between(s_w, base_w, far3)) return std::nullopt;
  if (!strictly_between(a1, s.lo, s.hi) || !strictly_between(a3, s.lo, s.hi)) return std::nullopt;
  // The enclosed rectangle has no interior lattice point.
  if (std::abs(a3 - a1) > 1 && std::abs(s_w - base_w) > 1) return std::nullopt;

  // Nothing but the U itself may meet the swept rectangle in the U's plane.
  BoxRegion sweep;
  const int plane_z = p.vertex(e2).z;
  sweep.lo[u] = std::min(a1, a3);
  sweep.hi[u] = std::max(a1, a3);
  sweep.lo[w] = std::min(base_w, s_w);
  sweep.hi[w] = std::max(base_w, s_w);
  sweep.lo.z = sweep.hi.z = plane_z;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == e1 || i == e2 || i == e3) continue;
    if (stick_meets_box(stick_at(p, i), sweep)) return std::nullopt;
  }

  // Move the base half a unit beyond s (coordinates doubled), then re-level.
  const int step = s_w > base_w ? 1 : -1;
  std::vector<LatticePoint> verts;
  verts.reserve(n);
  for (const auto& v : p.vertices()) verts.push_back({2 * v.x, 2 * v.y, 2 * v.z});
  verts[e2 % n][w] = 2 * s_w + step;
  verts[(e2 + 1) % n][w] = 2 * s_w + step;
  const LatticePolygon moved = make_properly_leveled(LatticePolygon::from_vertices(verts));
  if (crossing_number(project(moved)) + 2 != crossings_before) return std::nullopt;
  return moved;
}

}  // namespace

std::optional<LatticePolygon> lattice_r2_reduce(const LatticePolygon& p) {
  if (!is_properly_leveled(p)) throw Error(ErrorCode::NotProperlyLeveled, "polygon is not properly leveled");
  const ZLevels zl = z_levels(p);
  if (!z_structure_matches(p, zl)) return std::nullopt;
  const std::size_t n = p.size();
  const std::size_t before = crossing_number(project(p));
  const auto arc2 = arc_in_z_plane(p, zl.coords[1]);
  const auto arc3 = arc_in_z_plane(p, zl.coords[2]);
  // Edge indices of the in-plane sticks of each arc, in order.
  auto arc_edges = [](const std::vector<std::size_t>& arc) {
    return std::vector<std::size_t>(arc.begin(), arc.end() - 1);
  };
  const std::array<std::vector<std::size_t>, 2> edges{arc_edges(arc2), arc_edges(arc3)};
  for (int single_arc = 0; single_arc < 2; ++single_arc) {
    const auto& singles = edges[single_arc];
    const auto& others = edges[1 - single_arc];
    for (std::size_t s : singles) {
      for (std::size_t k = 0; k + 2 < others.size(); ++k) {
        if (auto r = try_slide(p, s % n, others[k], others[k + 1], others[k + 2], before)) return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace latticestick
