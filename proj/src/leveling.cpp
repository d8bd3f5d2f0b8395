#include "latticestick/leveling.hpp"

#include <algorithm>
#include <map>

namespace latticestick {

int LevelProfile::total_endpoints() const {
  int total = 0;
  for (const auto& l : levels) total += l.endpoints;
  return total;
}

LevelProfile level_profile(const LatticePolygon& p, Axis a) {
  std::map<int, LevelEntry> by_coord;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Stick s = stick_at(p, i);
    if (s.axis == a) continue;
    auto& e = by_coord[p.vertex(i)[a]];
    e.coordinate = p.vertex(i)[a];
    ++e.sticks;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Stick s = stick_at(p, i);
    if (s.axis != a) continue;
    // The neighbouring sticks are perpendicular, so both ends sit on levels.
    ++by_coord[s.lo].endpoints;
    ++by_coord[s.hi].endpoints;
  }
  LevelProfile out;
  out.axis = a;
  for (auto& [k, e] : by_coord) out.levels.push_back(e);
  return out;
}

bool is_properly_leveled(const LatticePolygon& p) {
  for (Axis a : kAxes) {
    for (const auto& l : level_profile(p, a).levels) {
      if (l.endpoints != 2) return false;
    }
  }
  return true;
}

namespace {

// Arc index per vertex for axis a: maximal runs of consecutive non-a edges,
// numbered by the smallest vertex index they contain.
std::vector<int> arc_ids(const LatticePolygon& p, Axis a) {
  const std::size_t n = p.size();
  std::size_t first_a = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.edge_axis(i) == a) {
      first_a = i;
      break;
    }
  }
  std::vector<int> raw(n, -1);
  int id = -1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t v = (first_a + 1 + k) % n;
    // Vertex v starts a new arc when the edge arriving at it is an a-edge.
    if (p.edge_axis((v + n - 1) % n) == a) ++id;
    raw[v] = id;
  }
  std::vector<int> first_vertex(static_cast<std::size_t>(id + 1), static_cast<int>(n));
  for (std::size_t v = 0; v < n; ++v) {
    first_vertex[raw[v]] = std::min(first_vertex[raw[v]], static_cast<int>(v));
  }
  std::vector<int> order(first_vertex.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int l, int r) { return first_vertex[l] < first_vertex[r]; });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  for (auto& r : raw) r = rank[r];
  return raw;
}

void require_properly_leveled(const LatticePolygon& p) {
  if (!is_properly_leveled(p)) throw Error(ErrorCode::NotProperlyLeveled, "polygon is not properly leveled");
}

}  // namespace

LatticePolygon make_properly_leveled(const LatticePolygon& p) {
  const Composition c = stick_counts(p);
  for (Axis a : kAxes) {
    if (c[a] == 0) {
      throw Error(ErrorCode::PlanarPolygon, std::string("no ") + axis_name(a) + "-sticks; polygon is planar");
    }
  }
  const std::size_t n = p.size();
  std::vector<LatticePoint> verts = p.vertices();
  for (Axis a : kAxes) {
    const std::vector<int> arc = arc_ids(p, a);
    const int arc_count = *std::max_element(arc.begin(), arc.end()) + 1;

    // Rank of each arc among the arcs sharing its plane, in order of appearance.
    std::map<int, int> seen_in_plane;
    std::vector<int> offset(static_cast<std::size_t>(arc_count), -1);
    std::vector<int> plane_of_arc(static_cast<std::size_t>(arc_count), 0);
    for (std::size_t v = 0; v < n; ++v) plane_of_arc[arc[v]] = p.vertex(v)[a];
    for (int id = 0; id < arc_count; ++id) offset[id] = seen_in_plane[plane_of_arc[id]]++;
    int slab = 1;
    for (const auto& [k, count] : seen_in_plane) slab = std::max(slab, count);

    // Arcs move to distinct planes inside [k, k+1); puncturing sticks span the
    // whole slab, so nothing is crossed on the way. Then compress to 1..n.
    std::vector<long long> scaled(n);
    for (std::size_t v = 0; v < n; ++v) {
      scaled[v] = static_cast<long long>(p.vertex(v)[a]) * slab + offset[arc[v]];
    }
    std::vector<long long> distinct = scaled;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v) {
      verts[v][a] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), scaled[v]) - distinct.begin()) + 1;
    }
  }
  return LatticePolygon::from_vertices(verts);
}

std::vector<std::pair<Stick, Stick>> duplicate_level_pairs(const LatticePolygon& p) {
  require_properly_leveled(p);
  const auto all = sticks(p);
  std::vector<std::pair<Stick, Stick>> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].axis == all[j].axis && all[i].lo == all[j].lo && all[i].hi == all[j].hi) {
        out.emplace_back(all[i], all[j]);
      }
    }
  }
  return out;
}

namespace {

BoundaryLevel describe_level(const LatticePolygon& p, Axis a, int k) {
  const std::size_t n = p.size();
  BoundaryLevel out;
  out.coordinate = k;
  out.min_incident_length = 1 << 30;
  int runs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Stick s = stick_at(p, i);
    if (s.axis == a) {
      if (s.lo == k || s.hi == k) out.min_incident_length = std::min(out.min_incident_length, s.length());
      continue;
    }
    if (p.vertex(i)[a] != k) continue;
    ++out.stick_count;
    const std::size_t prev = (i + n - 1) % n;
    const bool prev_in_level = p.edge_axis(prev) != a && p.vertex(prev)[a] == k;
    if (!prev_in_level) ++runs;
  }
  if (out.stick_count == static_cast<int>(n)) runs = 1;
  if (out.min_incident_length == (1 << 30)) out.min_incident_length = 0;
  out.connected = runs == 1;
  return out;
}

}  // namespace

bool BoundaryReport::conforms() const {
  return std::all_of(axes.begin(), axes.end(), [](const auto& r) { return r.conforms(); });
}

BoundaryReport boundary_level_report(const LatticePolygon& p) {
  require_properly_leveled(p);
  BoundaryReport report;
  for (Axis a : kAxes) {
    const auto profile = level_profile(p, a);
    auto& r = report.axes[axis_index(a)];
    r.axis = a;
    r.low = describe_level(p, a, profile.levels.front().coordinate);
    r.high = describe_level(p, a, profile.levels.back().coordinate);
  }
  return report;
}

nlohmann::json to_json(const LevelProfile& profile) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : profile.levels) {
    levels.push_back({{"coordinate", l.coordinate}, {"endpoints", l.endpoints}, {"sticks", l.sticks}});
  }
  return {{"axis", std::string(1, axis_name(profile.axis))}, {"levels", std::move(levels)}};
}

nlohmann::json to_json(const BoundaryLevel& level) {
  return {{"coordinate", level.coordinate},
          {"sticks", level.stick_count},
          {"connected", level.connected},
          {"min_incident_length", level.min_incident_length},
          {"conforms", level.conforms()}};
}

nlohmann::json level_report_json(const LatticePolygon& p, Axis a) {
  nlohmann::json out = to_json(level_profile(p, a));
  if (is_properly_leveled(p)) {
    const auto& r = boundary_level_report(p).axes[axis_index(a)];
    out["boundary"] = {{"low", to_json(r.low)}, {"high", to_json(r.high)}};
  } else {
    out["boundary"] = nullptr;
  }
  return out;
}

}  // namespace latticestick
