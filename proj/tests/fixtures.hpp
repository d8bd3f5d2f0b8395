#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latticestick/census.hpp"
#include "latticestick/cli.hpp"
#include "latticestick/invariants.hpp"
#include "latticestick/lattice_core.hpp"

namespace fixture {

inline latticestick::LatticePolygon example(const std::string& file_name) {
  for (const auto& e : latticestick::builtin_examples()) {
    if (e.file_name == file_name) return e.polygon;
  }
  throw std::runtime_error("no builtin example " + file_name);
}

inline latticestick::LatticePolygon square() {
  return latticestick::LatticePolygon::from_vertices(
      std::vector<latticestick::LatticePoint>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
}

// A 13-stick census trefoil with two of its x-levels merged into one plane:
// still a valid trefoil, no longer properly leveled.
inline latticestick::LatticePolygon trefoil_with_shared_level() {
  using namespace latticestick;
  std::optional<LatticePolygon> found;
  enumerate_properly_leveled({5, 4, 4}, [&](const LatticePolygon& t) {
    if (found || classify(t).label() != "3_1") return;
    for (int from = 1; from <= 5 && !found; ++from) {
      for (int to = 1; to <= 5 && !found; ++to) {
        if (from == to) continue;
        std::vector<LatticePoint> v = t.vertices();
        for (auto& p : v) {
          if (p.x == from) p.x = to;
        }
        try {
          const LatticePolygon q = LatticePolygon::from_vertices(v);
          if (q.size() == t.size() && classify(q).label() == "3_1") found = q;
        } catch (const PolygonError&) {
        }
      }
    }
  });
  if (!found) throw std::runtime_error("no level merge keeps the trefoil");
  return *found;
}

}  // namespace fixture
