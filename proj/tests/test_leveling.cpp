#include <random>

#include "doctest.h"
#include "latticestick/census.hpp"
#include "latticestick/invariants.hpp"
#include "latticestick/leveling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace latticestick;
using fixture::example;
using fixture::square;

namespace {

LaurentPoly jones_of(const LatticePolygon& p) { return jones(simplify(project(p))); }

}  // namespace

TEST_CASE("level_profile of the square") {
  const auto z = level_profile(square(), Axis::Z);
  REQUIRE(z.levels.size() == 1);
  CHECK(z.levels[0].coordinate == 0);
  CHECK(z.levels[0].endpoints == 0);
  CHECK(z.levels[0].sticks == 4);

  const auto x = level_profile(square(), Axis::X);
  REQUIRE(x.levels.size() == 2);
  CHECK(x.levels[0].coordinate == 0);
  CHECK(x.levels[1].coordinate == 1);
  CHECK(x.levels[0].endpoints == 2);
  CHECK(x.levels[1].endpoints == 2);
  CHECK(x.total_endpoints() == 2 * stick_counts(square()).nx);
}

TEST_CASE("census trefoil has four levels of two endpoints per axis") {
  const LatticePolygon t = example("trefoil.json");
  for (Axis a : kAxes) {
    const auto prof = level_profile(t, a);
    REQUIRE(prof.levels.size() == 4);
    for (const auto& l : prof.levels) CHECK(l.endpoints == 2);
  }
  CHECK(is_properly_leveled(t));
  CHECK(is_properly_leveled(example("figure_eight.json")));
  CHECK_FALSE(is_properly_leveled(square()));
}

TEST_CASE("a shared level breaks proper leveling and make_properly_leveled repairs it") {
  const LatticePolygon merged = fixture::trefoil_with_shared_level();
  CHECK_FALSE(is_properly_leveled(merged));
  CHECK(level_profile(merged, Axis::X).levels.size() == 4);
  const LatticePolygon fixed = make_properly_leveled(merged);
  CHECK(is_properly_leveled(fixed));
  CHECK(fixed.size() == merged.size());
  CHECK(stick_counts(fixed) == stick_counts(merged));
  CHECK(jones_of(fixed) == jones_of(merged));
  CHECK(classify(fixed) == classify(merged));
}

TEST_CASE("make_properly_leveled examples and errors") {
  const LatticePolygon t = example("trefoil.json");
  CHECK(make_properly_leveled(t) == t);
  CHECK_THROWS_AS(make_properly_leveled(square()), Error);
  try {
    make_properly_leveled(square());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PlanarPolygon);
  }
}

TEST_CASE("property: leveling random polygons preserves composition and Jones, and is idempotent") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const LatticePolygon p = oracle::random_polygon(rng, 30, 50);
    const LatticePolygon q = make_properly_leveled(p);
    CHECK(is_properly_leveled(q));
    CHECK(stick_counts(q) == stick_counts(p));
    CHECK(make_properly_leveled(q) == q);
    CHECK(jones_of(q) == jones_of(p));
    for (Axis a : kAxes) CHECK(static_cast<int>(level_profile(q, a).levels.size()) == stick_counts(q)[a]);
  }
}

TEST_CASE("duplicate level pairs") {
  CHECK(duplicate_level_pairs(example("trefoil.json")).empty());
  CHECK_THROWS_AS(duplicate_level_pairs(square()), Error);

  // Each level of a properly leveled polygon carries a single arc, so two
  // sticks sharing both levels close the polygon by themselves: the axis has
  // exactly two sticks and the pair spans levels (1,2).
  std::uint64_t with_pairs = 0;
  for (const Composition c : {Composition{3, 3, 2}, Composition{4, 3, 2}, Composition{4, 3, 3}}) {
    enumerate_properly_leveled(c, [&](const LatticePolygon& p) {
      const auto pairs = duplicate_level_pairs(p);
      if (pairs.empty()) return;
      ++with_pairs;
      for (const auto& [s, t] : pairs) {
        CHECK(level_pair(s) == level_pair(t));
        CHECK(stick_counts(p)[s.axis] == 2);
        CHECK(s.lo == 1);
        CHECK(s.hi == 2);
      }
      CHECK(classify(p).is_trivial());
    });
  }
  CHECK(with_pairs > 0);
}

TEST_CASE("boundary level report") {
  CHECK(boundary_level_report(example("trefoil.json")).conforms());
  CHECK(boundary_level_report(example("figure_eight.json")).conforms());
  CHECK_THROWS_AS(boundary_level_report(square()), Error);

  // The 6-stick unknot around a unit cube has length-1 boundary sticks.
  const LatticePolygon hexagon = LatticePolygon::from_vertices(
      std::vector<LatticePoint>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {1, 2, 2}, {1, 1, 2}});
  REQUIRE(is_properly_leveled(hexagon));
  const BoundaryReport r = boundary_level_report(hexagon);
  CHECK_FALSE(r.conforms());
  CHECK(r.axes[0].low.min_incident_length == 1);
  CHECK(r.axes[0].low.stick_count == 2);
  CHECK(r.axes[0].low.connected);
}

TEST_CASE("level report JSON") {
  const auto j = level_report_json(example("trefoil.json"), Axis::X);
  CHECK(j["axis"] == "x");
  CHECK(j["levels"].size() == 4);
  CHECK(j["boundary"]["low"]["conforms"] == true);
  CHECK(level_report_json(square(), Axis::X)["boundary"].is_null());
}
