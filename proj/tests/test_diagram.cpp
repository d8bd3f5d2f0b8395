#include <random>

#include "doctest.h"
#include "latticestick/census.hpp"
#include "latticestick/diagram.hpp"
#include "latticestick/invariants.hpp"
#include "latticestick/leveling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace latticestick;
using fixture::example;
using fixture::square;

namespace {

LatticePolygon poly(std::vector<LatticePoint> v) { return LatticePolygon::from_vertices(v); }

// Crossings of the sheared projection counted pair by pair with Cramer's rule
// over exact integers (strict interior intersections only).
std::size_t oracle_crossings(const LatticePolygon& p) {
  const std::size_t n = p.size();
  const auto [lo, hi] = bounding_box(p);
  long long d = 1;
  for (Axis a : kAxes) d = std::max<long long>(d, hi[a] - lo[a]);
  const long long k = 4 * d;
  auto sheared = [&](const LatticePoint& v) {
    return std::array<long long, 2>{k * k * v.x + k * v.z, k * k * v.y + v.z};
  };
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const auto a = sheared(p.vertex(i)), b = sheared(p.vertex(i + 1));
      const auto c = sheared(p.vertex(j)), e = sheared(p.vertex(j + 1));
      // a + s(b-a) = c + t(e-c)
      const __int128 m00 = b[0] - a[0], m01 = c[0] - e[0], m10 = b[1] - a[1], m11 = c[1] - e[1];
      const __int128 r0 = c[0] - a[0], r1 = c[1] - a[1];
      const __int128 det = m00 * m11 - m01 * m10;
      if (det == 0) continue;
      __int128 s = r0 * m11 - m01 * r1, t = m00 * r1 - r0 * m10;
      __int128 dd = det;
      if (dd < 0) s = -s, t = -t, dd = -dd;
      if (s > 0 && s < dd && t > 0 && t < dd) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("projection of simple polygons") {
  const Diagram d = project(square());
  CHECK(crossing_number(d) == 0);
  CHECK(d.writhe() == 0);
  CHECK_THROWS_AS(pd_code(d), Error);

  // Two x-sticks stacked above each other project onto the same segment.
  const LatticePolygon stacked = poly({{0, 0, 0}, {2, 0, 0}, {2, 0, 1}, {0, 0, 1}});
  CHECK(crossing_number(project(stacked)) == 0);
  // A planar zigzag in the xz-plane: four x-sticks project onto one segment.
  const LatticePolygon zigzag = poly({{0, 0, 0}, {4, 0, 0}, {4, 0, 3}, {0, 0, 3}, {0, 0, 2}, {3, 0, 2}, {3, 0, 1}, {0, 0, 1}});
  CHECK(crossing_number(project(zigzag)) == 0);
  CHECK(oracle_crossings(zigzag) == 0);
}

TEST_CASE("property: crossing count matches the pairwise oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const LatticePolygon p = oracle::random_polygon(rng, 30, 60);
    CHECK(crossing_number(project(p)) == oracle_crossings(p));
  }
  for (const auto& e : builtin_examples()) CHECK(crossing_number(project(e.polygon)) == oracle_crossings(e.polygon));
}

TEST_CASE("census knots project to their minimal diagrams") {
  const Diagram t = simplify(project(example("trefoil.json")));
  CHECK(crossing_number(project(example("trefoil.json"))) >= 3);
  CHECK(crossing_number(t) == 3);
  CHECK(classify(example("trefoil.json")).label() == "3_1");

  const Diagram raw8 = project(example("figure_eight.json"));
  const Diagram f = simplify(raw8);
  CHECK(crossing_number(f) == 4);
  CHECK(simplify(f) == f);
  CHECK(pd_code(f).crossings.size() == 4);
}

TEST_CASE("PD codes") {
  const Diagram t = simplify(project(example("trefoil.json")));
  const PDCode pd = pd_code(t);
  REQUIRE(pd.crossings.size() == 3);
  std::map<int, int> uses;
  for (const auto& x : pd.crossings) {
    for (int l : x) ++uses[l];
  }
  CHECK(uses.size() == 6);
  for (const auto& [label, n] : uses) CHECK(n == 2);
  CHECK(Diagram::from_pd(pd) == t);
  CHECK(PDCode::parse(pd.to_string()) == pd);

  // The standard left-handed trefoil code round-trips to writhe -3.
  const PDCode left = PDCode::parse("X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)");
  CHECK(Diagram::from_pd(left).writhe() == -3);
  CHECK(PDCode::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]") == left);
  CHECK_THROWS_AS(PDCode::parse("X(1,2,3)"), Error);
  CHECK_THROWS_AS(Diagram::from_pd(PDCode::parse("X(1,4,3,5), X(2,6,4,1), X(5,2,6,3)")), Error);
}

TEST_CASE("Gauss codes and mirrors") {
  const Diagram t = Diagram::braid_closure(2, {1, 1, 1});
  const std::vector<int> g = t.gauss_code();
  REQUIRE(g.size() == 6);
  std::map<int, int> seen;
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK((g[i] > 0) != (g[(i + 1) % g.size()] > 0));
    seen[g[i]] += 1;
  }
  CHECK(seen == std::map<int, int>{{-3, 1}, {-2, 1}, {-1, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(t.writhe() == 3);
  const Diagram m = t.mirror();
  CHECK(m.writhe() == -3);
  std::vector<int> negated = g;
  for (int& x : negated) x = -x;
  CHECK(m.gauss_code() == negated);
  CHECK_THROWS_AS(Diagram::braid_closure(2, {1, 1}), Error);
  CHECK_THROWS_AS(Diagram({{0, true}, {0, true}}, {1}), Error);
}

TEST_CASE("simplify: Reidemeister I and II") {
  // One kink.
  const Diagram kink({{0, true}, {0, false}}, {1});
  CHECK(crossing_number(simplify(kink)) == 0);

  // Two strands laid over each other: crossings a, b met consecutively on
  // both strands with the same strand on top.
  const Diagram bigon({{0, true}, {1, true}, {0, false}, {1, false}}, {1, -1});
  CHECK(crossing_number(simplify(bigon)) == 0);

  // The trefoil as a stabilized 3-braid with a cancelling pair appended.
  const Diagram trefoil = Diagram::braid_closure(3, {1, 1, 1, 2, 2, -2});
  CHECK(crossing_number(trefoil) == 6);
  const Diagram s = simplify(trefoil);
  CHECK(crossing_number(s) == 3);
  CHECK(jones(s) == jones(trefoil));

  // Reduced alternating diagrams are fixed points.
  const Diagram fig8 = Diagram::braid_closure(3, {1, -2, 1, -2});
  CHECK(simplify(fig8) == fig8);
}

TEST_CASE("property: simplify is idempotent, never adds crossings and keeps Jones") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Diagram raw = project(oracle::random_polygon(rng, 24, 50));
    if (raw.crossing_count() > 14) continue;
    const Diagram s = simplify(raw);
    CHECK(s.crossing_count() <= raw.crossing_count());
    CHECK(simplify(s) == s);
    CHECK(jones(s) == jones(raw));
  }
}

TEST_CASE("property: classification is invariant under the 48 symmetries up to mirror") {
  for (const char* name : {"trefoil.json", "figure_eight.json"}) {
    const LatticePolygon p = example(name);
    const Classification base = classify_detailed(p);
    for (const auto& g : LatticeSymmetry::all()) {
      const Classification c = classify_detailed(apply_symmetry(p, g));
      CHECK(c.knot_class == base.knot_class);
      CHECK((c.jones == base.jones || c.jones == base.jones.inverted()));
      if (base.jones != base.jones.inverted()) {
        CHECK((c.jones == base.jones) == g.preserves_orientation());
      }
    }
  }
}

TEST_CASE("middle-level crossings") {
  const LatticePolygon fig8 = example("figure_eight.json");
  REQUIRE(has_middle_level_structure(fig8));
  const MiddleLevelReport r = middle_level_crossings(fig8);
  CHECK(r.transverse_count >= 2);
  CHECK(r.tangency_count == 0);
  CHECK(r.overlap_count == 0);
  CHECK(to_json(r)["transverse"] == r.transverse_count);

  int trefoils_with_structure = 0;
  enumerate_properly_leveled({4, 4, 4}, [&](const LatticePolygon& p) {
    if (classify(p).label() != "3_1" || !has_middle_level_structure(p)) return;
    ++trefoils_with_structure;
    CHECK(middle_level_crossings(p).transverse_count >= 1);
  });
  CHECK(trefoils_with_structure > 0);

  // Six z-sticks.
  std::optional<LatticePolygon> six_z;
  enumerate_properly_leveled({4, 4, 6}, [&](const LatticePolygon& p) {
    if (!six_z) six_z = p;
  });
  REQUIRE(six_z.has_value());
  CHECK_THROWS_AS(middle_level_crossings(*six_z), Error);
  try {
    middle_level_crossings(*six_z);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongZStructure);
  }
}

TEST_CASE("lattice Reidemeister II move") {
  CHECK_THROWS_AS(lattice_r2_reduce(square()), Error);
  CHECK_FALSE(lattice_r2_reduce(example("figure_eight.json")).has_value());

  // First enumerated polygon carrying the pattern: a single stick on one
  // middle level crossed twice by a three-stick U on the other.
  std::optional<LatticePolygon> before;
  for (const Composition c : {Composition{4, 4, 4}, Composition{5, 4, 4}}) {
    enumerate_properly_leveled(c, [&](const LatticePolygon& p) {
      if (!before && has_middle_level_structure(p) && lattice_r2_reduce(p)) before = p;
    });
    if (before) break;
  }
  REQUIRE(before.has_value());
  const LatticePolygon after = *lattice_r2_reduce(*before);
  CHECK(is_properly_leveled(after));
  CHECK(after.size() == before->size());
  CHECK(stick_counts(after) == stick_counts(*before));
  CHECK(crossing_number(project(after)) + 2 == crossing_number(project(*before)));
  CHECK(jones(project(after)) == jones(project(*before)));
}
