#include <random>

#include "doctest.h"
#include "latticestick/diagram.hpp"
#include "latticestick/invariants.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace latticestick;
using fixture::example;
using fixture::square;

namespace {

const ReferenceEntry& entry(const std::string& name) {
  for (const auto& e : reference_table()) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no entry " + name);
}

LaurentPoly bracket_via_state_sum(const Diagram& d) {
  if (d.crossing_count() == 0) return LaurentPoly::constant(1);
  return oracle::naive_bracket(pd_code(d));
}

// Jones from a bracket: V(t) = (-A^3)^(-w) <D> with A = t^(-1/4).
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  LaurentPoly f = bracket.shifted(-3 * writhe);
  if (writhe % 2 != 0) f = f * LaurentPoly::constant(-1);
  return f.exponents_divided(-4);
}

}  // namespace

TEST_CASE("bracket agrees with the state sum on the reference table") {
  for (const auto& e : reference_table()) {
    CAPTURE(e.name);
    CHECK(kauffman_bracket(e.diagram) == bracket_via_state_sum(e.diagram));
    CHECK(jones(e.diagram) == jones_from_bracket(bracket_via_state_sum(e.diagram), e.diagram.writhe()));
  }
}

TEST_CASE("property: bracket agrees with the state sum on random projections") {
  std::mt19937_64 rng(7);
  int compared = 0;
  while (compared < 60) {
    const Diagram d = project(oracle::random_polygon(rng, 30, 60));
    if (d.crossing_count() == 0 || d.crossing_count() > 12) continue;
    CHECK(kauffman_bracket(d) == bracket_via_state_sum(d));
    ++compared;
  }
}

TEST_CASE("bracket of the unknot and the crossing limit") {
  CHECK(kauffman_bracket(Diagram()) == LaurentPoly::constant(1));
  CHECK(jones(Diagram()) == LaurentPoly::constant(1));
  const Diagram torus = Diagram::braid_closure(2, std::vector<int>(11, 1));
  CHECK(kauffman_bracket(torus) == bracket_via_state_sum(torus));
  CHECK_NOTHROW(kauffman_bracket(Diagram::braid_closure(2, std::vector<int>(23, 1))));
  const Diagram big = Diagram::braid_closure(2, std::vector<int>(25, 1));
  CHECK_THROWS_AS(kauffman_bracket(big), Error);
  try {
    jones(big);
    FAIL("expected TooManyCrossings");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyCrossings);
  }
}

TEST_CASE("published Jones polynomials up to mirror") {
  const std::vector<std::pair<std::string, std::string>> published{
      {"3_1", "-t^-4 + t^-3 + t^-1"},
      {"4_1", "t^-2 - t^-1 + 1 - t + t^2"},
      {"5_1", "-t^-7 + t^-6 - t^-5 + t^-4 + t^-2"},
      {"5_2", "-t^-6 + t^-5 - t^-4 + 2t^-3 - t^-2 + t^-1"},
      {"6_1", "t^-4 - t^-3 + t^-2 - 2t^-1 + 2 - t + t^2"},
      {"6_2", "t^-5 - 2t^-4 + 2t^-3 - 2t^-2 + 2t^-1 - 1 + t"},
      {"6_3", "-t^-3 + 2t^-2 - 2t^-1 + 3 - 2t + 2t^2 - t^3"},
      {"7_1", "-t^-10 + t^-9 - t^-8 + t^-7 - t^-6 + t^-5 + t^-3"},
  };
  for (const auto& [name, text] : published) {
    CAPTURE(name);
    const LaurentPoly v = LaurentPoly::parse(text);
    const LaurentPoly mine = entry(name).jones;
    CHECK((mine == v || mine == v.inverted()));
  }
}

TEST_CASE("reference table") {
  CHECK(entry("unknot").jones == LaurentPoly::constant(1));
  CHECK(entry("unknot").det == 1);
  CHECK(entry("3_1").det == 3);
  CHECK(entry("4_1").det == 5);
  const std::map<std::string, std::int64_t> dets{{"5_1", 5},  {"5_2", 7},  {"6_1", 9},  {"6_2", 11}, {"6_3", 13},
                                                 {"7_1", 7},  {"7_2", 11}, {"7_3", 13}, {"7_4", 15}, {"7_5", 17},
                                                 {"7_6", 19}, {"7_7", 21}};
  for (const auto& [name, det] : dets) CHECK(entry(name).det == det);
  std::set<std::pair<LaurentPoly, std::int64_t>> keys;
  for (const auto& e : reference_table()) {
    CHECK(e.det == determinant(e.diagram));
    CHECK(e.det == std::abs(e.jones.evaluate_at_minus_one()));
    CHECK(e.jones_key == jones_up_to_mirror(e.jones));
    keys.insert({e.jones_key, e.det});
  }
  CHECK(keys.size() == reference_table().size());
}

TEST_CASE("Jones mirror property and determinants") {
  for (const auto& e : reference_table()) {
    CAPTURE(e.name);
    CHECK(jones(e.diagram.mirror()) == e.jones.inverted());
    CHECK(determinant(e.diagram) % 2 == 1);
  }
  CHECK(determinant(Diagram()) == 1);
  CHECK(entry("4_1").jones == entry("4_1").jones.inverted());
  CHECK(entry("3_1").jones != entry("3_1").jones.inverted());
  CHECK(jones_up_to_mirror(entry("3_1").jones) == jones_up_to_mirror(entry("3_1").jones.inverted()));
}

TEST_CASE("property: Jones is unchanged by simplification") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Diagram d = project(oracle::random_polygon(rng, 28, 50));
    if (d.crossing_count() > 16) continue;
    CHECK(jones(simplify(d)) == jones(d));
  }
}

TEST_CASE("classification of the examples") {
  CHECK(classify(square()).label() == "unknot");
  CHECK(classify(square()).is_trivial());
  const KnotClass t = classify(example("trefoil.json"));
  CHECK(t.label() == "3_1");
  CHECK(t.det() == 3);
  const KnotClass f = classify(example("figure_eight.json"));
  CHECK(f.label() == "4_1");
  CHECK(f.det() == 5);

  const Classification c = classify_detailed(example("trefoil.json"));
  CHECK(c.simplified_crossings == 3);
  CHECK(c.raw_crossings >= 3);
  const auto j = to_json(c);
  CHECK(j["class"] == "3_1");
  CHECK(j["det"] == 3);
  CHECK(j["crossings"] == 3);
  CHECK(LaurentPoly::parse(j["jones"].get<std::string>()) == c.jones);
  CHECK(to_json(classify_detailed(square()))["jones"] == "1");
}

TEST_CASE("unknown classes carry their invariants") {
  const KnotClass u = KnotClass::unknown(LaurentPoly::parse("t^-3 + t"), 9);
  CHECK(u.kind() == KnotClass::Kind::Unknown);
  CHECK(u.label().rfind("unknown[", 0) == 0);
  CHECK(u.label().find("det=9") != std::string::npos);
  CHECK_FALSE(u.is_trivial());
}
