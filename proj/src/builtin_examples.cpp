#include "latticestick/cli.hpp"

namespace latticestick {

namespace {

LatticePolygon make(std::initializer_list<LatticePoint> corners) {
  const std::vector<LatticePoint> v(corners);
  return LatticePolygon::from_vertices(v);
}

}  // namespace

// The knotted examples are the census representatives (least canonical key
// in their class) from `latticestick census --max-sticks 14`, records (4,4,4)
// and (5,5,4).
std::vector<BuiltinExample> builtin_examples() {
  return {
      {"square.json", "4-stick unknot", make({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}})},
      {"trefoil.json", "12-stick trefoil, composition (4,4,4)",
       make({{1, 1, 2}, {1, 1, 3}, {1, 3, 3}, {4, 3, 3}, {4, 2, 3}, {4, 2, 1},
             {2, 2, 1}, {2, 2, 4}, {2, 4, 4}, {2, 4, 2}, {3, 4, 2}, {3, 1, 2}})},
      {"figure_eight.json", "14-stick figure-eight knot, composition (5,5,4)",
       make({{1, 1, 2}, {1, 4, 2}, {3, 4, 2}, {3, 4, 4}, {3, 2, 4}, {3, 2, 1}, {5, 2, 1},
             {5, 3, 1}, {5, 3, 3}, {2, 3, 3}, {2, 5, 3}, {4, 5, 3}, {4, 5, 2}, {4, 1, 2}})},
  };
}

}  // namespace latticestick
