#pragma once

#include <iosfwd>
#include <vector>

#include "latticestick/lattice_core.hpp"

namespace latticestick {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kFailedVerdict = 2;
inline constexpr int kUsage = 64;
}  // namespace exit_code

/// Entry point of the `latticestick` tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct BuiltinExample {
  const char* file_name;
  const char* description;
  LatticePolygon polygon;
};

/// The 4-stick square and census-derived minimal 3_1 and 4_1 polygons.
std::vector<BuiltinExample> builtin_examples();

}  // namespace latticestick
