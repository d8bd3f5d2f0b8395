#pragma once

// Exhaustive enumeration of properly leveled polygons by composition, and the
// stick-number census built on it.
//
// A properly leveled polygon with composition (n_x, n_y, n_z) visits every
// a-level exactly once, so after translation its corners lie in the box
// [1,n_x] x [1,n_y] x [1,n_z]. The search walks corner sequences inside that
// box starting from the lexicographically least corner, sends each a-stick to
// an unvisited a-level, and keeps one sequence per symmetry orbit by
// comparing against its images under the box's own symmetry group.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "latticestick/invariants.hpp"
#include "latticestick/lattice_core.hpp"

namespace latticestick {

inline constexpr int kMaxAxisCount = 8;
inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

using PolygonConsumer = std::function<void(const LatticePolygon&)>;

/// Streams one polygon per orbit of properly leveled polygons with exactly
/// composition `c`, in a fixed order. Returns the number emitted. The node
/// budget caps stick placements. Throws CompositionTooLarge (a count above 8),
/// InvalidArgument (a count of 1) or BudgetExceeded. A composition with a zero
/// count is planar and yields nothing.
std::uint64_t enumerate_properly_leveled(const Composition& c, const PolygonConsumer& consumer,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

struct CheckTally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;

  CheckTally& operator+=(const CheckTally& o) {
    checked += o.checked;
    violations += o.violations;
    return *this;
  }
  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

/// Corpus checks run on every enumerated polygon.
struct CorpusChecks {
  CheckTally duplicate_pairs_unknot;   // duplicate level pairs imply the unknot
  CheckTally boundary_levels;          // minimal 3_1 at 12 and 4_1 at 14 conform
  CheckTally middle_level_transverse;  // 4_1 at (5,5,4) with the z-structure
  CheckTally odd_determinant;
  CheckTally raw_jones_matches;        // only with CensusOptions::check_raw_jones
  std::uint64_t raw_jones_skipped = 0; // raw diagram above the bracket cap

  CorpusChecks& operator+=(const CorpusChecks& o);
  friend bool operator==(const CorpusChecks&, const CorpusChecks&) = default;
};

struct CensusRecord {
  Composition composition;
  std::uint64_t total_polygons = 0;
  std::uint64_t nodes = 0;
  std::map<std::string, std::uint64_t> class_counts;  // by KnotClass label
  std::map<std::string, LatticePolygon> representatives;
  /// For chiral named classes: members whose Jones polynomial equals the
  /// reference entry's, and members with the mirrored polynomial.
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> chirality;
  CorpusChecks checks;
};

struct CensusOptions {
  int jobs = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;  // per composition
  bool check_raw_jones = false;
  /// Restrict to these sorted compositions (empty: all).
  std::vector<Composition> only;
  /// Called after each composition finishes.
  std::function<void(const CensusRecord&)> progress;
};

/// Sorted compositions (each count >= 2, largest at most the sum of the
/// others) with total at most max_sticks, in increasing total then
/// lexicographic order.
std::vector<Composition> census_compositions(int max_sticks);

CensusRecord census_composition(const Composition& c, const CensusOptions& options = {});

/// 4 <= max_sticks <= 16. Output is independent of options.jobs.
std::vector<CensusRecord> census(int max_sticks, const CensusOptions& options = {});

nlohmann::json to_json(const CensusRecord& r);
/// One compact JSON document per line.
std::string to_jsonl(const std::vector<CensusRecord>& records);

enum class Verdict { Pass, Fail, NotChecked };
const char* verdict_name(Verdict v);

struct Claim {
  std::string name;
  Verdict verdict = Verdict::NotChecked;
  std::string detail;
};

struct TheoremReport {
  int max_sticks = 0;
  /// Nontrivial class labels found at each total stick count.
  std::map<int, std::vector<std::string>> nontrivial_by_sticks;
  std::optional<int> min_sticks_3_1;
  std::optional<int> min_sticks_4_1;
  std::vector<std::string> unknown_classes;
  std::vector<Claim> claims;
  std::string summary;

  bool passed() const;
};

TheoremReport verify_theorem(const std::vector<CensusRecord>& records, int max_sticks);
TheoremReport verify_theorem(int max_sticks = 14, const CensusOptions& options = {});

nlohmann::json to_json(const TheoremReport& r);

}  // namespace latticestick
