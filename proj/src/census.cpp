#include "latticestick/census.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "latticestick/leveling.hpp"
#include "latticestick/polygon_io.hpp"

namespace latticestick {

namespace {

constexpr int kBoxCells = kMaxAxisCount * kMaxAxisCount * kMaxAxisCount;
constexpr std::uint64_t kNodeFlush = 1u << 14;

// A symmetry of the box [0,n_x-1] x [0,n_y-1] x [0,n_z-1].
struct BoxSymmetry {
  std::array<int, 3> perm;
  std::array<int, 3> sign;
  std::array<int, 3> offset;

  LatticePoint apply(const LatticePoint& p) const {
    LatticePoint q;
    for (int i = 0; i < 3; ++i) q[axis_at(i)] = sign[i] * p[axis_at(perm[i])] + offset[i];
    return q;
  }
};

int point_code(const LatticePoint& p) { return (p.x << 6) | (p.y << 3) | p.z; }

class Search {
 public:
  Search(const Composition& c, std::atomic<std::uint64_t>& nodes, std::uint64_t budget)
      : n_{c.nx, c.ny, c.nz}, total_(c.total()), nodes_(nodes), budget_(budget) {
    corners_.resize(static_cast<std::size_t>(total_) + 1);
    axis_of_.resize(static_cast<std::size_t>(total_));
    for (const auto& g : LatticeSymmetry::all()) {
      BoxSymmetry b{};
      bool fits = true;
      for (int i = 0; i < 3; ++i) {
        b.perm[i] = axis_index(g.perm()[i]);
        b.sign[i] = g.signs()[i];
        b.offset[i] = b.sign[i] < 0 ? n_[i] - 1 : 0;
        if (n_[b.perm[i]] != n_[i]) fits = false;
      }
      if (fits && !(g == LatticeSymmetry::all()[0])) group_.push_back(b);
    }
  }

  // Starting corners and first two sticks of every sequence.
  std::vector<std::array<LatticePoint, 3>> prefixes() {
    std::vector<std::array<LatticePoint, 3>> out;
    for (int y = 0; y < n_[1]; ++y) {
      for (int z = 0; z < n_[2]; ++z) {
        start({0, y, z});
        moves(0, [&] { moves(1, [&] { out.push_back({corners_[0], corners_[1], corners_[2]}); }); });
      }
    }
    flush_nodes();
    return out;
  }

  template <typename Emit>
  void run(const std::array<LatticePoint, 3>& prefix, Emit&& emit) {
    start(prefix[0]);
    // Replay the prefix through the same move generator.
    moves(0, [&] {
      if (corners_[1] != prefix[1]) return;
      moves(1, [&] {
        if (corners_[2] != prefix[2]) return;
        descend(2, emit);
      });
    });
    flush_nodes();
  }

 private:
  void start(const LatticePoint& v0) {
    occupied_.fill(0);
    used_ = {0, 0, 0};
    for (int a = 0; a < 3; ++a) visited_[a] = 1u << v0[axis_at(a)];
    corners_[0] = v0;
    set_occupied(v0, true);
  }

  int cell(const LatticePoint& p) const { return (p.x * n_[1] + p.y) * n_[2] + p.z; }
  bool is_occupied(const LatticePoint& p) const {
    const int c = cell(p);
    return (occupied_[static_cast<std::size_t>(c >> 6)] >> (c & 63)) & 1u;
  }
  void set_occupied(const LatticePoint& p, bool on) {
    const int c = cell(p);
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    auto& word = occupied_[static_cast<std::size_t>(c >> 6)];
    word = on ? (word | bit) : (word & ~bit);
  }

  void count_node() {
    if (++local_nodes_ >= kNodeFlush) flush_nodes();
  }
  void flush_nodes() {
    const std::uint64_t seen = nodes_.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (seen > budget_) {
      throw Error(ErrorCode::BudgetExceeded, "node budget of " + std::to_string(budget_) + " exceeded");
    }
  }

  // Can the remaining sticks still be ordered with no two neighbours on one
  // axis, given the axis just placed and the (fixed) first axis?
  bool alternation_feasible(int just_placed) const {
    const int first = axis_of_[0];
    int remaining = 0;
    for (int b = 0; b < 3; ++b) remaining += n_[b] - used_[b];
    for (int b = 0; b < 3; ++b) {
      const int r = n_[b] - used_[b];
      const int slots = remaining - (b == just_placed) - (b == first);
      if (r > (slots > 0 ? (slots + 1) / 2 : 0)) return false;
    }
    return true;
  }

  // Calls f() once per legal next stick from corners_[depth], with the
  // stick applied to the search state.
  template <typename F>
  void moves(int depth, F&& f) {
    const LatticePoint p = corners_[static_cast<std::size_t>(depth)];
    const int last = depth > 0 ? axis_of_[static_cast<std::size_t>(depth - 1)] : -1;
    const bool closing = depth == total_ - 1;
    const LatticePoint& v0 = corners_[0];
    for (int a = 0; a < 3; ++a) {
      if (a == last || used_[a] == n_[a]) continue;
      if (closing && a == axis_of_[0]) continue;
      const Axis ax = axis_at(a);
      axis_of_[static_cast<std::size_t>(depth)] = a;
      ++used_[a];
      const bool feasible = closing || alternation_feasible(a);
      const bool last_of_axis = used_[a] == n_[a];
      if (feasible) {
        for (int dir = -1; dir <= 1; dir += 2) {
          LatticePoint q = p;
          for (int k = p[ax] + dir; k >= 0 && k < n_[a]; k += dir) {
            q[ax] = k;
            if (is_occupied(q)) {
              if (closing && q == v0) {
                count_node();
                corners_[static_cast<std::size_t>(depth) + 1] = q;
                f();
              }
              break;
            }
            if (closing) continue;
            const bool level_ok = last_of_axis ? k == v0[ax] : !((visited_[a] >> k) & 1u);
            if (!level_ok || !(v0 < q)) continue;
            count_node();
            apply_stick(p, q, ax, true);
            const bool fresh = !((visited_[a] >> k) & 1u);
            visited_[a] |= 1u << k;
            corners_[static_cast<std::size_t>(depth) + 1] = q;
            f();
            if (fresh) visited_[a] &= ~(1u << k);
            apply_stick(p, q, ax, false);
          }
        }
      }
      --used_[a];
    }
  }

  void apply_stick(const LatticePoint& from, const LatticePoint& to, Axis ax, bool on) {
    const int dir = to[ax] > from[ax] ? 1 : -1;
    LatticePoint q = from;
    do {
      q[ax] += dir;
      set_occupied(q, on);
    } while (q != to);
  }

  template <typename Emit>
  void descend(int depth, Emit& emit) {
    if (depth == total_) {
      leaf(emit);
      return;
    }
    moves(depth, [&] { descend(depth + 1, emit); });
  }

  template <typename Emit>
  void leaf(Emit& emit) {
    const std::size_t n = static_cast<std::size_t>(total_);
    if (!(corners_[1] < corners_[n - 1])) return;
    std::array<int, 2 * kMaxAxisCount * 3> code{};
    std::array<int, 2 * kMaxAxisCount * 3> image{};
    for (std::size_t k = 0; k < n; ++k) code[k] = point_code(corners_[k]);
    for (const auto& g : group_) {
      std::size_t m = 0;
      for (std::size_t k = 0; k < n; ++k) {
        image[k] = point_code(g.apply(corners_[k]));
        if (image[k] < image[m]) m = k;
      }
      if (image[m] < code[0]) return;
      if (image[m] > code[0]) continue;
      for (int dir : {1, -1}) {
        for (std::size_t k = 1; k < n; ++k) {
          const std::size_t at = (m + n + static_cast<std::size_t>(dir) * k) % n;
          if (image[at] < code[k]) return;
          if (image[at] > code[k]) break;
        }
      }
    }
    std::vector<LatticePoint> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = corners_[k] + LatticePoint{1, 1, 1};
    emit(LatticePolygon::from_trusted_corners(std::move(out)));
  }

  std::array<int, 3> n_;
  int total_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  std::uint64_t local_nodes_ = 0;

  std::vector<BoxSymmetry> group_;
  std::vector<LatticePoint> corners_;
  std::vector<int> axis_of_;
  std::array<int, 3> used_{};
  std::array<std::uint32_t, 3> visited_{};
  std::array<std::uint64_t, kBoxCells / 64> occupied_{};
};

void check_composition(const Composition& c) {
  for (Axis a : kAxes) {
    if (c[a] > kMaxAxisCount) {
      throw Error(ErrorCode::CompositionTooLarge,
                  c.to_string() + " exceeds the engine bound of " + std::to_string(kMaxAxisCount) + " sticks per axis");
    }
    if (c[a] < 0 || c[a] == 1) {
      throw Error(ErrorCode::InvalidArgument, "axis stick counts are 0 or at least 2, got " + c.to_string());
    }
  }
}

bool is_planar(const Composition& c) { return c.nx == 0 || c.ny == 0 || c.nz == 0; }

// --- per-polygon census bookkeeping ------------------------------------------

class Tally {
 public:
  Tally(const Composition& sorted, bool raw_jones) : composition_(sorted), raw_jones_(raw_jones) {}

  void add(const LatticePolygon& p) {
    ++total_;
    const Classification c = classify_detailed(p);
    const std::string& label = c.knot_class.label();
    ++counts_[label];
    run_checks(p, c);
    if (c.knot_class.is_trivial()) return;
    CanonicalKey key = canonical_form(p);
    auto it = reps_.find(label);
    if (it == reps_.end()) {
      reps_.emplace(label, std::make_pair(std::move(key), p));
    } else if (key < it->second.first) {
      it->second = {std::move(key), p};
    }
    if (c.knot_class.kind() == KnotClass::Kind::Named) {
      for (const auto& e : reference_table()) {
        if (e.name != label || e.jones == e.jones.inverted()) continue;
        auto& [same, mirrored] = chirality_[label];
        ++(c.jones == e.jones ? same : mirrored);
      }
    }
  }

  void merge(const Tally& o) {
    total_ += o.total_;
    for (const auto& [k, v] : o.counts_) counts_[k] += v;
    for (const auto& [k, v] : o.reps_) {
      auto it = reps_.find(k);
      if (it == reps_.end() || v.first < it->second.first) reps_.insert_or_assign(k, v);
    }
    for (const auto& [k, v] : o.chirality_) {
      chirality_[k].first += v.first;
      chirality_[k].second += v.second;
    }
    checks_ += o.checks_;
  }

  CensusRecord record(std::uint64_t nodes) const {
    CensusRecord r;
    r.composition = composition_;
    r.total_polygons = total_;
    r.nodes = nodes;
    r.class_counts = counts_;
    r.class_counts.try_emplace("unknot", 0);
    for (const auto& [k, v] : reps_) r.representatives.emplace(k, v.second);
    r.chirality = chirality_;
    r.checks = checks_;
    return r;
  }

 private:
  void run_checks(const LatticePolygon& p, const Classification& c) {
    const std::string& label = c.knot_class.label();
    if (!duplicate_level_pairs(p).empty()) {
      ++checks_.duplicate_pairs_unknot.checked;
      if (!c.knot_class.is_trivial()) ++checks_.duplicate_pairs_unknot.violations;
    }
    const int total = composition_.total();
    if ((label == "3_1" && total == 12) || (label == "4_1" && total == 14)) {
      ++checks_.boundary_levels.checked;
      if (!boundary_level_report(p).conforms()) ++checks_.boundary_levels.violations;
    }
    if (label == "4_1" && composition_ == Composition{5, 5, 4} && has_middle_level_structure(p)) {
      ++checks_.middle_level_transverse.checked;
      const MiddleLevelReport m = middle_level_crossings(p);
      if (m.transverse_count < 2 || m.tangency_count != 0 || m.overlap_count != 0) {
        ++checks_.middle_level_transverse.violations;
      }
    }
    ++checks_.odd_determinant.checked;
    if (c.det % 2 == 0) ++checks_.odd_determinant.violations;
    if (raw_jones_) {
      const Diagram raw = project(p);
      if (raw.crossing_count() > kMaxBracketCrossings) {
        ++checks_.raw_jones_skipped;
      } else {
        ++checks_.raw_jones_matches.checked;
        const LaurentPoly simplified = c.simplified_crossings < 3 ? jones(simplify(raw)) : c.jones;
        if (jones(raw) != simplified) ++checks_.raw_jones_matches.violations;
      }
    }
  }

  Composition composition_;
  bool raw_jones_;
  std::uint64_t total_ = 0;
  std::map<std::string, std::uint64_t> counts_;
  std::map<std::string, std::pair<CanonicalKey, LatticePolygon>> reps_;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> chirality_;
  CorpusChecks checks_;
};

}  // namespace

std::uint64_t enumerate_properly_leveled(const Composition& c, const PolygonConsumer& consumer,
                                         std::uint64_t node_budget) {
  check_composition(c);
  if (is_planar(c)) return 0;
  std::atomic<std::uint64_t> nodes{0};
  Search search(c, nodes, node_budget);
  std::uint64_t emitted = 0;
  auto emit = [&](const LatticePolygon& p) {
    ++emitted;
    consumer(p);
  };
  for (const auto& prefix : search.prefixes()) search.run(prefix, emit);
  return emitted;
}

CorpusChecks& CorpusChecks::operator+=(const CorpusChecks& o) {
  duplicate_pairs_unknot += o.duplicate_pairs_unknot;
  boundary_levels += o.boundary_levels;
  middle_level_transverse += o.middle_level_transverse;
  odd_determinant += o.odd_determinant;
  raw_jones_matches += o.raw_jones_matches;
  raw_jones_skipped += o.raw_jones_skipped;
  return *this;
}

std::vector<Composition> census_compositions(int max_sticks) {
  std::vector<Composition> out;
  for (int total = 6; total <= max_sticks; ++total) {
    for (int a = kMaxAxisCount; a >= 2; --a) {
      for (int b = a; b >= 2; --b) {
        const int c = total - a - b;
        if (c < 2 || c > b || a > b + c) continue;
        out.push_back({a, b, c});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Composition& l, const Composition& r) {
    if (l.total() != r.total()) return l.total() < r.total();
    return l < r;
  });
  return out;
}

CensusRecord census_composition(const Composition& c, const CensusOptions& options) {
  check_composition(c);
  const Composition sorted = c.sorted();
  if (is_planar(sorted)) return Tally(sorted, false).record(0);
  std::atomic<std::uint64_t> nodes{0};
  const auto prefixes = Search(sorted, nodes, options.node_budget).prefixes();

  std::vector<Tally> partial(prefixes.size(), Tally(sorted, options.check_raw_jones));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      Search search(sorted, nodes, options.node_budget);
      for (std::size_t i = next++; i < prefixes.size() && !failed; i = next++) {
        search.run(prefixes[i], [&](const LatticePolygon& p) { partial[i].add(p); });
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  Tally merged(sorted, options.check_raw_jones);
  for (const auto& t : partial) merged.merge(t);
  return merged.record(nodes.load());
}

std::vector<CensusRecord> census(int max_sticks, const CensusOptions& options) {
  if (max_sticks < 4 || max_sticks > 16) {
    throw Error(ErrorCode::InvalidArgument, "max_sticks must lie in [4, 16], got " + std::to_string(max_sticks));
  }
  std::vector<CensusRecord> out;
  for (const auto& c : census_compositions(max_sticks)) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c) == options.only.end()) {
      continue;
    }
    out.push_back(census_composition(c, options));
    if (options.progress) options.progress(out.back());
  }
  return out;
}

namespace {

nlohmann::json to_json(const CheckTally& t) { return {{"checked", t.checked}, {"violations", t.violations}}; }

}  // namespace

nlohmann::json to_json(const CensusRecord& r) {
  nlohmann::json reps = nlohmann::json::object();
  for (const auto& [k, p] : r.representatives) reps[k] = polygon_to_json(p);
  nlohmann::json chirality = nlohmann::json::object();
  for (const auto& [k, v] : r.chirality) chirality[k] = {{"as_table", v.first}, {"mirrored", v.second}};
  nlohmann::json classes = nlohmann::json::object();
  for (const auto& [k, v] : r.class_counts) classes[k] = v;
  return {{"composition", {r.composition.nx, r.composition.ny, r.composition.nz}},
          {"total", r.total_polygons},
          {"classes", std::move(classes)},
          {"representatives", std::move(reps)},
          {"chirality", std::move(chirality)},
          {"checks",
           {{"duplicate_pairs_unknot", to_json(r.checks.duplicate_pairs_unknot)},
            {"boundary_levels", to_json(r.checks.boundary_levels)},
            {"middle_level_transverse", to_json(r.checks.middle_level_transverse)},
            {"odd_determinant", to_json(r.checks.odd_determinant)},
            {"raw_jones_matches", to_json(r.checks.raw_jones_matches)},
            {"raw_jones_skipped", r.checks.raw_jones_skipped}}},
          {"nodes", r.nodes}};
}

std::string to_jsonl(const std::vector<CensusRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

// --- theorem report ------------------------------------------------------------

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "NOT_CHECKED";
  }
}

bool TheoremReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.verdict == Verdict::Fail; });
}

TheoremReport verify_theorem(const std::vector<CensusRecord>& records, int max_sticks) {
  TheoremReport r;
  r.max_sticks = max_sticks;
  std::map<int, std::set<std::string>> found;
  std::set<std::string> unknown;
  CorpusChecks checks;
  for (const auto& rec : records) {
    const int n = rec.composition.total();
    if (n > max_sticks) continue;
    found[n];
    checks += rec.checks;
    for (const auto& [label, count] : rec.class_counts) {
      if (label == "unknot" || count == 0) continue;
      found[n].insert(label);
      if (label.rfind("unknown", 0) == 0) unknown.insert(label);
    }
  }
  std::set<std::string> all_nontrivial;
  for (const auto& [n, labels] : found) {
    r.nontrivial_by_sticks[n] = {labels.begin(), labels.end()};
    all_nontrivial.insert(labels.begin(), labels.end());
    if (labels.count("3_1") && !r.min_sticks_3_1) r.min_sticks_3_1 = n;
    if (labels.count("4_1") && !r.min_sticks_4_1) r.min_sticks_4_1 = n;
  }
  r.unknown_classes = {unknown.begin(), unknown.end()};

  auto claim = [&](std::string name, Verdict v, std::string detail) {
    r.claims.push_back({std::move(name), v, std::move(detail)});
  };
  auto pass_if = [](bool ok) { return ok ? Verdict::Pass : Verdict::Fail; };
  auto min_text = [](const std::optional<int>& m) { return m ? std::to_string(*m) + " sticks" : std::string("not found"); };

  bool below_12_clean = true;
  for (const auto& [n, labels] : found) {
    if (n < 12 && !labels.empty()) below_12_clean = false;
  }
  claim("no nontrivial knot below 12 sticks", pass_if(below_12_clean),
        below_12_clean ? "every polygon with at most " + std::to_string(std::min(max_sticks, 11)) + " sticks is unknotted"
                       : "nontrivial class found below 12 sticks");
  if (max_sticks >= 12) {
    claim("3_1 first appears at 12 sticks", pass_if(r.min_sticks_3_1 == 12), "3_1 minimum: " + min_text(r.min_sticks_3_1));
  } else {
    claim("3_1 first appears at 12 sticks", Verdict::NotChecked, "census stops below 12 sticks");
  }
  const bool four_absent_below_14 = !r.min_sticks_4_1 || *r.min_sticks_4_1 >= 14;
  claim("4_1 absent below 14 sticks", pass_if(four_absent_below_14), "4_1 minimum: " + min_text(r.min_sticks_4_1));
  if (max_sticks >= 14) {
    claim("4_1 first appears at 14 sticks", pass_if(r.min_sticks_4_1 == 14), "4_1 minimum: " + min_text(r.min_sticks_4_1));
  } else {
    claim("4_1 first appears at 14 sticks", Verdict::NotChecked, "census stops below 14 sticks");
  }
  std::vector<std::string> others;
  for (const auto& l : all_nontrivial) {
    if (l != "3_1" && l != "4_1") others.push_back(l);
  }
  std::string other_text = others.empty() ? "none" : "";
  for (const auto& l : others) other_text += (other_text.empty() ? "" : ", ") + l;
  claim("no nontrivial classes other than 3_1 and 4_1", pass_if(others.empty()), "other classes: " + other_text);
  claim("no unknown classifications", pass_if(unknown.empty()),
        std::to_string(unknown.size()) + " unknown fingerprint(s)");

  auto check_claim = [&](const std::string& name, const CheckTally& t) {
    claim(name, t.checked == 0 ? Verdict::NotChecked : pass_if(t.violations == 0),
          std::to_string(t.checked) + " checked, " + std::to_string(t.violations) + " violation(s)");
  };
  check_claim("duplicate level pairs imply the unknot", checks.duplicate_pairs_unknot);
  check_claim("boundary levels of minimal 3_1 and 4_1 conform", checks.boundary_levels);
  check_claim("middle-level intersections of 4_1 at (5,5,4) are transverse", checks.middle_level_transverse);
  check_claim("determinants are odd", checks.odd_determinant);
  if (checks.raw_jones_matches.checked > 0) {
    check_claim("Jones polynomial unchanged by simplification", checks.raw_jones_matches);
  }

  if (all_nontrivial.empty()) {
    r.summary = "no nontrivial polygon found with at most " + std::to_string(max_sticks) + " sticks";
  } else {
    std::string classes;
    for (const auto& l : all_nontrivial) classes += (classes.empty() ? "" : ", ") + l;
    r.summary = "nontrivial classes with at most " + std::to_string(max_sticks) + " sticks: " + classes;
  }
  return r;
}

TheoremReport verify_theorem(int max_sticks, const CensusOptions& options) {
  return verify_theorem(census(max_sticks, options), max_sticks);
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json by_sticks = nlohmann::json::object();
  for (const auto& [n, labels] : r.nontrivial_by_sticks) by_sticks[std::to_string(n)] = labels;
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"claim", c.name}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}});
  }
  auto opt = [](const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"max_sticks", r.max_sticks},
          {"nontrivial_by_sticks", std::move(by_sticks)},
          {"min_sticks", {{"3_1", opt(r.min_sticks_3_1)}, {"4_1", opt(r.min_sticks_4_1)}}},
          {"unknown_classes", r.unknown_classes},
          {"claims", std::move(claims)},
          {"summary", r.summary},
          {"verdict", r.passed() ? "PASS" : "FAIL"}};
}

}  // namespace latticestick
