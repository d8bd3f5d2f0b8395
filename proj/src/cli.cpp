#include "latticestick/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "latticestick/census.hpp"
#include "latticestick/diagram.hpp"
#include "latticestick/invariants.hpp"
#include "latticestick/leveling.hpp"
#include "latticestick/polygon_io.hpp"

namespace latticestick {

namespace {

struct Settings {
  bool pretty = false;
  std::string file;
  std::string out_path;
  int max_sticks = 14;
  std::string composition;
  int jobs = 1;
  bool raw_jones = false;
  bool simplified = false;
  bool progress = false;
};

nlohmann::json composition_json(const Composition& c) { return {c.nx, c.ny, c.nz}; }

void emit(std::ostream& out, const nlohmann::json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

std::uint64_t node_budget_from_env() {
  const char* text = std::getenv("LATTICESTICK_NODE_BUDGET");
  if (text == nullptr || *text == '\0') return kDefaultNodeBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (*end != '\0' || v == 0) {
    throw Error(ErrorCode::InvalidArgument, std::string("LATTICESTICK_NODE_BUDGET must be a positive integer, got '") + text + "'");
  }
  return v;
}

Composition parse_composition(const std::string& text) {
  Composition c;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(text);
  if (!(in >> c.nx >> sep1 >> c.ny >> sep2 >> c.nz) || sep1 != ',' || sep2 != ',' || !in.eof()) {
    throw Error(ErrorCode::InvalidArgument, "composition must look like 5,5,4, got '" + text + "'");
  }
  return c;
}

int cmd_validate(const Settings& s, std::ostream& out) {
  try {
    const LatticePolygon p = read_polygon_file(s.file);
    emit(out, {{"valid", true}, {"sticks", p.size()}, {"composition", composition_json(stick_counts(p))}}, s.pretty);
    return exit_code::kOk;
  } catch (const PolygonError& e) {
    nlohmann::json j{{"valid", false}, {"error", error_code_name(e.code())}, {"message", e.what()}};
    if (e.offending_sticks()) j["offending_sticks"] = {e.offending_sticks()->first, e.offending_sticks()->second};
    emit(out, j, s.pretty);
    return exit_code::kInvalid;
  }
}

int cmd_info(const Settings& s, std::ostream& out) {
  const LatticePolygon p = read_polygon_file(s.file);
  const Composition c = stick_counts(p);
  if (s.pretty) {
    out << "sticks: " << p.size() << "  composition: " << c.to_string()
        << "  properly leveled: " << (is_properly_leveled(p) ? "yes" : "no") << '\n';
    for (Axis a : kAxes) {
      out << axis_name(a) << "-levels:";
      for (const auto& l : level_profile(p, a).levels) out << "  " << l.coordinate << '[' << l.endpoints << ']';
      out << '\n';
    }
    return exit_code::kOk;
  }
  nlohmann::json levels = nlohmann::json::object();
  for (Axis a : kAxes) levels[std::string(1, axis_name(a))] = level_report_json(p, a);
  emit(out,
       {{"sticks", p.size()},
        {"composition", composition_json(c)},
        {"properly_leveled", is_properly_leveled(p)},
        {"levels", std::move(levels)}},
       false);
  return exit_code::kOk;
}

int cmd_level(const Settings& s, std::ostream& out) {
  const LatticePolygon leveled = make_properly_leveled(read_polygon_file(s.file));
  if (s.out_path.empty()) {
    emit(out, polygon_to_json(leveled), s.pretty);
  } else {
    write_polygon_file(s.out_path, leveled);
  }
  return exit_code::kOk;
}

int cmd_project(const Settings& s, std::ostream& out) {
  Diagram d = project(read_polygon_file(s.file));
  if (s.simplified) d = simplify(d);
  nlohmann::json j{{"crossings", crossing_number(d)}, {"writhe", d.writhe()}, {"gauss", d.gauss_code()}};
  j["pd"] = d.crossing_count() > 0 ? nlohmann::json(pd_code(d).to_string()) : nlohmann::json(nullptr);
  if (s.pretty) {
    out << "crossings: " << d.crossing_count() << "  writhe: " << d.writhe() << '\n'
        << "PD: " << (d.crossing_count() > 0 ? pd_code(d).to_string() : "(none)") << '\n';
    return exit_code::kOk;
  }
  emit(out, j, false);
  return exit_code::kOk;
}

int cmd_classify(const Settings& s, std::ostream& out) {
  const Classification c = classify_detailed(read_polygon_file(s.file));
  if (s.pretty) {
    out << c.knot_class.label() << "  det " << c.det << "  V(t) = " << c.jones.to_string() << '\n';
    return exit_code::kOk;
  }
  emit(out, to_json(c), false);
  return exit_code::kOk;
}

CensusOptions census_options(const Settings& s, std::ostream& err) {
  CensusOptions o;
  o.jobs = s.jobs > 0 ? s.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  o.node_budget = node_budget_from_env();
  o.check_raw_jones = s.raw_jones;
  if (!s.composition.empty()) o.only.push_back(parse_composition(s.composition).sorted());
  if (s.progress) {
    o.progress = [&err](const CensusRecord& r) {
      err << r.composition.to_string() << ": " << r.total_polygons << " polygons, " << r.nodes << " nodes\n";
    };
  }
  return o;
}

int cmd_census(const Settings& s, std::ostream& out, std::ostream& err) {
  const CensusOptions o = census_options(s, err);
  std::vector<CensusRecord> records;
  if (!o.only.empty() && o.only.front().total() > s.max_sticks) {
    throw Error(ErrorCode::InvalidArgument, "composition exceeds --max-sticks");
  }
  if (!o.only.empty()) {
    records.push_back(census_composition(o.only.front(), o));
  } else {
    records = census(s.max_sticks, o);
  }
  const std::string text = to_jsonl(records);
  if (s.out_path.empty() || s.out_path == "-") {
    out << text;
  } else {
    std::ofstream file(s.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + s.out_path);
    file << text;
  }
  return exit_code::kOk;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const TheoremReport r = verify_theorem(s.max_sticks, census_options(s, err));
  if (s.pretty) {
    for (const auto& c : r.claims) {
      out << std::left << std::setw(12) << verdict_name(c.verdict) << c.name << "  (" << c.detail << ")\n";
    }
    out << r.summary << '\n';
  } else {
    emit(out, to_json(r), false);
  }
  return r.passed() ? exit_code::kOk : exit_code::kFailedVerdict;
}

int cmd_examples(const Settings& s, std::ostream& out) {
  const std::filesystem::path dir = s.out_path.empty() ? "." : s.out_path;
  std::filesystem::create_directories(dir);
  nlohmann::json written = nlohmann::json::array();
  for (const auto& e : builtin_examples()) {
    write_polygon_file(dir / e.file_name, e.polygon);
    written.push_back({{"file", (dir / e.file_name).string()}, {"description", e.description}});
  }
  emit(out, {{"written", std::move(written)}}, s.pretty);
  return exit_code::kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Cubic-lattice knot polygons: validation, leveling, diagrams, invariants and stick-number census",
               "latticestick"};
  app.require_subcommand(1, 1);
  app.add_flag("--pretty", s.pretty, "human-readable output");

  auto file_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", s.file, "polygon JSON file")->required();
    return sub;
  };
  CLI::App* validate = file_command("validate", "check a polygon file");
  CLI::App* info = file_command("info", "stick counts and level profiles");
  CLI::App* level = file_command("level", "write a properly leveled equivalent polygon");
  level->add_option("--out", s.out_path, "output file (default: stdout)");
  CLI::App* proj = file_command("project", "projected diagram as Gauss and PD code");
  proj->add_flag("--simplify", s.simplified, "apply Reidemeister I/II reductions first");
  CLI::App* cls = file_command("classify", "knot class of a polygon");

  CLI::App* cen = app.add_subcommand("census", "enumerate properly leveled polygons and tally knot classes");
  cen->add_option("--max-sticks", s.max_sticks, "largest total stick count")->check(CLI::Range(4, 16));
  cen->add_option("--composition", s.composition, "a single composition, e.g. 5,5,4");
  cen->add_option("--out", s.out_path, "JSON-lines output file (default: stdout)");
  CLI::App* ver = app.add_subcommand("verify", "run the census and check the stick-number claims");
  ver->add_option("--max-sticks", s.max_sticks, "largest total stick count")->check(CLI::Range(4, 16));
  for (CLI::App* sub : {cen, ver}) {
    sub->add_option("--jobs", s.jobs, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--raw-jones", s.raw_jones, "also compare Jones of raw and simplified projections");
    sub->add_flag("--progress", s.progress, "report each finished composition on stderr");
  }
  CLI::App* ex = app.add_subcommand("examples", "write the built-in example polygons");
  ex->add_option("--out", s.out_path, "output directory (default: .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return exit_code::kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(s, out);
    if (info->parsed()) return cmd_info(s, out);
    if (level->parsed()) return cmd_level(s, out);
    if (proj->parsed()) return cmd_project(s, out);
    if (cls->parsed()) return cmd_classify(s, out);
    if (cen->parsed()) return cmd_census(s, out, err);
    if (ver->parsed()) return cmd_verify(s, out, err);
    if (ex->parsed()) return cmd_examples(s, out);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) {
      err << e.what() << '\n';
      return exit_code::kUsage;
    }
    err << e.what() << '\n';
    return exit_code::kInvalid;
  }
  return exit_code::kUsage;
}

}  // namespace latticestick
