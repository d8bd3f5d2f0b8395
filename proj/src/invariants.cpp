#include "latticestick/invariants.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace latticestick {

namespace {

// delta = -A^2 - A^-2
LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

// Exact quotient p / delta, with delta = -A^-2 (1 + A^4).
LaurentPoly divide_by_loop(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const auto& c = p.coefficients();
  if (c.size() <= 4) throw std::logic_error("bracket state sum not divisible by the loop value");
  std::vector<std::int64_t> q(c.size() - 4, 0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const std::int64_t rest = c[k] - (k >= 4 ? q[k - 4] : 0);
    if (k < q.size()) {
      q[k] = rest;
    } else if (rest != 0) {
      throw std::logic_error("bracket state sum not divisible by the loop value");
    }
  }
  LaurentPoly out;
  for (std::size_t k = 0; k < q.size(); ++k) {
    out += LaurentPoly::monomial(-q[k], p.min_exponent() + static_cast<int>(k) + 2);
  }
  return out;
}

// Frontier state: for each arc label with exactly one processed end, the
// label at the other end of its partial path. Stored as sorted (min, max)
// pairs flattened.
using Frontier = std::vector<int>;

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d) {
  const std::size_t n = d.crossing_count();
  if (n > kMaxBracketCrossings) {
    throw Error(ErrorCode::TooManyCrossings,
                std::to_string(n) + " crossings exceed the state-sum cap of " + std::to_string(kMaxBracketCrossings));
  }
  if (n == 0) return LaurentPoly::constant(1);
  const PDCode pd = pd_code(d);
  const LaurentPoly delta = loop_value();

  std::map<Frontier, LaurentPoly> states;
  states[{}] = LaurentPoly::constant(1);
  for (const auto& x : pd.crossings) {
    std::map<Frontier, LaurentPoly> next;
    for (const auto& [frontier, weight] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        // A-smoothing joins (a,b)(c,d); B-smoothing joins (a,d)(b,c).
        std::map<int, int> partner;
        for (std::size_t i = 0; i < frontier.size(); i += 2) {
          partner[frontier[i]] = frontier[i + 1];
          partner[frontier[i + 1]] = frontier[i];
        }
        // Half-edges at this crossing get ids -1..-4.
        for (int i = 0; i < 4; ++i) {
          const int label = x[static_cast<std::size_t>(i)];
          const int h = -(i + 1);
          if (auto it = partner.find(label); it != partner.end()) {
            const int other = it->second;
            partner.erase(it);
            partner[other] = h;
            partner[h] = other;
            continue;
          }
          // First end seen (a label repeated at this crossing is met again
          // above and closes against this half-edge).
          partner[label] = h;
          partner[h] = label;
        }
        int loops = 0;
        auto join = [&](int u, int v) {
          if (partner[u] == v) {
            ++loops;
            partner.erase(u);
            partner.erase(v);
            return;
          }
          const int pu = partner[u], pv = partner[v];
          partner.erase(u);
          partner.erase(v);
          partner[pu] = pv;
          partner[pv] = pu;
        };
        if (smoothing == 0) {
          join(-1, -2);
          join(-3, -4);
        } else {
          join(-1, -4);
          join(-2, -3);
        }
        Frontier key;
        for (const auto& [u, v] : partner) {
          if (u < v) {
            key.push_back(u);
            key.push_back(v);
          }
        }
        LaurentPoly w = weight.shifted(smoothing == 0 ? 1 : -1);
        for (int l = 0; l < loops; ++l) w = w * delta;
        next[key] += w;
      }
    }
    states = std::move(next);
  }
  return divide_by_loop(states[{}]);
}

LaurentPoly jones(const Diagram& d) {
  const LaurentPoly bracket = kauffman_bracket(d);
  const int w = d.writhe();
  // (-A^3)^(-w) <D>, then A = t^(-1/4).
  const LaurentPoly factor = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
  return (factor * bracket).exponents_divided(-4);
}

std::int64_t determinant(const Diagram& d) {
  const std::int64_t v = jones(d).evaluate_at_minus_one();
  return v < 0 ? -v : v;
}

LaurentPoly jones_up_to_mirror(const LaurentPoly& v) {
  LaurentPoly m = v.inverted();
  return m < v ? m : v;
}

KnotClass KnotClass::unknown(LaurentPoly jones_key, std::int64_t det) {
  std::string label = "unknown[" + jones_key.to_string() + ";det=" + std::to_string(det) + "]";
  return KnotClass(Kind::Unknown, std::move(label), std::move(jones_key), det);
}

const std::vector<ReferenceEntry>& reference_table() {
  static const std::vector<ReferenceEntry> table = [] {
    struct Braid {
      const char* name;
      int strands;
      std::vector<int> word;
    };
    const std::vector<Braid> braids{
        {"3_1", 2, {1, 1, 1}},
        {"4_1", 3, {1, -2, 1, -2}},
        {"5_1", 2, {1, 1, 1, 1, 1}},
        {"5_2", 3, {1, 1, 1, 2, -1, 2}},
        {"6_1", 4, {1, 1, 2, -1, -3, 2, -3}},
        {"6_2", 3, {1, 1, 1, -2, 1, -2}},
        {"6_3", 3, {1, 1, -2, 1, -2, -2}},
        {"7_1", 2, {1, 1, 1, 1, 1, 1, 1}},
        {"7_2", 4, {1, 1, 1, 2, -1, 2, 3, -2, 3}},
        {"7_3", 3, {1, 1, 1, 1, 1, 2, -1, 2}},
        {"7_4", 4, {1, 1, 2, -1, 2, 2, 3, -2, 3}},
        {"7_5", 3, {1, 1, 1, 1, 2, -1, 2, 2}},
        {"7_6", 4, {1, 1, -2, 1, 3, -2, 3}},
        {"7_7", 4, {1, -2, 1, -2, 3, -2, 3}},
    };
    std::vector<ReferenceEntry> out;
    out.push_back({"unknot", Diagram{}, LaurentPoly::constant(1), LaurentPoly::constant(1), 1});
    for (const auto& b : braids) {
      ReferenceEntry e;
      e.name = b.name;
      e.diagram = Diagram::braid_closure(b.strands, b.word);
      e.jones = jones(e.diagram);
      e.jones_key = jones_up_to_mirror(e.jones);
      e.det = determinant(e.diagram);
      out.push_back(std::move(e));
    }
    return out;
  }();
  return table;
}

namespace {

std::optional<KnotClass> lookup(const LaurentPoly& key, std::int64_t det) {
  for (const auto& e : reference_table()) {
    if (e.name != "unknot" && e.jones_key == key && e.det == det) return KnotClass::named(e.name, key, det);
  }
  return std::nullopt;
}

}  // namespace

Classification classify_detailed(const LatticePolygon& p) {
  Classification out;
  const Composition c = stick_counts(p);
  if (c.nx == 0 || c.ny == 0 || c.nz == 0) return out;
  const Diagram raw = project(p);
  const Diagram simple = simplify(raw);
  out.raw_crossings = raw.crossing_count();
  out.simplified_crossings = simple.crossing_count();
  if (simple.crossing_count() < 3) return out;
  out.jones = jones(simple);
  out.det = determinant(simple);
  const LaurentPoly key = jones_up_to_mirror(out.jones);
  if (auto named = lookup(key, out.det)) {
    out.knot_class = *named;
    return out;
  }
  // Without R3 some diagrams stay stuck above two crossings. Any other
  // projection that reduces below three crossings still proves triviality.
  for (const auto& g : LatticeSymmetry::all()) {
    if (simplify(project(apply_symmetry(p, g))).crossing_count() < 3) {
      out.jones = LaurentPoly::constant(1);
      out.det = 1;
      out.simplified_crossings = 0;
      return out;
    }
  }
  out.knot_class = KnotClass::unknown(key, out.det);
  return out;
}

KnotClass classify(const LatticePolygon& p) { return classify_detailed(p).knot_class; }

nlohmann::json to_json(const Classification& c) {
  return {{"class", c.knot_class.label()},
          {"jones", c.jones.to_string()},
          {"det", c.det},
          {"crossings", c.simplified_crossings}};
}

}  // namespace latticestick
