#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "latticestick/diagram.hpp"
#include "latticestick/laurent.hpp"

namespace latticestick {

inline constexpr std::size_t kMaxBracketCrossings = 24;

/// Kauffman bracket in the variable A, normalized so the crossingless
/// circle has bracket 1. Throws TooManyCrossings above 24 crossings.
LaurentPoly kauffman_bracket(const Diagram& d);

/// Writhe-normalized Jones polynomial in t.
LaurentPoly jones(const Diagram& d);

/// |V(-1)|
std::int64_t determinant(const Diagram& d);

/// The lesser of V(t) and V(1/t); equal for a knot and its mirror image.
LaurentPoly jones_up_to_mirror(const LaurentPoly& v);

class KnotClass {
 public:
  enum class Kind { Unknot, Named, Unknown };

  static KnotClass unknot() { return KnotClass(Kind::Unknot, "unknot", LaurentPoly::constant(1), 1); }
  static KnotClass named(std::string name, LaurentPoly jones_key, std::int64_t det) {
    return KnotClass(Kind::Named, std::move(name), std::move(jones_key), det);
  }
  static KnotClass unknown(LaurentPoly jones_key, std::int64_t det);

  Kind kind() const { return kind_; }
  bool is_trivial() const { return kind_ == Kind::Unknot; }
  /// "unknot", "3_1", or "unknown[<jones>;det=<d>]".
  const std::string& label() const { return label_; }
  const LaurentPoly& jones_key() const { return jones_key_; }
  std::int64_t det() const { return det_; }

  friend bool operator==(const KnotClass& a, const KnotClass& b) { return a.label_ == b.label_; }
  friend bool operator<(const KnotClass& a, const KnotClass& b) { return a.label_ < b.label_; }

 private:
  KnotClass(Kind k, std::string label, LaurentPoly key, std::int64_t det)
      : kind_(k), label_(std::move(label)), jones_key_(std::move(key)), det_(det) {}

  Kind kind_;
  std::string label_;
  LaurentPoly jones_key_;
  std::int64_t det_;
};

struct ReferenceEntry {
  std::string name;
  Diagram diagram;   // a minimal diagram of one chirality
  LaurentPoly jones; // of that chirality
  LaurentPoly jones_key;
  std::int64_t det = 1;
};

/// Unknot plus every prime knot with at most seven crossings, each built as a
/// braid closure and evaluated with kauffman_bracket. Computed once.
const std::vector<ReferenceEntry>& reference_table();

struct Classification {
  KnotClass knot_class = KnotClass::unknot();
  LaurentPoly jones = LaurentPoly::constant(1);  // of the simplified diagram, this chirality
  std::int64_t det = 1;
  std::size_t raw_crossings = 0;
  std::size_t simplified_crossings = 0;
};

Classification classify_detailed(const LatticePolygon& p);
KnotClass classify(const LatticePolygon& p);

/// {"class": "4_1", "jones": "...", "det": 5}
nlohmann::json to_json(const Classification& c);

}  // namespace latticestick
