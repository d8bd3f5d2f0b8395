#include "latticestick/polygon_io.hpp"

#include <fstream>
#include <sstream>

namespace latticestick {

nlohmann::json polygon_to_json(const LatticePolygon& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.vertices()) verts.push_back({v.x, v.y, v.z});
  return {{"vertices", std::move(verts)}};
}

LatticePolygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "expected an object with a \"vertices\" array");
  }
  std::vector<LatticePoint> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 3) throw Error(ErrorCode::MalformedInput, "vertex must be [x,y,z]");
    LatticePoint p;
    for (int k = 0; k < 3; ++k) {
      if (!v[k].is_number_integer()) throw Error(ErrorCode::MalformedInput, "coordinates must be integers");
      const auto value = v[k].get<long long>();
      if (value > kMaxAbsCoordinate || value < -kMaxAbsCoordinate) {
        throw PolygonError(ErrorCode::CoordinateOutOfRange, "coordinate " + std::to_string(value));
      }
      p[axis_at(k)] = static_cast<int>(value);
    }
    pts.push_back(p);
  }
  return LatticePolygon::from_vertices(pts);
}

LatticePolygon read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, path.string() + ": " + e.what());
  }
  return polygon_from_json(j);
}

void write_polygon_file(const std::filesystem::path& path, const LatticePolygon& p) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << polygon_to_json(p).dump() << '\n';
}

}  // namespace latticestick
