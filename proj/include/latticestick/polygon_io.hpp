#pragma once

// Polygon file format: {"vertices": [[x,y,z], ...]} with corners in cyclic
// order and no trailing copy of the first vertex.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "latticestick/lattice_core.hpp"

namespace latticestick {

nlohmann::json polygon_to_json(const LatticePolygon& p);
/// Throws Error(MalformedInput) for schema violations and PolygonError for
/// geometric ones.
LatticePolygon polygon_from_json(const nlohmann::json& j);

LatticePolygon read_polygon_file(const std::filesystem::path& path);
void write_polygon_file(const std::filesystem::path& path, const LatticePolygon& p);

}  // namespace latticestick
