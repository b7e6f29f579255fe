#ifndef SUPERTEICH_IO_HPP
#define SUPERTEICH_IO_HPP

#include <string>
#include <utility>

#include "superteich/holonomy.hpp"
#include "superteich/surface.hpp"
#include "superteich/teich.hpp"

#include <nlohmann/json_fwd.hpp>

namespace superteich {

inline constexpr const char* kFileVersion = "superteich-v1";

/// Unreadable files, malformed JSON, missing fields, or a wrong version
/// marker.  The CLI maps this to exit code 2; domain violations (bad gluing,
/// non-positive lambda, parity) surface as std::domain_error /
/// std::invalid_argument and map to exit code 1.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SurfaceData {
  Triangulation triangulation;
  Orientation orientation;
};
SurfaceData surface_from_json(const nlohmann::json& j);
nlohmann::json surface_to_json(const Triangulation& t, const Orientation& o);

DecoratedCoords coords_from_json(const nlohmann::json& j, const Triangulation& t);
nlohmann::json coords_to_json(const DecoratedCoords& c);

/// Loads a surface (or the "surface" section of a combined document).
SurfaceData load_surface(const std::string& path);
/// Loads coordinates (or the "coords" section of a combined document).
DecoratedCoords load_coords(const std::string& path, const Triangulation& t);

nlohmann::json monodromy_report_to_json(const MonodromyReport& r);
nlohmann::json constraint_report_to_json(const ConstraintReport& r);

/// Human-readable form of the Ramond constraint sum for one fan.
std::string constraint_equation_text(const FanData& f);

void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace superteich

#endif
