#ifndef CROSSCAP_JSON_IO_HPP
#define CROSSCAP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "crosscap/catalog.hpp"
#include "crosscap/intersect.hpp"

namespace crosscap {

using nlohmann::json;

json schema_to_json(const SurfaceSchema& s);

// {schema:{g,n}, word:[{side,face,slot}], name?}
json curve_to_json(const CurveClass& c);
CurveClass curve_from_json(const json& j);

json catalog_to_json(const CurveCatalog& cat);
CurveCatalog catalog_from_json(const json& j);

json matrix_to_json(const IntersectionMatrix& m);

// Build or load a cached catalog. The cache directory comes from
// CROSSCAP_CACHE_DIR (empty string disables caching).
CurveCatalog cached_catalog(const SurfaceSchema& schema, const CatalogOptions& opts = {},
                            const std::string& cache_dir_override = "");

std::string default_cache_dir();

// FNV-1a digest of a string, hex-encoded; used for content-addressed files.
std::string content_digest(const std::string& payload);

}  // namespace crosscap

#endif
