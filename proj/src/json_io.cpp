#include "crosscap/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace crosscap {

json schema_to_json(const SurfaceSchema& s) {
  json sides = json::array();
  for (int k = 0; k < s.side_count(); ++k) {
    const Side& sd = s.side(k);
    const char* role = sd.role == SideRole::Crosscap ? "crosscap" : sd.role == SideRole::Gluing ? "gluing" : "boundary";
    sides.push_back({{"label", sd.label}, {"role", role}});
  }
  return json{{"g", s.genus}, {"n", s.boundary_count}, {"sides", sides}, {"faces", {"front", "back"}}};
}

json curve_to_json(const CurveClass& c) {
  // Canonical positions are rank/(count+1); serialize the rank as the slot.
  std::map<int, std::vector<Frac>> per_side;
  for (const Crossing& nd : c.word.nodes) per_side[nd.side].push_back(nd.pos);
  for (auto& [s, ps] : per_side) std::sort(ps.begin(), ps.end());
  json word = json::array();
  for (const Crossing& nd : c.word.nodes) {
    const auto& ps = per_side[nd.side];
    int rank = static_cast<int>(std::lower_bound(ps.begin(), ps.end(), nd.pos) - ps.begin());
    word.push_back({{"side", c.schema.side(nd.side).label},
                    {"face", nd.to_back ? "back" : "front"},
                    {"slot", rank}});
  }
  json out{{"schema", {{"g", c.schema.genus}, {"n", c.schema.boundary_count}}}, {"word", word}};
  if (c.name) out["name"] = *c.name;
  return out;
}

CurveClass curve_from_json(const json& j) {
  SurfaceSchema schema = build_schema(j.at("schema").at("g").get<int>(), j.at("schema").at("n").get<int>());
  // First pass: per-side slot counts.
  std::map<int, int> counts;
  std::vector<std::pair<int, int>> raw;  // (side, slot)
  std::vector<bool> faces;
  for (const json& nd : j.at("word")) {
    int side = schema.side_by_label(nd.at("side").get<std::string>());
    int slot = nd.at("slot").get<int>();
    raw.push_back({side, slot});
    faces.push_back(nd.at("face").get<std::string>() == "back");
    counts[side] = std::max(counts[side], slot + 1);
  }
  CurveWord w;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto [side, slot] = raw[i];
    w.nodes.push_back({side, Frac(slot + 1, counts[side] + 1), faces[i]});
  }
  CurveClass c = canonicalize(schema, w);
  if (j.contains("name")) c.name = j.at("name").get<std::string>();
  return c;
}

json catalog_to_json(const CurveCatalog& cat) {
  json curves = json::array();
  for (const std::string& name : cat.order) curves.push_back(curve_to_json(cat.curves.at(name)));
  json groups = json::object();
  for (const auto& [gname, names] : cat.groups) groups[gname] = names;
  return json{{"schema", {{"g", cat.schema.genus}, {"n", cat.schema.boundary_count}}},
              {"regime", regime_name(cat.status.regime)},
              {"excluded", cat.status.excluded},
              {"curves", curves},
              {"groups", groups},
              {"errors", cat.build_errors}};
}

CurveCatalog catalog_from_json(const json& j) {
  CurveCatalog cat;
  cat.schema = build_schema(j.at("schema").at("g").get<int>(), j.at("schema").at("n").get<int>());
  cat.status = classify_surface(cat.schema);
  for (const json& cj : j.at("curves")) {
    CurveClass c = curve_from_json(cj);
    std::string name = *c.name;
    cat.curves.emplace(name, c);
    cat.order.push_back(name);
  }
  for (auto it = j.at("groups").begin(); it != j.at("groups").end(); ++it)
    cat.groups[it.key()] = it.value().get<std::vector<std::string>>();
  if (j.contains("errors")) cat.build_errors = j.at("errors").get<std::vector<std::string>>();
  return cat;
}

json matrix_to_json(const IntersectionMatrix& m) {
  return json{{"labels", m.labels}, {"rows", m.rows}};
}

std::string default_cache_dir() {
  const char* env = std::getenv("CROSSCAP_CACHE_DIR");
  if (env && *env) return env;
  return ".crosscap-cache";
}

std::string content_digest(const std::string& payload) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : payload) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

CurveCatalog cached_catalog(const SurfaceSchema& schema, const CatalogOptions& opts,
                            const std::string& cache_dir_override) {
  std::string dir = cache_dir_override.empty() ? default_cache_dir() : cache_dir_override;
  std::filesystem::path file;
  if (!dir.empty()) {
    std::ostringstream name;
    name << "catalog_" << schema.genus << "_" << schema.boundary_count << (opts.xij_cyclic ? "_cyc" : "") << ".json";
    file = std::filesystem::path(dir) / name.str();
    if (std::filesystem::exists(file)) {
      std::ifstream in(file);
      json j;
      in >> j;
      return catalog_from_json(j);
    }
  }
  CurveCatalog cat = build_catalog(schema, opts);
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    std::ofstream out(file);
    out << catalog_to_json(cat).dump(1) << "\n";
  }
  return cat;
}

}  // namespace crosscap
