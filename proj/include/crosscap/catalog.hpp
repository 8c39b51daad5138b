#ifndef CROSSCAP_CATALOG_HPP
#define CROSSCAP_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "crosscap/synth.hpp"

namespace crosscap {

// Named curve classes for one surface, grouped by family. The main regime
// carries C1..C6; (3,0) its eleven-curve set; tiny surfaces their censuses.
struct CurveCatalog {
  SurfaceSchema schema;
  SurfaceStatus status;
  std::vector<std::string> order;                            // deterministic name order
  Universe curves;                                           // name -> class
  std::map<std::string, std::vector<std::string>> groups;    // family -> names
  std::map<std::string, CurveSpec> specs;                    // records behind synthesized entries
  std::vector<std::string> build_errors;                     // non-strict mode only

  const CurveClass& at(const std::string& name) const;
  bool has(const std::string& name) const { return curves.count(name) > 0; }
  std::vector<CurveClass> all() const;
  std::vector<CurveClass> group(const std::string& g) const;
};

struct CatalogOptions {
  bool xij_cyclic = false;  // |i-j| convention toggle for the X2 index condition
  bool strict = true;       // throw on a failed record (false: record and continue)
};

CurveCatalog build_catalog(const SurfaceSchema& schema, const CatalogOptions& opts = {});

// Paper-style names: a_1, a_{1,2}, b_{2,6}, w_3, q_2, p_{1,0}, ...
std::string curve_name(const std::string& family, int i);
std::string curve_name2(const std::string& family, int i, int j);

// Cyclic hole index normalization into 1..holes.
int cyc_index(int i, int holes);

}  // namespace crosscap

#endif
