#ifndef CROSSCAP_CUT_HPP
#define CROSSCAP_CUT_HPP

#include <string>
#include <vector>

#include "crosscap/curve.hpp"

namespace crosscap {

// One component of the surface cut along a disjoint curve system.
struct ComponentRecord {
  bool orientable = true;
  int genus = 0;            // orientable genus h, or nonorientable genus if !orientable
  int boundary_count = 0;
  int euler_characteristic = 0;
  // Curve indices (into the input list) and z-side boundary labels appearing
  // on this component's boundary circles.
  std::vector<int> bounding_curves;
  std::vector<std::string> bounding_boundaries;
  // Per boundary circle: the curve indices (-1 for a z arc) along it.
  std::vector<std::vector<int>> circles;
};

// Cut N along a pairwise disjoint system; throws NotDisjoint otherwise.
std::vector<ComponentRecord> cut_along(const SurfaceSchema& schema, const std::vector<CurveClass>& curves);

// Cut along `cutters` and report which complement component each passenger
// curve lies in (passengers must be disjoint from the cutters and from each
// other). Returns (components, component index per passenger).
std::pair<std::vector<ComponentRecord>, std::vector<int>> locate_in_complement(
    const SurfaceSchema& schema, const std::vector<CurveClass>& cutters,
    const std::vector<CurveClass>& passengers);

// Simultaneous disjoint realization; the returned words carry compatible
// positions (all distinct per side). Throws NotDisjoint if none exists.
std::vector<CurveWord> place_disjoint(const SurfaceSchema& schema, const std::vector<CurveClass>& curves);

// Nontriviality: does not bound a disk or Moebius band, not boundary-parallel.
bool is_nontrivial(const SurfaceSchema& schema, const CurveClass& c);

// Every complement component is an orientable pair of pants.
bool is_pants_decomposition(const SurfaceSchema& schema, const std::vector<CurveClass>& curves);

bool has_orientable_complement(const SurfaceSchema& schema, const CurveClass& c);

}  // namespace crosscap

#endif
