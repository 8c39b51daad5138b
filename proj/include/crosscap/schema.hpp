#ifndef CROSSCAP_SCHEMA_HPP
#define CROSSCAP_SCHEMA_HPP

#include <string>
#include <vector>

#include "crosscap/error.hpp"

namespace crosscap {

enum class SideRole { Crosscap, Gluing, Boundary };

struct Side {
  std::string label;  // s_1..s_g, e_1..e_{g+n}, z_1..z_n
  SideRole role;
  int index;  // 1-based index within its family
};

enum class Regime { Tiny, Main, Special, Excluded };

// Polygon-with-identifications model of the nonorientable surface N_{g,n}:
// a (2g+2n)-gon D in the cyclic side order
//   s_1, e_1, ..., s_g, e_g, z_1, e_{g+1}, ..., z_n, e_{g+n},
// doubled along the e-sides into a sphere with g+n holes, with antipodal
// identification on each s-hole. Front and back faces are the two copies of D.
struct SurfaceSchema {
  int genus = 0;           // g >= 1
  int boundary_count = 0;  // n >= 0
  std::vector<Side> sides; // cyclic order around the polygon

  int side_count() const { return static_cast<int>(sides.size()); }
  int holes() const { return genus + boundary_count; }

  // Cyclic neighbors in the polygon side order.
  int next_side(int k) const { return (k + 1) % side_count(); }
  int prev_side(int k) const { return (k + side_count() - 1) % side_count(); }

  const Side& side(int k) const { return sides[static_cast<size_t>(k)]; }
  bool is_crosscap(int k) const { return side(k).role == SideRole::Crosscap; }
  bool is_gluing(int k) const { return side(k).role == SideRole::Gluing; }
  bool is_boundary(int k) const { return side(k).role == SideRole::Boundary; }

  // Polygon index of crosscap side s_i / gluing side e_j (1-based family index).
  int crosscap_side(int i) const;
  int gluing_side(int j) const;
  int side_by_label(const std::string& label) const;

  int euler_characteristic() const { return 2 - genus - boundary_count; }

  bool operator==(const SurfaceSchema& o) const {
    return genus == o.genus && boundary_count == o.boundary_count;
  }
};

struct SurfaceStatus {
  int euler_characteristic;
  bool excluded;   // (g,n) = (1,2) or g+n = 4: outside the main theorem
  Regime regime;
};

SurfaceSchema build_schema(int g, int n);
SurfaceStatus classify_surface(const SurfaceSchema& schema);

const char* regime_name(Regime r);

}  // namespace crosscap

#endif
