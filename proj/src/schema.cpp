#include "crosscap/schema.hpp"

namespace crosscap {

SurfaceSchema build_schema(int g, int n) {
  if (g < 0 || n < 0) throw Error(ErrorKind::InvalidInput, "genus and boundary count must be non-negative");
  if (g == 0) throw Error(ErrorKind::NotNonorientable, "g = 0 gives an orientable schema");

  SurfaceSchema s;
  s.genus = g;
  s.boundary_count = n;
  s.sides.reserve(static_cast<size_t>(2 * (g + n)));
  // s_1, e_1, ..., s_g, e_g, then z_1, e_{g+1}, ..., z_n, e_{g+n}.
  for (int i = 1; i <= g; ++i) {
    s.sides.push_back({"s_" + std::to_string(i), SideRole::Crosscap, i});
    s.sides.push_back({"e_" + std::to_string(i), SideRole::Gluing, i});
  }
  for (int j = 1; j <= n; ++j) {
    s.sides.push_back({"z_" + std::to_string(j), SideRole::Boundary, j});
    s.sides.push_back({"e_" + std::to_string(g + j), SideRole::Gluing, g + j});
  }
  return s;
}

int SurfaceSchema::crosscap_side(int i) const {
  if (i < 1 || i > genus) throw Error(ErrorKind::InvalidInput, "crosscap index out of range");
  return 2 * (i - 1);
}

int SurfaceSchema::gluing_side(int j) const {
  if (j < 1 || j > genus + boundary_count) throw Error(ErrorKind::InvalidInput, "gluing index out of range");
  if (j <= genus) return 2 * j - 1;
  return 2 * genus + 2 * (j - genus) - 1;
}

int SurfaceSchema::side_by_label(const std::string& label) const {
  for (int k = 0; k < side_count(); ++k)
    if (sides[static_cast<size_t>(k)].label == label) return k;
  throw Error(ErrorKind::InvalidInput, "no side labeled " + label);
}

SurfaceStatus classify_surface(const SurfaceSchema& schema) {
  SurfaceStatus st;
  int g = schema.genus, n = schema.boundary_count;
  st.euler_characteristic = schema.euler_characteristic();
  st.excluded = (g + n == 4) || (g == 1 && n == 2);
  if (g + n <= 2 || (g == 2 && n == 1)) st.regime = Regime::Tiny;
  else if (g == 3 && n == 0) st.regime = Regime::Special;
  else if (g + n >= 5) st.regime = Regime::Main;
  else st.regime = Regime::Excluded;
  return st;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Tiny: return "tiny";
    case Regime::Main: return "main";
    case Regime::Special: return "special";
    case Regime::Excluded: return "excluded";
  }
  return "?";
}

}  // namespace crosscap
