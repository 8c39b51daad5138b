#ifndef CROSSCAP_MCG_HPP
#define CROSSCAP_MCG_HPP

#include <string>
#include <vector>

#include "crosscap/catalog.hpp"

namespace crosscap {

enum class GenKind {
  DehnTwist,      // about a named two-sided catalog curve
  HalfTwist,      // sigma_k: swaps boundary holes g+k, g+k+1
  CrosscapSlide,  // y: slides crosscap g along the core through crosscap g-1
  BoundarySlide,  // xi_1 / xi_2: slides boundary hole g+n through crosscap 1 / g
  ReflectionPhi,  // face swap
  ReflectionR,    // the (2,1) reflection
};

struct Generator {
  GenKind kind = GenKind::DehnTwist;
  std::string curve;  // DehnTwist target
  int index = 1;      // HalfTwist: k; BoundarySlide: 1 or 2
  int power = 1;      // +1 / -1
};

// Words act right-to-left, matching composition order.
struct MCGWord {
  std::vector<Generator> gens;
};

// Resolved environment: the catalog plus any pinned generator curves.
struct MCGContext {
  SurfaceSchema schema;
  Universe curves;

  const CurveClass& resolve(const std::string& name) const;
};

MCGContext make_context(const CurveCatalog& catalog);

// The generating set for the surface's regime (with twist curves resolved).
std::vector<Generator> generating_set(const MCGContext& ctx);

CurveClass apply_generator(const MCGContext& ctx, const Generator& f, const CurveClass& x);
CurveClass apply_word(const MCGContext& ctx, const MCGWord& w, const CurveClass& x);

Generator inverse(const Generator& f);
MCGWord inverse(const MCGWord& w);

CurveClass reflection_phi(const CurveClass& x);

// Dehn twist surgery on the joint minimal layout (exposed for tests).
CurveClass apply_twist(const SurfaceSchema& schema, const CurveClass& c, const CurveClass& x, int power);

std::string format_generator(const Generator& g);
std::string format_word(const MCGWord& w);
MCGWord parse_word(const std::string& text);

}  // namespace crosscap

#endif
