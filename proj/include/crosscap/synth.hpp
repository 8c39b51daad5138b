#ifndef CROSSCAP_SYNTH_HPP
#define CROSSCAP_SYNTH_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crosscap/curve.hpp"

namespace crosscap {

// Constraint record for a figure-defined curve. All referenced names must
// resolve in the universe the record is solved against.
struct CurveSpec {
  std::string name;
  std::optional<Sidedness> sided;
  std::vector<std::string> disjoint_from;
  // (name, value): value -1 means "nonzero", otherwise the exact number.
  std::vector<std::pair<std::string, int>> meets;
  std::vector<std::string> not_isotopic_to;
  // Complete these seeds to a pants decomposition within the universe, then
  // require the solution disjoint from every pants curve except meets_in_pants.
  std::vector<std::string> pants_seed;
  std::vector<std::string> meets_in_pants;
  bool require_orientable_complement = false;
  bool require_nontrivial = true;
  // Some complement component must match (orientable, genus, boundary_count).
  std::optional<std::tuple<bool, int, int>> complement_piece;
  int max_len = 0;       // 0: default 4(g+n)
  int per_side_cap = 2;  // search bound on crossings per side
  std::vector<int> support_sides;  // empty: all non-boundary sides
  // Disambiguation among otherwise-equal solutions:
  //   ""            : none (two solutions raise Ambiguous)
  //   "front_tube:k": pick the solution with a front chord joining the two
  //                   gluing sides adjacent to hole k
  //   "lex"         : pick the least canonical key
  std::string tiebreak;
};

struct SynthesisOutcome {
  enum Kind { Unique, Multiple, None } kind;
  std::vector<CurveClass> witnesses;
};

using Universe = std::map<std::string, CurveClass>;

// Enumerate canonical curve classes within the word-length bound satisfying
// a raw predicate; deterministic order; stops after `max_results`.
std::vector<CurveClass> enumerate_curves(const SurfaceSchema& schema, int max_len, int per_side_cap,
                                         const std::vector<int>& support_sides,
                                         const std::function<bool(const CurveClass&)>& accept,
                                         int max_results = 8,
                                         const std::vector<CurveClass>& forced_disjoint = {},
                                         std::int64_t budget = 200'000'000);

SynthesisOutcome solve_constraints(const SurfaceSchema& schema, const CurveSpec& spec, const Universe& universe);

// The official constructor for figure-defined curves: unique solution or throw.
CurveClass synthesize_from_constraints(const SurfaceSchema& schema, const CurveSpec& spec, const Universe& universe);

// Greedy pants completion over universe curves (deterministic, backtracking).
std::optional<std::vector<std::string>> complete_pants(const SurfaceSchema& schema,
                                                       const std::vector<std::string>& seed,
                                                       const Universe& universe);

}  // namespace crosscap

#endif
