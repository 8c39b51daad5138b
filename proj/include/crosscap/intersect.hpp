#ifndef CROSSCAP_INTERSECT_HPP
#define CROSSCAP_INTERSECT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "crosscap/curve.hpp"

namespace crosscap {

// Minimal-position layout of one or two curves: per-face chord lists with
// endpoint slots, plus the realized crossing pairs.
struct StrandLayout {
  struct LChord {
    int owner;        // 0 = first curve, 1 = second
    bool back;        // face
    int a_side, b_side;
    int a_slot, b_slot;  // merged slot ranks along the side arc (front order)
  };
  std::vector<LChord> chords;
  std::vector<std::pair<int, int>> crossings;  // chord index pairs
  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

struct IntersectionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> rows;
};

// Exact geometric intersection number. Both classes must be canonical forms
// over the same schema. For x = y the sidedness convention answers (1 for
// one-sided, 0 for two-sided); otherwise taut words are overlaid and the
// crossing count is minimized exactly over the per-side strand orderings.
int geometric_intersection(const CurveClass& x, const CurveClass& y);

StrandLayout realize_minimal_position(const CurveClass& x, const CurveClass& y);

// Independent brute-force check: explores all bigon-reduction sequences of
// both words and all strand orderings, bounded by `budget` search nodes.
int oracle_intersection(const CurveClass& x, const CurveClass& y, std::int64_t budget = 40'000'000);

IntersectionMatrix intersection_matrix(const std::vector<CurveClass>& classes, int threads = 1);

// Minimal-position overlay with concrete compatible positions (all distinct
// per side). The realized crossing count equals geometric_intersection(x,y).
struct JointPosition {
  CurveWord first, second;
  int crossings = 0;
};
JointPosition joint_minimal_position(const CurveClass& x, const CurveClass& y);

}  // namespace crosscap

#endif
