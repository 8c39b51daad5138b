#include "crosscap/curve.hpp"

#include <algorithm>
#include <map>

namespace crosscap {

ChordEnd chord_end(const SurfaceSchema& schema, const Crossing& c, bool back) {
  if (schema.is_crosscap(c.side) && back) return {c.side, reflect_unit(c.pos)};
  return {c.side, c.pos};
}

std::vector<Chord> chords_of(const SurfaceSchema& schema, const CurveWord& w) {
  std::vector<Chord> out;
  int L = w.size();
  out.reserve(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) {
    const Crossing& from = w.nodes[static_cast<size_t>(i)];
    const Crossing& to = w.nodes[static_cast<size_t>((i + 1) % L)];
    bool back = from.to_back;
    out.push_back({chord_end(schema, from, back), chord_end(schema, to, back), back, i, (i + 1) % L});
  }
  return out;
}

bool chords_cross(const Chord& x, const Chord& y) {
  if (x.back != y.back) return false;
  // Interleaving test in the cyclic boundary order of the face disk.
  ChordEnd a = x.a, b = x.b;
  if (b < a) std::swap(a, b);
  auto inside = [&](const ChordEnd& p) { return a < p && p < b; };
  bool c_in = inside(y.a);
  bool d_in = inside(y.b);
  return c_in != d_in;
}

void validate_word(const SurfaceSchema& schema, const CurveWord& w) {
  int L = w.size();
  if (L < 2) throw Error(ErrorKind::InvalidCurve, "word must have at least two crossings");
  if (L % 2 != 0) throw Error(ErrorKind::InvalidCurve, "word length must be even (faces alternate)");
  std::map<int, std::vector<Frac>> per_side;
  for (int i = 0; i < L; ++i) {
    const Crossing& c = w.nodes[static_cast<size_t>(i)];
    if (c.side < 0 || c.side >= schema.side_count())
      throw Error(ErrorKind::InvalidCurve, "side index out of range");
    if (schema.is_boundary(c.side))
      throw Error(ErrorKind::InvalidCurve, "curves may not meet boundary sides");
    if (!(Frac(0) < c.pos && c.pos < Frac(1)))
      throw Error(ErrorKind::InvalidCurve, "positions must lie strictly inside the side arc");
    if (w.nodes[static_cast<size_t>((i + 1) % L)].to_back == c.to_back)
      throw Error(ErrorKind::InvalidCurve, "segment faces must alternate");
    per_side[c.side].push_back(c.pos);
  }
  for (auto& [side, ps] : per_side) {
    std::sort(ps.begin(), ps.end());
    for (size_t i = 1; i < ps.size(); ++i)
      if (ps[i] == ps[i - 1]) throw Error(ErrorKind::InvalidCurve, "duplicate position on a side");
  }
}

bool is_self_simple(const SurfaceSchema& schema, const CurveWord& w) {
  auto cs = chords_of(schema, w);
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (chords_cross(cs[i], cs[j])) return false;
  return true;
}

Sidedness word_sidedness(const SurfaceSchema& schema, const CurveWord& w) {
  int traversals = 0;
  for (const Crossing& c : w.nodes)
    if (schema.is_crosscap(c.side)) ++traversals;
  return (traversals % 2 == 1) ? Sidedness::OneSided : Sidedness::TwoSided;
}

namespace {

// Bigon: consecutive crossings on the same side with no other crossing of the
// word positioned between them. The strand slides off the side arc; the two
// flanking chords merge.
bool find_bigon(const SurfaceSchema& schema, const CurveWord& w, int& at) {
  (void)schema;
  int L = w.size();
  if (L < 2) return false;
  for (int i = 0; i < L; ++i) {
    const Crossing& x = w.nodes[static_cast<size_t>(i)];
    const Crossing& y = w.nodes[static_cast<size_t>((i + 1) % L)];
    if (x.side != y.side) continue;
    Frac lo = std::min(x.pos, y.pos), hi = std::max(x.pos, y.pos);
    bool blocked = false;
    for (int k = 0; k < L && !blocked; ++k) {
      if (k == i || k == (i + 1) % L) continue;
      const Crossing& z = w.nodes[static_cast<size_t>(k)];
      if (z.side == x.side && lo < z.pos && z.pos < hi) blocked = true;
    }
    if (!blocked) { at = i; return true; }
  }
  return false;
}

}  // namespace

CurveWord reduce_taut(const SurfaceSchema& schema, CurveWord w) {
  int at = 0;
  while (w.size() >= 2 && find_bigon(schema, w, at)) {
    int L = w.size();
    int j = (at + 1) % L;
    CurveWord next;
    next.nodes.reserve(static_cast<size_t>(L - 2));
    for (int k = 0; k < L; ++k)
      if (k != at && k != j) next.nodes.push_back(w.nodes[static_cast<size_t>(k)]);
    w = std::move(next);
  }
  return w;
}

void renormalize_positions(const SurfaceSchema& schema, CurveWord& w) {
  (void)schema;
  std::map<int, std::vector<Frac>> per_side;
  for (const Crossing& c : w.nodes) per_side[c.side].push_back(c.pos);
  for (auto& [side, ps] : per_side) std::sort(ps.begin(), ps.end());
  for (Crossing& c : w.nodes) {
    const auto& ps = per_side[c.side];
    auto it = std::lower_bound(ps.begin(), ps.end(), c.pos);
    int rank = static_cast<int>(it - ps.begin());
    c.pos = Frac(rank + 1, static_cast<std::int64_t>(ps.size()) + 1);
  }
}

CurveWord face_swap_word(const SurfaceSchema& schema, const CurveWord& w) {
  CurveWord out = w;
  for (Crossing& c : out.nodes) {
    c.to_back = !c.to_back;
    if (schema.is_crosscap(c.side)) c.pos = reflect_unit(c.pos);
  }
  return out;
}

CurveWord make_word(const std::vector<std::pair<int, Frac>>& steps, bool first_to_back) {
  CurveWord w;
  bool f = first_to_back;
  for (const auto& [side, pos] : steps) {
    w.nodes.push_back({side, pos, f});
    f = !f;
  }
  return w;
}

}  // namespace crosscap
