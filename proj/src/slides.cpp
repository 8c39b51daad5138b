#include <cstdlib>
#include <cstdio>
#include <algorithm>
#include <map>

#include "crosscap/intersect.hpp"
#include "crosscap/mcg.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/synth.hpp"
#include <set>

// Half twists and slide generators. Both act through explicit layout surgery:
// the half twist rotates the two-holed disk bounded by its support circle and
// shears entering strands halfway around the collar; the slides drag a plug
// hole (or crosscap) once around a one-sided loop, rerouting every strand the
// journey passes. Orientation conventions are fixed by the action pairs the
// verification suite checks.

namespace crosscap {

namespace {

struct FaceEnd2 {
  int side;
  Frac coord;
  bool operator<(const FaceEnd2& o) const {
    if (side != o.side) return side < o.side;
    return coord < o.coord;
  }
  bool operator>(const FaceEnd2& o) const { return o < *this; }
  bool operator==(const FaceEnd2& o) const { return side == o.side && coord == o.coord; }
};

FaceEnd2 fe(const SurfaceSchema& s, const Crossing& c, bool back) {
  ChordEnd e = chord_end(s, c, back);
  return {e.side, e.pos};
}

bool between(const FaceEnd2& lo, const FaceEnd2& hi, const FaceEnd2& z) { return lo < z && z < hi; }

// Assign alternating segment faces anchored at known nodes. anchor[i] >= 0
// pins node i's to_back. Throws on inconsistency.
void propagate_faces(CurveWord& w, const std::vector<int>& anchor) {
  int L = w.size();
  int first = -1;
  for (int i = 0; i < L; ++i)
    if (anchor[static_cast<size_t>(i)] >= 0) { first = i; break; }
  if (first < 0) throw Error(ErrorKind::InvalidInput, "no face anchor");
  bool cur = anchor[static_cast<size_t>(first)] != 0;
  for (int k = 0; k < L; ++k) {
    int i = (first + k) % L;
    w.nodes[static_cast<size_t>(i)].to_back = cur;
    int a = anchor[static_cast<size_t>(i)];
    if (a >= 0 && (a != 0) != cur)
      throw Error(ErrorKind::InvalidCurve, "face parity mismatch in surgery output");
    cur = !cur;
  }
}

}  // namespace

// ---- half twist ------------------------------------------------------------

CurveClass apply_half_twist(const MCGContext& ctx, int k, int power, const CurveClass& x) {
  const SurfaceSchema& s = ctx.schema;
  int g = s.genus, n = s.boundary_count;
  if (k < 1 || k >= n) throw Error(ErrorKind::UnsupportedGenerator, "half twist index out of range");
  int holeA = g + k, holeB = g + k + 1;
  int sideL = s.gluing_side(holeA - 1);
  int sideM = s.gluing_side(holeA);
  int sideR = s.gluing_side(holeB);

  std::string mname = curve_name2("b", holeA - 1, holeB);
  const CurveClass& mcls = ctx.resolve(mname);
  if (x.key == mcls.key) return x;

  if (power < 0) {
    // sigma^2 = t_m, so sigma^{-1} = t_m^{-s} followed by sigma; s is
    // calibrated once against the realized square.
    static std::map<std::string, int> memo;
    std::string key = std::to_string(ctx.schema.genus) + "," + std::to_string(ctx.schema.boundary_count) +
                      "|sigma" + std::to_string(k);
    auto it = memo.find(key);
    int ssign = 0;
    if (it != memo.end()) {
      ssign = it->second;
    } else {
      for (const auto& [name, z] : ctx.curves) {
        CurveClass plus = apply_twist(ctx.schema, mcls, z, 1);
        CurveClass minus = apply_twist(ctx.schema, mcls, z, -1);
        if (plus.key == minus.key) continue;
        CurveClass ffz;
        try {
          ffz = apply_half_twist(ctx, k, 1, apply_half_twist(ctx, k, 1, z));
        } catch (const Error&) {
          continue;
        }
        if (ffz.key == plus.key) ssign = 1;
        else if (ffz.key == minus.key) ssign = -1;
        else continue;
        break;
      }
      if (ssign == 0) throw Error(ErrorKind::UnsupportedGenerator, "could not calibrate the half-twist square");
      memo[key] = ssign;
    }
    CurveClass cur = x;
    for (int it2 = 0; it2 < -power; ++it2)
      cur = apply_half_twist(ctx, k, 1, apply_twist(ctx.schema, mcls, cur, -ssign));
    return cur;
  }

  CurveClass cur = x;
  int steps = power;
  int sgn = 1;
  for (int it = 0; it < steps; ++it) {
    JointPosition jp = joint_minimal_position(mcls, cur);
    const CurveWord& mw = jp.first;
    const CurveWord& xw = jp.second;

    // m = [L@l0, R@r0]; its two chords are the top and bottom of the circle.
    Frac l0, r0;
    for (const Crossing& nd : mw.nodes) {
      if (nd.side == sideL) l0 = nd.pos;
      if (nd.side == sideR) r0 = nd.pos;
    }
    auto inner = [&](const Crossing& nd) {
      if (nd.side == sideM) return true;
      if (nd.side == sideL) return nd.pos > l0;
      if (nd.side == sideR) return nd.pos < r0;
      return false;
    };

    int L = xw.size();
    // Crossings of x-chords with m's two chords, with insertion bookkeeping.
    struct Sweep {
      int xchord;
      bool via_front_mchord;
      FaceEnd2 along_key;  // order along the x-chord
      FaceEnd2 m_key;      // order along the m-chord (depth into the collar)
      bool m_from_wraps = false;
      int from_node = 0;
      int zone_side;
      Frac pos;
    };
    std::vector<Sweep> sweeps;
    for (int i = 0; i < L; ++i) {
      bool fx = xw.nodes[static_cast<size_t>(i)].to_back;
      FaceEnd2 u = fe(s, xw.nodes[static_cast<size_t>(i)], fx);
      FaceEnd2 v = fe(s, xw.nodes[static_cast<size_t>((i + 1) % L)], fx);
      FaceEnd2 xlo = std::min(u, v), xhi = std::max(u, v);
      for (int j = 0; j < 2; ++j) {
        bool fm = mw.nodes[static_cast<size_t>(j)].to_back;
        if (fm != fx) continue;
        FaceEnd2 p = fe(s, mw.nodes[static_cast<size_t>(j)], fm);
        FaceEnd2 q = fe(s, mw.nodes[static_cast<size_t>((j + 1) % 2)], fm);
        bool p_in = between(xlo, xhi, p), q_in = between(xlo, xhi, q);
        if (p_in == q_in) continue;
        Sweep sw;
        sw.xchord = i;
        sw.via_front_mchord = !fm;
        // Key along the x-chord: the m-endpoint inside the (u,v) arc.
        auto in_arc_x = [&](const FaceEnd2& z) {
          if (u < v) return u < z && z < v;
          return z > u || z < v;
        };
        sw.along_key = in_arc_x(p) ? p : q;
        // Position along the m-chord from its from-node, as the x-endpoint
        // inside the (from, to) boundary arc.
        FaceEnd2 mf = p, mt = q;
        auto in_arc_m = [&](const FaceEnd2& z) {
          if (mf < mt) return mf < z && z < mt;
          return z > mf || z < mt;
        };
        sw.m_key = in_arc_m(u) ? u : v;
        sw.m_from_wraps = !(mf < sw.m_key);
        sw.from_node = j;
        sweeps.push_back(sw);
      }
    }

    // Zone and depth ordering. A counterclockwise half-sweep from the top
    // chord lands in the left gate zone, from the bottom chord in the right
    // zone; the clockwise version swaps them.
    for (Sweep& sw : sweeps)
      sw.zone_side = (sw.via_front_mchord == (sgn > 0)) ? sideL : sideR;

    Frac minL(1), maxR(0);
    for (const Crossing& nd : xw.nodes) {
      if (nd.side == sideL && nd.pos > l0 && nd.pos < minL) minL = nd.pos;
      if (nd.side == sideR && nd.pos < r0 && nd.pos > maxR) maxR = nd.pos;
    }
    Frac gapL = (minL == Frac(1) ? Frac(1) - l0 : minL - l0);
    Frac gapR = (maxR == Frac(0) ? r0 : r0 - maxR);

    // The m-node sitting in each gate zone.
    int node_at_L = mw.nodes[0].side == sideL ? 0 : 1;
    for (int zone : {sideL, sideR}) {
      std::vector<int> ids;
      for (size_t d = 0; d < sweeps.size(); ++d)
        if (sweeps[d].zone_side == zone) ids.push_back(static_cast<int>(d));
      // Depth rule: a sweep entering nearer the zone node (along its m-chord)
      // crosses the gate nearer the circle. All sweeps of one zone enter via
      // the same m-chord, so a single ascending/descending sort suffices.
      int zone_node = (zone == sideL) ? node_at_L : 1 - node_at_L;
      std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        const Sweep& A = sweeps[static_cast<size_t>(a)];
        const Sweep& B = sweeps[static_cast<size_t>(b)];
        auto ka = std::make_pair(A.m_from_wraps ? 1 : 0, A.m_key);
        auto kb = std::make_pair(B.m_from_wraps ? 1 : 0, B.m_key);
        bool ascending = A.from_node == zone_node;
        return ascending ? ka < kb : kb < ka;
      });
      int cnt = static_cast<int>(ids.size());
      for (int r = 0; r < cnt; ++r) {
        Frac depth(r + 1, cnt + 1);
        Sweep& sw = sweeps[static_cast<size_t>(ids[static_cast<size_t>(r)])];
        sw.pos = (zone == sideL) ? l0 + gapL * depth : r0 - gapR * depth;
      }
    }

    // Rotate inner nodes and splice sweep nodes along each chord.
    auto rotate_node = [&](const Crossing& nd) {
      Crossing out = nd;
      if (nd.side == sideM) {
        out.pos = reflect_unit(nd.pos);
      } else if (nd.side == sideL) {
        Frac depth = (nd.pos - l0) / (Frac(1) - l0);
        out.side = sideR;
        out.pos = r0 * (Frac(1) - depth);
      } else if (nd.side == sideR) {
        Frac depth = (r0 - nd.pos) / r0;
        out.side = sideL;
        out.pos = l0 + (Frac(1) - l0) * depth;
      }
      return out;
    };

    std::map<int, std::vector<int>> per_chord;
    for (size_t d = 0; d < sweeps.size(); ++d) per_chord[sweeps[d].xchord].push_back(static_cast<int>(d));
    for (auto& [i, ds] : per_chord) {
      bool fx = xw.nodes[static_cast<size_t>(i)].to_back;
      FaceEnd2 u = fe(s, xw.nodes[static_cast<size_t>(i)], fx);
      FaceEnd2 v = fe(s, xw.nodes[static_cast<size_t>((i + 1) % L)], fx);
      auto key = [&](int d) {
        const FaceEnd2& w = sweeps[static_cast<size_t>(d)].along_key;
        bool wrapped = !(u < w);
        (void)v;
        return std::make_pair(wrapped ? 1 : 0, w);
      };
      std::sort(ds.begin(), ds.end(), [&](int a, int b) { return key(a) < key(b); });
    }

    CurveWord out;
    std::vector<int> anchor;
    bool any_outer = false;
    for (int i = 0; i < L; ++i) {
      const Crossing& nd = xw.nodes[static_cast<size_t>(i)];
      if (inner(nd)) {
        out.nodes.push_back(rotate_node(nd));
        anchor.push_back(-1);
      } else {
        out.nodes.push_back(nd);
        anchor.push_back(nd.to_back ? 1 : 0);
        any_outer = true;
      }
      auto it = per_chord.find(i);
      if (it == per_chord.end()) continue;
      for (int d : it->second) {
        const Sweep& sw = sweeps[static_cast<size_t>(d)];
        out.nodes.push_back({sw.zone_side, sw.pos, false});
        anchor.push_back(-1);
      }
    }
    if (!any_outer) {
      // Entirely inside the disk: the rotation flips faces.
      anchor[0] = xw.nodes[0].to_back ? 0 : 1;
    }
    propagate_faces(out, anchor);
    cur = canonicalize(s, out);
  }
  return cur;
}

// ---- slides ----------------------------------------------------------------

namespace {

// A slide drags the plug hole once around a routed one-sided loop. Strand
// crossings with the loop gain an excursion to the plug and around it; for a
// crosscap plug, strands through it ride along and come back mirrored.
struct SlideRig {
  const SurfaceSchema& schema;
  CurveWord loop;            // routed, positions fixed relative to the plug
  int plug_left, plug_right; // corridor sides of the plug hole
  int plug_cross = -1;       // crosscap side of the plug (slide y), else -1
  int base_node;             // loop node adjacent to the plug
  std::vector<int> orient;   // drawn-offset orientation along the loop
  bool flip_runs = false;    // calibration: swap out/back radial sides
  CurveWord support_boundary;  // the circle bounding the slide's support
  int ride_sign = 1;         // calibration: relative nesting of the two arm runs
  int arm_in = 1, arm_out = -1;  // calibration: radial anchors of the arm runs
  bool back_same_side = false;   // calibration: return-run radial side
  bool back_outside = false;     // calibration: return-run nesting level
  bool wrap_left_first = true;   // calibration: plug wrap crossing order

  SlideRig(const SurfaceSchema& s) : schema(s) {}

  void finish_orient() {
    int m = loop.size();
    orient.assign(static_cast<size_t>(m), 1);
    std::vector<int> oc(static_cast<size_t>(m), 1);
    for (int j = 1; j < m; ++j) {
      int flip = schema.is_crosscap(loop.nodes[static_cast<size_t>(j)].side) ? -1 : 1;
      oc[static_cast<size_t>(j)] = oc[static_cast<size_t>(j - 1)] * flip;
    }
    for (int kk = 0; kk < m; ++kk) orient[static_cast<size_t>(kk)] = oc[static_cast<size_t>((kk - 1 + m) % m)];
  }
};

// When direct surgery cannot realize an embedded image (deep nesting around
// the sliding plug), the image is pinned instead by its transported
// intersection profile: i(F(x), F(z)) = i(x, z) over the catalog curves z on
// which the direct surgery works, which fill the surface.
CurveClass slide_by_profile(const MCGContext& ctx, const std::function<CurveClass(const CurveClass&)>& direct,
                            int loop_len, const CurveClass& x, const std::string& rig_tag) {
  // Probe pairs (z, F(z)) with z spanning the catalog and nearby twists of it.
  static std::map<std::string, std::vector<std::pair<CurveClass, CurveClass>>> probe_cache;
  std::string cache_key = rig_tag + "|" + std::to_string(ctx.schema.genus) + "," +
                          std::to_string(ctx.schema.boundary_count);
  auto& pairs = probe_cache[cache_key];
  if (pairs.empty()) {
    std::vector<CurveClass> candidates;
    for (const auto& [name, z] : ctx.curves) candidates.push_back(z);
    std::vector<CurveClass> twisted;
    for (const auto& [name, c] : ctx.curves) {
      if (c.sidedness != Sidedness::TwoSided) continue;
      for (const auto& [name2, v] : ctx.curves) {
        if (twisted.size() >= 30) break;
        for (int pw : {1, -1}) {
          try {
            CurveClass tv = apply_twist(ctx.schema, c, v, pw);
            twisted.push_back(tv);
          } catch (const Error&) {
          }
        }
      }
      if (twisted.size() >= 30) break;
    }
    for (const CurveClass& t : twisted) candidates.push_back(t);
    std::set<std::string> seen;
    for (const CurveClass& z : candidates) {
      if (!seen.insert(z.key).second) continue;
      try {
        CurveClass fz = direct(z);
        pairs.push_back({z, fz});
      } catch (const Error&) {
        continue;
      }
    }
  }
  Universe probes;
  std::vector<std::pair<std::string, int>> meets;
  std::vector<std::string> disjoints;
  int made = 0;
  for (const auto& [z, fz] : pairs) {
    int target = geometric_intersection(x, z);
    std::string pname = "probe:" + std::to_string(made);
    probes.emplace(pname, fz);
    if (target == 0) disjoints.push_back(pname);
    else meets.push_back({pname, target});
    ++made;
  }
  if (made < 4) throw Error(ErrorKind::UnsupportedGenerator, "slide image underdetermined (too few probes)");
  CurveSpec spec;
  spec.name = "slide-image";
  spec.sided = x.sidedness;
  spec.disjoint_from = disjoints;
  spec.meets = meets;
  spec.require_nontrivial = false;
  int hard_cap = x.word.size() + 2 * loop_len + 4;
  for (int bound = std::max(2, x.word.size() - 2); bound <= hard_cap; bound += 4) {
    spec.max_len = bound;
    spec.per_side_cap = bound <= x.word.size() + 2 ? 3 : 4;
    auto out = solve_constraints(ctx.schema, spec, probes);
    if (out.kind == SynthesisOutcome::Unique) return out.witnesses[0];
    if (out.kind == SynthesisOutcome::Multiple)
      throw Error(ErrorKind::UnsupportedGenerator, "slide image ambiguous within bound");
  }
  throw Error(ErrorKind::UnsupportedGenerator, "slide image not found within bound");
}

CurveClass apply_slide(const MCGContext& ctx, SlideRig rig, int power, const CurveClass& x) {
  const SurfaceSchema& s = ctx.schema;
  CurveClass cur = x;
  int steps = power > 0 ? power : -power;
  int dir = power > 0 ? 1 : -1;

  for (int it = 0; it < steps; ++it) {
    // Place the loop against x: loop positions are already fixed; squeeze
    // x's positions away from reserved bands near the plug.
    CurveWord xw = cur.word;
    int m = rig.loop.size();
    int L = xw.size();

    // Reserve position bands: x nodes on any side are renormalized into
    // (1/3, 2/3); loop and detour nodes live outside that band.
    {
      std::map<int, std::vector<Frac>> per_side;
      for (const Crossing& nd : xw.nodes) per_side[nd.side].push_back(nd.pos);
      for (auto& [sd, ps] : per_side) std::sort(ps.begin(), ps.end());
      for (Crossing& nd : xw.nodes) {
        const auto& ps = per_side[nd.side];
        int rank = static_cast<int>(std::lower_bound(ps.begin(), ps.end(), nd.pos) - ps.begin());
        nd.pos = Frac(1, 3) + Frac(rank + 1, static_cast<std::int64_t>(ps.size()) + 1) * Frac(1, 3);
      }
    }

    // Crossings of x-chords with loop chords.
    struct Hit {
      int xchord;
      int lchord;
      FaceEnd2 along_key;
      int arr;         // arrival radial side
      Frac level;      // excursion nesting level in (0,1)
      Frac level_back; // return-run level, just outside the out-run
      Frac to_base;
    };
    std::vector<Hit> hits;
    for (int i = 0; i < L; ++i) {
      bool fx = xw.nodes[static_cast<size_t>(i)].to_back;
      FaceEnd2 u = fe(s, xw.nodes[static_cast<size_t>(i)], fx);
      FaceEnd2 v = fe(s, xw.nodes[static_cast<size_t>((i + 1) % L)], fx);
      FaceEnd2 xlo = std::min(u, v), xhi = std::max(u, v);
      for (int j = 0; j < m; ++j) {
        bool fl = rig.loop.nodes[static_cast<size_t>(j)].to_back;
        if (fl != fx) continue;
        FaceEnd2 p = fe(s, rig.loop.nodes[static_cast<size_t>(j)], fl);
        FaceEnd2 q = fe(s, rig.loop.nodes[static_cast<size_t>((j + 1) % m)], fl);
        bool p_in = between(xlo, xhi, p), q_in = between(xlo, xhi, q);
        if (p_in == q_in) continue;
        Hit h;
        h.xchord = i;
        h.lchord = j;
        auto in_arc_x = [&](const FaceEnd2& z) {
          if (u < v) return u < z && z < v;
          return z > u || z < v;
        };
        h.along_key = in_arc_x(p) ? p : q;
        // Face-coordinate displacement of the chord's from-node toward the
        // arrival side of the x-strand.
        FaceEnd2 cp = std::min(p, q), cq = std::max(p, q);
        bool u_inside = between(cp, cq, u);
        bool from_is_min = fe(s, rig.loop.nodes[static_cast<size_t>(j)], fl) == cp;
        h.arr = (u_inside == from_is_min) ? 1 : -1;  // face-coordinate side at the from-node
        // Walk distance from just past this chord to the base node.
        int dsteps = ((rig.base_node - (j + 1)) % m + m) % m;
        h.to_base = Frac(dsteps);
        hits.push_back(h);
      }
    }
    // Nesting levels: farther hits enclose nearer ones.
    {
      std::vector<int> ids(hits.size());
      for (size_t d = 0; d < ids.size(); ++d) ids[d] = static_cast<int>(d);
      std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (!(hits[static_cast<size_t>(a)].to_base == hits[static_cast<size_t>(b)].to_base))
          return hits[static_cast<size_t>(a)].to_base < hits[static_cast<size_t>(b)].to_base;
        return a < b;
      });
      int cnt = static_cast<int>(ids.size());
      for (int r = 0; r < cnt; ++r) {
        Hit& h = hits[static_cast<size_t>(ids[static_cast<size_t>(r)])];
        h.level = Frac(2 * r + 1, 2 * cnt + 3);
        h.level_back = Frac(2 * r + 2, 2 * cnt + 3);
      }
    }

    // Traversals of the plug crosscap ride around the loop and come back
    // mirrored; give each its own outermost level.
    std::vector<int> traversals;
    if (rig.plug_cross >= 0)
      for (int i = 0; i < L; ++i)
        if (xw.nodes[static_cast<size_t>(i)].side == rig.plug_cross) traversals.push_back(i);

    auto A = [&](const Crossing& nd, bool face_back) {
      return (s.is_crosscap(nd.side) && face_back) ? -1 : 1;
    };

    // Emit a run parallel to the loop: `count` nodes from `start` walking
    // `walk`; T0 is the transported front-end offset sign at the first node.
    // Returns the sign the run would carry onto the next node.
    auto emit_run = [&](std::vector<Crossing>& out, int start, int count, int walk, int T0, Frac level) {
      int T = T0;
      for (int t = 0; t < count; ++t) {
        int k = ((start + walk * t) % m + m) % m;
        const Crossing& src = rig.loop.nodes[static_cast<size_t>(k)];
        Crossing nd = src;
        nd.pos = src.pos + Frac(T) * level * Frac(1, 12);
        out.push_back(nd);
        int kn = ((start + walk * (t + 1)) % m + m) % m;
        int chord = walk > 0 ? k : kn;
        bool f = rig.loop.nodes[static_cast<size_t>(chord)].to_back;
        T = -T * A(src, f) * A(rig.loop.nodes[static_cast<size_t>(kn)], f);
      }
      return T;
    };

    auto emit_plug_wrap = [&](std::vector<Crossing>& out, Frac level) {
      // Around the plug hole: one crossing on each adjacent corridor, placed
      // between the plug and everything else. plug_left's arc ends at the
      // plug (position near 1); plug_right starts at it (position near 0).
      Frac depth = level * Frac(1, 24);
      if (rig.wrap_left_first) {
        out.push_back({rig.plug_left, Frac(1) - depth, false});
        out.push_back({rig.plug_right, depth, false});
      } else {
        out.push_back({rig.plug_right, depth, false});
        out.push_back({rig.plug_left, Frac(1) - depth, false});
      }
    };

    auto emit_excursion = [&](std::vector<Crossing>& out, const Hit& h) {
      int walk = dir * (rig.flip_runs ? -1 : 1);
      bool f_hit = rig.loop.nodes[static_cast<size_t>(h.lchord)].to_back;
      int start, count;
      if (walk > 0) {
        start = (h.lchord + 1) % m;
        count = ((rig.base_node - h.lchord - 1 + m) % m) + 1;
      } else {
        start = h.lchord;
        count = ((h.lchord - rig.base_node - 1 + m) % m) + 1;
      }
      // Chord-parallel anchoring: the shift at the to-node is opposite the
      // from-node's arrival-side shift.
      int k1 = start;
      int eta1 = (walk > 0 ? -1 : 1) * h.arr;
      int T0 = eta1 * A(rig.loop.nodes[static_cast<size_t>(k1)], f_hit);
      std::vector<Crossing> outrun;
      emit_run(outrun, start, count, walk, T0, h.level);
      for (const Crossing& nd : outrun) out.push_back(nd);
      emit_plug_wrap(out, h.level);
      // Return run retracing the path; its radial side at the shared base
      // node is a per-rig convention, nested slightly inside the out-run.
      int back_start = ((start + walk * (count - 1)) % m + m) % m;
      Crossing last_out = outrun.back();
      const Crossing& base_src = rig.loop.nodes[static_cast<size_t>(back_start)];
      int T_last = (last_out.pos > base_src.pos) ? 1 : -1;
      int T_back = rig.back_same_side ? T_last : -T_last;
      Frac lvl_back = rig.back_outside ? h.level_back : h.level * Frac(13, 16);
      emit_run(out, back_start, count, -walk, T_back, lvl_back);
    };

    std::map<int, std::vector<int>> per_chord;
    for (size_t d = 0; d < hits.size(); ++d) per_chord[hits[d].xchord].push_back(static_cast<int>(d));
    for (auto& [i, ds] : per_chord) {
      bool fx = xw.nodes[static_cast<size_t>(i)].to_back;
      FaceEnd2 u = fe(s, xw.nodes[static_cast<size_t>(i)], fx);
      auto key = [&](int d) {
        const FaceEnd2& w = hits[static_cast<size_t>(d)].along_key;
        bool wrapped = !(u < w);
        return std::make_pair(wrapped ? 1 : 0, w);
      };
      std::sort(ds.begin(), ds.end(), [&](int a, int b) { return key(a) < key(b); });
    }

    std::vector<Crossing> outn;
    std::vector<int> anchor;
    auto pad_anchor = [&](size_t upto) { while (anchor.size() < upto) anchor.push_back(-1); };

    for (int i = 0; i < L; ++i) {
      const Crossing& nd = xw.nodes[static_cast<size_t>(i)];
      bool is_trav = rig.plug_cross >= 0 && nd.side == rig.plug_cross;
      if (is_trav) {
        // Both arms of a strand through the sliding crosscap chase the full
        // journey: each gains a closed parallel circuit of the loop based at
        // the plug (the circuit re-crosses the base corridor, and the
        // one-sidedness of the loop returns it on the other radial side).
        // The crosscap crossing itself comes back mirrored.
        int cnt = static_cast<int>(hits.size());
        Frac lvl_in(cnt + 1, cnt + 3), lvl_out(cnt + 2, cnt + 3);
        if (rig.ride_sign < 0) std::swap(lvl_in, lvl_out);
        int walk = dir * (rig.flip_runs ? -1 : 1);
        emit_run(outn, rig.base_node, m + 1, walk, rig.arm_in, lvl_in);
        Crossing mirrored = nd;
        mirrored.pos = reflect_unit(nd.pos);
        outn.push_back(mirrored);
        emit_run(outn, rig.base_node, m + 1, -walk, rig.arm_out, lvl_out);
        pad_anchor(outn.size());
      } else {
        outn.push_back(nd);
        pad_anchor(outn.size());
        anchor[outn.size() - 1] = nd.to_back ? 1 : 0;
      }
      auto itd = per_chord.find(i);
      if (itd == per_chord.end()) continue;
      for (int d : itd->second) emit_excursion(outn, hits[static_cast<size_t>(d)]);
      pad_anchor(outn.size());
    }
    pad_anchor(outn.size());

    CurveWord out;
    out.nodes = std::move(outn);
    if (std::getenv("CROSSCAP_DEBUG_SLIDES")) {
      fprintf(stderr, "slide word:");
      for (const Crossing& nd : out.nodes)
        fprintf(stderr, " %s@%lld/%lld", s.side(nd.side).label.c_str(), (long long)nd.pos.num, (long long)nd.pos.den);
      fprintf(stderr, "\n");
    }
    bool has_anchor = false;
    for (int a : anchor)
      if (a >= 0) has_anchor = true;
    if (!has_anchor) anchor[0] = xw.nodes[0].to_back ? 1 : 0;
    propagate_faces(out, anchor);
    if (std::getenv("CROSSCAP_DEBUG_SLIDES")) {
      auto cs = chords_of(s, out);
      for (size_t i2 = 0; i2 < cs.size(); ++i2)
        for (size_t j2 = i2 + 1; j2 < cs.size(); ++j2)
          if (chords_cross(cs[i2], cs[j2]))
            fprintf(stderr, "CROSS: chord%zu (%s@%lld/%lld - %s@%lld/%lld %c) x chord%zu (%s@%lld/%lld - %s@%lld/%lld %c)\n",
                    i2, s.side(cs[i2].a.side).label.c_str(), (long long)cs[i2].a.pos.num, (long long)cs[i2].a.pos.den,
                    s.side(cs[i2].b.side).label.c_str(), (long long)cs[i2].b.pos.num, (long long)cs[i2].b.pos.den,
                    cs[i2].back ? 'B' : 'F',
                    j2, s.side(cs[j2].a.side).label.c_str(), (long long)cs[j2].a.pos.num, (long long)cs[j2].a.pos.den,
                    s.side(cs[j2].b.side).label.c_str(), (long long)cs[j2].b.pos.num, (long long)cs[j2].b.pos.den,
                    cs[j2].back ? 'B' : 'F');
    }
    cur = canonicalize(s, out);
  }
  return cur;
}

}  // namespace

// Shared machinery: a slide-like operation with an exact direct surgery, a
// profile-transport fallback, and an inverse through the square relation
// (F^2 acts as the twist about the support boundary).
struct SlideOp {
  const MCGContext& ctx;
  std::function<CurveClass(const CurveClass&)> direct;
  CurveClass boundary;
  std::string tag;
  int loop_len;

  std::vector<std::pair<CurveClass, CurveClass>>& probe_pairs() const {
    static std::map<std::string, std::vector<std::pair<CurveClass, CurveClass>>> cache;
    auto& pairs = cache[cache_key()];
    if (pairs.empty()) {
      std::vector<CurveClass> candidates;
      for (const auto& [name, z] : ctx.curves) candidates.push_back(z);
      size_t base = candidates.size();
      size_t extra = base < 16 ? 60 : 30;
      for (size_t i = 0; i < base && candidates.size() < base + extra; ++i) {
        if (candidates[i].sidedness != Sidedness::TwoSided) continue;
        for (size_t j = 0; j < base && candidates.size() < base + extra; ++j) {
          for (int pw : {1, -1}) {
            try {
              candidates.push_back(apply_twist(ctx.schema, candidates[i], candidates[j], pw));
            } catch (const Error&) {
            }
          }
        }
      }
      std::set<std::string> seen;
      bool dbg = std::getenv("CROSSCAP_DEBUG_SLIDES") != nullptr;
      std::vector<CurveClass> deferred;
      for (const CurveClass& z : candidates) {
        if (!seen.insert(z.key).second) continue;
        try {
          pairs.push_back({z, direct(z)});
        } catch (const Error& e) {
          deferred.push_back(z);
          if (dbg) fprintf(stderr, "probe-fail %s: %s\n", z.name ? z.name->c_str() : z.key.c_str(), e.what());
        }
      }
      // Bootstrap: once a filling base exists, images of the remaining
      // candidates can be pinned by their transported profiles too.
      if (pairs.size() >= 4) {
        size_t want = std::min(deferred.size(), static_cast<size_t>(16));
        for (size_t di = 0; di < want; ++di) {
          try {
            pairs.push_back({deferred[di], by_profile(deferred[di], /*use_square_filter=*/false)});
          } catch (const Error&) {
          }
        }
      }
    }
    return pairs;
  }

  std::string cache_key() const {
    return tag + "|" + std::to_string(ctx.schema.genus) + "," + std::to_string(ctx.schema.boundary_count);
  }

  int square_sign() const {
    static std::map<std::string, int> memo;
    auto it = memo.find(cache_key());
    if (it != memo.end()) return it->second;
    // A trivial support boundary (disk or Moebius bounding, or boundary
    // parallel) twists trivially on curve classes: the slide squares to the
    // identity action and is its own inverse.
    if (!is_nontrivial(ctx.schema, boundary)) {
      memo[cache_key()] = 0;
      return 0;
    }
    bool dbg = std::getenv("CROSSCAP_DEBUG_SLIDES") != nullptr;
    if (dbg) fprintf(stderr, "cal: %zu probe pairs\n", probe_pairs().size());
    for (const auto& [z, fz] : probe_pairs()) {
      CurveClass plus = apply_twist(ctx.schema, boundary, z, 1);
      CurveClass minus = apply_twist(ctx.schema, boundary, z, -1);
      if (plus.key == minus.key) continue;
      CurveClass ffz;
      try {
        ffz = direct(fz);
      } catch (const Error&) {
        try {
          ffz = by_profile(fz, /*use_square_filter=*/false);
        } catch (const Error& e) {
          if (dbg) fprintf(stderr, "cal: F(fz) failed for z=%s: %s\n", z.key.c_str(), e.what());
          continue;
        }
      }
      int sign = 0;
      if (ffz.key == plus.key) sign = 1;
      else if (ffz.key == minus.key) sign = -1;
      else {
        if (dbg)
          fprintf(stderr, "cal: mismatch z=%s ffz=%s plus=%s minus=%s\n", z.key.c_str(), ffz.key.c_str(),
                  plus.key.c_str(), minus.key.c_str());
        continue;
      }
      memo[cache_key()] = sign;
      return sign;
    }
    throw Error(ErrorKind::UnsupportedGenerator, "could not calibrate the slide square for " + tag);
  }

  CurveClass by_profile(const CurveClass& x, bool use_square_filter = true) const {
    auto& pairs = probe_pairs();
    if (pairs.size() < 4) throw Error(ErrorKind::UnsupportedGenerator, "slide image underdetermined (few probes)");
    Universe probes;
    std::vector<std::pair<std::string, int>> meets;
    std::vector<std::string> disjoints;
    int made = 0;
    for (const auto& [z, fz] : pairs) {
      int target = geometric_intersection(x, z);
      std::string pname = "probe:" + std::to_string(made++);
      probes.emplace(pname, fz);
      if (target == 0) disjoints.push_back(pname);
      else meets.push_back({pname, target});
    }
    CurveSpec spec;
    spec.name = "slide-image";
    spec.sided = x.sidedness;
    spec.disjoint_from = disjoints;
    spec.meets = meets;
    spec.require_nontrivial = false;
    int hard_cap = x.word.size() + 2 * loop_len + 4;
    for (int bound = std::max(2, x.word.size() - 2); bound <= hard_cap; bound += 4) {
      spec.max_len = bound;
      spec.per_side_cap = bound <= x.word.size() + 2 ? 3 : 4;
      auto out = solve_constraints(ctx.schema, spec, probes);
      if (out.kind == SynthesisOutcome::None) continue;
      if (out.kind == SynthesisOutcome::Unique) return out.witnesses[0];
      // Multiple: keep the witness consistent with the square relation.
      std::vector<CurveClass> keep;
      if (use_square_filter) {
        try {
          CurveClass want = apply_twist(ctx.schema, boundary, x, square_sign());
          for (const CurveClass& w : out.witnesses) {
            try {
              if (direct(w).key == want.key) keep.push_back(w);
            } catch (const Error&) {
            }
          }
        } catch (const Error&) {
        }
      }
      if (keep.size() == 1) return keep[0];
      throw Error(ErrorKind::UnsupportedGenerator, "slide image ambiguous within bound");
    }
    throw Error(ErrorKind::UnsupportedGenerator, "slide image not found within bound");
  }

  CurveClass forward(const CurveClass& x) const {
    try {
      return direct(x);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidCurve) throw;
      return by_profile(x);
    }
  }

  CurveClass apply(int power, const CurveClass& x) const {
    int steps = power > 0 ? power : -power;
    CurveClass cur = x;
    for (int it = 0; it < steps; ++it) {
      if (power > 0) {
        cur = forward(cur);
      } else {
        int sgn = square_sign();
        cur = forward(sgn == 0 ? cur : apply_twist(ctx.schema, boundary, cur, -sgn));
      }
    }
    return cur;
  }
};

CurveClass apply_crosscap_slide(const MCGContext& ctx, int power, const CurveClass& x) {
  const SurfaceSchema& s = ctx.schema;
  int g = s.genus;
  if (g < 2) throw Error(ErrorKind::UnsupportedGenerator, "crosscap slide needs genus >= 2");
  SlideRig rig(s);
  int sq = s.crosscap_side(g - 1);     // the crosscap the loop threads
  int corridor = s.gluing_side(g - 1); // between crosscaps g-1 and g
  // The corridor's far end adjoins the plug crosscap: base sits near it.
  rig.loop = make_word({{sq, Frac(1, 6)}, {corridor, Frac(5, 6)}}, false);
  rig.base_node = 1;
  rig.plug_cross = s.crosscap_side(g);
  rig.plug_left = corridor;
  rig.plug_right = s.gluing_side(g);
  rig.finish_orient();
  int holes = s.holes();
  SlideOp op{ctx,
             [&ctx, rig](const CurveClass& z) { return apply_slide(ctx, rig, 1, z); },
             canonicalize(s, make_word({{s.gluing_side(cyc_index(g - 2, holes)), Frac(1, 2)},
                                        {s.gluing_side(g), Frac(1, 2)}},
                                       false)),
             "y", rig.loop.size()};
  return op.apply(power, x);
}

CurveClass apply_boundary_slide(const MCGContext& ctx, int which, int power, const CurveClass& x) {
  const SurfaceSchema& s = ctx.schema;
  int g = s.genus, n = s.boundary_count;
  if (n < 1) throw Error(ErrorKind::UnsupportedGenerator, "boundary slide needs boundary");
  SlideRig rig(s);
  rig.plug_left = s.gluing_side(g + n - 1);
  rig.plug_right = s.gluing_side(g + n);
  CurveWord bword;
  if (which == 1) {
    int sq = s.crosscap_side(1);
    rig.loop = make_word({{sq, Frac(1, 6)}, {s.gluing_side(g + n), Frac(1, 6)}}, false);
    rig.base_node = 1;
    rig.wrap_left_first = true;  // base corridor is the plug's right side
    bword = make_word({{s.gluing_side(g + n - 1), Frac(1, 2)}, {s.gluing_side(1), Frac(1, 2)}}, false);
  } else if (which == 2) {
    int sq = s.crosscap_side(g);
    rig.loop = make_word({{sq, Frac(1, 6)}, {s.gluing_side(g + n - 1), Frac(5, 6)}}, false);
    rig.base_node = 1;
    rig.wrap_left_first = false;  // base corridor is the plug's left side
    bword = make_word({{s.gluing_side(g - 1), Frac(1, 2)}, {s.gluing_side(g + n), Frac(1, 2)}}, false);
  } else {
    throw Error(ErrorKind::UnsupportedGenerator, "boundary slide index must be 1 or 2");
  }
  rig.finish_orient();
  SlideOp op{ctx,
             [&ctx, rig](const CurveClass& z) { return apply_slide(ctx, rig, 1, z); },
             canonicalize(s, bword), "xi" + std::to_string(which), rig.loop.size()};
  return op.apply(power, x);
}

}  // namespace crosscap

