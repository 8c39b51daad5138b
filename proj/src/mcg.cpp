#include "crosscap/mcg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "crosscap/intersect.hpp"

namespace crosscap {

const CurveClass& MCGContext::resolve(const std::string& name) const {
  auto it = curves.find(name);
  if (it == curves.end()) throw Error(ErrorKind::UnsupportedGenerator, "unresolved curve " + name);
  return it->second;
}

MCGContext make_context(const CurveCatalog& catalog) {
  MCGContext ctx;
  ctx.schema = catalog.schema;
  ctx.curves = catalog.curves;
  return ctx;
}

namespace {

// ---- Dehn twist surgery ---------------------------------------------------
//
// The image of x under the twist about c is built on the joint minimal
// layout: every strand of x through the annulus around c is replaced by a
// spiral that runs once around the annulus. Spirals are parameterized by the
// entry angle along c, which keeps all inserted positions distinct, and the
// drawn offset sign is carried across crosscap traversals of c.

struct FaceEnd {
  int side;
  Frac coord;
  bool operator<(const FaceEnd& o) const {
    if (side != o.side) return side < o.side;
    return coord < o.coord;
  }
  bool operator>(const FaceEnd& o) const { return o < *this; }
  bool operator==(const FaceEnd& o) const { return side == o.side && coord == o.coord; }
};

FaceEnd end_of(const SurfaceSchema& schema, const Crossing& c, bool back) {
  ChordEnd e = chord_end(schema, c, back);
  return {e.side, e.pos};
}

bool strictly_between(const FaceEnd& lo, const FaceEnd& hi, const FaceEnd& z) {
  return lo < z && z < hi;
}

struct TwistBuilder {
  const SurfaceSchema& schema;
  CurveWord cw, xw;  // positioned copies, c first
  int m, L;
  int sign;
  Frac delta;

  struct XCross {
    int xchord, cchord;
    Frac theta;   // entry angle along c, in walk units
    int s_face;   // face-coordinate arrival side at the chord's from-node
    int r_entry;  // radial side of the annulus the strand enters from
    int dir;      // walk direction of the spiral
  };
  std::vector<XCross> crossings;
  std::vector<int> orient;  // global drawn-offset orientation, one per node

  // A(node, face): -1 exactly when the attachment of that face at the node is
  // antipodally reindexed (crosscap side seen from the back face).
  int A(const Crossing& nd, bool face_back) const {
    return (schema.is_crosscap(nd.side) && face_back) ? -1 : 1;
  }

  TwistBuilder(const SurfaceSchema& s, const JointPosition& jp, int sgn)
      : schema(s), cw(jp.first), xw(jp.second), sign(sgn) {
    m = cw.size();
    L = xw.size();
    // Parallel transport of offset signs closes up iff c is two-sided.
    int closure = 1;
    for (int k = 0; k < m; ++k) {
      bool f = cw.nodes[static_cast<size_t>(k)].to_back;
      closure *= -A(cw.nodes[static_cast<size_t>(k)], f) * A(cw.nodes[static_cast<size_t>((k + 1) % m)], f);
    }
    if (closure != 1) throw Error(ErrorKind::UnsupportedGenerator, "twist curve is one-sided");
    orient.assign(static_cast<size_t>(m), 1);
    for (int k = 0; k + 1 < m; ++k) {
      bool f = cw.nodes[static_cast<size_t>(k)].to_back;
      orient[static_cast<size_t>(k + 1)] =
          -orient[static_cast<size_t>(k)] * A(cw.nodes[static_cast<size_t>(k)], f) * A(cw.nodes[static_cast<size_t>(k + 1)], f);
    }
    find_crossings();
    pick_delta();
  }

  FaceEnd c_end(int node, bool face_back) const {
    return end_of(schema, cw.nodes[static_cast<size_t>(((node % m) + m) % m)], face_back);
  }
  FaceEnd x_end(int node, bool face_back) const {
    return end_of(schema, xw.nodes[static_cast<size_t>(((node % L) + L) % L)], face_back);
  }

  void find_crossings() {
    for (int i = 0; i < L; ++i) {
      bool fx = xw.nodes[static_cast<size_t>(i)].to_back;
      FaceEnd u = x_end(i, fx), v = x_end(i + 1, fx);
      FaceEnd lo = std::min(u, v), hi = std::max(u, v);
      for (int j = 0; j < m; ++j) {
        bool fc = cw.nodes[static_cast<size_t>(j)].to_back;
        if (fc != fx) continue;
        FaceEnd p = c_end(j, fc), q = c_end(j + 1, fc);
        bool p_in = strictly_between(lo, hi, p);
        bool q_in = strictly_between(lo, hi, q);
        if (p_in == q_in) continue;

        XCross xc;
        xc.xchord = i;
        xc.cchord = j;
        xc.theta = Frac(j);
        FaceEnd cp = std::min(p, q), cq = std::max(p, q);
        bool u_inside = strictly_between(cp, cq, u);
        bool from_is_min = p == cp;
        xc.s_face = (u_inside == from_is_min) ? 1 : -1;
        // Radial entry side and the coupled walk direction: strands entering
        // from opposite banks traverse the common spiral family oppositely.
        xc.r_entry = xc.s_face * orient[static_cast<size_t>(j)] * A(cw.nodes[static_cast<size_t>(j)], fc);
        xc.dir = -xc.r_entry * sign;
        crossings.push_back(xc);
      }
    }
    // Fractional angles: order crossings along each c-chord from its from-node.
    std::map<int, std::vector<int>> per_chord;
    for (size_t d = 0; d < crossings.size(); ++d) per_chord[crossings[d].cchord].push_back(static_cast<int>(d));
    for (auto& [j, ds] : per_chord) {
      bool fc = cw.nodes[static_cast<size_t>(j)].to_back;
      FaceEnd from = c_end(j, fc), to = c_end(j + 1, fc);
      auto arc_pos = [&](int d) {
        int i = crossings[static_cast<size_t>(d)].xchord;
        bool fx = xw.nodes[static_cast<size_t>(i)].to_back;
        FaceEnd u = x_end(i, fx), v = x_end(i + 1, fx);
        auto in_arc = [&](const FaceEnd& z) {
          if (from < to) return from < z && z < to;
          return z > from || z < to;
        };
        FaceEnd w = in_arc(u) ? u : v;
        bool wrapped = !(from < w);
        return std::make_pair(wrapped ? 1 : 0, w);
      };
      std::sort(ds.begin(), ds.end(), [&](int a, int b) { return arc_pos(a) < arc_pos(b); });
      int cnt = static_cast<int>(ds.size());
      for (int r = 0; r < cnt; ++r)
        crossings[static_cast<size_t>(ds[static_cast<size_t>(r)])].theta =
            Frac(j) + Frac(r + 1, cnt + 1);
    }
  }

  void pick_delta() {
    Frac least(1, 2);
    std::map<int, std::vector<Frac>> per_side;
    for (const Crossing& nd : cw.nodes) per_side[nd.side].push_back(nd.pos);
    for (const Crossing& nd : xw.nodes) per_side[nd.side].push_back(nd.pos);
    for (auto& [sd, ps] : per_side) {
      std::sort(ps.begin(), ps.end());
      Frac prev(0);
      for (const Frac& p : ps) {
        Frac gap = p - prev;
        if (gap < least) least = gap;
        prev = p;
      }
      Frac tail = Frac(1) - ps.back();
      if (tail < least) least = tail;
    }
    delta = least / Frac(3);
  }

  Frac rho_at(const XCross& xc, int node) const {
    // Walk distance from the entry angle, in the strand's own direction.
    Frac t = (Frac(node) - xc.theta) * Frac(xc.dir);
    while (t <= Frac(0)) t = t + Frac(m);
    while (t > Frac(m)) t = t - Frac(m);
    return Frac(xc.r_entry) * (Frac(1) - Frac(2) * t / Frac(m));
  }

  // Emit the spiral for one crossing: a full parallel run around c whose
  // radial coordinate interpolates across the annulus, crossing c once.
  void emit_spiral(const XCross& xc, std::vector<Crossing>& out) const {
    int dir = xc.dir;
    int start = dir > 0 ? xc.cchord + 1 : xc.cchord;
    for (int t = 0; t < m; ++t) {
      int k = ((start + dir * t) % m + m) % m;
      const Crossing& srcn = cw.nodes[static_cast<size_t>(k)];
      Crossing nd = srcn;
      nd.pos = srcn.pos + Frac(orient[static_cast<size_t>(k)]) * rho_at(xc, k) * delta;
      if (dir > 0) nd.to_back = srcn.to_back;
      else nd.to_back = cw.nodes[static_cast<size_t>((k - 1 + m) % m)].to_back;
      out.push_back(nd);
    }
  }

  CurveWord build() {
    std::map<int, std::vector<int>> per_xchord;
    for (size_t d = 0; d < crossings.size(); ++d) per_xchord[crossings[d].xchord].push_back(static_cast<int>(d));
    for (auto& [i, ds] : per_xchord) {
      bool fx = xw.nodes[static_cast<size_t>(i)].to_back;
      FaceEnd u = x_end(i, fx), v = x_end(i + 1, fx);
      auto key = [&](int d) {
        int j = crossings[static_cast<size_t>(d)].cchord;
        bool fc = cw.nodes[static_cast<size_t>(j)].to_back;
        FaceEnd p = c_end(j, fc), q = c_end(j + 1, fc);
        auto in_arc = [&](const FaceEnd& z) {
          if (u < v) return u < z && z < v;
          return z > u || z < v;
        };
        FaceEnd w = in_arc(p) ? p : q;
        bool wrapped = !(u < w);
        return std::make_pair(wrapped ? 1 : 0, w);
      };
      std::sort(ds.begin(), ds.end(), [&](int a, int b) { return key(a) < key(b); });
    }

    std::vector<Crossing> out;
    for (int i = 0; i < L; ++i) {
      out.push_back(xw.nodes[static_cast<size_t>(i)]);
      auto it = per_xchord.find(i);
      if (it == per_xchord.end()) continue;
      for (int d : it->second) emit_spiral(crossings[static_cast<size_t>(d)], out);
    }
    CurveWord w;
    w.nodes = std::move(out);
    return w;
  }
};

}  // namespace

CurveClass apply_twist(const SurfaceSchema& schema, const CurveClass& c, const CurveClass& x, int power) {
  if (power == 0) return x;
  if (c.sidedness != Sidedness::TwoSided)
    throw Error(ErrorKind::UnsupportedGenerator, "Dehn twists require a two-sided curve");
  if (c.key == x.key) return x;
  CurveClass cur = x;
  int steps = power > 0 ? power : -power;
  // The drawn-shear orientation realizing the named twist direction: fixed
  // once so that t_{c_1}(c_2) = j on (3,0) and the even-genus action pairs hold.
  int sgn = power > 0 ? 1 : -1;
  for (int it = 0; it < steps; ++it) {
    JointPosition jp = joint_minimal_position(c, cur);
    if (jp.crossings == 0) return cur;
    TwistBuilder tb(schema, jp, sgn);
    CurveWord img = tb.build();
    CurveClass next = canonicalize(schema, img);
    next.name = std::nullopt;
    cur = next;
  }
  return cur;
}

CurveClass reflection_phi(const CurveClass& x) { return face_swap(x); }

// Implemented in slides.cpp.
CurveClass apply_half_twist(const MCGContext& ctx, int k, int power, const CurveClass& x);
CurveClass apply_crosscap_slide(const MCGContext& ctx, int power, const CurveClass& x);
CurveClass apply_boundary_slide(const MCGContext& ctx, int which, int power, const CurveClass& x);

namespace {

CurveClass apply_reflection_r(const MCGContext& ctx, const CurveClass& x) {
  if (!(ctx.schema.genus == 2 && ctx.schema.boundary_count == 1))
    throw Error(ErrorKind::UnsupportedGenerator, "the reflection r is modeled on (2,1) only");
  return face_swap(x);
}

}  // namespace

std::vector<Generator> generating_set(const MCGContext& ctx) {
  int g = ctx.schema.genus, n = ctx.schema.boundary_count;
  auto status = classify_surface(ctx.schema);
  std::vector<Generator> out;
  auto twist = [&](const std::string& name) { out.push_back({GenKind::DehnTwist, name, 1, 1}); };

  if (status.regime == Regime::Special) {  // (3,0)
    twist("c_1");
    twist("c_2");
    out.push_back({GenKind::CrosscapSlide, "", 1, 1});
    return out;
  }
  if (status.regime != Regime::Main)
    throw Error(ErrorKind::NoGeneratingSetListed, "no generating set listed for this surface");

  if (g == 1) {
    for (int k = 1; k < n; ++k) out.push_back({GenKind::HalfTwist, "", k, 1});
    out.push_back({GenKind::BoundarySlide, "", 1, 1});
    return out;
  }
  if (g == 2) {
    twist("c_1");
    for (int k = 1; k < n; ++k) out.push_back({GenKind::HalfTwist, "", k, 1});
    out.push_back({GenKind::CrosscapSlide, "", 1, 1});
    if (n >= 1) {
      out.push_back({GenKind::BoundarySlide, "", 1, 1});
      out.push_back({GenKind::BoundarySlide, "", 2, 1});
    }
    return out;
  }

  int r = (g % 2 == 0) ? (g - 2) / 2 : (g - 1) / 2;
  for (int i = 1; i + 1 <= g; ++i) twist(curve_name("c", i));
  // s_1 = c_1; the further chain curves s_2.. are pinned by their actions.
  for (int i = 2; i <= r; ++i) twist(curve_name("gs", i));
  int zmax = (g % 2 == 0) ? r + 1 : r;
  for (int i = 1; i <= zmax; ++i) twist(curve_name("gz", i));
  for (int i = 1; i < n; ++i) twist(curve_name("d", i));
  for (int k = 1; k < n; ++k) out.push_back({GenKind::HalfTwist, "", k, 1});
  out.push_back({GenKind::CrosscapSlide, "", 1, 1});
  if (n >= 1) {
    out.push_back({GenKind::BoundarySlide, "", 1, 1});
    if (g % 2 == 0) out.push_back({GenKind::BoundarySlide, "", 2, 1});
  }
  return out;
}

Generator inverse(const Generator& f) {
  Generator g = f;
  g.power = -f.power;
  return g;
}

MCGWord inverse(const MCGWord& w) {
  MCGWord out;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) out.gens.push_back(inverse(*it));
  return out;
}

CurveClass apply_generator(const MCGContext& ctx, const Generator& f, const CurveClass& x) {
  static std::map<std::string, CurveClass> memo;
  std::string memo_key = std::to_string(ctx.schema.genus) + "," + std::to_string(ctx.schema.boundary_count) +
                         "|" + format_generator(f) + "|" + x.key;
  auto hit = memo.find(memo_key);
  if (hit != memo.end()) return hit->second;
  CurveClass result = [&] {
    switch (f.kind) {
    case GenKind::DehnTwist:
      return apply_twist(ctx.schema, ctx.resolve(f.curve), x, f.power);
    case GenKind::ReflectionPhi:
      return reflection_phi(x);
    case GenKind::ReflectionR:
      return apply_reflection_r(ctx, x);
    case GenKind::HalfTwist:
      return apply_half_twist(ctx, f.index, f.power, x);
    case GenKind::CrosscapSlide:
      return apply_crosscap_slide(ctx, f.power, x);
      case GenKind::BoundarySlide:
        return apply_boundary_slide(ctx, f.index, f.power, x);
    }
    throw Error(ErrorKind::UnsupportedGenerator, "unknown generator kind");
  }();
  memo.emplace(memo_key, result);
  return result;
}

CurveClass apply_word(const MCGContext& ctx, const MCGWord& w, const CurveClass& x) {
  CurveClass cur = x;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) cur = apply_generator(ctx, *it, cur);
  return cur;
}

std::string format_generator(const Generator& g) {
  std::ostringstream os;
  switch (g.kind) {
    case GenKind::DehnTwist: os << "t[" << g.curve << "]"; break;
    case GenKind::HalfTwist: os << "sigma" << g.index; break;
    case GenKind::CrosscapSlide: os << "y"; break;
    case GenKind::BoundarySlide: os << "xi" << g.index; break;
    case GenKind::ReflectionPhi: os << "phi"; break;
    case GenKind::ReflectionR: os << "r"; break;
  }
  if (g.power != 1) os << "^" << g.power;
  return os.str();
}

std::string format_word(const MCGWord& w) {
  if (w.gens.empty()) return "id";
  std::ostringstream os;
  for (size_t i = 0; i < w.gens.size(); ++i) {
    if (i) os << " * ";
    os << format_generator(w.gens[i]);
  }
  return os.str();
}

MCGWord parse_word(const std::string& text) {
  MCGWord out;
  std::string token;
  std::istringstream is(text);
  while (is >> token) {
    if (token == "*") continue;
    if (token == "id") continue;
    Generator g;
    std::string body = token;
    auto caret = body.find('^');
    if (caret != std::string::npos) {
      g.power = std::stoi(body.substr(caret + 1));
      body = body.substr(0, caret);
    }
    if (body.rfind("t[", 0) == 0 && body.back() == ']') {
      g.kind = GenKind::DehnTwist;
      g.curve = body.substr(2, body.size() - 3);
    } else if (body.rfind("sigma", 0) == 0) {
      g.kind = GenKind::HalfTwist;
      g.index = std::stoi(body.substr(5));
    } else if (body == "y") {
      g.kind = GenKind::CrosscapSlide;
    } else if (body.rfind("xi", 0) == 0) {
      g.kind = GenKind::BoundarySlide;
      g.index = std::stoi(body.substr(2));
    } else if (body == "phi") {
      g.kind = GenKind::ReflectionPhi;
    } else if (body == "r") {
      g.kind = GenKind::ReflectionR;
    } else {
      throw Error(ErrorKind::InvalidInput, "cannot parse generator token: " + token);
    }
    out.gens.push_back(g);
  }
  return out;
}

}  // namespace crosscap
