#include "crosscap/cut.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "crosscap/intersect.hpp"

namespace crosscap {

namespace {

struct PlacedNode {
  int curve, node;
  Frac pos;
};

// Chord of the placed system, endpoints resolved to face coordinates.
struct PChord {
  int curve;
  bool back;
  ChordEnd a, b;
  int a_node, b_node;  // node indices within the curve word
};

std::vector<PChord> placed_chords(const SurfaceSchema& schema, const std::vector<CurveWord>& words) {
  std::vector<PChord> out;
  for (size_t ci = 0; ci < words.size(); ++ci) {
    auto cs = chords_of(schema, words[ci]);
    for (const Chord& c : cs)
      out.push_back({static_cast<int>(ci), c.back, c.a, c.b, c.from, c.to});
  }
  return out;
}

bool pchords_cross(const PChord& x, const PChord& y) {
  if (x.back != y.back) return false;
  ChordEnd a = x.a, b = x.b;
  if (b < a) std::swap(a, b);
  auto inside = [&](const ChordEnd& p) { return a < p && p < b; };
  return inside(y.a) != inside(y.b);
}

}  // namespace

std::vector<CurveWord> place_disjoint(const SurfaceSchema& schema, const std::vector<CurveClass>& curves) {
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i + 1; j < curves.size(); ++j)
      if (geometric_intersection(curves[i], curves[j]) != 0)
        throw Error(ErrorKind::NotDisjoint, "curves intersect");
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i + 1; j < curves.size(); ++j)
      if (curves[i].key == curves[j].key)
        throw Error(ErrorKind::InvalidInput, "duplicate curve class in system");

  int k = static_cast<int>(curves.size());
  std::vector<CurveWord> words;
  for (const CurveClass& c : curves) words.push_back(c.word);
  if (k == 0) return words;

  int S = schema.side_count();
  // Per side, per curve: node indices sorted by canonical position.
  std::vector<std::vector<std::vector<int>>> seq(static_cast<size_t>(S), std::vector<std::vector<int>>(static_cast<size_t>(k)));
  for (int c = 0; c < k; ++c) {
    for (int i = 0; i < words[static_cast<size_t>(c)].size(); ++i)
      seq[static_cast<size_t>(words[static_cast<size_t>(c)].nodes[static_cast<size_t>(i)].side)][static_cast<size_t>(c)].push_back(i);
    for (int s = 0; s < S; ++s)
      std::sort(seq[static_cast<size_t>(s)][static_cast<size_t>(c)].begin(), seq[static_cast<size_t>(s)][static_cast<size_t>(c)].end(),
                [&](int a, int b) { return words[static_cast<size_t>(c)].nodes[static_cast<size_t>(a)].pos < words[static_cast<size_t>(c)].nodes[static_cast<size_t>(b)].pos; });
  }

  // Sides needing an interleaving decision.
  std::vector<int> active;
  for (int s = 0; s < S; ++s) {
    int owners = 0;
    for (int c = 0; c < k; ++c)
      if (!seq[static_cast<size_t>(s)][static_cast<size_t>(c)].empty()) ++owners;
    if (owners >= 2) active.push_back(s);
  }

  // Assign global ranks side by side; sides with a single owner keep their
  // canonical order.
  std::vector<std::vector<int>> rank(static_cast<size_t>(k));
  for (int c = 0; c < k; ++c) rank[static_cast<size_t>(c)].assign(static_cast<size_t>(words[static_cast<size_t>(c)].size()), -1);
  std::vector<int> side_total(static_cast<size_t>(S), 0);
  for (int s = 0; s < S; ++s) {
    int total = 0;
    for (int c = 0; c < k; ++c) total += static_cast<int>(seq[static_cast<size_t>(s)][static_cast<size_t>(c)].size());
    side_total[static_cast<size_t>(s)] = total;
    bool is_active = std::find(active.begin(), active.end(), s) != active.end();
    if (!is_active) {
      int r = 0;
      for (int c = 0; c < k; ++c)
        for (int i : seq[static_cast<size_t>(s)][static_cast<size_t>(c)]) rank[static_cast<size_t>(c)][static_cast<size_t>(i)] = r++;
    }
  }

  auto set_positions = [&]() {
    std::vector<CurveWord> placed = words;
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < placed[static_cast<size_t>(c)].size(); ++i) {
        Crossing& node = placed[static_cast<size_t>(c)].nodes[static_cast<size_t>(i)];
        node.pos = Frac(rank[static_cast<size_t>(c)][static_cast<size_t>(i)] + 1, side_total[static_cast<size_t>(node.side)] + 1);
      }
    return placed;
  };

  // Chord pairs across curves, with the active sides they depend on.
  struct XPair {
    int c1, n1, c2, n2;  // chord = node index (chord i runs from node i)
    std::vector<int> vs;
  };
  std::vector<XPair> pairs;
  auto chord_sides = [&](int c, int i) {
    const CurveWord& w = words[static_cast<size_t>(c)];
    return std::pair<int, int>{w.nodes[static_cast<size_t>(i)].side, w.nodes[static_cast<size_t>((i + 1) % w.size())].side};
  };
  for (int c1 = 0; c1 < k; ++c1)
    for (int c2 = c1 + 1; c2 < k; ++c2)
      for (int i = 0; i < words[static_cast<size_t>(c1)].size(); ++i)
        for (int j = 0; j < words[static_cast<size_t>(c2)].size(); ++j) {
          if (words[static_cast<size_t>(c1)].nodes[static_cast<size_t>(i)].to_back != words[static_cast<size_t>(c2)].nodes[static_cast<size_t>(j)].to_back)
            continue;
          XPair p{c1, i, c2, j, {}};
          auto [s1, s2] = chord_sides(c1, i);
          auto [t1, t2] = chord_sides(c2, j);
          for (int s : {s1, s2})
            if ((s == t1 || s == t2) && std::find(active.begin(), active.end(), s) != active.end())
              if (std::find(p.vs.begin(), p.vs.end(), s) == p.vs.end()) p.vs.push_back(s);
          pairs.push_back(p);
        }

  auto eval_pair = [&](const XPair& p) {
    const CurveWord& w1 = words[static_cast<size_t>(p.c1)];
    const CurveWord& w2 = words[static_cast<size_t>(p.c2)];
    auto key = [&](int c, int node, bool back) {
      const CurveWord& w = words[static_cast<size_t>(c)];
      const Crossing& cr = w.nodes[static_cast<size_t>(node)];
      int g = rank[static_cast<size_t>(c)][static_cast<size_t>(node)];
      if (back && schema.is_crosscap(cr.side)) g = side_total[static_cast<size_t>(cr.side)] - 1 - g;
      return std::pair<int, int>{cr.side, g};
    };
    bool back = w1.nodes[static_cast<size_t>(p.n1)].to_back;
    auto a = key(p.c1, p.n1, back), b = key(p.c1, (p.n1 + 1) % w1.size(), back);
    if (b < a) std::swap(a, b);
    auto c = key(p.c2, p.n2, back), d = key(p.c2, (p.n2 + 1) % w2.size(), back);
    bool cin = a < c && c < b, din = a < d && d < b;
    return cin != din;
  };

  // Pairs not depending on any active side must already avoid each other.
  std::map<int, std::vector<int>> by_last_side;
  std::vector<int> depth_of_side(static_cast<size_t>(S), -1);
  for (size_t d = 0; d < active.size(); ++d) depth_of_side[static_cast<size_t>(active[d])] = static_cast<int>(d);
  std::vector<XPair> fixed;
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    if (pairs[pi].vs.empty()) {
      fixed.push_back(pairs[pi]);
    } else {
      int mx = -1;
      for (int s : pairs[pi].vs) mx = std::max(mx, depth_of_side[static_cast<size_t>(s)]);
      by_last_side[mx].push_back(static_cast<int>(pi));
    }
  }
  for (const XPair& p : fixed)
    if (eval_pair(p)) throw Error(ErrorKind::NotDisjoint, "no disjoint simultaneous placement (rigid pair)");

  // Interleave k sequences per active side, pruning on any forced crossing.
  std::function<bool(size_t)> dfs = [&](size_t depth) -> bool {
    if (depth == active.size()) return true;
    int s = active[depth];
    std::vector<int> idx(static_cast<size_t>(k), 0);
    int total = side_total[static_cast<size_t>(s)];
    std::function<bool(int)> weave = [&](int r) -> bool {
      if (r == total) {
        for (int pi : by_last_side[static_cast<int>(depth)])
          if (eval_pair(pairs[static_cast<size_t>(pi)])) return false;
        return dfs(depth + 1);
      }
      for (int c = 0; c < k; ++c) {
        const auto& sq = seq[static_cast<size_t>(s)][static_cast<size_t>(c)];
        if (idx[static_cast<size_t>(c)] < static_cast<int>(sq.size())) {
          int node = sq[static_cast<size_t>(idx[static_cast<size_t>(c)])];
          rank[static_cast<size_t>(c)][static_cast<size_t>(node)] = r;
          ++idx[static_cast<size_t>(c)];
          if (weave(r + 1)) return true;
          --idx[static_cast<size_t>(c)];
        }
      }
      return false;
    };
    return weave(0);
  };

  if (!dfs(0)) throw Error(ErrorKind::NotDisjoint, "no disjoint simultaneous placement found");
  return set_positions();
}

namespace {

// ---- cut-complex construction -------------------------------------------

struct Complex {
  // Point = corner (polygon corner per face) or crossing half-point.
  // Ids: corners: [0, 2S); half-points: 2S + 4*(global crossing id) + {0,1,2,3}
  //   offset 0: front lo, 1: front hi, 2: back lo, 3: back hi
  // "lo"/"hi" are taken in the face's own coordinate order along the side.
  int S = 0;
  std::vector<int> uf;
  int find(int a) { return uf[static_cast<size_t>(a)] == a ? a : uf[static_cast<size_t>(a)] = find(uf[static_cast<size_t>(a)]); }
  void unite(int a, int b) { uf[static_cast<size_t>(find(a))] = find(b); }
};

struct GlobalCrossing {
  int curve, node, side;
  Frac front_coord;  // coordinate on the front arc
  Frac face_coord(bool back, const SurfaceSchema& schema) const {
    if (back && schema.is_crosscap(side)) return reflect_unit(front_coord);
    return front_coord;
  }
};

struct BoundaryPoint {
  bool corner;
  int corner_index;   // for corners: polygon corner k (between side k-1 and k)
  int cross;          // global crossing id
  int side;
  Frac coord;
};

}  // namespace

namespace {

struct CutResult {
  std::vector<ComponentRecord> components;
  std::vector<int> passenger_component;
};

// Builds the cut complex along the first n_cut curves; later curves ride as
// passengers whose component is reported but whose strands are not cut.
CutResult cut_core(const SurfaceSchema& schema, const std::vector<CurveWord>& words, size_t n_cut) {
  int S = schema.side_count();

  std::vector<GlobalCrossing> gx;
  std::vector<std::vector<int>> node_to_gx(words.size());
  for (size_t c = 0; c < words.size(); ++c) {
    node_to_gx[c].assign(static_cast<size_t>(words[c].size()), -1);
    for (int i = 0; i < words[c].size(); ++i) {
      const Crossing& cr = words[c].nodes[static_cast<size_t>(i)];
      node_to_gx[c][static_cast<size_t>(i)] = static_cast<int>(gx.size());
      gx.push_back({static_cast<int>(c), i, cr.side, cr.pos});
    }
  }

  Complex cx;
  cx.S = S;
  int n_points = 2 * S + 4 * static_cast<int>(gx.size());
  cx.uf.resize(static_cast<size_t>(n_points));
  std::iota(cx.uf.begin(), cx.uf.end(), 0);
  auto corner_id = [&](int k, bool back) { return (back ? S : 0) + ((k % S) + S) % S; };
  auto half_id = [&](int g, bool back, bool hi) { return 2 * S + 4 * g + (back ? 2 : 0) + (hi ? 1 : 0); };

  // Identify points across each glued side.
  for (int s = 0; s < S; ++s) {
    if (schema.is_boundary(s)) continue;
    std::vector<int> on_side;
    for (size_t g = 0; g < gx.size(); ++g)
      if (gx[g].side == s) on_side.push_back(static_cast<int>(g));
    if (schema.is_gluing(s)) {
      cx.unite(corner_id(s, false), corner_id(s, true));
      cx.unite(corner_id(s + 1, false), corner_id(s + 1, true));
      for (int g : on_side) {
        cx.unite(half_id(g, false, false), half_id(g, true, false));
        cx.unite(half_id(g, false, true), half_id(g, true, true));
      }
    } else {  // crosscap: front coordinate u matches back coordinate 1-u
      cx.unite(corner_id(s, false), corner_id(s + 1, true));
      cx.unite(corner_id(s + 1, false), corner_id(s, true));
      for (int g : on_side) {
        cx.unite(half_id(g, false, false), half_id(g, true, true));
        cx.unite(half_id(g, false, true), half_id(g, true, false));
      }
    }
  }
  // Passenger crossings are not cut: their mark is a single point.
  for (size_t g = 0; g < gx.size(); ++g) {
    if (static_cast<size_t>(gx[g].curve) < n_cut) continue;
    cx.unite(half_id(static_cast<int>(g), false, false), half_id(static_cast<int>(g), false, true));
    cx.unite(half_id(static_cast<int>(g), true, false), half_id(static_cast<int>(g), true, true));
  }

  // Face boundary point sequences and cells.
  struct Atom {
    int side;
    bool back;
    int p_before, p_after;  // point ids (pre-union)
    int cell = -1;
    bool is_boundary_side;
  };
  struct Bank {
    int curve;
    int cell = -1;
    int p_from, p_to;  // endpoint point ids
  };
  std::vector<Atom> atoms;
  std::vector<Bank> banks;
  std::vector<int> cell_of_gx(gx.size(), -1);
  int n_cells = 0;
  // For gluing atoms front/back in matching order so pairs align.
  std::map<std::pair<int, int>, std::vector<int>> atoms_by_side;  // (side, back) -> atom ids in face coord order

  auto pcs = placed_chords(schema, words);

  for (int back = 0; back < 2; ++back) {
    // Boundary point list of this face disk.
    std::vector<BoundaryPoint> pts;
    for (int s = 0; s < S; ++s) {
      pts.push_back({true, s, -1, s, Frac(0)});
      std::vector<std::pair<Frac, int>> marks;
      for (size_t g = 0; g < gx.size(); ++g)
        if (gx[g].side == s) marks.push_back({gx[g].face_coord(back, schema), static_cast<int>(g)});
      std::sort(marks.begin(), marks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [coord, g] : marks) pts.push_back({false, -1, g, s, coord});
    }
    int M = static_cast<int>(pts.size());

    // Chord endpoint -> position in pts. Chords of this face only.
    std::map<std::pair<int, std::pair<std::int64_t, std::int64_t>>, int> pos_index;
    for (int m = 0; m < M; ++m)
      if (!pts[static_cast<size_t>(m)].corner)
        pos_index[{pts[static_cast<size_t>(m)].side, {pts[static_cast<size_t>(m)].coord.num, pts[static_cast<size_t>(m)].coord.den}}] = m;

    struct FChord { int at_a, at_b, curve; };
    std::vector<FChord> fchords;
    for (const PChord& pc : pcs) {
      if (static_cast<int>(pc.back) != back) continue;
      if (static_cast<size_t>(pc.curve) >= n_cut) continue;  // passengers are not cut
      int ia = pos_index.at({pc.a.side, {pc.a.pos.num, pc.a.pos.den}});
      int ib = pos_index.at({pc.b.side, {pc.b.pos.num, pc.b.pos.den}});
      fchords.push_back({std::min(ia, ib), std::max(ia, ib), pc.curve});
    }
    std::vector<int> open_at(static_cast<size_t>(M), -1), close_at(static_cast<size_t>(M), -1);
    for (size_t f = 0; f < fchords.size(); ++f) {
      open_at[static_cast<size_t>(fchords[f].at_a)] = static_cast<int>(f);
      close_at[static_cast<size_t>(fchords[f].at_b)] = static_cast<int>(f);
    }

    // Stack walk from point 0 (a corner, so no chord spans the anchor).
    std::vector<int> stack{n_cells++};
    std::vector<std::pair<int, int>> bank_cells(fchords.size(), {-1, -1});  // (outer, inner)
    std::vector<int> atom_cell(static_cast<size_t>(M), -1);
    for (int m = 0; m < M; ++m) {
      if (open_at[static_cast<size_t>(m)] >= 0) {
        int f = open_at[static_cast<size_t>(m)];
        bank_cells[static_cast<size_t>(f)].first = stack.back();
        stack.push_back(n_cells++);
        bank_cells[static_cast<size_t>(f)].second = stack.back();
      } else if (close_at[static_cast<size_t>(m)] >= 0) {
        stack.pop_back();
      }
      atom_cell[static_cast<size_t>(m)] = stack.back();  // atom from point m to m+1
      if (!pts[static_cast<size_t>(m)].corner)
        cell_of_gx[static_cast<size_t>(pts[static_cast<size_t>(m)].cross)] = stack.back();
    }

    // Emit atoms with endpoint point ids.
    auto point_id_after = [&](int m) {  // id of point m as the atom-start endpoint
      const BoundaryPoint& p = pts[static_cast<size_t>(m)];
      if (p.corner) return corner_id(p.corner_index, back);
      return half_id(p.cross, back, true);
    };
    auto point_id_before = [&](int m) {  // id of point m as the atom-end endpoint
      const BoundaryPoint& p = pts[static_cast<size_t>(m)];
      if (p.corner) return corner_id(p.corner_index, back);
      return half_id(p.cross, back, false);
    };
    for (int m = 0; m < M; ++m) {
      int mn = (m + 1) % M;
      Atom at;
      at.side = pts[static_cast<size_t>(m)].corner && !pts[static_cast<size_t>(mn)].corner
                    ? pts[static_cast<size_t>(mn)].side
                    : pts[static_cast<size_t>(m)].side;
      // Atom from point m to point m+1 lies on the side of the later point
      // unless that is the next corner.
      if (pts[static_cast<size_t>(mn)].corner) at.side = pts[static_cast<size_t>(m)].side;
      at.back = back;
      at.p_before = point_id_after(m);
      at.p_after = point_id_before(mn);
      at.cell = atom_cell[static_cast<size_t>(m)];
      at.is_boundary_side = schema.is_boundary(at.side);
      atoms_by_side[{at.side, back}].push_back(static_cast<int>(atoms.size()));
      atoms.push_back(at);
    }

    for (size_t f = 0; f < fchords.size(); ++f) {
      Bank outer, inner;
      outer.curve = inner.curve = fchords[f].curve;
      outer.cell = bank_cells[f].first;
      inner.cell = bank_cells[f].second;
      // Outer bank runs alongside the lo endpoints' outer halves, inner bank
      // along the inner halves.
      int a = fchords[f].at_a, b = fchords[f].at_b;
      outer.p_from = half_id(pts[static_cast<size_t>(a)].cross, back, false);
      outer.p_to = half_id(pts[static_cast<size_t>(b)].cross, back, true);
      inner.p_from = half_id(pts[static_cast<size_t>(a)].cross, back, true);
      inner.p_to = half_id(pts[static_cast<size_t>(b)].cross, back, false);
      banks.push_back(outer);
      banks.push_back(inner);
    }
  }

  // Glue atoms across sides: cells union-find with orientation parity.
  int C = n_cells;
  std::vector<int> cuf(static_cast<size_t>(C));
  std::vector<int> cpar(static_cast<size_t>(C), 0);
  std::iota(cuf.begin(), cuf.end(), 0);
  std::function<std::pair<int, int>(int)> cfind = [&](int a) -> std::pair<int, int> {
    if (cuf[static_cast<size_t>(a)] == a) return {a, 0};
    auto [r, p] = cfind(cuf[static_cast<size_t>(a)]);
    cuf[static_cast<size_t>(a)] = r;
    cpar[static_cast<size_t>(a)] ^= p;
    return {r, cpar[static_cast<size_t>(a)]};
  };
  std::vector<bool> comp_nonorientable(static_cast<size_t>(C), false);
  auto cunion = [&](int a, int b, int w) {
    auto [ra, pa] = cfind(a);
    auto [rb, pb] = cfind(b);
    if (ra == rb) {
      if ((pa ^ pb) != w) comp_nonorientable[static_cast<size_t>(ra)] = true;
      return;
    }
    if (comp_nonorientable[static_cast<size_t>(rb)]) comp_nonorientable[static_cast<size_t>(ra)] = true;
    cuf[static_cast<size_t>(rb)] = ra;
    cpar[static_cast<size_t>(rb)] = pa ^ pb ^ w;
  };

  struct Edge {
    int cell1, cell2;  // -1 for boundary edges' missing side
    int p1, p2;        // endpoint points (pre-union ids)
    bool boundary;
    int curve;  // bank: curve index; z atom: -1
  };
  std::vector<Edge> edges;

  for (int s = 0; s < S; ++s) {
    auto& front_atoms = atoms_by_side[{s, 0}];
    auto& back_atoms = atoms_by_side[{s, 1}];
    if (schema.is_boundary(s)) {
      for (int a : front_atoms)
        edges.push_back({atoms[static_cast<size_t>(a)].cell, -1, atoms[static_cast<size_t>(a)].p_before, atoms[static_cast<size_t>(a)].p_after, true, -2 - s});
      for (int a : back_atoms)
        edges.push_back({atoms[static_cast<size_t>(a)].cell, -1, atoms[static_cast<size_t>(a)].p_before, atoms[static_cast<size_t>(a)].p_after, true, -2 - s});
      continue;
    }
    // Same number of atoms on both copies; front in coord order, back in
    // back-coordinate order. Gluing matches them in equal order; crosscap in
    // reversed order (front (a,b) glues to back (1-b,1-a)).
    if (front_atoms.size() != back_atoms.size())
      throw Error(ErrorKind::InvalidInput, "internal: mismatched side atom counts");
    size_t m = front_atoms.size();
    for (size_t i = 0; i < m; ++i) {
      int fa = front_atoms[i];
      int ba = schema.is_gluing(s) ? back_atoms[i] : back_atoms[m - 1 - i];
      int w = schema.is_gluing(s) ? 1 : 0;
      cunion(atoms[static_cast<size_t>(fa)].cell, atoms[static_cast<size_t>(ba)].cell, w);
      edges.push_back({atoms[static_cast<size_t>(fa)].cell, atoms[static_cast<size_t>(ba)].cell,
                       atoms[static_cast<size_t>(fa)].p_before, atoms[static_cast<size_t>(fa)].p_after, false, -1});
    }
  }
  for (const Bank& b : banks)
    edges.push_back({b.cell, -1, b.p_from, b.p_to, true, b.curve});

  // Components of cells.
  std::map<int, int> comp_index;
  std::vector<int> cell_comp(static_cast<size_t>(C), -1);
  for (int c = 0; c < C; ++c) {
    int r = cfind(c).first;
    if (!comp_index.count(r)) comp_index[r] = static_cast<int>(comp_index.size());
    cell_comp[static_cast<size_t>(c)] = comp_index[r];
  }
  int NC = static_cast<int>(comp_index.size());

  std::vector<ComponentRecord> recs(static_cast<size_t>(NC));
  for (int c = 0; c < C; ++c) {
    int r = cfind(c).first;
    if (comp_nonorientable[static_cast<size_t>(r)]) recs[static_cast<size_t>(cell_comp[static_cast<size_t>(c)])].orientable = false;
  }

  // Euler characteristic: faces.
  std::vector<int> Vc(static_cast<size_t>(NC), 0), Ec(static_cast<size_t>(NC), 0), Fc(static_cast<size_t>(NC), 0);
  for (int c = 0; c < C; ++c) ++Fc[static_cast<size_t>(cell_comp[static_cast<size_t>(c)])];
  // Edges: assign to the component of an incident cell.
  std::vector<int> edge_comp(edges.size(), -1);
  for (size_t e = 0; e < edges.size(); ++e) {
    edge_comp[e] = cell_comp[static_cast<size_t>(edges[e].cell1)];
    ++Ec[static_cast<size_t>(edge_comp[e])];
  }
  // Vertices: component via an incident edge.
  std::map<int, int> vert_comp;
  for (size_t e = 0; e < edges.size(); ++e) {
    for (int p : {edges[e].p1, edges[e].p2}) {
      int v = cx.find(p);
      auto it = vert_comp.find(v);
      if (it == vert_comp.end()) vert_comp[v] = edge_comp[e];
    }
  }
  for (auto& [v, comp] : vert_comp) ++Vc[static_cast<size_t>(comp)];

  for (int i = 0; i < NC; ++i)
    recs[static_cast<size_t>(i)].euler_characteristic = Vc[static_cast<size_t>(i)] - Ec[static_cast<size_t>(i)] + Fc[static_cast<size_t>(i)];

  // Boundary circles: walk boundary edges via shared endpoint vertices.
  std::map<int, std::vector<int>> by_vertex;  // vertex -> boundary edge ids
  std::vector<int> boundary_edges;
  for (size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].boundary) continue;
    boundary_edges.push_back(static_cast<int>(e));
    by_vertex[cx.find(edges[e].p1)].push_back(static_cast<int>(e));
    by_vertex[cx.find(edges[e].p2)].push_back(static_cast<int>(e));
  }
  std::vector<bool> used(edges.size(), false);
  for (int e0 : boundary_edges) {
    if (used[static_cast<size_t>(e0)]) continue;
    std::vector<int> circle_curves;
    std::vector<std::string> circle_zs;
    int comp = edge_comp[static_cast<size_t>(e0)];
    int e = e0;
    int enter_v = cx.find(edges[static_cast<size_t>(e0)].p1);
    while (!used[static_cast<size_t>(e)]) {
      used[static_cast<size_t>(e)] = true;
      if (edges[static_cast<size_t>(e)].curve >= 0) circle_curves.push_back(edges[static_cast<size_t>(e)].curve);
      else if (edges[static_cast<size_t>(e)].curve <= -2)
        circle_zs.push_back(schema.side(-2 - edges[static_cast<size_t>(e)].curve).label);
      int v1 = cx.find(edges[static_cast<size_t>(e)].p1);
      int v2 = cx.find(edges[static_cast<size_t>(e)].p2);
      int exit_v = (v1 == enter_v) ? v2 : v1;
      int next = -1;
      for (int cand : by_vertex[exit_v])
        if (!used[static_cast<size_t>(cand)]) { next = cand; break; }
      if (next < 0) break;
      enter_v = exit_v;
      e = next;
    }
    ComponentRecord& rec = recs[static_cast<size_t>(comp)];
    ++rec.boundary_count;
    std::sort(circle_curves.begin(), circle_curves.end());
    circle_curves.erase(std::unique(circle_curves.begin(), circle_curves.end()), circle_curves.end());
    rec.circles.push_back(circle_curves);
    for (int ci : circle_curves)
      if (std::find(rec.bounding_curves.begin(), rec.bounding_curves.end(), ci) == rec.bounding_curves.end())
        rec.bounding_curves.push_back(ci);
    if (!circle_zs.empty()) {
      for (const std::string& z : circle_zs)
        if (std::find(rec.bounding_boundaries.begin(), rec.bounding_boundaries.end(), z) == rec.bounding_boundaries.end())
          rec.bounding_boundaries.push_back(z);
      rec.circles.back().push_back(-1);
    }
  }

  for (ComponentRecord& r : recs) {
    if (r.orientable) r.genus = (2 - r.euler_characteristic - r.boundary_count) / 2;
    else r.genus = 2 - r.euler_characteristic - r.boundary_count;
    std::sort(r.bounding_curves.begin(), r.bounding_curves.end());
  }

  CutResult result;
  result.components = recs;
  for (size_t c = n_cut; c < words.size(); ++c) {
    int g = node_to_gx[c][0];
    result.passenger_component.push_back(cell_comp[static_cast<size_t>(cell_of_gx[static_cast<size_t>(g)])]);
  }
  return result;
}

}  // namespace

std::vector<ComponentRecord> cut_along(const SurfaceSchema& schema, const std::vector<CurveClass>& curves) {
  auto words = place_disjoint(schema, curves);
  return cut_core(schema, words, words.size()).components;
}

std::pair<std::vector<ComponentRecord>, std::vector<int>> locate_in_complement(
    const SurfaceSchema& schema, const std::vector<CurveClass>& cutters,
    const std::vector<CurveClass>& passengers) {
  std::vector<CurveClass> all = cutters;
  for (const CurveClass& p : passengers) all.push_back(p);
  auto words = place_disjoint(schema, all);
  auto r = cut_core(schema, words, cutters.size());
  return {r.components, r.passenger_component};
}

bool is_nontrivial(const SurfaceSchema& schema, const CurveClass& c) {
  if (c.sidedness == Sidedness::OneSided) return true;
  auto comps = cut_along(schema, {c});
  if (comps.size() == 1) return true;  // nonseparating two-sided
  for (const ComponentRecord& r : comps) {
    bool attached_along_curve_only = r.bounding_curves.size() == 1;
    if (!attached_along_curve_only) continue;
    bool has_z = false;
    for (const auto& circ : r.circles)
      if (std::find(circ.begin(), circ.end(), -1) != circ.end()) has_z = true;
    if (r.orientable && r.euler_characteristic == 1 && r.boundary_count == 1) return false;  // disk
    if (!r.orientable && r.genus == 1 && r.boundary_count == 1) return false;                // Moebius band
    if (r.orientable && r.euler_characteristic == 0 && r.boundary_count == 2 && has_z) return false;  // boundary-parallel annulus
  }
  return true;
}

bool is_pants_decomposition(const SurfaceSchema& schema, const std::vector<CurveClass>& curves) {
  auto comps = cut_along(schema, curves);
  for (const ComponentRecord& r : comps)
    if (!(r.orientable && r.euler_characteristic == -1 && r.boundary_count == 3)) return false;
  return true;
}

bool has_orientable_complement(const SurfaceSchema& schema, const CurveClass& c) {
  auto comps = cut_along(schema, {c});
  for (const ComponentRecord& r : comps)
    if (!r.orientable) return false;
  return true;
}

}  // namespace crosscap
