#include "crosscap/intersect.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <unordered_set>

namespace crosscap {

namespace {

// Integer overlay of two taut words. Crossing endpoints are addressed by
// (side, merged slot); on crosscap sides the back-face slot order is the
// reverse of the front order.
struct Overlay {
  const SurfaceSchema* schema;
  const CurveWord* w[2];

  struct End {
    int side;
    int owner;
    int own_rank;  // index among the owner's crossings on this side, front order
  };
  struct OChord {
    End a, b;
    bool back;
    int owner;
  };

  std::vector<OChord> mixed_chords[2];
  std::vector<int> sides_x_count, sides_y_count;
  std::vector<int> active_sides;

  // merge[s] = for each side, global front ranks: gx[r] for x strands, gy[r].
  struct Merge {
    std::vector<int> gx, gy;
  };
  std::vector<Merge> merge;

  Overlay(const SurfaceSchema& sch, const CurveWord& wx, const CurveWord& wy) {
    schema = &sch;
    w[0] = &wx;
    w[1] = &wy;
    int S = sch.side_count();
    sides_x_count.assign(static_cast<size_t>(S), 0);
    sides_y_count.assign(static_cast<size_t>(S), 0);
    merge.resize(static_cast<size_t>(S));

    for (int o = 0; o < 2; ++o) {
      std::map<int, std::vector<std::pair<Frac, int>>> per_side;
      for (int i = 0; i < w[o]->size(); ++i) {
        const Crossing& c = w[o]->nodes[static_cast<size_t>(i)];
        per_side[c.side].push_back({c.pos, i});
      }
      std::vector<int> own_rank(static_cast<size_t>(w[o]->size()), 0);
      for (auto& [s, v] : per_side) {
        std::sort(v.begin(), v.end());
        for (size_t r = 0; r < v.size(); ++r) own_rank[static_cast<size_t>(v[r].second)] = static_cast<int>(r);
        (o == 0 ? sides_x_count : sides_y_count)[static_cast<size_t>(s)] = static_cast<int>(v.size());
      }
      int L = w[o]->size();
      for (int i = 0; i < L; ++i) {
        const Crossing& from = w[o]->nodes[static_cast<size_t>(i)];
        const Crossing& to = w[o]->nodes[static_cast<size_t>((i + 1) % L)];
        OChord c;
        c.a = {from.side, o, own_rank[static_cast<size_t>(i)]};
        c.b = {to.side, o, own_rank[static_cast<size_t>((i + 1) % L)]};
        c.back = from.to_back;
        c.owner = o;
        mixed_chords[o].push_back(c);
      }
    }
    for (int s = 0; s < S; ++s) {
      if (sides_x_count[static_cast<size_t>(s)] > 0 && sides_y_count[static_cast<size_t>(s)] > 0)
        active_sides.push_back(s);
      set_default_merge(s);
    }
  }

  void set_default_merge(int s) {
    int a = sides_x_count[static_cast<size_t>(s)], b = sides_y_count[static_cast<size_t>(s)];
    merge[static_cast<size_t>(s)].gx.resize(static_cast<size_t>(a));
    merge[static_cast<size_t>(s)].gy.resize(static_cast<size_t>(b));
    for (int r = 0; r < a; ++r) merge[static_cast<size_t>(s)].gx[static_cast<size_t>(r)] = r;
    for (int r = 0; r < b; ++r) merge[static_cast<size_t>(s)].gy[static_cast<size_t>(r)] = a + r;
  }

  int total_on_side(int s) const {
    return sides_x_count[static_cast<size_t>(s)] + sides_y_count[static_cast<size_t>(s)];
  }

  // Comparable key of an endpoint within its face circle.
  std::pair<int, int> face_key(const End& e, bool back) const {
    const Merge& m = merge[static_cast<size_t>(e.side)];
    int g = e.owner == 0 ? m.gx[static_cast<size_t>(e.own_rank)] : m.gy[static_cast<size_t>(e.own_rank)];
    if (back && schema->is_crosscap(e.side)) g = total_on_side(e.side) - 1 - g;
    return {e.side, g};
  }

  bool pair_crosses(const OChord& x, const OChord& y) const {
    if (x.back != y.back) return false;
    auto a = face_key(x.a, x.back), b = face_key(x.b, x.back);
    if (b < a) std::swap(a, b);
    auto c = face_key(y.a, y.back), d = face_key(y.b, y.back);
    bool c_in = a < c && c < b;
    bool d_in = a < d && d < b;
    return c_in != d_in;
  }

  int count_all_mixed() const {
    int total = 0;
    for (const OChord& cx : mixed_chords[0])
      for (const OChord& cy : mixed_chords[1])
        if (pair_crosses(cx, cy)) ++total;
    return total;
  }
};

// Enumerate interleavings of a x-strands and b y-strands on one side.
void enumerate_merges(int a, int b, const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  std::vector<int> gx(static_cast<size_t>(a)), gy(static_cast<size_t>(b));
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == a && j == b) {
      fn(gx, gy);
      return;
    }
    if (i < a) {
      gx[static_cast<size_t>(i)] = i + j;
      rec(i + 1, j);
    }
    if (j < b) {
      gy[static_cast<size_t>(j)] = i + j;
      rec(i, j + 1);
    }
  };
  rec(0, 0);
}

struct PairRef {
  int xi, yi;          // chord indices
  std::vector<int> vs; // variable sides (shared active sides of the two chords)
};

struct MinimizeResult {
  int count;
  std::vector<Overlay::Merge> merges;  // per side, the realizing merge
};

MinimizeResult minimize_crossings(Overlay& ov, std::int64_t* budget = nullptr, bool decompose = true) {
  const int S = ov.schema->side_count();
  std::vector<PairRef> fixed_pairs, var_pairs;
  for (size_t xi = 0; xi < ov.mixed_chords[0].size(); ++xi) {
    for (size_t yi = 0; yi < ov.mixed_chords[1].size(); ++yi) {
      const auto& cx = ov.mixed_chords[0][xi];
      const auto& cy = ov.mixed_chords[1][yi];
      if (cx.back != cy.back) continue;
      PairRef p;
      p.xi = static_cast<int>(xi);
      p.yi = static_cast<int>(yi);
      for (int s : {cx.a.side, cx.b.side})
        if (s == cy.a.side || s == cy.b.side)
          if (std::find(p.vs.begin(), p.vs.end(), s) == p.vs.end()) p.vs.push_back(s);
      if (p.vs.empty()) fixed_pairs.push_back(p);
      else var_pairs.push_back(p);
    }
  }

  int base = 0;
  for (const PairRef& p : fixed_pairs)
    if (ov.pair_crosses(ov.mixed_chords[0][static_cast<size_t>(p.xi)], ov.mixed_chords[1][static_cast<size_t>(p.yi)])) ++base;

  // Group coupled sides into components; minimize each independently.
  std::vector<int> comp(static_cast<size_t>(S), -1);
  std::function<int(int)> find = [&](int s) { return comp[static_cast<size_t>(s)] == s ? s : comp[static_cast<size_t>(s)] = find(comp[static_cast<size_t>(s)]); };
  for (int s : ov.active_sides) comp[static_cast<size_t>(s)] = s;
  if (decompose) {
    for (const PairRef& p : var_pairs)
      for (size_t k = 1; k < p.vs.size(); ++k) comp[static_cast<size_t>(find(p.vs[k]))] = find(p.vs[0]);
  } else {
    for (size_t k = 1; k < ov.active_sides.size(); ++k)
      comp[static_cast<size_t>(find(ov.active_sides[k]))] = find(ov.active_sides[0]);
  }

  std::map<int, std::vector<int>> comp_sides;
  for (int s : ov.active_sides) comp_sides[find(s)].push_back(s);
  std::map<int, std::vector<PairRef>> comp_pairs;
  for (const PairRef& p : var_pairs) comp_pairs[find(p.vs[0])].push_back(p);

  int total = base;
  std::vector<Overlay::Merge> best_merges = ov.merge;

  for (auto& [root, sides] : comp_sides) {
    auto& pairs = comp_pairs[root];
    if (pairs.empty()) continue;
    // Pair evaluation happens once all its sides are assigned.
    std::vector<int> ready_at(pairs.size(), 0);
    std::map<int, int> side_order;
    for (size_t k = 0; k < sides.size(); ++k) side_order[sides[static_cast<size_t>(k)]] = static_cast<int>(k);
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
      int mx = 0;
      for (int s : pairs[pi].vs) mx = std::max(mx, side_order[s]);
      ready_at[pi] = mx;
    }
    std::vector<std::vector<int>> pairs_by_depth(sides.size());
    for (size_t pi = 0; pi < pairs.size(); ++pi) pairs_by_depth[static_cast<size_t>(ready_at[pi])].push_back(static_cast<int>(pi));

    int best = INT_MAX;
    std::vector<Overlay::Merge> comp_best;
    std::function<void(size_t, int)> dfs = [&](size_t depth, int acc) {
      if (budget) {
        if (*budget <= 0) throw Error(ErrorKind::BudgetExceeded, "intersection search budget exhausted");
        --*budget;
      }
      if (acc >= best) return;
      if (depth == sides.size()) {
        best = acc;
        comp_best.clear();
        for (int s : sides) comp_best.push_back(ov.merge[static_cast<size_t>(s)]);
        return;
      }
      int s = sides[depth];
      int a = ov.sides_x_count[static_cast<size_t>(s)], b = ov.sides_y_count[static_cast<size_t>(s)];
      enumerate_merges(a, b, [&](const std::vector<int>& gx, const std::vector<int>& gy) {
        ov.merge[static_cast<size_t>(s)].gx = gx;
        ov.merge[static_cast<size_t>(s)].gy = gy;
        int add = 0;
        for (int pi : pairs_by_depth[depth])
          if (ov.pair_crosses(ov.mixed_chords[0][static_cast<size_t>(pairs[static_cast<size_t>(pi)].xi)],
                              ov.mixed_chords[1][static_cast<size_t>(pairs[static_cast<size_t>(pi)].yi)]))
            ++add;
        dfs(depth + 1, acc + add);
      });
    };
    dfs(0, 0);
    total += best;
    for (size_t k = 0; k < sides.size(); ++k) best_merges[static_cast<size_t>(sides[k])] = comp_best[k];
  }

  ov.merge = best_merges;
  return {total, best_merges};
}

}  // namespace

int geometric_intersection(const CurveClass& x, const CurveClass& y) {
  if (!(x.schema == y.schema)) throw Error(ErrorKind::SchemaMismatch, "curves on different surfaces");
  if (x.key == y.key) return x.sidedness == Sidedness::OneSided ? 1 : 0;
  Overlay ov(x.schema, x.word, y.word);
  return minimize_crossings(ov).count;
}

StrandLayout realize_minimal_position(const CurveClass& x, const CurveClass& y) {
  if (!(x.schema == y.schema)) throw Error(ErrorKind::SchemaMismatch, "curves on different surfaces");
  Overlay ov(x.schema, x.word, y.word);
  bool same = x.key == y.key;
  if (!same) minimize_crossings(ov);

  StrandLayout out;
  for (int o = 0; o < 2; ++o) {
    for (const auto& c : ov.mixed_chords[o]) {
      StrandLayout::LChord lc;
      lc.owner = o;
      lc.back = c.back;
      lc.a_side = c.a.side;
      lc.b_side = c.b.side;
      lc.a_slot = ov.face_key(c.a, c.back).second;
      lc.b_slot = ov.face_key(c.b, c.back).second;
      out.chords.push_back(lc);
    }
  }
  if (!same) {
    int nx = static_cast<int>(ov.mixed_chords[0].size());
    for (size_t xi = 0; xi < ov.mixed_chords[0].size(); ++xi)
      for (size_t yi = 0; yi < ov.mixed_chords[1].size(); ++yi)
        if (ov.pair_crosses(ov.mixed_chords[0][xi], ov.mixed_chords[1][yi]))
          out.crossings.push_back({static_cast<int>(xi), nx + static_cast<int>(yi)});
  }
  return out;
}

int oracle_intersection(const CurveClass& x, const CurveClass& y, std::int64_t budget) {
  if (!(x.schema == y.schema)) throw Error(ErrorKind::SchemaMismatch, "curves on different surfaces");
  if (x.key == y.key) return x.sidedness == Sidedness::OneSided ? 1 : 0;
  const SurfaceSchema& schema = x.schema;

  // All taut forms reachable by any order of bigon removals.
  auto all_reductions = [&](const CurveWord& w0) {
    std::vector<CurveWord> taut;
    std::vector<CurveWord> stack{w0};
    std::unordered_set<std::string> seen{word_key(schema, w0)};
    while (!stack.empty()) {
      CurveWord w = stack.back();
      stack.pop_back();
      bool any = false;
      int L = w.size();
      for (int i = 0; i < L; ++i) {
        const Crossing& a = w.nodes[static_cast<size_t>(i)];
        const Crossing& b = w.nodes[static_cast<size_t>((i + 1) % L)];
        if (a.side != b.side) continue;
        Frac lo = std::min(a.pos, b.pos), hi = std::max(a.pos, b.pos);
        bool blocked = false;
        for (int k = 0; k < L && !blocked; ++k) {
          if (k == i || k == (i + 1) % L) continue;
          const Crossing& z = w.nodes[static_cast<size_t>(k)];
          if (z.side == a.side && lo < z.pos && z.pos < hi) blocked = true;
        }
        if (blocked) continue;
        any = true;
        CurveWord next;
        for (int k = 0; k < L; ++k)
          if (k != i && k != (i + 1) % L) next.nodes.push_back(w.nodes[static_cast<size_t>(k)]);
        if (!next.empty() && seen.insert(word_key(schema, next)).second) stack.push_back(next);
      }
      if (!any) taut.push_back(w);
    }
    return taut;
  };

  auto tx = all_reductions(x.word);
  auto ty = all_reductions(y.word);
  int best = INT_MAX;
  for (const CurveWord& wx : tx) {
    for (const CurveWord& wy : ty) {
      Overlay ov(schema, wx, wy);
      auto res = minimize_crossings(ov, &budget, /*decompose=*/false);
      best = std::min(best, res.count);
    }
  }
  return best;
}

JointPosition joint_minimal_position(const CurveClass& x, const CurveClass& y) {
  if (!(x.schema == y.schema)) throw Error(ErrorKind::SchemaMismatch, "curves on different surfaces");
  Overlay ov(x.schema, x.word, y.word);
  JointPosition jp;
  jp.crossings = minimize_crossings(ov).count;
  jp.first = x.word;
  jp.second = y.word;
  // Per-owner crossing own-ranks in side order were fixed at construction;
  // rebuild them here to map merged ranks onto concrete positions.
  for (int o = 0; o < 2; ++o) {
    CurveWord& w = (o == 0 ? jp.first : jp.second);
    std::map<int, std::vector<std::pair<Frac, int>>> per_side;
    for (int i = 0; i < w.size(); ++i)
      per_side[w.nodes[static_cast<size_t>(i)].side].push_back({w.nodes[static_cast<size_t>(i)].pos, i});
    for (auto& [s, v] : per_side) {
      std::sort(v.begin(), v.end());
      int total = ov.total_on_side(s);
      for (size_t r = 0; r < v.size(); ++r) {
        const auto& merge = ov.merge[static_cast<size_t>(s)];
        int g = (o == 0) ? merge.gx[r] : merge.gy[r];
        w.nodes[static_cast<size_t>(v[r].second)].pos = Frac(g + 1, total + 1);
      }
    }
  }
  return jp;
}

IntersectionMatrix intersection_matrix(const std::vector<CurveClass>& classes, int threads) {
  int n = static_cast<int>(classes.size());
  IntersectionMatrix m;
  m.labels.reserve(static_cast<size_t>(n));
  for (const CurveClass& c : classes) m.labels.push_back(c.name.value_or(c.key));
  m.rows.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));

  std::vector<std::pair<int, int>> todo;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) todo.push_back({i, j});

  auto work = [&](int lo, int hi) {
    for (int k = lo; k < hi; ++k) {
      auto [i, j] = todo[static_cast<size_t>(k)];
      int v = geometric_intersection(classes[static_cast<size_t>(i)], classes[static_cast<size_t>(j)]);
      m.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      m.rows[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
    }
  };
  if (threads <= 1) {
    work(0, static_cast<int>(todo.size()));
  } else {
    std::vector<std::future<void>> fs;
    int total = static_cast<int>(todo.size());
    int chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      fs.push_back(std::async(std::launch::async, work, std::min(t * chunk, total), std::min((t + 1) * chunk, total)));
    for (auto& f : fs) f.get();
  }
  return m;
}

}  // namespace crosscap
