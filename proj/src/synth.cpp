#include "crosscap/synth.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "crosscap/cut.hpp"
#include "crosscap/intersect.hpp"

namespace crosscap {

namespace {

struct Enumerator {
  const SurfaceSchema& schema;
  int max_len;
  int per_side_cap;
  std::vector<int> sides;  // allowed sides
  const std::function<bool(const CurveClass&)>& accept;
  int max_results;
  std::int64_t budget;

  CurveWord word;
  std::vector<std::vector<Frac>> side_positions;  // per side, sorted
  std::vector<int> side_counts;
  std::unordered_set<std::string> seen;
  std::vector<CurveClass> results;

  // Pre-extracted chords of the must-be-disjoint curves, for forced-crossing
  // pruning on side-disjoint chord pairs.
  struct FixedChord { int s1, s2; bool back; };
  std::vector<FixedChord> fixed_chords;

  Enumerator(const SurfaceSchema& sch, int ml, int cap, const std::vector<int>& allowed,
             const std::function<bool(const CurveClass&)>& acc, int mr,
             const std::vector<CurveClass>& fd, std::int64_t bud)
      : schema(sch), max_len(ml), per_side_cap(cap), accept(acc), max_results(mr), budget(bud) {
    if (allowed.empty()) {
      for (int s = 0; s < sch.side_count(); ++s)
        if (!sch.is_boundary(s)) sides.push_back(s);
    } else {
      sides = allowed;
    }
    side_positions.resize(static_cast<size_t>(sch.side_count()));
    side_counts.assign(static_cast<size_t>(sch.side_count()), 0);
    for (const CurveClass& c : fd)
      for (const Chord& ch : chords_of(sch, c.word))
        fixed_chords.push_back({ch.a.side, ch.b.side, ch.back});
  }

  // Candidate insertion positions on a side: midpoints of the gaps.
  std::vector<Frac> insertion_positions(int s) const {
    const auto& ps = side_positions[static_cast<size_t>(s)];
    std::vector<Frac> out;
    Frac prev(0);
    for (const Frac& p : ps) {
      out.push_back(midpoint(prev, p));
      prev = p;
    }
    out.push_back(midpoint(prev, Frac(1)));
    return out;
  }

  bool chord_ok(const Crossing& from, const Crossing& to, bool closing) {
    Chord nc{chord_end(schema, from, from.to_back), chord_end(schema, to, from.to_back), from.to_back, 0, 0};
    int L = word.size();
    int last = closing ? L - 1 : L - 2;  // chords 0..last-1 are settled
    for (int i = 0; i < last; ++i) {
      const Crossing& a = word.nodes[static_cast<size_t>(i)];
      const Crossing& b = word.nodes[static_cast<size_t>(i + 1)];
      Chord c{chord_end(schema, a, a.to_back), chord_end(schema, b, a.to_back), a.to_back, 0, 0};
      if (chords_cross(nc, c)) return false;
    }
    // A crossing with a must-be-disjoint curve is forced when the two chords
    // share no side: no strand ordering can undo it.
    for (const FixedChord& fc : fixed_chords) {
      if (fc.back != nc.back) continue;
      if (fc.s1 == nc.a.side || fc.s1 == nc.b.side || fc.s2 == nc.a.side || fc.s2 == nc.b.side) continue;
      int a1 = std::min(nc.a.side, nc.b.side), a2 = std::max(nc.a.side, nc.b.side);
      bool in1 = a1 < fc.s1 && fc.s1 < a2;
      bool in2 = a1 < fc.s2 && fc.s2 < a2;
      if (in1 != in2) return false;
    }
    return true;
  }

  void found() {
    CurveClass c;
    try {
      c = canonicalize(schema, word);
    } catch (const Error&) {
      return;  // trivial after reduction
    }
    if (!seen.insert(c.key).second) return;
    if (accept(c)) results.push_back(c);
  }

  void extend() {
    if (static_cast<int>(results.size()) >= max_results) return;
    if (--budget <= 0) throw Error(ErrorKind::BudgetExceeded, "curve enumeration budget exhausted");
    int L = word.size();
    if (L >= 2 && L % 2 == 0) {
      const Crossing& last = word.nodes[static_cast<size_t>(L - 1)];
      const Crossing& first = word.nodes[0];
      if (last.to_back != first.to_back && chord_ok(last, first, true)) found();
    }
    if (L == max_len) return;
    int first_side = word.empty() ? -1 : word.nodes[0].side;
    for (int s : sides) {
      if (!word.empty() && s < first_side) continue;  // rotate every word to start at its least side
      if (side_counts[static_cast<size_t>(s)] >= per_side_cap) continue;
      bool tb = word.empty() ? false : !word.nodes[static_cast<size_t>(L - 1)].to_back;
      for (const Frac& pos : insertion_positions(s)) {
        Crossing node{s, pos, tb};
        if (!word.empty()) {
          const Crossing& prev = word.nodes[static_cast<size_t>(L - 1)];
          if (!chord_ok(prev, node, false)) continue;
        }
        word.nodes.push_back(node);
        auto& ps = side_positions[static_cast<size_t>(s)];
        ps.insert(std::upper_bound(ps.begin(), ps.end(), pos), pos);
        ++side_counts[static_cast<size_t>(s)];

        extend();

        --side_counts[static_cast<size_t>(s)];
        ps.erase(std::find(ps.begin(), ps.end(), pos));
        word.nodes.pop_back();
        if (static_cast<int>(results.size()) >= max_results) return;
      }
    }
  }

  void run_with_first_face(bool tb) {
    word.nodes.clear();
    for (auto& ps : side_positions) ps.clear();
    side_counts.assign(static_cast<size_t>(schema.side_count()), 0);
    for (int s : sides) {
      word.nodes.push_back({s, Frac(1, 2), tb});
      side_positions[static_cast<size_t>(s)].push_back(Frac(1, 2));
      side_counts[static_cast<size_t>(s)] = 1;
      extend();
      side_counts[static_cast<size_t>(s)] = 0;
      side_positions[static_cast<size_t>(s)].clear();
      word.nodes.pop_back();
      if (static_cast<int>(results.size()) >= max_results) return;
    }
  }
};

}  // namespace

std::vector<CurveClass> enumerate_curves(const SurfaceSchema& schema, int max_len, int per_side_cap,
                                         const std::vector<int>& support_sides,
                                         const std::function<bool(const CurveClass&)>& accept,
                                         int max_results, const std::vector<CurveClass>& forced_disjoint,
                                         std::int64_t budget) {
  Enumerator en(schema, max_len, per_side_cap, support_sides, accept, max_results, forced_disjoint, budget);
  en.run_with_first_face(false);
  if (static_cast<int>(en.results.size()) < max_results) en.run_with_first_face(true);
  std::sort(en.results.begin(), en.results.end());
  en.results.erase(std::unique(en.results.begin(), en.results.end(),
                               [](const CurveClass& a, const CurveClass& b) { return a.key == b.key; }),
                   en.results.end());
  return en.results;
}

std::optional<std::vector<std::string>> complete_pants(const SurfaceSchema& schema,
                                                       const std::vector<std::string>& seed,
                                                       const Universe& universe) {
  std::vector<std::string> names;
  for (const auto& [name, cls] : universe) names.push_back(name);
  std::sort(names.begin(), names.end());

  auto curves_of = [&](const std::vector<std::string>& ns) {
    std::vector<CurveClass> cs;
    for (const std::string& n : ns) cs.push_back(universe.at(n));
    return cs;
  };

  std::function<std::optional<std::vector<std::string>>(std::vector<std::string>&, size_t)> dfs =
      [&](std::vector<std::string>& cur, size_t from) -> std::optional<std::vector<std::string>> {
    try {
      if (is_pants_decomposition(schema, curves_of(cur))) return cur;
    } catch (const Error&) {
      return std::nullopt;
    }
    for (size_t i = from; i < names.size(); ++i) {
      const std::string& cand = names[i];
      if (std::find(cur.begin(), cur.end(), cand) != cur.end()) continue;
      bool ok = true;
      for (const std::string& have : cur) {
        if (universe.at(have).key == universe.at(cand).key) { ok = false; break; }
        if (geometric_intersection(universe.at(have), universe.at(cand)) != 0) { ok = false; break; }
      }
      if (!ok) continue;
      cur.push_back(cand);
      auto r = dfs(cur, i + 1);
      if (r) return r;
      cur.pop_back();
    }
    return std::nullopt;
  };
  std::vector<std::string> cur = seed;
  return dfs(cur, 0);
}

SynthesisOutcome solve_constraints(const SurfaceSchema& schema, const CurveSpec& spec, const Universe& universe) {
  if (spec.sided == std::nullopt && spec.disjoint_from.empty() && spec.meets.empty() &&
      spec.not_isotopic_to.empty() && spec.pants_seed.empty() && !spec.require_orientable_complement)
    throw Error(ErrorKind::Ambiguous, "empty constraint record");

  std::vector<CurveClass> disjoint;
  for (const std::string& n : spec.disjoint_from) disjoint.push_back(universe.at(n));

  if (!spec.pants_seed.empty()) {
    auto p = complete_pants(schema, spec.pants_seed, universe);
    if (!p) throw Error(ErrorKind::NotFound, "no pants completion for " + spec.name);
    for (const std::string& n : *p) {
      if (std::find(spec.meets_in_pants.begin(), spec.meets_in_pants.end(), n) != spec.meets_in_pants.end())
        continue;
      disjoint.push_back(universe.at(n));
    }
  }

  int max_len = spec.max_len > 0 ? spec.max_len : 4 * schema.holes();

  auto accept = [&](const CurveClass& c) {
    if (spec.sided && c.sidedness != *spec.sided) return false;
    for (const CurveClass& d : disjoint)
      if (geometric_intersection(c, d) != 0) return false;
    for (const auto& [n, v] : spec.meets) {
      int got = geometric_intersection(c, universe.at(n));
      if (v < 0 ? got == 0 : got != v) return false;
    }
    for (const std::string& n : spec.meets_in_pants)
      if (geometric_intersection(c, universe.at(n)) == 0) return false;
    for (const std::string& n : spec.not_isotopic_to)
      if (c.key == universe.at(n).key) return false;
    if (spec.require_nontrivial && !is_nontrivial(schema, c)) return false;
    if (spec.require_orientable_complement && !has_orientable_complement(schema, c)) return false;
    if (spec.complement_piece) {
      auto [want_or, want_genus, want_b] = *spec.complement_piece;
      bool found_piece = false;
      for (const ComponentRecord& r : cut_along(schema, {c}))
        if (r.orientable == want_or && r.genus == want_genus && r.boundary_count == want_b) found_piece = true;
      if (!found_piece) return false;
    }
    return true;
  };

  auto sols = enumerate_curves(schema, max_len, spec.per_side_cap, spec.support_sides, accept, 8, disjoint);

  if (sols.size() > 1 && !spec.tiebreak.empty()) {
    if (spec.tiebreak == "lex") {
      sols.resize(1);
    } else if (spec.tiebreak.rfind("front_tube:", 0) == 0) {
      int hole = std::stoi(spec.tiebreak.substr(11));
      int holes = schema.holes();
      int left_index = (hole - 2 + holes) % holes + 1;
      int ls = schema.gluing_side(left_index);
      int rs = schema.gluing_side(hole);
      auto has_front_tube = [&](const CurveClass& c) {
        for (const Chord& ch : chords_of(schema, c.word)) {
          if (ch.back) continue;
          if ((ch.a.side == ls && ch.b.side == rs) || (ch.a.side == rs && ch.b.side == ls)) return true;
        }
        return false;
      };
      std::vector<CurveClass> keep;
      for (const CurveClass& c : sols)
        if (has_front_tube(c)) keep.push_back(c);
      if (keep.size() == 1) sols = keep;
    }
  }

  if (sols.empty()) return {SynthesisOutcome::None, {}};
  if (sols.size() == 1) return {SynthesisOutcome::Unique, sols};
  return {SynthesisOutcome::Multiple, sols};
}

CurveClass synthesize_from_constraints(const SurfaceSchema& schema, const CurveSpec& spec, const Universe& universe) {
  auto out = solve_constraints(schema, spec, universe);
  if (out.kind == SynthesisOutcome::None)
    throw Error(ErrorKind::NotFound, "no curve satisfies the record for " + spec.name);
  if (out.kind == SynthesisOutcome::Multiple)
    throw Error(ErrorKind::Ambiguous,
                "record for " + spec.name + " admits " + std::to_string(out.witnesses.size()) + " curves");
  CurveClass c = out.witnesses[0];
  c.name = spec.name;
  return c;
}

}  // namespace crosscap
