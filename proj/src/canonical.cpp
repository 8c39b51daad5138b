#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "crosscap/curve.hpp"

namespace crosscap {

namespace {

struct Tuple {
  int side;
  int rank;
  bool to_back;
  friend bool operator<(const Tuple& a, const Tuple& b) {
    if (a.side != b.side) return a.side < b.side;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.to_back < b.to_back;
  }
  friend bool operator==(const Tuple& a, const Tuple& b) {
    return a.side == b.side && a.rank == b.rank && a.to_back == b.to_back;
  }
};

std::vector<Tuple> tuples_of(const CurveWord& w) {
  std::map<int, std::vector<Frac>> per_side;
  for (const Crossing& c : w.nodes) per_side[c.side].push_back(c.pos);
  for (auto& [s, ps] : per_side) std::sort(ps.begin(), ps.end());
  std::vector<Tuple> out;
  out.reserve(w.nodes.size());
  for (const Crossing& c : w.nodes) {
    const auto& ps = per_side[c.side];
    int rank = static_cast<int>(std::lower_bound(ps.begin(), ps.end(), c.pos) - ps.begin());
    out.push_back({c.side, rank, c.to_back});
  }
  return out;
}

// Reversed word: same crossings walked backwards; segment faces reattach.
CurveWord reversed_word(const CurveWord& w) {
  int L = w.size();
  CurveWord out;
  out.nodes.reserve(static_cast<size_t>(L));
  for (int k = 0; k < L; ++k) {
    Crossing c = w.nodes[static_cast<size_t>(L - 1 - k)];
    c.to_back = w.nodes[static_cast<size_t>(((L - 2 - k) % L + L) % L)].to_back;
    out.nodes.push_back(c);
  }
  return out;
}

CurveWord rotated_word(const CurveWord& w, int start) {
  int L = w.size();
  CurveWord out;
  out.nodes.reserve(static_cast<size_t>(L));
  for (int k = 0; k < L; ++k) out.nodes.push_back(w.nodes[static_cast<size_t>((start + k) % L)]);
  return out;
}

// Lexicographically least tuple sequence over all rotations and the reversal;
// returns the realizing word.
std::pair<std::vector<Tuple>, CurveWord> min_presentation(const CurveWord& w) {
  std::optional<std::vector<Tuple>> best;
  CurveWord best_word;
  for (int rev = 0; rev < 2; ++rev) {
    CurveWord base = rev ? reversed_word(w) : w;
    auto base_tuples = tuples_of(base);
    int L = base.size();
    for (int start = 0; start < L; ++start) {
      std::vector<Tuple> cand;
      cand.reserve(static_cast<size_t>(L));
      for (int k = 0; k < L; ++k) cand.push_back(base_tuples[static_cast<size_t>((start + k) % L)]);
      if (!best || cand < *best) {
        best = cand;
        best_word = rotated_word(base, start);
      }
    }
  }
  return {*best, best_word};
}

std::string tuples_key(const std::vector<Tuple>& ts) {
  std::ostringstream os;
  for (const Tuple& t : ts) os << t.side << ':' << t.rank << (t.to_back ? 'B' : 'F') << '|';
  return os.str();
}

Frac below_all(const std::vector<Frac>& existing) {
  if (existing.empty()) return Frac(1, 2);
  Frac mn = *std::min_element(existing.begin(), existing.end());
  return mn / Frac(2);
}

Frac above_all(const std::vector<Frac>& existing) {
  if (existing.empty()) return Frac(1, 2);
  Frac mx = *std::max_element(existing.begin(), existing.end());
  return midpoint(mx, Frac(1));
}

std::vector<Frac> side_positions(const CurveWord& w, int side, int skip_index) {
  std::vector<Frac> out;
  for (int i = 0; i < w.size(); ++i)
    if (i != skip_index && w.nodes[static_cast<size_t>(i)].side == side)
      out.push_back(w.nodes[static_cast<size_t>(i)].pos);
  return out;
}

// Crosscap rotation move: slide the extreme crossing on a crosscap side past
// the pair of identified polygon vertices. Count-neutral exactly when the
// subsequent taut reduction cancels the two inserted gate crossings.
std::optional<CurveWord> rotate_crosscap(const SurfaceSchema& schema, const CurveWord& w, int side, int dir) {
  int L = w.size();
  int which = -1;
  for (int i = 0; i < L; ++i) {
    const Crossing& c = w.nodes[static_cast<size_t>(i)];
    if (c.side != side) continue;
    if (which < 0) { which = i; continue; }
    const Crossing& cur = w.nodes[static_cast<size_t>(which)];
    if (dir > 0 ? (c.pos > cur.pos) : (c.pos < cur.pos)) which = i;
  }
  if (which < 0) return std::nullopt;

  const Crossing x = w.nodes[static_cast<size_t>(which)];
  bool f_out = x.to_back;
  bool f_in = !f_out;
  int e_next = schema.next_side(side);
  int e_prev = schema.prev_side(side);

  Crossing xp;  // rotated crossing
  xp.side = side;
  Crossing gate_front, gate_back;  // crossing gained by the front-/back-end chord
  if (dir > 0) {
    xp.pos = below_all(side_positions(w, side, which));
    gate_front = {e_next, below_all(side_positions(w, e_next, -1)), false};
    gate_back = {e_prev, above_all(side_positions(w, e_prev, -1)), false};
  } else {
    xp.pos = above_all(side_positions(w, side, which));
    gate_front = {e_prev, above_all(side_positions(w, e_prev, -1)), false};
    gate_back = {e_next, below_all(side_positions(w, e_next, -1)), false};
  }

  // Segment faces around the replacement; to_back is the face of the chord
  // that follows each node.
  std::vector<Crossing> repl;
  if (f_in == false) {
    // Incoming chord is a front chord: it gains the front-end gate.
    gate_front.to_back = true;   // corner chord to xp runs in the back face
    xp.to_back = false;          // corner chord to the back-end gate is front
    gate_back.to_back = true;    // old outgoing (back) chord continues
    repl = {gate_front, xp, gate_back};
  } else {
    gate_back.to_back = false;
    xp.to_back = true;
    gate_front.to_back = false;
    repl = {gate_back, xp, gate_front};
  }

  CurveWord out;
  out.nodes.reserve(static_cast<size_t>(L + 2));
  for (int k = 0; k < L; ++k) {
    if (k == which) {
      for (const Crossing& c : repl) out.nodes.push_back(c);
    } else {
      out.nodes.push_back(w.nodes[static_cast<size_t>(k)]);
    }
  }
  return out;
}

}  // namespace

std::string word_key(const SurfaceSchema& schema, const CurveWord& w) {
  (void)schema;
  return tuples_key(min_presentation(w).first);
}

std::vector<CurveWord> rotation_closure(const SurfaceSchema& schema, const CurveWord& start, int cap) {
  CurveWord w0 = reduce_taut(schema, start);
  if (w0.empty()) return {};
  int best = w0.size();

  std::vector<CurveWord> frontier{w0};
  std::unordered_set<std::string> seen{word_key(schema, w0)};
  std::vector<CurveWord> out;

restart:
  out.clear();
  for (const CurveWord& w : frontier)
    if (w.size() == best) out.push_back(w);

  for (size_t qi = 0; qi < frontier.size(); ++qi) {
    CurveWord w = frontier[qi];
    if (w.size() > best) continue;
    for (int side = 0; side < schema.side_count(); ++side) {
      if (!schema.is_crosscap(side)) continue;
      for (int dir : {+1, -1}) {
        auto moved = rotate_crosscap(schema, w, side, dir);
        if (!moved) continue;
        CurveWord red = reduce_taut(schema, *moved);
        if (red.empty()) continue;
        if (red.size() > best) continue;
        std::string key = word_key(schema, red);
        if (!seen.insert(key).second) continue;
        if (static_cast<int>(seen.size()) > cap)
          throw Error(ErrorKind::BudgetExceeded, "rotation closure exceeded cap");
        if (red.size() < best) {
          best = red.size();
          frontier.push_back(red);
          goto restart;
        }
        frontier.push_back(red);
        out.push_back(red);
      }
    }
  }
  return out;
}

CurveClass canonicalize(const SurfaceSchema& schema, const CurveWord& input) {
  validate_word(schema, input);
  if (!is_self_simple(schema, input))
    throw Error(ErrorKind::InvalidCurve, "segments within a face must be pairwise disjoint");

  CurveWord w = reduce_taut(schema, input);
  if (w.empty()) throw Error(ErrorKind::TrivialCurve, "word reduces to nothing (bounds a disk)");

  auto closure = rotation_closure(schema, w);
  std::optional<std::vector<Tuple>> best;
  CurveWord best_word;
  for (const CurveWord& cand : closure) {
    auto [tuples, word] = min_presentation(cand);
    if (!best || tuples < *best) {
      best = tuples;
      best_word = word;
    }
  }

  CurveClass cls;
  cls.schema = schema;
  cls.word = best_word;
  renormalize_positions(schema, cls.word);
  cls.sidedness = word_sidedness(schema, cls.word);
  cls.key = tuples_key(*best);
  if (!is_self_simple(schema, cls.word))
    throw Error(ErrorKind::InvalidCurve, "canonical form lost simplicity (internal error)");
  return cls;
}

bool equals(const CurveClass& x, const CurveClass& y) {
  if (!(x.schema == y.schema)) throw Error(ErrorKind::SchemaMismatch, "curves on different surfaces");
  return x.key == y.key;
}

Sidedness sidedness(const CurveClass& x) { return x.sidedness; }

CurveClass face_swap(const CurveClass& x) {
  CurveClass out = canonicalize(x.schema, face_swap_word(x.schema, x.word));
  return out;
}

}  // namespace crosscap
