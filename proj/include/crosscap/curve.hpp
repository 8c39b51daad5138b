#ifndef CROSSCAP_CURVE_HPP
#define CROSSCAP_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "crosscap/fraction.hpp"
#include "crosscap/schema.hpp"

namespace crosscap {

enum class Sidedness { OneSided, TwoSided };

// One transverse crossing of the curve with a polygon side.
//
// `pos` is the drawn position in (0,1) along the side arc. On a Crosscap side
// it is the position of the front-face endpoint; the back-face endpoint sits
// at the antipodally reindexed position 1-pos. On a Gluing side front and back
// endpoints share the same position. `to_back` is the face of the segment
// that FOLLOWS this crossing (true = back face); faces alternate strictly,
// since every crossing of the doubled polygon switches face.
struct Crossing {
  int side = 0;
  Frac pos;
  bool to_back = false;
};

// Cyclic crossing word with explicit positions. Segments between consecutive
// crossings are chords of the face disk they lie in; a valid word for a simple
// closed curve has pairwise non-crossing chords within each face.
struct CurveWord {
  std::vector<Crossing> nodes;

  int size() const { return static_cast<int>(nodes.size()); }
  bool empty() const { return nodes.empty(); }
  const Crossing& at(int i) const { return nodes[static_cast<size_t>(((i % size()) + size()) % size())]; }
};

// Endpoint of a chord on the face-disk boundary, comparable in the drawn
// cyclic order (side index ascending, position ascending).
struct ChordEnd {
  int side;
  Frac pos;
  friend bool operator<(const ChordEnd& a, const ChordEnd& b) {
    if (a.side != b.side) return a.side < b.side;
    return a.pos < b.pos;
  }
  friend bool operator==(const ChordEnd& a, const ChordEnd& b) { return a.side == b.side && a.pos == b.pos; }
};

struct Chord {
  ChordEnd a, b;
  bool back;      // face
  int from, to;   // node indices within the word
};

// Chord list of a word: chord i runs from node i to node i+1 (cyclically).
std::vector<Chord> chords_of(const SurfaceSchema& schema, const CurveWord& w);

// Endpoint of the chord with face `back` at a given crossing.
ChordEnd chord_end(const SurfaceSchema& schema, const Crossing& c, bool back);

// Exact test: two chords of the same face disk cross iff endpoints interleave.
bool chords_cross(const Chord& x, const Chord& y);

// Structural validation; throws InvalidCurve on violations.
void validate_word(const SurfaceSchema& schema, const CurveWord& w);

bool is_self_simple(const SurfaceSchema& schema, const CurveWord& w);

Sidedness word_sidedness(const SurfaceSchema& schema, const CurveWord& w);

// Canonicalized isotopy class. `key` is the canonical serialized form used
// for exact equality, hashing and deterministic ordering.
struct CurveClass {
  SurfaceSchema schema;
  CurveWord word;          // canonical representative (positions renormalized)
  Sidedness sidedness = Sidedness::TwoSided;
  std::string key;
  std::optional<std::string> name;

  bool operator==(const CurveClass& o) const { return schema == o.schema && key == o.key; }
  bool operator<(const CurveClass& o) const { return key < o.key; }
};

// Reduce to taut position (innermost bigons first, deterministic scan),
// close under crosscap rotation moves, and pick the lexicographically least
// representative over rotations and reversal. Throws TrivialCurve if the word
// reduces to nothing and InvalidCurve on malformed input.
CurveClass canonicalize(const SurfaceSchema& schema, const CurveWord& w);

bool equals(const CurveClass& x, const CurveClass& y);

Sidedness sidedness(const CurveClass& x);

// Face swap: the reflection through the plane of the projected picture.
CurveWord face_swap_word(const SurfaceSchema& schema, const CurveWord& w);
CurveClass face_swap(const CurveClass& x);

// Taut reduction only (shared with the intersection oracle). Returns the
// reduced word; an empty result means the curve was trivial.
CurveWord reduce_taut(const SurfaceSchema& schema, CurveWord w);

// All taut words reachable from `w` by crosscap rotation moves, including
// `w` itself, at the minimal crossing count. Deterministic order.
std::vector<CurveWord> rotation_closure(const SurfaceSchema& schema, const CurveWord& w, int cap = 4096);

// Renormalize positions to k/(m+1) per side, preserving order.
void renormalize_positions(const SurfaceSchema& schema, CurveWord& w);

// Serialized canonical key of a word as-is (no further moves).
std::string word_key(const SurfaceSchema& schema, const CurveWord& w);

// Helper used by catalog construction: word through listed (side, pos) pairs.
CurveWord make_word(const std::vector<std::pair<int, Frac>>& steps, bool first_to_back);

}  // namespace crosscap

#endif
