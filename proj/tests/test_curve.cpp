#include <doctest.h>

#include <random>

#include "crosscap/curve.hpp"

using namespace crosscap;

namespace {
Frac f(int n, int d) { return Frac(n, d); }
}

TEST_CASE("core word canonicalizes one-sided") {
  auto s = build_schema(3, 0);
  // Core of crosscap 1, hugging to the right: crosses s_1 and e_1.
  auto w = make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false);
  auto c = canonicalize(s, w);
  CHECK(c.sidedness == Sidedness::OneSided);
  CHECK(c.word.size() == 2);
}

TEST_CASE("rotation and reversal invariance") {
  auto s = build_schema(3, 0);
  auto w1 = make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false);
  auto w2 = make_word({{1, f(1, 2)}, {0, f(1, 2)}}, true);  // rotated by one
  auto c1 = canonicalize(s, w1);
  auto c2 = canonicalize(s, w2);
  CHECK(equals(c1, c2));

  // Reversal: same crossings, walked backwards.
  CurveWord r;
  r.nodes = {{1, f(1, 2), true}, {0, f(1, 2), false}};
  // fix faces so they alternate
  r.nodes[0].to_back = true;
  r.nodes[1].to_back = false;
  auto c3 = canonicalize(s, r);
  CHECK(equals(c1, c3));
}

TEST_CASE("the two core-hugging forms are the same class") {
  // On (1,2): sides s_1 e_1 z_1 e_2 z_2 e_3. The crosscap core can hug left
  // (crossing e_3) or right (crossing e_1); both canonicalize identically.
  auto s = build_schema(1, 2);
  auto right = canonicalize(s, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));
  auto left = canonicalize(s, make_word({{0, f(1, 2)}, {5, f(1, 2)}}, false));
  CHECK(equals(right, left));

  // The word through e_2 wraps a boundary hole: a genuinely different class.
  auto other = canonicalize(s, make_word({{0, f(1, 2)}, {3, f(1, 2)}}, false));
  CHECK_FALSE(equals(right, other));
}

TEST_CASE("bigon removal") {
  auto s = build_schema(3, 0);
  // Core word with an immediate cross-and-return over e_1 inserted.
  auto w = make_word({{0, f(1, 2)}, {1, f(1, 4)}, {1, f(1, 2)}, {1, f(3, 4)}}, false);
  auto c = canonicalize(s, w);
  auto plain = canonicalize(s, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));
  CHECK(equals(c, plain));
}

TEST_CASE("trivial words are rejected") {
  auto s = build_schema(3, 0);
  auto w = make_word({{1, f(1, 3)}, {1, f(2, 3)}}, false);
  CHECK_THROWS_AS(canonicalize(s, w), Error);
}

TEST_CASE("boundary sides are off limits") {
  auto s = build_schema(1, 2);
  auto w = make_word({{0, f(1, 2)}, {2, f(1, 2)}}, false);
  CHECK_THROWS_AS(canonicalize(s, w), Error);
}

TEST_CASE("canonicalize is idempotent") {
  auto s = build_schema(4, 2);
  std::vector<CurveWord> samples = {
      make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false),
      make_word({{0, f(1, 2)}, {2, f(1, 2)}}, false),   // c_1-like: s_1, s_2
      make_word({{1, f(1, 2)}, {5, f(1, 2)}}, false),   // b-like: e_1, e_3
      make_word({{0, f(1, 2)}, {7, f(1, 2)}}, false),   // a_{1,4}-like
  };
  for (const auto& w : samples) {
    auto c1 = canonicalize(s, w);
    auto c2 = canonicalize(s, c1.word);
    CHECK(c1.key == c2.key);
  }
}

TEST_CASE("canonicalize idempotent on randomized words") {
  auto s = build_schema(2, 1);
  std::mt19937 rng(20240811);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 1000; ++trial) {
    int len = 2 * (1 + static_cast<int>(rng() % 3));
    CurveWord w;
    bool fb = rng() % 2;
    for (int i = 0; i < len; ++i) {
      int side;
      do { side = static_cast<int>(rng() % static_cast<unsigned>(s.side_count())); } while (s.is_boundary(side));
      w.nodes.push_back({side, Frac(1 + static_cast<int>(rng() % 23), 24), fb});
      fb = !fb;
    }
    try {
      validate_word(s, w);
      if (!is_self_simple(s, w)) continue;
      auto c1 = canonicalize(s, w);
      auto c2 = canonicalize(s, c1.word);
      CHECK(c1.key == c2.key);
      ++checked;
    } catch (const Error&) {
      continue;  // invalid or trivial random word
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("face swap is an involution") {
  auto s = build_schema(4, 2);
  auto w = canonicalize(s, make_word({{0, f(1, 2)}, {7, f(1, 2)}}, false));
  auto sw = face_swap(w);
  auto back = face_swap(sw);
  CHECK(equals(w, back));
}

TEST_CASE("sidedness parity") {
  auto s = build_schema(4, 2);
  auto one = canonicalize(s, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));
  CHECK(one.sidedness == Sidedness::OneSided);
  auto two = canonicalize(s, make_word({{0, f(1, 2)}, {2, f(1, 2)}}, false));
  CHECK(two.sidedness == Sidedness::TwoSided);
}
