#include <doctest.h>

#include "crosscap/intersect.hpp"

using namespace crosscap;

namespace {
Frac f(int n, int d) { return Frac(n, d); }

struct KleinBottle {
  SurfaceSchema s = build_schema(2, 0);
  CurveClass a, b, c;
  KleinBottle() {
    a = canonicalize(s, make_word({{0, f(1, 2)}, {2, f(1, 2)}}, false));  // through both crosscaps
    b = canonicalize(s, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));  // core of crosscap 1
    c = canonicalize(s, make_word({{2, f(1, 2)}, {3, f(1, 2)}}, false));  // core of crosscap 2
  }
};
}

TEST_CASE("Klein bottle intersections") {
  KleinBottle k;
  CHECK(k.a.sidedness == Sidedness::TwoSided);
  CHECK(k.b.sidedness == Sidedness::OneSided);
  CHECK(k.c.sidedness == Sidedness::OneSided);
  CHECK(geometric_intersection(k.a, k.b) == 1);
  CHECK(geometric_intersection(k.a, k.c) == 1);
  CHECK(geometric_intersection(k.b, k.c) == 0);
  CHECK(geometric_intersection(k.a, k.a) == 0);
  CHECK(geometric_intersection(k.b, k.b) == 1);
}

TEST_CASE("projective plane with two holes") {
  auto s = build_schema(1, 2);
  auto a = canonicalize(s, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));
  auto b = canonicalize(s, make_word({{0, f(1, 2)}, {3, f(1, 2)}}, false));
  CHECK(a.sidedness == Sidedness::OneSided);
  CHECK(b.sidedness == Sidedness::OneSided);
  CHECK(geometric_intersection(a, b) == 1);
  CHECK(oracle_intersection(a, b) == 1);
}

TEST_CASE("symmetry and layout coherence") {
  KleinBottle k;
  for (const auto* x : {&k.a, &k.b, &k.c})
    for (const auto* y : {&k.a, &k.b, &k.c}) {
      CHECK(geometric_intersection(*x, *y) == geometric_intersection(*y, *x));
      if (x->key != y->key) {
        auto layout = realize_minimal_position(*x, *y);
        CHECK(layout.crossing_count() == geometric_intersection(*x, *y));
      }
    }
}

TEST_CASE("oracle agrees on the Klein bottle") {
  KleinBottle k;
  CHECK(oracle_intersection(k.a, k.b) == 1);
  CHECK(oracle_intersection(k.b, k.c) == 0);
  CHECK(oracle_intersection(k.a, k.c) == 1);
}

TEST_CASE("disjoint pair has empty crossing list") {
  KleinBottle k;
  auto layout = realize_minimal_position(k.b, k.c);
  CHECK(layout.crossing_count() == 0);
}

TEST_CASE("matrix is symmetric with convention diagonal") {
  KleinBottle k;
  auto m = intersection_matrix({k.a, k.b, k.c});
  CHECK(m.rows[0][0] == 0);
  CHECK(m.rows[1][1] == 1);
  CHECK(m.rows[2][2] == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m.rows[i][j] == m.rows[j][i]);
  auto m2 = intersection_matrix({k.a, k.b, k.c}, 3);
  CHECK(m.rows == m2.rows);
}

TEST_CASE("schema mismatch is refused") {
  KleinBottle k;
  auto s2 = build_schema(3, 0);
  auto x = canonicalize(s2, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));
  CHECK_THROWS_AS(geometric_intersection(k.a, x), Error);
}
