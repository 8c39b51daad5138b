#include <doctest.h>

#include "crosscap/cut.hpp"

using namespace crosscap;

namespace {
Frac f(int n, int d) { return Frac(n, d); }
}

TEST_CASE("empty system returns the surface itself") {
  auto s = build_schema(2, 0);
  auto comps = cut_along(s, {});
  REQUIRE(comps.size() == 1);
  CHECK_FALSE(comps[0].orientable);
  CHECK(comps[0].genus == 2);
  CHECK(comps[0].boundary_count == 0);
  CHECK(comps[0].euler_characteristic == 0);

  auto t = build_schema(1, 2);
  auto c2 = cut_along(t, {});
  REQUIRE(c2.size() == 1);
  CHECK_FALSE(c2[0].orientable);
  CHECK(c2[0].genus == 1);
  CHECK(c2[0].boundary_count == 2);
}

TEST_CASE("cutting the Klein bottle along the two-sided curve gives an annulus") {
  auto s = build_schema(2, 0);
  auto a = canonicalize(s, make_word({{0, f(1, 2)}, {2, f(1, 2)}}, false));
  auto comps = cut_along(s, {a});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].orientable);
  CHECK(comps[0].genus == 0);
  CHECK(comps[0].boundary_count == 2);
  CHECK(comps[0].euler_characteristic == 0);
}

TEST_CASE("cutting along a crosscap core") {
  auto s = build_schema(2, 0);
  auto b = canonicalize(s, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));
  auto comps = cut_along(s, {b});
  REQUIRE(comps.size() == 1);
  // Klein bottle minus a Moebius neighborhood of a core: Moebius band.
  CHECK_FALSE(comps[0].orientable);
  CHECK(comps[0].genus == 1);
  CHECK(comps[0].boundary_count == 1);
}

TEST_CASE("cutting (3,0) along the three cores gives a sphere with three holes") {
  auto s = build_schema(3, 0);
  auto a1 = canonicalize(s, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));
  auto a2 = canonicalize(s, make_word({{2, f(1, 2)}, {3, f(1, 2)}}, false));
  auto a3 = canonicalize(s, make_word({{4, f(1, 2)}, {5, f(1, 2)}}, false));
  auto comps = cut_along(s, {a1, a2, a3});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].orientable);
  CHECK(comps[0].genus == 0);
  CHECK(comps[0].boundary_count == 3);
  CHECK(is_pants_decomposition(s, {a1, a2, a3}));
  CHECK_FALSE(is_pants_decomposition(s, {a1}));
}

TEST_CASE("trivial circles are detected") {
  auto s = build_schema(3, 0);
  // Circle around crosscap 2: bounds a Moebius band.
  auto around = canonicalize(s, make_word({{1, f(1, 2)}, {3, f(1, 2)}}, false));
  CHECK_FALSE(is_nontrivial(s, around));
  auto core = canonicalize(s, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));
  CHECK(is_nontrivial(s, core));

  // On (1,2): circle around the z_1 hole is boundary-parallel.
  auto t = build_schema(1, 2);
  auto bdry = canonicalize(t, make_word({{1, f(1, 2)}, {3, f(1, 2)}}, false));
  CHECK_FALSE(is_nontrivial(t, bdry));
}

TEST_CASE("non-disjoint input is refused") {
  auto s = build_schema(2, 0);
  auto a = canonicalize(s, make_word({{0, f(1, 2)}, {2, f(1, 2)}}, false));
  auto b = canonicalize(s, make_word({{0, f(1, 2)}, {1, f(1, 2)}}, false));
  CHECK_THROWS_AS(cut_along(s, {a, b}), Error);
}
