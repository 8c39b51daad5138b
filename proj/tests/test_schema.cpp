#include <doctest.h>

#include "crosscap/schema.hpp"

using namespace crosscap;

TEST_CASE("side order follows the polygon labeling") {
  auto s = build_schema(3, 0);
  std::vector<std::string> want{"s_1", "e_1", "s_2", "e_2", "s_3", "e_3"};
  REQUIRE(s.side_count() == 6);
  for (int i = 0; i < 6; ++i) CHECK(s.side(i).label == want[static_cast<size_t>(i)]);

  auto t = build_schema(1, 2);
  std::vector<std::string> want2{"s_1", "e_1", "z_1", "e_2", "z_2", "e_3"};
  REQUIRE(t.side_count() == 6);
  for (int i = 0; i < 6; ++i) CHECK(t.side(i).label == want2[static_cast<size_t>(i)]);

  CHECK(build_schema(2, 0).side_count() == 4);
}

TEST_CASE("role counts") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {4, 2}, {3, 2}, {5, 0}, {1, 4}}) {
    auto s = build_schema(g, n);
    int cc = 0, gl = 0, bd = 0;
    for (int k = 0; k < s.side_count(); ++k) {
      if (s.is_crosscap(k)) ++cc;
      if (s.is_gluing(k)) ++gl;
      if (s.is_boundary(k)) ++bd;
    }
    CHECK(cc == g);
    CHECK(gl == g + n);
    CHECK(bd == n);
    CHECK(s.euler_characteristic() == 2 - g - n);
  }
}

TEST_CASE("classification") {
  CHECK(classify_surface(build_schema(1, 2)).excluded);
  CHECK_FALSE(classify_surface(build_schema(3, 0)).excluded);
  CHECK(classify_surface(build_schema(3, 0)).regime == Regime::Special);
  CHECK(classify_surface(build_schema(3, 0)).euler_characteristic == -1);
  CHECK(classify_surface(build_schema(4, 2)).regime == Regime::Main);
  CHECK(classify_surface(build_schema(2, 1)).regime == Regime::Tiny);
  CHECK(classify_surface(build_schema(2, 0)).regime == Regime::Tiny);
  CHECK(classify_surface(build_schema(2, 2)).regime == Regime::Excluded);
  CHECK(classify_surface(build_schema(3, 1)).excluded);
  CHECK_THROWS_AS(build_schema(0, 3), Error);
  CHECK_THROWS_AS(build_schema(-1, 0), Error);
}

TEST_CASE("deterministic rebuild") {
  auto a = build_schema(4, 2);
  auto b = build_schema(4, 2);
  REQUIRE(a.side_count() == b.side_count());
  for (int i = 0; i < a.side_count(); ++i) {
    CHECK(a.side(i).label == b.side(i).label);
    CHECK(a.side(i).role == b.side(i).role);
  }
}
