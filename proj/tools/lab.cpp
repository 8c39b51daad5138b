// Scratch exploration tool (not part of the deliverable surface).
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "crosscap/catalog.hpp"
#include "crosscap/cut.hpp"
#include "crosscap/intersect.hpp"
#include "crosscap/mcg.hpp"
#include "crosscap/json_io.hpp"

using namespace crosscap;

static void show(const SurfaceSchema& s, const CurveClass& c) {
  printf("  len=%d sided=%c ", c.word.size(), c.sidedness == Sidedness::OneSided ? '1' : '2');
  printf(" sides:");
  for (const auto& nd : c.word.nodes) printf(" %s%c", s.side(nd.side).label.c_str(), nd.to_back ? 'B' : 'F');
  printf("\n");
}

int main(int argc, char** argv) {
  int g = argc > 1 ? atoi(argv[1]) : 3;
  int n = argc > 2 ? atoi(argv[2]) : 0;
  auto s = build_schema(g, n);
  printf("=== catalog (%d,%d) ===\n", g, n);
  CatalogOptions opts;
  opts.strict = false;
  auto cat = cached_catalog(s, opts, "/tmp/crosscap-lab-cache");
  for (const auto& name : cat.order) {
    printf("%-10s", name.c_str());
    show(s, cat.curves.at(name));
  }
  printf("total: %zu curves\n", cat.order.size());
  for (const auto& e : cat.build_errors) printf("ERROR %s\n", e.c_str());

  if (argc > 3 && strcmp(argv[3], "gen") == 0) {
    // lab g n gen <word> <curve>
    auto ctx = make_context(cat);
    auto w = parse_word(argv[4]);
    auto x = cat.at(argv[5]);
    try {
      auto img = apply_word(ctx, w, x);
      std::string known = "?";
      for (auto& [nm, cc] : cat.curves)
        if (cc.key == img.key) known = nm;
      printf("%s(%s) = %s ", argv[4], argv[5], known.c_str());
      show(s, img);
      auto back = apply_word(ctx, inverse(w), img);
      printf("inverse recovers: %s\n", back.key == x.key ? "YES" : "NO");
    } catch (const Error& e) {
      printf("ERROR %s\n", e.what());
    }
    return 0;
  }
  if (argc > 3 && strcmp(argv[3], "twist") == 0) {
    // lab g n twist curveC curveX [power]
    auto ctx = make_context(cat);
    auto c = cat.at(argv[4]);
    auto x = cat.at(argv[5]);
    int pw = argc > 6 ? atoi(argv[6]) : 1;
    auto img = apply_twist(s, c, x, pw);
    std::string known = "?";
    for (auto& [nm, cc] : cat.curves)
      if (cc.key == img.key) known = nm;
    printf("t[%s]^%d(%s) = %s ", argv[4], pw, argv[5], known.c_str());
    show(s, img);
    // inverse law
    auto back = apply_twist(s, c, img, -pw);
    printf("inverse recovers: %s\n", back.key == x.key ? "YES" : "NO");
    return 0;
  }
  if (argc > 3 && strcmp(argv[3], "p20") == 0) {
    int ml = argc > 4 ? atoi(argv[4]) : 10;
    int cap = argc > 5 ? atoi(argv[5]) : 2;
    auto accept = [&](const CurveClass& c) {
      if (c.sidedness != Sidedness::TwoSided) return false;
      if (!is_nontrivial(s, c)) return false;
      for (const ComponentRecord& r : cut_along(s, {c}))
        if (r.orientable && r.genus == 2 && r.boundary_count == 1) return true;
      return false;
    };
    auto found = enumerate_curves(s, ml, cap, {}, accept, 10);
    printf("genus-2-separators: %zu\n", found.size());
    for (auto& c : found) {
      printf("  i(q_4)=%d i(l_1)=%d", geometric_intersection(c, cat.at("q_4")), geometric_intersection(c, cat.at("l_1")));
      show(s, c);
    }
    return 0;
  }
  if (argc > 3 && strcmp(argv[3], "spec") == 0) {
    // rerun a failed record by name and show witnesses
    for (auto& [nm, sp] : cat.specs) (void)nm;
    CurveSpec spec;
    spec.name = "q_4";
    for (int c = 1; c <= 3; ++c) spec.disjoint_from.push_back(curve_name("c", c));
    spec.disjoint_from.push_back("d_{1,2}");
    spec.not_isotopic_to = spec.disjoint_from;
    spec.max_len = 12;
    auto out = solve_constraints(s, spec, cat.curves);
    printf("q4 witnesses: %zu\n", out.witnesses.size());
    for (auto& c : out.witnesses) {
      printf("  i(l_1)=%d i(q_2)=%d i(a_1)=%d i(a_4)=%d i(w_5)=%d phi-self=%d ",
             geometric_intersection(c, cat.at("l_1")), geometric_intersection(c, cat.at("q_2")),
             geometric_intersection(c, cat.at("a_1")), geometric_intersection(c, cat.at("a_4")),
             geometric_intersection(c, cat.at("w_5")),
             (face_swap(c).key == c.key) ? 1 : 0);
      show(s, c);
    }
    return 0;
  }
  if (argc > 3 && strcmp(argv[3], "bk") == 0) {
    auto bk = canonicalize(s, make_word({{s.side_by_label("e_1"), Frac(1,2)}, {s.side_by_label("e_3"), Frac(1,2)}}, false));
    for (auto& [nm, z] : cat.curves) {
      int i0 = geometric_intersection(z, bk);
      auto tp = apply_twist(s, bk, z, 1);
      auto tm = apply_twist(s, bk, z, -1);
      printf("%-8s i(z,bk)=%d  t+ %s t-  (len %d vs %d)\n", nm.c_str(), i0,
             tp.key == tm.key ? "==" : "!=", tp.word.size(), tm.word.size());
    }
    return 0;
  }
  if (argc > 3 && strcmp(argv[3], "v2lab") == 0) {
    auto b = cat.at("b_{2,5}");
    auto a1 = cat.at("a_1");
    auto a26 = cat.at("a_{2,6}");
    auto u1 = cat.at("u_1");
    auto u1m = canonicalize(s, make_word({{s.side_by_label("s_1"), Frac(1,2)}, {s.side_by_label("e_1"), Frac(1,2)}, {s.side_by_label("e_2"), Frac(1,2)}, {s.side_by_label("e_5"), Frac(1,2)}}, false));
    if (geometric_intersection(u1m, cat.at("w_1")) != 0) u1m = face_swap(u1m);
    printf("u1' vs w_1: %d, vs r_1: %d\n", geometric_intersection(u1m, cat.at("w_1")), geometric_intersection(u1m, cat.at("r_1")));
    std::vector<int> sup = {s.side_by_label("s_2"), s.side_by_label("e_5"), s.side_by_label("e_6"),
                            s.side_by_label("e_1"), s.side_by_label("e_2")};
    auto accept = [&](const CurveClass& c) {
      return geometric_intersection(c, b) == 0 && geometric_intersection(c, a1) == 0 &&
             geometric_intersection(c, a26) == 0 && is_nontrivial(s, c);
    };
    for (auto& c : enumerate_curves(s, 10, 2, sup, accept, 30)) {
      printf("cand len=%d sided=%c u1=%d phiu1=%d u2=%d a2=%d c1=%d d12=%d w1=%d r1=%d v1=%d :",
             c.word.size(), c.sidedness == Sidedness::OneSided ? '1' : '2',
             geometric_intersection(c, u1), geometric_intersection(c, u1m),
             geometric_intersection(c, cat.at("u_2")),
             geometric_intersection(c, cat.at("a_2")), geometric_intersection(c, cat.at("c_1")),
             geometric_intersection(c, cat.at("d_{1,2}")),
             geometric_intersection(c, cat.at("w_1")), geometric_intersection(c, cat.at("r_1")),
             geometric_intersection(c, cat.at("v_1")));
      for (const auto& nd : c.word.nodes) printf(" %s%c", s.side(nd.side).label.c_str(), nd.to_back ? 'B' : 'F');
      printf("\n");
    }
    return 0;
  }
  if (argc > 3 && strcmp(argv[3], "vs") == 0) {
    // print intersection of pairs: lab g n vs nameA nameB...
    for (int i = 4; i + 1 < argc; i += 2) {
      auto x = cat.at(argv[i]);
      auto y0 = cat.at(argv[i + 1]);
      printf("i(%s, %s) = %d;  i(%s, phi(%s)) = %d\n", argv[i], argv[i + 1],
             geometric_intersection(x, y0), argv[i], argv[i + 1],
             geometric_intersection(x, face_swap(y0)));
    }
    return 0;
  }
  if (argc > 3 && (strcmp(argv[3], "probe") == 0 || strcmp(argv[3], "Probe3") == 0)) {
    // Probe: enumerate everything disjoint from a b-circle region, show classes.
    int max_len = argc > 4 ? atoi(argv[4]) : 8;
    std::vector<CurveClass> confine;
    std::vector<CurveClass> meets;
    std::vector<std::pair<std::string, CurveClass>> panel;
    std::vector<int> support;
    for (int k = 5; k < argc; ++k) {
      if (strncmp(argv[k], "sides=", 6) == 0) {
        char* tok = strtok(argv[k] + 6, ",");
        while (tok) { support.push_back(s.side_by_label(tok)); tok = strtok(nullptr, ","); }
        continue;
      }
      if (strncmp(argv[k], "panel=", 6) == 0) {
        char* tok = strtok(argv[k] + 6, ",");
        while (tok) { panel.push_back({tok, cat.at(tok)}); tok = strtok(nullptr, ","); }
        continue;
      }
      if (strncmp(argv[k], "meets=", 6) == 0) {
        char* tok = strtok(argv[k] + 6, ",");
        while (tok) { meets.push_back(cat.at(tok)); tok = strtok(nullptr, ","); }
        continue;
      }
      confine.push_back(cat.at(argv[k]));
    }
    auto accept = [&](const CurveClass& c) {
      for (auto& d : confine)
        if (geometric_intersection(c, d) != 0) return false;
      for (auto& d : meets)
        if (geometric_intersection(c, d) == 0) return false;
      return is_nontrivial(s, c);
    };
    auto found = enumerate_curves(s, max_len, (argc > 3 && argv[3][0] == 'P') ? 3 : 2, support, accept, 400);
    printf("--- probe: %zu classes ≤ len %d disjoint from given ---\n", found.size(), max_len);
    for (auto& c : found) {
      // identify knowns
      std::string known = "?";
      for (auto& [nm, cc] : cat.curves)
        if (cc.key == c.key) known = nm;
      printf("%-10s", known.c_str());
      for (auto& [nm, pc] : panel) printf(" %s=%d", nm.c_str(), geometric_intersection(c, pc));
      show(s, c);
    }
  }
  return 0;
}
