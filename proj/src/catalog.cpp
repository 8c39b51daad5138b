#include "crosscap/catalog.hpp"

#include <algorithm>

#include "crosscap/cut.hpp"
#include "crosscap/intersect.hpp"

namespace crosscap {

int cyc_index(int i, int holes) { return ((i - 1) % holes + holes) % holes + 1; }

std::string curve_name(const std::string& family, int i) {
  return family + "_" + std::to_string(i);
}

std::string curve_name2(const std::string& family, int i, int j) {
  return family + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

const CurveClass& CurveCatalog::at(const std::string& name) const {
  auto it = curves.find(name);
  if (it == curves.end()) throw Error(ErrorKind::NotFound, "no catalog curve named " + name);
  return it->second;
}

std::vector<CurveClass> CurveCatalog::all() const {
  std::vector<CurveClass> out;
  for (const std::string& n : order) out.push_back(curves.at(n));
  return out;
}

std::vector<CurveClass> CurveCatalog::group(const std::string& g) const {
  std::vector<CurveClass> out;
  auto it = groups.find(g);
  if (it == groups.end()) return out;
  for (const std::string& n : it->second) out.push_back(curves.at(n));
  return out;
}

namespace {

struct Builder {
  const SurfaceSchema& schema;
  CurveCatalog& cat;
  int g, n, H;
  bool strict = true;

  Builder(const SurfaceSchema& s, CurveCatalog& c) : schema(s), cat(c) {
    g = s.genus;
    n = s.boundary_count;
    H = g + n;
  }

  void add(const std::string& name, const CurveClass& c, const std::string& group) {
    CurveClass named = c;
    named.name = name;
    if (cat.curves.count(name)) throw Error(ErrorKind::DuplicateVertex, "catalog already has " + name);
    cat.curves.emplace(name, named);
    cat.order.push_back(name);
    cat.groups[group].push_back(name);
  }

  void add_direct(const std::string& name, const std::vector<std::pair<int, Frac>>& steps, const std::string& group) {
    auto c = canonicalize(schema, make_word(steps, false));
    if (!is_nontrivial(schema, c)) throw Error(ErrorKind::InvalidCurve, name + " is trivial");
    add(name, c, group);
  }

  void add_synth(CurveSpec spec, const std::string& group) {
    try {
      // A record always names a class distinct from every earlier entry.
      for (const std::string& existing : cat.order)
        if (std::find(spec.not_isotopic_to.begin(), spec.not_isotopic_to.end(), existing) ==
            spec.not_isotopic_to.end())
          spec.not_isotopic_to.push_back(existing);
      CurveClass c = synthesize_from_constraints(schema, spec, cat.curves);
      if (!is_nontrivial(schema, c)) throw Error(ErrorKind::InvalidCurve, spec.name + " is trivial");
      cat.specs[spec.name] = spec;
      add(spec.name, c, group);
    } catch (const Error& e) {
      if (strict) throw;
      cat.build_errors.push_back(spec.name + ": " + e.what());
    } catch (const std::exception& e) {
      if (strict) throw;
      cat.build_errors.push_back(spec.name + ": " + e.what());
    }
  }

  std::string b_name(int i, int j) const {
    int a = cyc_index(i, H), b = cyc_index(j, H);
    if (a > b) std::swap(a, b);
    return curve_name2("b", a, b);
  }

  std::string a_name(int i, int j) const { return curve_name2("a", i, cyc_index(j, H)); }

  static void dedupe(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  bool valid_b(int i, int j) const {
    int a = cyc_index(i, H), b = cyc_index(j, H);
    if (a > b) std::swap(a, b);
    int d = b - a;
    return d >= 2 && d <= H - 2;
  }

  // Circle bounding the holes outside {first..last} (cyclic interval).
  std::string far_circle(int first, int last) const { return b_name(cyc_index(last, H), cyc_index(first - 1, H)); }

  int e_side(int j) const { return schema.gluing_side(cyc_index(j, H)); }
  int s_side(int i) const { return schema.crosscap_side(i); }

  void build_X1() {
    for (int i = 1; i <= g; ++i)
      add_direct(curve_name("a", i), {{s_side(i), Frac(1, 2)}, {e_side(i), Frac(1, 2)}}, "C1");
    for (int i = 1; i <= g; ++i)
      for (int j = 1; j <= H; ++j) {
        if (j == i || j == cyc_index(i - 1, H)) continue;
        add_direct(a_name(i, j), {{s_side(i), Frac(1, 2)}, {e_side(j), Frac(1, 2)}}, "C1");
      }
  }

  void build_X2(bool cyclic_convention) {
    for (int i = 1; i <= H; ++i)
      for (int j = i + 1; j <= H; ++j) {
        int d = j - i;
        bool in_range = cyclic_convention ? std::min(d, H - d) >= 2 : (d >= 2 && d <= H - 2);
        if (!in_range) continue;
        add_direct(b_name(i, j), {{e_side(i), Frac(1, 2)}, {e_side(j), Frac(1, 2)}}, "C1");
      }
  }

  void build_c() {
    for (int i = 1; i + 1 <= g; ++i) {
      CurveSpec spec;
      spec.name = curve_name("c", i);
      spec.sided = Sidedness::TwoSided;
      spec.pants_seed = {curve_name("a", i), curve_name("a", i + 1), b_name(i - 1, i + 1)};
      spec.meets_in_pants = {curve_name("a", i), curve_name("a", i + 1)};
      spec.max_len = 4;
      spec.support_sides = {s_side(i), s_side(i + 1), e_side(i)};
      add_synth(spec, "C3");
    }
  }

  void build_C2() {
    for (int i = 1; i <= H; ++i) {
      CurveSpec spec;
      spec.name = curve_name("w", i);
      spec.sided = Sidedness::TwoSided;
      spec.disjoint_from = {far_circle(i - 1, i + 1)};
      for (int k : {i - 1, i, i + 1}) {
        int ck = cyc_index(k, H);
        if (ck <= g) spec.disjoint_from.push_back(curve_name("a", ck));
      }
      spec.meets = {{b_name(i - 2, i), 2}, {b_name(i - 1, i + 1), 2}};
      spec.max_len = 6;
      spec.support_sides = {e_side(i - 2), e_side(i - 1), e_side(i), e_side(i + 1)};
      std::sort(spec.support_sides.begin(), spec.support_sides.end());
      spec.support_sides.erase(std::unique(spec.support_sides.begin(), spec.support_sides.end()), spec.support_sides.end());
      spec.tiebreak = "front_tube:" + std::to_string(i);
      add_synth(spec, "C2");

      CurveSpec rspec = spec;
      rspec.name = curve_name("r", i);
      rspec.tiebreak.clear();
      rspec.not_isotopic_to = {curve_name("w", i)};
      add_synth(rspec, "C2");
    }
  }

  // Already-built curves disjoint from the cutter and not in the same
  // complement piece as the witness.
  std::vector<std::string> complement_side(const std::string& cutter, const std::string& witness,
                                           const std::vector<std::string>& families) {
    std::vector<std::string> cands;
    for (const std::string& fam : families)
      for (const std::string& name : cat.groups[fam]) {
        if (name == cutter || name == witness) continue;
        if (cat.curves.at(name).key == cat.curves.at(cutter).key) continue;
        if (geometric_intersection(cat.curves.at(name), cat.curves.at(cutter)) != 0) continue;
        cands.push_back(name);
      }
    std::vector<CurveClass> passengers{cat.curves.at(witness)};
    for (const std::string& nme : cands) passengers.push_back(cat.curves.at(nme));
    // Passengers must be mutually disjoint for a joint placement; locate one
    // at a time against the witness instead.
    std::vector<std::string> out;
    for (const std::string& nme : cands) {
      if (geometric_intersection(cat.curves.at(nme), cat.curves.at(witness)) != 0) continue;  // same piece for sure
      auto [comps, where] = locate_in_complement(schema, {cat.curves.at(cutter)},
                                                 {cat.curves.at(witness), cat.curves.at(nme)});
      if (where[0] != where[1]) out.push_back(nme);
    }
    return out;
  }

  void build_C3_rest() {
    for (int i = 1; i + 1 <= g; ++i) {
      {  // u_i
        CurveSpec spec;
        spec.name = curve_name("u", i);
        spec.pants_seed = {curve_name("r", i), curve_name("a", i), curve_name("a", i + 1), far_circle(i - 1, i + 1)};
        spec.meets_in_pants = {curve_name("a", i)};
        spec.not_isotopic_to = {curve_name("a", i)};
        spec.max_len = 8;
        spec.support_sides = {s_side(i), e_side(i - 2), e_side(i - 1), e_side(i), e_side(i + 1)};
        std::sort(spec.support_sides.begin(), spec.support_sides.end());
        spec.support_sides.erase(std::unique(spec.support_sides.begin(), spec.support_sides.end()),
                                 spec.support_sides.end());
        add_synth(spec, "C3");
      }
      {  // v_i: unique in the piece of the cutter containing its witness
        std::string cutter = b_name(i, i - 3);
        std::string witness = a_name(i, i - 2);
        CurveSpec spec;
        spec.name = curve_name("v", i);
        spec.disjoint_from = {curve_name("u", i), witness, cutter};
        for (int k = 1; k < i; ++k) spec.disjoint_from.push_back(curve_name("a", k));
        for (const std::string& other : complement_side(cutter, witness, {"C1", "C2"}))
          spec.disjoint_from.push_back(other);
        spec.not_isotopic_to = spec.disjoint_from;
        spec.max_len = 8;
        spec.support_sides = {s_side(i), e_side(i - 3), e_side(i - 2), e_side(i - 1), e_side(i)};
        dedupe(spec.support_sides);
        add_synth(spec, "C3");
      }
      {  // d_{i,i+1}
        std::string cutter = far_circle(i - 1, i + 1);
        std::string witness = curve_name("c", i);
        CurveSpec spec;
        spec.name = curve_name2("d", i, i + 1);
        spec.disjoint_from = {witness, cutter, curve_name("v", i)};
        for (int k = 1; k < i; ++k) spec.disjoint_from.push_back(curve_name("a", k));
        for (const std::string& other : complement_side(cutter, witness, {"C1", "C2"}))
          spec.disjoint_from.push_back(other);
        spec.not_isotopic_to = spec.disjoint_from;
        spec.max_len = 8;
        spec.support_sides = {s_side(i), s_side(i + 1), e_side(i - 2), e_side(i - 1), e_side(i), e_side(i + 1)};
        dedupe(spec.support_sides);
        add_synth(spec, "C3");
      }
    }
  }

  void build_C4() {}  // filled in below once the region census is settled

  void build_C5() {
    {  // l_1
      CurveSpec spec;
      spec.name = curve_name("l", 1);
      for (int i = 1; i + 1 <= g; ++i) spec.disjoint_from.push_back(curve_name("c", i));
      if (n >= 1) {
        if (g >= 2) spec.disjoint_from.push_back(curve_name2("d", 1, 2));
        if (valid_b(g, g + n)) spec.disjoint_from.push_back(b_name(g, g + n));
        for (int i = g; i + 2 <= g + n; ++i)
          if (valid_b(i, i + 2)) spec.disjoint_from.push_back(b_name(i, i + 2));
      }
      spec.require_orientable_complement = true;
      spec.not_isotopic_to = spec.disjoint_from;
      spec.max_len = g + 2;
      add_synth(spec, "C5");
    }
    if (n <= 1 && g >= 4) {  // l_0
      std::string cutter = b_name(4, g + n);
      CurveSpec spec;
      spec.name = curve_name("l", 0);
      spec.disjoint_from = {curve_name("c", 1), curve_name("c", 2), curve_name("c", 3),
                            curve_name2("d", 1, 2), cutter};
      for (const std::string& other : complement_side(cutter, curve_name("c", 1), {"C1", "C2", "C3", "C4"}))
        spec.disjoint_from.push_back(other);
      spec.not_isotopic_to = spec.disjoint_from;
      spec.max_len = 10;
      add_synth(spec, "C5");
    }
    if (n >= 2) {  // d_{n-1}, the last boundary-chain twist curve
      CurveSpec spec;
      spec.name = curve_name("d", n - 1);
      for (int i = 2; i + 2 <= g; ++i) spec.disjoint_from.push_back(b_name(i, i + 2));
      spec.disjoint_from.push_back(curve_name("r", g + 1));
      for (int i = g + 1; i + 2 <= g + n; ++i) spec.disjoint_from.push_back(b_name(i, i + 2));
      for (int k = 3; k <= g; ++k) spec.disjoint_from.push_back(curve_name("a", k));
      spec.disjoint_from.push_back(curve_name("c", 1));
      spec.disjoint_from.push_back(curve_name2("d", 1, 2));
      spec.not_isotopic_to = spec.disjoint_from;
      spec.sided = Sidedness::TwoSided;
      spec.max_len = 8;
      spec.support_sides = {s_side(1), s_side(2), e_side(1)};
      for (int e = g; e <= g + n; ++e) spec.support_sides.push_back(e_side(e));
      dedupe(spec.support_sides);
      add_synth(spec, "C5");
    }
  }

  void build_C6() {
    if (g < 2) return;
    int k = g / 2;  // even g = 2k; odd g = 2k+1
    if (g % 2 == 1) k = (g - 1) / 2;
    if (g == 2 || (g == 1)) return;  // C6 empty for g <= 2
    int jmax = (g % 2 == 0) ? n : n - 1;

    auto qo_spec = [&](const std::string& name, int t, const std::string& partner) {
      CurveSpec spec;
      spec.name = name;
      for (int c = 1; c <= std::min(t, g - 1); ++c) spec.disjoint_from.push_back(curve_name("c", c));
      spec.disjoint_from.push_back(partner);
      if (valid_b(t + 1, g + n)) spec.disjoint_from.push_back(b_name(t + 1, g + n));
      for (int i = t + 1; i + 2 <= g + n; ++i)
        if (valid_b(i, i + 2)) spec.disjoint_from.push_back(b_name(i, i + 2));
      for (int a = t + 2; a <= g; ++a) spec.disjoint_from.push_back(curve_name("a", a));
      spec.not_isotopic_to = spec.disjoint_from;
      spec.max_len = 2 * t + 4;
      for (int c = 1; c <= std::min(t + 1, g); ++c) spec.support_sides.push_back(s_side(c));
      for (int e = 1; e <= t + 1; ++e) spec.support_sides.push_back(e_side(e));
      spec.support_sides.push_back(e_side(g + n));
      dedupe(spec.support_sides);
      return spec;
    };

    for (int t = 2; t <= 2 * k; t += 2) {
      add_synth(qo_spec(curve_name("q", t), t, curve_name2("d", 1, 2)), "C6");
      if (cat.curves.count(curve_name2("e", 1, 2)))
        add_synth(qo_spec(curve_name("o", t), t, curve_name2("e", 1, 2)), "C6");
    }

    for (int i = 1; i <= k; ++i) {
      for (int j = 0; j <= jmax; ++j) {
        CurveSpec spec;
        spec.name = curve_name2("p", i, j);
        int t = 2 * i;
        for (int c = 1; c <= std::min(t, g - 1); ++c) spec.disjoint_from.push_back(curve_name("c", c));
        spec.disjoint_from.push_back(curve_name("q", t));
        if (j >= 1) spec.disjoint_from.push_back(curve_name2("d", 1, 2));
        // Interval circle leaving out the last j boundary holes.
        if (valid_b(t + 1, g + n - j)) spec.disjoint_from.push_back(b_name(t + 1, g + n - j));
        for (int x = t + 1; x + 2 <= g + n - j; ++x)
          if (valid_b(x, x + 2)) spec.disjoint_from.push_back(b_name(x, x + 2));
        if (j >= 2)
          for (int x = g + n - j; x + 2 <= g + n; ++x)
            if (valid_b(x, x + 2)) spec.disjoint_from.push_back(b_name(x, x + 2));
        for (int a = t + 2; a <= g; ++a) spec.disjoint_from.push_back(curve_name("a", a));
        spec.not_isotopic_to = spec.disjoint_from;
        spec.sided = Sidedness::TwoSided;
        spec.complement_piece = std::make_tuple(true, i, j + 1);
        spec.max_len = 2 * t + 2 * j + 4;
        for (int c = 1; c <= std::min(t + 1, g); ++c) spec.support_sides.push_back(s_side(c));
        for (int e = 1; e <= t + 1; ++e) spec.support_sides.push_back(e_side(e));
        for (int x = std::max(1, g + n - j - 1); x <= g + n; ++x) spec.support_sides.push_back(e_side(x));
        dedupe(spec.support_sides);
        add_synth(spec, "C6");
      }
    }
  }

  void build_special30() {
    add_direct("a_1", {{0, Frac(1, 2)}, {1, Frac(1, 2)}}, "special");
    add_direct("a_2", {{2, Frac(1, 2)}, {3, Frac(1, 2)}}, "special");
    add_direct("a_3", {{4, Frac(1, 2)}, {5, Frac(1, 2)}}, "special");

    auto one_sided_disjoint = [&](const std::string& name, std::vector<std::string> dis,
                                  std::vector<std::string> noniso) {
      CurveSpec spec;
      spec.name = name;
      spec.sided = Sidedness::OneSided;
      spec.disjoint_from = std::move(dis);
      spec.not_isotopic_to = std::move(noniso);
      spec.max_len = 6;
      add_synth(spec, "special");
    };
    auto two_sided_disjoint = [&](const std::string& name, std::vector<std::string> dis) {
      CurveSpec spec;
      spec.name = name;
      spec.sided = Sidedness::TwoSided;
      spec.disjoint_from = std::move(dis);
      spec.max_len = 6;
      add_synth(spec, "special");
    };

    one_sided_disjoint("a_{1,2}", {"a_2", "a_3"}, {"a_1", "a_2", "a_3"});
    one_sided_disjoint("a_{2,3}", {"a_3", "a_1"}, {"a_1", "a_2", "a_3"});
    one_sided_disjoint("a_{3,1}", {"a_1", "a_2"}, {"a_1", "a_2", "a_3"});
    two_sided_disjoint("c_1", {"a_3"});
    two_sided_disjoint("c_2", {"a_1"});
    two_sided_disjoint("w", {"a_2"});
    two_sided_disjoint("j", {"a_{2,3}"});
    one_sided_disjoint("l", {"c_1", "c_2"}, {});
  }

  void build_tiny() {
    if (g == 1 && n <= 1) {
      add_direct("a", {{0, Frac(1, 2)}, {1, Frac(1, 2)}}, "tiny");
      return;
    }
    if (g == 1 && n == 2) {
      add_direct("a", {{0, Frac(1, 2)}, {1, Frac(1, 2)}}, "tiny");
      add_direct("b", {{0, Frac(1, 2)}, {3, Frac(1, 2)}}, "tiny");
      return;
    }
    if (g == 2 && n == 0) {
      add_direct("a", {{0, Frac(1, 2)}, {2, Frac(1, 2)}}, "tiny");
      add_direct("b", {{0, Frac(1, 2)}, {1, Frac(1, 2)}}, "tiny");
      add_direct("c", {{2, Frac(1, 2)}, {3, Frac(1, 2)}}, "tiny");
      return;
    }
    if (g == 2 && n == 1) {
      add_direct("a", {{0, Frac(1, 2)}, {2, Frac(1, 2)}}, "tiny");
      add_direct("b", {{0, Frac(1, 2)}, {1, Frac(1, 2)}}, "tiny");
      return;
    }
    throw Error(ErrorKind::InvalidInput, "no tiny catalog for this surface");
  }
};

}  // namespace

CurveCatalog build_catalog(const SurfaceSchema& schema, const CatalogOptions& opts) {
  CurveCatalog cat;
  cat.schema = schema;
  cat.status = classify_surface(schema);
  Builder b(schema, cat);
  b.strict = opts.strict;

  switch (cat.status.regime) {
    case Regime::Tiny:
      b.build_tiny();
      break;
    case Regime::Special:
      b.build_special30();
      break;
    case Regime::Main:
      b.build_X1();
      b.build_X2(opts.xij_cyclic);
      b.build_c();
      b.build_C2();
      b.build_C3_rest();
      b.build_C4();
      b.build_C5();
      b.build_C6();
      break;
    case Regime::Excluded:
      // Modeled but flagged: the structural families only.
      if (schema.genus == 1 && schema.boundary_count == 2) {
        b.build_tiny();
      } else {
        b.build_X1();
        b.build_X2(opts.xij_cyclic);
        if (schema.genus >= 2) b.build_c();
      }
      break;
  }
  return cat;
}

}  // namespace crosscap
