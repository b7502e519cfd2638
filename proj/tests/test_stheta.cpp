#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "hexarep/gmodels.hpp"
#include "hexarep/stheta.hpp"

using namespace hexarep;
using fixtures::duad;
using fixtures::spread;
using fixtures::stheta_geometry;
using fixtures::triple;
using triples::Z3;

TEST_CASE("point and line censuses") {
  const auto& g = stheta_geometry();
  CHECK(g.space.point_count() == 243);
  CHECK(g.space.line_count() == 729);  // 243*9/3
  std::map<std::string, int> census;
  for (const auto& t : g.space.line_tags()) census[t] += 1;
  CHECK(census["L1"] == 45);
  CHECK(census["L2"] == 45);
  CHECK(census["L3"] == 45);
  CHECK(census["L4"] == 27);
  CHECK(census["L5"] == 81);
  CHECK(census["L6"] == 81);
  CHECK(census["L7"] == 81);
  CHECK(census["L8"] == 108);
  CHECK(census["L9"] == 216);
}

TEST_CASE("partial linearity holds, exercising the L9 family") {
  const auto& g = stheta_geometry();
  CHECK(fgeom::verify_partial_linear(g.space).all_passed());
  std::vector<int> l9;
  for (int l = 0; l < g.space.line_count(); ++l)
    if (g.space.line_tags()[(size_t)l] == "L9") l9.push_back(l);
  REQUIRE(l9.size() == 216);
  for (size_t a = 0; a < l9.size(); ++a)
    for (size_t b = a + 1; b < l9.size(); ++b) {
      int common = 0;
      for (int p : g.space.line(l9[a]))
        for (int q : g.space.line(l9[b]))
          if (p == q) ++common;
      CHECK(common <= 1);
    }
}

TEST_CASE("L8 lines use all three labels") {
  const auto& g = stheta_geometry();
  for (int l = 0; l < g.space.line_count(); ++l) {
    if (g.space.line_tags()[(size_t)l] != "L8") continue;
    std::set<int> labels;
    for (int p : g.space.line(l))
      labels.insert(static_cast<int>(g.p4_labels[(size_t)(p - 81)].i));
    CHECK(labels == std::set<int>{0, 1, 2});
  }
}

TEST_CASE("per-point line-type profiles") {
  const auto& g = stheta_geometry();
  auto profile = [&](int p) {
    std::map<std::string, int> out;
    for (int l : g.space.lines_through(p)) out[g.space.line_tags()[(size_t)l]] += 1;
    return out;
  };
  for (int p = 0; p < 27; ++p) {
    const auto pr = profile(p);
    CHECK(pr.at("L1") == 5);
    CHECK(pr.at("L4") == 1);
    CHECK(pr.at("L5") == 3);
    CHECK(g.space.lines_through(p).size() == 9);
  }
  for (int p = 81; p < 243; ++p) {
    const auto pr = profile(p);
    CHECK(pr.at("L5") == 1);
    CHECK(pr.at("L6") == 1);
    CHECK(pr.at("L7") == 1);
    CHECK(pr.at("L8") == 2);
    CHECK(pr.at("L9") == 4);
  }
}

TEST_CASE("convex closures span quads or the whole space") {
  const auto& s = stheta_geometry().space;
  int d2 = -1, d3 = -1;
  for (int q = 1; q < s.point_count(); ++q) {
    if (s.distance_u8(0, q) == 2 && d2 < 0) d2 = q;
    if (s.distance_u8(0, q) == 3 && d3 < 0) d3 = q;
  }
  REQUIRE(d2 >= 0);
  REQUIRE(d3 >= 0);
  const auto quad = fgeom::convex_closure(s, std::array<int, 2>{0, d2});
  CHECK((quad.size() == 9 || quad.size() == 27));
  const auto all = fgeom::convex_closure(s, std::array<int, 2>{0, d3});
  CHECK(all.size() == 243);
}

TEST_CASE("the Y subgeometry is the product hexagon") {
  const auto& g = stheta_geometry();
  std::vector<int> ypts(81);
  for (int p = 0; p < 81; ++p) ypts[(size_t)p] = p;
  const auto ysub = fgeom::induced_subgeometry(g.space, ypts, "Y");
  CHECK(ysub.space.line_count() == 162);
  CHECK(gmodels::find_isomorphism(ysub.space, fixtures::product()).has_value());
}

TEST_CASE("full hexagon structure verification") {
  const auto st = stheta::verify_hexagon_structure(stheta_geometry());
  CHECK(st.report.all_passed());
  CHECK(st.t1.size() == 9);
  CHECK(st.t2.size() == 9);
  CHECK(st.s_tensor.size() == 81);
  CHECK(st.big_quad_count == 18);
  CHECK(st.grid_quad_count == 432);
}

TEST_CASE("equivalences induce isomorphisms of the built geometries") {
  SUBCASE("identity equivalence gives the identity map") {
    triples::TripleEquivalence eq;
    for (int p = 0; p < 9; ++p) eq.alpha[(size_t)p] = p;
    eq.beta = 1;
    eq.f.fill(0);
    const auto img =
        stheta::iso_from_equivalence(stheta_geometry(), stheta_geometry(), eq);
    for (int p = 0; p < 243; ++p) CHECK(img[(size_t)p] == p);
  }
  SUBCASE("an f-shift gives a non-identity line-preserving bijection") {
    const std::array<Z3, 9> f0{0, 1, 2, 2, 0, 1, 1, 2, 0};
    auto shifted = triple();
    for (int x = 0; x < 9; ++x)
      for (int y = 0; y < 9; ++y)
        shifted.table[(size_t)x][(size_t)y] = triples::z3_sub(
            triples::z3_add(f0[(size_t)x], triple().theta(x, y)),
            f0[(size_t)y]);
    const auto g2 = stheta::build_stheta(duad(), spread(), shifted);
    const auto eq = triples::equivalence_search(triple(), shifted);
    REQUIRE(eq.has_value());
    const auto img = stheta::iso_from_equivalence(stheta_geometry(), g2, *eq);
    bool moved = false;
    for (int p = 0; p < 243; ++p)
      if (img[(size_t)p] != p) moved = true;
    CHECK(moved);  // line preservation is asserted inside the builder
    std::set<int> targets(img.begin(), img.end());
    CHECK(targets.size() == 243);
  }
  SUBCASE("an invalid equivalence faults") {
    triples::TripleEquivalence eq;
    for (int p = 0; p < 9; ++p) eq.alpha[(size_t)p] = p;
    eq.beta = 1;
    eq.f.fill(0);
    eq.f[4] = 1;  // breaks the defining identity
    CHECK_THROWS_AS(
        stheta::iso_from_equivalence(stheta_geometry(), stheta_geometry(), eq),
        Fault);
  }
}
