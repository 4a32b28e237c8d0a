#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "trisect/models.hpp"
#include "trisect/surgery.hpp"

using namespace trisect;

namespace {

template <class F>
Err err_kind_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected a trisect::Error");
}

std::set<std::set<Dart>> edge_set(const CombinatorialMap& m, const CurveRef& c) {
  std::set<std::set<Dart>> out;
  for (Dart d : c.darts) out.insert({d, m.opp(d)});
  return out;
}

}  // namespace

TEST_CASE("lens_two_one is a genus-one diagram with two crossings") {
  auto m = lens_two_one();
  REQUIRE(m.classify().only() == ComponentSummary{1, 0, 0});
  REQUIRE(m.vertex_count() == 2);
  REQUIRE_NOTHROW(require_embedded_curve(m, lens_alpha()));
  REQUIRE_NOTHROW(require_embedded_curve(m, lens_beta()));

  SECTION("the curves share both vertices and no edges") {
    auto ea = edge_set(m, lens_alpha()), eb = edge_set(m, lens_beta());
    std::set<std::set<Dart>> common;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                          std::inserter(common, common.begin()));
    REQUIRE(common.empty());
  }
  SECTION("either curve cuts the torus open") {
    Surgery s = cut_along(m, lens_alpha());
    REQUIRE(s.map.classify().only() == ComponentSummary{0, 2, 0});
  }
  SECTION("the flip reverses orientation and swaps the curves") {
    auto f = lens_flip();
    for (Dart d = 0; d < m.dart_count(); ++d) {
      REQUIRE(f[f[d]] == d);
      REQUIRE(f[m.opp(d)] == m.opp(f[d]));
      REQUIRE(f[m.nxt(d)] == m.prv(f[d]));
    }
    CurveRef image;
    for (Dart d : lens_alpha().darts) image.darts.push_back(f[d]);
    REQUIRE(edge_set(m, image) == edge_set(m, lens_beta()));
  }
}

TEST_CASE("planar_grid builds disks with square holes") {
  SECTION("a plain block is a disk") {
    auto m = planar_grid(3, 2);
    REQUIRE(m.classify().only() == ComponentSummary{0, 1, 1});
    REQUIRE(m.hole_count() == 1);
    // Outer wall length is the perimeter.
    REQUIRE(m.face_cycle(m.face_of(grid_east(3, 0, 0))).size() == 10);
  }
  SECTION("hole squares puncture it") {
    auto m = planar_grid(5, 3, {{1, 1}, {3, 1}});
    REQUIRE(m.classify().only() == ComponentSummary{0, 3, -1});
    REQUIRE(m.face_cycle(m.face_of(grid_square(5, 1, 1))).size() == 4);
  }
  SECTION("gluing two hole squares gives a handle") {
    auto m = planar_grid(7, 5, {{1, 2}, {5, 2}});
    Surgery s = glue_boundary_circles(m, grid_square(7, 1, 2), grid_square(7, 5, 2));
    REQUIRE(s.map.classify().only() == ComponentSummary{1, 1, -1});

    // The tube pairs each corner with its horizontal mirror: the northwest
    // corner of the first square lands on the northeast corner of the second.
    auto same_vertex = [&](Dart a, Dart b) {
      auto cyc = s.map.vertex_cycle(a);
      return std::find(cyc.begin(), cyc.end(), b) != cyc.end();
    };
    Dart nw_up = s.carry[grid_north(7, 5, 1, 3)][0];
    Dart ne_up = s.carry[grid_north(7, 5, 6, 3)][0];
    REQUIRE(same_vertex(nw_up, ne_up));
    Dart sw_dn = s.carry[grid_south(7, 5, 1, 2)][0];
    Dart se_dn = s.carry[grid_south(7, 5, 6, 2)][0];
    REQUIRE(same_vertex(sw_dn, se_dn));
    REQUIRE_FALSE(same_vertex(nw_up, sw_dn));
  }
  SECTION("degenerate sizes are rejected") {
    REQUIRE(err_kind_of([] { planar_grid(0, 3); }) == Err::BadParameters);
  }
}
