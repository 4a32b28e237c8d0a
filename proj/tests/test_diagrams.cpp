#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "trisect/diagrams.hpp"
#include "trisect/fibers.hpp"
#include "trisect/models.hpp"

using namespace trisect;

namespace {

// Rectangle boundary walk on the square torus, counterclockwise from (x0,y0).
CurveRef torus_ring(int n, int x0, int y0, int x1, int y1) {
  CurveRef c;
  for (int x = x0; x < x1; ++x) c.darts.push_back(torus_dart(n, x, y0, 0));
  for (int y = y0; y < y1; ++y) c.darts.push_back(torus_dart(n, x1, y, 1));
  for (int x = x1; x > x0; --x) c.darts.push_back(torus_dart(n, x, y1, 2));
  for (int y = y1; y > y0; --y) c.darts.push_back(torus_dart(n, x0, y, 3));
  return c;
}

// The face covering [x,x+1] x [y,y+1].
Dart torus_cell(int n, int x, int y) { return torus_face(n, x, y + 1); }

// Components as a multiset of (genus, boundary_count), for comparing
// summaries across different maps.
std::vector<std::pair<int, int>> shape(const SurfaceSummary& s) {
  std::vector<std::pair<int, int>> out;
  for (const ComponentSummary& c : s.components) out.emplace_back(c.genus, c.boundary_count);
  std::sort(out.begin(), out.end());
  return out;
}

CurveFamily fam(std::vector<CurveRef> curves, Color color = Color::alpha) {
  return {color, std::move(curves)};
}

Err kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return Err::MalformedMap;
}

}  // namespace

TEST_CASE("validate_cut_system separates honest systems from trivia") {
  SECTION("meridian on the punctured torus compresses to a disk") {
    CombinatorialMap m = grid_torus(3, {torus_cell(3, 1, 1)});
    ValidationReport rep = validate_cut_system(m, fam({torus_col(3, 0)}));
    REQUIRE(rep.valid);
    REQUIRE(rep.systems[0].disjoint);
    REQUIRE(rep.systems[0].nontrivial == std::vector<char>{1});
    REQUIRE(shape(rep.systems[0].compressed) == std::vector<std::pair<int, int>>{{0, 1}});
    REQUIRE(rep.systems[0].compressed.closed_component_count == 0);
  }

  SECTION("a boundary-parallel curve alone closes off the torus") {
    CombinatorialMap m = grid_torus(5, {torus_cell(5, 1, 1)});
    ValidationReport rep = validate_cut_system(m, fam({torus_ring(5, 0, 0, 3, 3)}));
    REQUIRE_FALSE(rep.valid);
    REQUIRE(rep.systems[0].nontrivial == std::vector<char>{1});  // an annulus, not a disk
    REQUIRE(rep.systems[0].compressed.closed_component_count == 1);
    REQUIRE(shape(rep.systems[0].compressed) == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  }

  SECTION("meridian plus boundary-parallel curve is fine with two walls") {
    CombinatorialMap m = grid_torus(7, {torus_cell(7, 1, 1), torus_cell(7, 5, 5)});
    ValidationReport rep =
        validate_cut_system(m, fam({torus_col(7, 4), torus_ring(7, 0, 0, 3, 3)}));
    REQUIRE(rep.valid);
    REQUIRE(rep.systems[0].nontrivial == std::vector<char>{1, 1});
    REQUIRE(shape(rep.systems[0].compressed) ==
            std::vector<std::pair<int, int>>{{0, 1}, {0, 1}});
  }

  SECTION("crossing curves fail disjointness") {
    CombinatorialMap m = grid_torus(3, {torus_cell(3, 1, 1)});
    ValidationReport rep = validate_cut_system(m, fam({torus_col(3, 0), torus_row(3, 0)}));
    REQUIRE_FALSE(rep.valid);
    REQUIRE_FALSE(rep.systems[0].disjoint);
    REQUIRE_FALSE(rep.problems.empty());
  }

  SECTION("a disk-bounding curve is flagged trivial") {
    CombinatorialMap m = grid_torus(5, {torus_cell(5, 3, 3)});
    ValidationReport rep = validate_cut_system(m, fam({torus_ring(5, 0, 0, 2, 2)}));
    REQUIRE_FALSE(rep.valid);
    REQUIRE(rep.systems[0].nontrivial == std::vector<char>{0});
  }
}

TEST_CASE("validate_sutured accepts the punctured lens diagram") {
  CombinatorialMap m = puncture_face(lens_two_one(), 0).map;
  SuturedHeegaardDiagram d{m, fam({lens_alpha()}, Color::alpha), fam({lens_beta()}, Color::beta)};
  ValidationReport rep = validate_sutured(d);
  REQUIRE(rep.valid);
  REQUIRE(rep.systems.size() == 2);
  for (const CutSystemReport& sys : rep.systems)
    REQUIRE(shape(sys.compressed) == std::vector<std::pair<int, int>>{{0, 1}});

  SECTION("the closed lens diagram is rejected for lack of boundary") {
    SuturedHeegaardDiagram closed{lens_two_one(), d.alpha, d.beta};
    REQUIRE_FALSE(validate_sutured(closed).valid);
  }
}

TEST_CASE("crossing helpers count transverse meetings only") {
  CombinatorialMap lens = lens_two_one();
  REQUIRE(crossing_count(lens, lens_alpha(), lens_beta()) == 2);
  REQUIRE(common_vertices(lens, lens_alpha(), lens_beta()).size() == 2);

  CombinatorialMap m = grid_torus(5);
  CurveRef col = torus_col(5, 0);
  REQUIRE(crossing_count(m, col, torus_row(5, 2)) == 1);
  // A ring sharing two edges with the column: meetings, but no crossings.
  CurveRef ring = torus_ring(5, 0, 1, 2, 3);
  REQUIRE(common_vertices(m, col, ring).size() == 3);
  REQUIRE(crossing_count(m, col, ring) == 0);
}

TEST_CASE("handleslide forms the band sum and keeps the compression") {
  SECTION("sliding a curve over a parallel copy on the annulus") {
    CombinatorialMap m = planar_grid(7, 7, {{3, 3}});
    auto ring = [&](int lo, int hi) {
      return CurveRef{grid_walk(7, 7, {{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}, {lo, lo}})};
    };
    CurveFamily family = fam({ring(2, 5), ring(1, 6)});
    std::vector<std::pair<int, int>> before =
        shape(compress_along(m, family.curves).map.classify());

    SlideResult out = handleslide(m, family, 0, 1, ArcRef{{grid_south(7, 7, 4, 2)}});
    REQUIRE(out.family.curves.size() == 2);
    for (const CurveRef& c : out.family.curves) require_embedded_curve(out.surface, c);
    REQUIRE(validate_cut_system(out.surface, out.family).systems[0].disjoint);
    REQUIRE(shape(compress_along(out.surface, out.family.curves).map.classify()) == before);

    // Parallel copies band-sum to a trivial curve here: the slide is legal
    // even though the family was never a valid cut system.
    ValidationReport rep = validate_cut_system(out.surface, out.family);
    REQUIRE(rep.systems[0].nontrivial == std::vector<char>{0, 1});
  }

  SECTION("sliding one handle ring over another on a genus-2 fiber") {
    StandardFiber sf = standard_fiber(2, 1);
    const CombinatorialMap& m = sf.fiber.map;
    CurveFamily family = fam(sf.fiber.alpha);
    REQUIRE(validate_cut_system(m, family).valid);
    std::vector<std::pair<int, int>> before =
        shape(compress_along(m, family.curves).map.classify());

    ArcRef band{chart_walk(sf, grid_walk(sf.w, sf.h, {{5, 3}, {14, 3}}))};
    SlideResult out = handleslide(m, family, 0, 1, band);
    REQUIRE(out.family.curves.size() == 2);
    ValidationReport rep = validate_cut_system(out.surface, out.family);
    REQUIRE(rep.valid);
    REQUIRE(shape(rep.systems[0].compressed) == before);
  }

  SECTION("bad bands are refused") {
    CombinatorialMap m = planar_grid(13, 7, {{4, 3}});
    auto ring = [&](int i) {
      int x = 4 * i + 1;
      return CurveRef{
          grid_walk(13, 7, {{x, 2}, {x + 2, 2}, {x + 2, 4}, {x, 4}, {x, 2}})};
    };
    CurveFamily family = fam({ring(0), ring(1), ring(2)});
    ArcRef long_band{grid_walk(13, 7, {{3, 3}, {9, 3}})};

    REQUIRE(kind_of([&] { handleslide(m, family, 0, 0, long_band); }) ==
            Err::NotConnectingBand);
    REQUIRE(kind_of([&] { handleslide(m, family, 0, 1, long_band); }) ==
            Err::NotConnectingBand);  // ends on ring 2, not ring 1
    CurveFamily two = fam({ring(0), ring(2)});
    REQUIRE(kind_of([&] { handleslide(m, two, 0, 1, long_band); }) == Err::TouchesBoundary);

    CurveFamily far = fam({ring(0), ring(1), ring(2)});
    ArcRef through{grid_walk(13, 7, {{3, 2}, {9, 2}})};
    REQUIRE(kind_of([&] { handleslide(m, far, 0, 2, through); }) == Err::BandObstructed);
  }
}

TEST_CASE("is_standard_position recognizes duals, parallels, and pages") {
  SECTION("meridian and longitude give a disk page") {
    CombinatorialMap m = grid_torus(5, {torus_cell(5, 2, 2)});
    SuturedHeegaardDiagram d{m, fam({torus_col(5, 0)}), fam({torus_row(5, 0)}, Color::beta)};
    StandardnessReport rep = is_standard_position(d);
    REQUIRE(rep.standard);
    REQUIRE(rep.dual_pairs == std::vector<std::pair<int, int>>{{0, 0}});
    REQUIRE(rep.parallel_pairs.empty());
    REQUIRE(page_of(d) == std::pair<int, int>{0, 1});
  }

  SECTION("two disjoint meridians give a parallel pair") {
    CombinatorialMap m = grid_torus(7, {torus_cell(7, 0, 0)});
    SuturedHeegaardDiagram d{m, fam({torus_col(7, 3)}), fam({torus_col(7, 5)}, Color::beta)};
    StandardnessReport rep = is_standard_position(d);
    REQUIRE(rep.standard);
    REQUIRE(rep.parallel_pairs == std::vector<std::pair<int, int>>{{0, 0}});
    REQUIRE_FALSE(rep.ambiguous);
    REQUIRE(page_of(d) == std::pair<int, int>{0, 1});
  }

  SECTION("boundary-parallel curves ride along without consuming genus") {
    CombinatorialMap m = grid_torus(9, {torus_cell(9, 2, 2), torus_cell(9, 6, 6)});
    SuturedHeegaardDiagram d{m, fam({torus_col(9, 8), torus_ring(9, 1, 1, 4, 4)}),
                             fam({torus_row(9, 8), torus_ring(9, 0, 0, 5, 5)}, Color::beta)};
    StandardnessReport rep = is_standard_position(d);
    REQUIRE(rep.standard);
    REQUIRE(rep.dual_pairs == std::vector<std::pair<int, int>>{{0, 0}});
    REQUIRE(rep.parallel_pairs.empty());
    REQUIRE(rep.boundary_parallel_alpha == std::vector<int>{1});
    REQUIRE(rep.boundary_parallel_beta == std::vector<int>{1});
    REQUIRE(page_of(d) == std::pair<int, int>{0, 2});

    SECTION("dropping one leaves the families unbalanced") {
      SuturedHeegaardDiagram odd{m, d.alpha, fam({torus_row(9, 8)}, Color::beta)};
      StandardnessReport bad = is_standard_position(odd);
      REQUIRE_FALSE(bad.standard);
      REQUIRE_FALSE(bad.reason.empty());
    }
  }

  SECTION("three summand kinds combine over an F_{2,1} page") {
    StandardFiber sf = standard_fiber(7, 1);
    auto loop = [&](int i) {
      int p = 3 + 12 * i;
      return CurveRef{chart_walk(
          sf, grid_walk(sf.w, sf.h, {{p, 4}, {p, 6}, {p + 7, 6}, {p + 7, 4}}))};
    };
    CurveFamily alpha = fam({sf.fiber.alpha[0], sf.fiber.alpha[1], sf.fiber.alpha[2],
                             sf.fiber.alpha[3], sf.fiber.alpha[4]});
    CurveFamily beta = fam({loop(0), loop(1), loop(2), sf.fiber.beta[3], sf.fiber.beta[4]},
                           Color::beta);
    SuturedHeegaardDiagram d{sf.fiber.map, alpha, beta};
    REQUIRE(validate_sutured(d).valid);

    StandardnessReport rep = is_standard_position(d);
    REQUIRE(rep.standard);
    REQUIRE(rep.dual_pairs.size() == 3);
    REQUIRE(rep.parallel_pairs.size() == 2);
    REQUIRE(rep.page_genus == 2);
    REQUIRE(rep.page_boundary == 1);
  }

  SECTION("curves meeting twice are not recognized") {
    CombinatorialMap m = puncture_face(lens_two_one(), 0).map;
    SuturedHeegaardDiagram d{m, fam({lens_alpha()}), fam({lens_beta()}, Color::beta)};
    StandardnessReport rep = is_standard_position(d);
    REQUIRE_FALSE(rep.standard);
    REQUIRE_FALSE(rep.reason.empty());
    REQUIRE(kind_of([&] { page_of(d); }) == Err::NotInStandardPosition);
  }

  SECTION("closed pairs have no page") {
    SuturedHeegaardDiagram d{grid_torus(3), fam({torus_col(3, 0)}),
                             fam({torus_row(3, 0)}, Color::beta)};
    REQUIRE(kind_of([&] { page_of(d); }) == Err::NotInStandardPosition);
  }
}

TEST_CASE("relative and closed diagram wrappers aggregate the pair checks") {
  SECTION("a tiny relative diagram with a consistent page") {
    CombinatorialMap m = grid_torus(5, {torus_cell(5, 2, 2)});
    RelativeTrisectionDiagram d{m,
                                fam({torus_col(5, 0)}, Color::alpha),
                                fam({torus_row(5, 0)}, Color::beta),
                                fam({torus_row(5, 1)}, Color::gamma),
                                {{0, 1}}};
    ValidationReport rep = validate_relative(d);
    REQUIRE(rep.valid);
    REQUIRE(rep.systems.size() == 6);

    SECTION("a wrong expected page is flagged") {
      d.expected_page = {{1, 1}};
      REQUIRE_FALSE(validate_relative(d).valid);
    }
  }

  SECTION("closed trisection diagram of the 4-sphere, genus one") {
    TrisectionDiagram d{grid_torus(3), fam({torus_col(3, 0)}, Color::alpha),
                        fam({torus_row(3, 0)}, Color::beta), fam({torus_row(3, 1)}, Color::gamma)};
    ValidationReport rep = validate_trisection(d);
    REQUIRE(rep.valid);
    for (const CutSystemReport& sys : rep.systems)
      REQUIRE(shape(sys.compressed) == std::vector<std::pair<int, int>>{{0, 0}});

    SECTION("family sizes must match the genus") {
      d.gamma.curves.clear();
      REQUIRE_FALSE(validate_trisection(d).valid);
    }
  }
}
