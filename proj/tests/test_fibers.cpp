#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "trisect/fibers.hpp"

using namespace trisect;

namespace {

std::set<Dart> walk_vertices(const CombinatorialMap& m, const std::vector<Dart>& darts) {
  std::set<Dart> out;
  for (Dart d : darts) {
    out.insert(m.vertex_of(d));
    out.insert(m.head_vertex(d));
  }
  return out;
}

std::set<Dart> walk_edges(const CombinatorialMap& m, const std::vector<Dart>& darts) {
  std::set<Dart> out;
  for (Dart d : darts) out.insert(m.edge_rep(d));
  return out;
}

bool disjoint(const std::set<Dart>& a, const std::set<Dart>& b) {
  for (Dart d : a)
    if (b.count(d)) return false;
  return true;
}

bool vertex_on_wall(const CombinatorialMap& m, Dart v, Dart wall) {
  for (Dart d : m.vertex_cycle(v))
    if (m.face_of(d) == wall || m.face_of(m.opp(d)) == wall) return true;
  return false;
}

// Cuts along every arc in order and reports the result.
ComponentSummary cut_to_pieces(const FiberPresentation& f, const std::vector<ArcRef>& arcs) {
  CombinatorialMap m = f.map;
  std::vector<std::vector<Dart>> carry = identity_carry(m.dart_count());
  for (const ArcRef& a : arcs) {
    Surgery s = cut_along_arc(m, ArcRef{carry_walk(carry, a.darts)});
    carry = compose_carry(s.carry, carry);
    m = std::move(s.map);
  }
  SurfaceSummary sum = m.classify();
  REQUIRE(sum.connected());
  return sum.only();
}

}  // namespace

TEST_CASE("standard_fiber builds the requested surface") {
  for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {0, 3}, {2, 2}, {3, 4}}) {
    CAPTURE(g, b);
    StandardFiber sf = standard_fiber(g, b);
    const FiberPresentation& f = sf.fiber;
    SurfaceSummary sum = f.map.classify();
    REQUIRE(sum.connected());
    CHECK(sum.only().genus == g);
    CHECK(sum.only().boundary_count == b);
    CHECK(f.map.hole_count() == b);
    REQUIRE(static_cast<int>(f.wall.size()) == b);
    CHECK(static_cast<int>(f.alpha.size()) == g);
    CHECK(static_cast<int>(f.arcs_l.size()) == 2 * g + b - 1);
    CHECK(static_cast<int>(f.arcs_r.size()) == 2 * g + b - 1);
  }
  CHECK_THROWS_AS(standard_fiber(-1, 1), Error);
  CHECK_THROWS_AS(standard_fiber(0, 0), Error);
}

TEST_CASE("standard_fiber splitting families compress the handles away") {
  StandardFiber sf = standard_fiber(3, 2);
  const FiberPresentation& f = sf.fiber;
  for (const auto& fam : {f.alpha, f.beta}) {
    Surgery s = compress_along(f.map, fam);
    SurfaceSummary sum = s.map.classify();
    REQUIRE(sum.connected());
    CHECK(sum.only().genus == 0);
    CHECK(sum.only().boundary_count == 2);
  }
  std::set<Dart> ea = walk_edges(f.map, f.alpha[0].darts);
  std::set<Dart> eb = walk_edges(f.map, f.beta[0].darts);
  CHECK(disjoint(ea, eb));
}

TEST_CASE("standard_fiber arc bases are embedded, parallel, and cut to a disk") {
  for (auto [g, b] : std::vector<std::pair<int, int>>{{1, 1}, {0, 3}, {2, 2}}) {
    CAPTURE(g, b);
    StandardFiber sf = standard_fiber(g, b);
    const FiberPresentation& f = sf.fiber;

    for (const auto* arcs : {&f.arcs_l, &f.arcs_r}) {
      for (const ArcRef& a : *arcs) require_embedded_arc(f.map, a);
      for (size_t i = 0; i < arcs->size(); ++i)
        for (size_t j = i + 1; j < arcs->size(); ++j)
          CHECK(disjoint(walk_vertices(f.map, (*arcs)[i].darts),
                         walk_vertices(f.map, (*arcs)[j].darts)));
      // Arcs may cross the splitting curves at vertices but never ride them.
      for (const ArcRef& a : *arcs)
        for (const auto& fam : {f.alpha, f.beta})
          for (const CurveRef& c : fam)
            CHECK(disjoint(walk_edges(f.map, a.darts), walk_edges(f.map, c.darts)));
      CHECK(cut_to_pieces(f, *arcs).genus == 0);
      CHECK(cut_to_pieces(f, *arcs).boundary_count == 1);
    }
    // The two copies of the basis never share an edge.
    std::set<Dart> el, er;
    for (const ArcRef& a : f.arcs_l) {
      auto e = walk_edges(f.map, a.darts);
      el.insert(e.begin(), e.end());
    }
    for (const ArcRef& a : f.arcs_r) {
      auto e = walk_edges(f.map, a.darts);
      er.insert(e.begin(), e.end());
    }
    CHECK(disjoint(el, er));

    // Endpoint discipline: everything starts on wall[0]; through arcs return
    // to it and connectors land on their own wall.
    for (size_t i = 0; i < f.arcs_l.size(); ++i) {
      for (const auto* arcs : {&f.arcs_l, &f.arcs_r}) {
        const ArcRef& a = (*arcs)[i];
        CHECK(vertex_on_wall(f.map, f.map.vertex_of(a.darts.front()), f.wall[0]));
        Dart endw = i < 2 * static_cast<size_t>(g) ? f.wall[0] : f.wall[i - 2 * g + 1];
        CHECK(vertex_on_wall(f.map, f.map.head_vertex(a.darts.back()), endw));
      }
    }
  }
}

TEST_CASE("standard_fiber symmetries survive the decoration") {
  StandardFiber sf = standard_fiber(2, 3);
  REQUIRE(sf.symmetries.size() == 2);
  CHECK(sf.symmetries[0].chi == Chirality::Preserving);
  CHECK(sf.symmetries[1].chi == Chirality::Reversing);
  for (int j = 0; j < 3; ++j)
    CHECK(image_face(sf.fiber.map, sf.symmetries[1], sf.fiber.wall[j]) == sf.fiber.wall[j]);

  StandardFiber flat = standard_fiber(0, 3);
  REQUIRE(flat.symmetries.size() == 4);
  const MapIsomorphism& xf = flat.symmetries[2];
  CHECK(xf.chi == Chirality::Reversing);
  CHECK(image_face(flat.fiber.map, xf, flat.fiber.wall[0]) == flat.fiber.wall[0]);
  CHECK(image_face(flat.fiber.map, xf, flat.fiber.wall[1]) == flat.fiber.wall[2]);
  CHECK(image_face(flat.fiber.map, xf, flat.fiber.wall[2]) == flat.fiber.wall[1]);
  CHECK(flat.symmetries[3].chi == Chirality::Preserving);
}

TEST_CASE("symmetric_fiber realizes dihedral wall actions") {
  for (auto [b, t] : std::vector<std::pair<int, int>>{{1, 0}, {3, 0}, {2, 1}, {4, 1}, {2, 2}}) {
    CAPTURE(b, t);
    SymmetricFiber sym = symmetric_fiber(b, t);
    SurfaceSummary sum = sym.map.classify();
    REQUIRE(sum.connected());
    CHECK(sum.only().genus == t * b);
    CHECK(sum.only().boundary_count == b);
    CHECK(sym.genus == t * b);
    // All rotations and reflections descend.
    REQUIRE(static_cast<int>(sym.symmetries.size()) == 2 * b);
    for (int s = 0; s < b; ++s) CHECK(sym.symmetries[s].chi == Chirality::Preserving);
    for (int s = b; s < 2 * b; ++s) CHECK(sym.symmetries[s].chi == Chirality::Reversing);
  }

  SymmetricFiber sym = symmetric_fiber(4, 1);
  auto orbit_count = [&](const MapIsomorphism& f) {
    auto orbits = boundary_orbits(sym.map, f, {}, {});
    int total = 0;
    for (const auto& o : orbits) total += o.phi_orbits;
    return total;
  };
  CHECK(orbit_count(sym.symmetries[0]) == 4);
  CHECK(orbit_count(sym.symmetries[1]) == 1);
  CHECK(orbit_count(sym.symmetries[2]) == 2);
  int refl = orbit_count(sym.symmetries[4]);
  CHECK((refl == 2 || refl == 3));
}
