#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trisect/models.hpp"
#include "trisect/monodromy.hpp"
#include "trisect/surgery.hpp"

namespace trisect {

// A splitting surface packaged for bundle building.  wall lists the boundary
// faces in a fixed order with wall[0] distinguished; alpha and beta are the
// splitting families; arcs_l and arcs_r are two disjoint parallel copies of
// an arc basis cutting the surface to a disk, ordered as 2g through arcs in
// slot order (a then its waist partner) followed by b-1 connectors running
// from wall[0] to each other wall.
struct FiberPresentation {
  CombinatorialMap map;
  std::vector<Dart> wall;
  std::vector<CurveRef> alpha, beta;
  std::vector<ArcRef> arcs_l, arcs_r;
};

namespace detail {

// Tracks dart fates while a model is assembled from pieces by surgery.
struct Patchwork {
  CombinatorialMap map;
  std::vector<std::vector<Dart>> layers;
  std::vector<std::vector<Dart>> opps;  // each piece's own opp, for lift fallback

  explicit Patchwork(CombinatorialMap m) : map(std::move(m)) {
    layers.push_back(std::vector<Dart>(map.dart_count()));
    opps.push_back(std::vector<Dart>(map.dart_count()));
    for (Dart d = 0; d < map.dart_count(); ++d) {
      layers[0][d] = d;
      opps[0][d] = map.opp(d);
    }
  }

  int add(const CombinatorialMap& piece) {
    Dart offset = map.dart_count();
    map = disjoint_union(map, piece);
    layers.push_back(std::vector<Dart>(piece.dart_count()));
    opps.push_back(std::vector<Dart>(piece.dart_count()));
    for (Dart d = 0; d < piece.dart_count(); ++d) {
      layers.back()[d] = offset + d;
      opps.back()[d] = piece.opp(d);
    }
    return static_cast<int>(layers.size()) - 1;
  }

  void apply(Surgery s) {
    for (auto& layer : layers)
      for (Dart& d : layer) {
        if (d == kNoDart) continue;
        d = s.carry[d].empty() ? kNoDart : s.carry[d][0];
      }
    map = std::move(s.map);
  }

  Dart at(int layer, Dart d) const {
    Dart out = layers[layer][d];
    require(out != kNoDart, Err::BadTarget, "dart was removed during assembly");
    return out;
  }

  std::vector<Dart> walk(int layer, const std::vector<Dart>& pre) const {
    std::vector<Dart> out;
    out.reserve(pre.size());
    for (Dart d : pre) out.push_back(at(layer, d));
    return out;
  }

  // Lifts a dart map given on the original pieces to the assembled map, if it
  // survives the surgeries as an isomorphism.  When the image dart was deleted
  // by a gluing, the arrow it used to be lives on as the opposite side of the
  // merged edge, so chase it through the surviving partner instead.
  std::optional<MapIsomorphism> lift(const std::vector<std::vector<Dart>>& pre) const {
    std::vector<Dart> img(map.dart_count(), kNoDart);
    for (size_t l = 0; l < layers.size(); ++l)
      for (Dart d = 0; d < static_cast<Dart>(layers[l].size()); ++d) {
        if (layers[l][d] == kNoDart) continue;
        Dart t = layers[l][pre[l][d]];
        if (t == kNoDart) {
          Dart partner = layers[l][opps[l][pre[l][d]]];
          if (partner == kNoDart) return std::nullopt;
          t = map.opp(partner);
        }
        img[layers[l][d]] = t;
      }
    try {
      return check_isomorphism(map, std::move(img));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
};

}  // namespace detail

// Genus g surface with b boundary circles laid out on a planar grid: one slot
// per handle holding a tube between two removed squares, ringed by the alpha
// and beta curves and threaded by the through/waist arc pairs, then one slot
// per extra wall holding a removed square and its connectors.  The outer
// border is wall[0].  symmetries holds the automorphisms that survive the
// decoration: the identity and the top-bottom reflection always, plus the
// left-right ones when there are no handles to break them.
struct StandardFiber {
  FiberPresentation fiber;
  int g = 0, b = 0;
  int w = 0, h = 0;
  std::vector<Dart> chart;  // planar grid dart -> assembled dart, kNoDart where glued away
  std::vector<MapIsomorphism> symmetries;
};

// Carries a planar grid walk into the assembled fiber.  Where a walk runs
// along a glued-away square wall, the surviving side of the merged edge
// stands in (grid edges pair darts as 2k, 2k+1).
inline std::vector<Dart> chart_walk(const StandardFiber& sf, const std::vector<Dart>& grid) {
  std::vector<Dart> out;
  out.reserve(grid.size());
  for (Dart d : grid) {
    Dart t = sf.chart[d];
    if (t == kNoDart) {
      Dart partner = sf.chart[d ^ 1];
      require(partner != kNoDart, Err::BadTarget, "walk edge was removed during assembly");
      t = sf.fiber.map.opp(partner);
    }
    out.push_back(t);
  }
  return out;
}

inline StandardFiber standard_fiber(int g, int b) {
  require(g >= 0 && b >= 1, Err::BadParameters, "fiber needs g >= 0 and b >= 1");
  const int h = 7;
  const int w = 12 * g + 4 * (b - 1) + 1;
  auto px = [](int i) { return 3 + 12 * i; };
  auto rx = [&](int j) { return 12 * g + 4 * (j - 1) + 1; };

  std::vector<std::pair<int, int>> squares;
  for (int i = 0; i < g; ++i) {
    squares.push_back({px(i), 3});
    squares.push_back({px(i) + 6, 3});
  }
  for (int j = 1; j < b; ++j) squares.push_back({rx(j) + 1, 3});

  detail::Patchwork pw(planar_grid(w, h, squares));
  for (int i = 0; i < g; ++i)
    pw.apply(glue_boundary_circles(pw.map, pw.at(0, grid_square(w, px(i), 3)),
                                   pw.at(0, grid_square(w, px(i) + 6, 3))));

  StandardFiber out;
  out.g = g;
  out.b = b;
  out.w = w;
  out.h = h;

  FiberPresentation& f = out.fiber;
  auto walk = [&](std::vector<std::pair<int, int>> pts) { return pw.walk(0, grid_walk(w, h, pts)); };
  for (int i = 0; i < g; ++i) {
    int p = px(i);
    f.alpha.push_back(CurveRef{walk({{p - 1, 2}, {p + 2, 2}, {p + 2, 5}, {p - 1, 5}, {p - 1, 2}})});
    f.beta.push_back(
        CurveRef{walk({{p + 5, 2}, {p + 8, 2}, {p + 8, 5}, {p + 5, 5}, {p + 5, 2}})});

    auto through = [&](int y0, int ym) {
      std::vector<Dart> arc = walk({{p, y0}, {p, ym}});
      std::vector<Dart> tail = walk({{p + 7, ym}, {p + 7, y0}});
      arc.insert(arc.end(), tail.begin(), tail.end());
      return ArcRef{std::move(arc)};
    };
    f.arcs_l.push_back(through(h, 4));
    f.arcs_l.push_back(ArcRef{walk({{p - 2, h}, {p - 2, 1}, {p + 3, 1}, {p + 3, h}})});
    f.arcs_r.push_back(through(0, 3));
    f.arcs_r.push_back(ArcRef{walk({{p + 4, 0}, {p + 4, 6}, {p + 9, 6}, {p + 9, 0}})});
  }
  for (int j = 1; j < b; ++j) {
    int r = rx(j);
    f.arcs_l.push_back(ArcRef{walk({{r + 1, h}, {r + 1, 4}})});
    f.arcs_r.push_back(ArcRef{walk({{r + 1, 0}, {r + 1, 3}})});
  }

  f.wall.push_back(pw.map.face_of(pw.at(0, grid_east(w, 0, 0))));
  for (int j = 1; j < b; ++j)
    f.wall.push_back(pw.map.face_of(pw.at(0, grid_square(w, rx(j) + 1, 3))));
  f.map = pw.map;
  out.chart = pw.layers[0];

  out.symmetries.push_back(identity_isomorphism(f.map));
  if (auto yf = pw.lift({grid_y_flip(w, h)})) out.symmetries.push_back(*yf);
  if (g == 0) {
    if (auto xf = pw.lift({grid_x_flip(w, h)})) {
      out.symmetries.push_back(*xf);
      out.symmetries.push_back(compose(*xf, out.symmetries[1]));
    }
  }
  return out;
}

// Genus tubes*b surface with b boundary circles and a working dihedral
// symmetry: a polar grid sphere (a chain of rings capped at both ends) whose
// walls are every third quad of the innermost ring, with genus added by
// radial tube orbits further out.  symmetries holds every rotation and
// reflection that survives; rotations act on the walls as a full cycle.
struct SymmetricFiber {
  CombinatorialMap map;
  int b = 0;
  int genus = 0;
  std::vector<MapIsomorphism> symmetries;
};

inline SymmetricFiber symmetric_fiber(int b, int tubes) {
  require(b >= 1 && tubes >= 0 && tubes <= 2, Err::BadParameters,
          "need b >= 1 and at most two tube orbits");
  const int k = 3 * b;
  const int rings = 2 + 4 * tubes;
  auto id = [&](int i, int kd) { return static_cast<Dart>(6 * (((i % k) + k) % k) + kd); };

  detail::Patchwork pw(ring_annulus(k));
  for (int r = 1; r < rings; ++r) {
    int layer = pw.add(ring_annulus(k));
    // Anchoring the inner wall one sector over pairs outer edge i with inner
    // edge i+1, the unique offset the reflections below commute with.
    pw.apply(glue_boundary_circles(pw.map, pw.at(r - 1, ring_outer_wall(0)),
                                   pw.at(layer, ring_inner_wall(1))));
  }
  pw.apply(cap_hole(pw.map, pw.at(0, ring_inner_wall(0))));
  pw.apply(cap_hole(pw.map, pw.at(rings - 1, ring_outer_wall(0))));

  for (int t = 0; t < tubes; ++t) {
    int r1 = 2 + 4 * t, r2 = r1 + 2;
    for (int j = 0; j < b; ++j) {
      pw.apply(open_face(pw.map, pw.at(r1, id(3 * j, 0))));
      pw.apply(open_face(pw.map, pw.at(r2, id(3 * j, 0))));
      pw.apply(
          glue_boundary_circles(pw.map, pw.at(r1, id(3 * j, 0)), pw.at(r2, id(3 * j, 0))));
    }
  }
  for (int j = 0; j < b; ++j) pw.apply(open_face(pw.map, pw.at(0, id(3 * j, 0))));

  SymmetricFiber out;
  out.b = b;
  out.genus = tubes * b;

  auto layered = [&](auto&& dart_map) {
    std::vector<std::vector<Dart>> pre(rings, std::vector<Dart>(6 * k));
    for (int r = 0; r < rings; ++r)
      for (Dart d = 0; d < static_cast<Dart>(6 * k); ++d) pre[r][d] = dart_map(d);
    return pre;
  };
  for (int s = 0; s < k; s += 3) {
    auto rot = layered([&](Dart d) { return id(d / 6 + s, static_cast<int>(d % 6)); });
    if (auto f = pw.lift(rot)) out.symmetries.push_back(*f);
  }
  for (int c = 1; c < k; c += 3) {
    static const int swap_kd[6] = {1, 0, 2, 4, 3, 5};
    auto refl = layered([&](Dart d) { return id(c - d / 6, swap_kd[d % 6]); });
    if (auto f = pw.lift(refl)) out.symmetries.push_back(*f);
  }
  out.map = std::move(pw.map);
  return out;
}

}  // namespace trisect
