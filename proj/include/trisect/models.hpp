#pragma once

// Small exact surface models.  Tests and the example pipelines build
// everything from these: square grids on the torus, concentric-ring annuli,
// and punctured variants.  All builders produce deterministic dart layouts,
// documented per builder, so expected values can be frozen by hand.

#include "trisect/core.hpp"
#include "trisect/surgery.hpp"

namespace trisect {

// N x N square grid on the torus.  Vertex (i,j) owns darts 4*(j*N+i)+k with
// k = 0,1,2,3 pointing east, north, west, south; rotation is (E,N,W,S).
// V = N^2, E = 2N^2, F = N^2.
inline Dart torus_dart(int n, int i, int j, int k) {
  i = ((i % n) + n) % n;
  j = ((j % n) + n) % n;
  return static_cast<Dart>(4 * (j * n + i) + k);
}

inline CombinatorialMap grid_torus(int n, const std::vector<Dart>& hole_flags = {}) {
  require(n >= 1, Err::BadParameters, "grid needs n >= 1");
  const Dart total = static_cast<Dart>(4 * n * n);
  std::vector<Dart> opp(total), nxt(total);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      opp[torus_dart(n, i, j, 0)] = torus_dart(n, i + 1, j, 2);
      opp[torus_dart(n, i, j, 2)] = torus_dart(n, i - 1, j, 0);
      opp[torus_dart(n, i, j, 1)] = torus_dart(n, i, j + 1, 3);
      opp[torus_dart(n, i, j, 3)] = torus_dart(n, i, j - 1, 1);
      for (int k = 0; k < 4; ++k)
        nxt[torus_dart(n, i, j, k)] = torus_dart(n, i, j, (k + 1) % 4);
    }
  }
  return CombinatorialMap(std::move(opp), std::move(nxt), hole_flags);
}

// The horizontal cycle through row j, and the vertical one through column i.
inline CurveRef torus_row(int n, int j) {
  CurveRef c;
  for (int i = 0; i < n; ++i) c.darts.push_back(torus_dart(n, i, j, 0));
  return c;
}

inline CurveRef torus_col(int n, int i) {
  CurveRef c;
  for (int j = 0; j < n; ++j) c.darts.push_back(torus_dart(n, i, j, 1));
  return c;
}

// A dart on the face whose top-left corner is vertex (i,j); the face's other
// corners are (i+1,j), (i+1,j-1), (i,j-1).
inline Dart torus_face(int n, int i, int j) { return torus_dart(n, i, j, 0); }

// Annulus built from two concentric N-gons joined by N radial edges.  Inner
// vertex i owns darts 6i+0 (to inner i+1), 6i+1 (to inner i-1), 6i+2 (radial
// out); outer vertex i owns 6i+3 (to outer i+1), 6i+4 (to outer i-1), 6i+5
// (radial in).  Hole walls: inner = the 6i+1 darts, outer = the 6i+3 darts.
inline CombinatorialMap ring_annulus(int n) {
  require(n >= 3, Err::BadParameters, "ring needs n >= 3");
  const Dart total = static_cast<Dart>(6 * n);
  std::vector<Dart> opp(total), nxt(total);
  auto id = [n](int i, int k) { return static_cast<Dart>(6 * (((i % n) + n) % n) + k); };
  for (int i = 0; i < n; ++i) {
    opp[id(i, 0)] = id(i + 1, 1);
    opp[id(i, 1)] = id(i - 1, 0);
    opp[id(i, 2)] = id(i, 5);
    opp[id(i, 5)] = id(i, 2);
    opp[id(i, 3)] = id(i + 1, 4);
    opp[id(i, 4)] = id(i - 1, 3);
    nxt[id(i, 2)] = id(i, 0);
    nxt[id(i, 0)] = id(i, 1);
    nxt[id(i, 1)] = id(i, 2);
    nxt[id(i, 3)] = id(i, 5);
    nxt[id(i, 5)] = id(i, 4);
    nxt[id(i, 4)] = id(i, 3);
  }
  return CombinatorialMap(std::move(opp), std::move(nxt), {1, 3});
}

inline Dart ring_inner_wall(int i) { return static_cast<Dart>(6 * i + 1); }
inline Dart ring_outer_wall(int i) { return static_cast<Dart>(6 * i + 3); }

// Genus-1 diagram of the lens space of order two: curves a = {0,2} and
// b = {4,6} crossing twice, at vertices u (darts 0,4,3,7) and v (2,6,1,5).
// The two square faces are swapped by neither map below; lens_flip is the
// reflection exchanging the curve families, conjugating nxt to prv.
inline CombinatorialMap lens_two_one() {
  std::vector<Dart> opp = {1, 0, 3, 2, 5, 4, 7, 6};
  std::vector<Dart> nxt(8);
  nxt[0] = 4;
  nxt[4] = 3;
  nxt[3] = 7;
  nxt[7] = 0;
  nxt[2] = 6;
  nxt[6] = 1;
  nxt[1] = 5;
  nxt[5] = 2;
  return CombinatorialMap(std::move(opp), std::move(nxt), {});
}

inline CurveRef lens_alpha() { return CurveRef{{0, 2}}; }
inline CurveRef lens_beta() { return CurveRef{{4, 6}}; }

inline std::vector<Dart> lens_flip() { return {4, 5, 6, 7, 0, 1, 2, 3}; }

// Rectangular w x h block of unit squares.  The outer region is a hole, as is
// every square listed in hole_squares (by its lower-left corner).  Horizontal
// edge (x,y)-(x+1,y) owns darts 2(yw+x) (east) and +1 (west); vertical edge
// (x,y)-(x,y+1) owns 2w(h+1) + 2(xh+y) (north) and +1 (south).  Rotations run
// E, N, W, S.
inline Dart grid_east(int w, int x, int y) { return static_cast<Dart>(2 * (y * w + x)); }
inline Dart grid_west(int w, int x, int y) { return grid_east(w, x - 1, y) + 1; }
inline Dart grid_north(int w, int h, int x, int y) {
  return static_cast<Dart>(2 * w * (h + 1) + 2 * (x * h + y));
}
inline Dart grid_south(int w, int h, int x, int y) { return grid_north(w, h, x, y - 1) + 1; }

// The face dart of the square whose lower-left corner is (x,y).
inline Dart grid_square(int w, int x, int y) { return grid_east(w, x, y) + 1; }

// Dart walk along a rectilinear polyline given by its corner points.
inline std::vector<Dart> grid_walk(int w, int h, const std::vector<std::pair<int, int>>& pts) {
  require(pts.size() >= 2, Err::BadParameters, "polyline needs two points");
  std::vector<Dart> out;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    auto [x, y] = pts[i];
    auto [tx, ty] = pts[i + 1];
    require(x == tx || y == ty, Err::BadParameters, "polyline segment is not axis-aligned");
    while (x < tx) out.push_back(grid_east(w, x++, y));
    while (x > tx) out.push_back(grid_west(w, x--, y));
    while (y < ty) out.push_back(grid_north(w, h, x, y++));
    while (y > ty) out.push_back(grid_south(w, h, x, y--));
  }
  return out;
}

// Dart maps of the two reflections of a w-by-h grid, defined on the plain
// grid's darts.  Both conjugate nxt to prv; push them through later surgery
// to get automorphisms of decorated grids whose features keep the symmetry.
inline std::vector<Dart> grid_y_flip(int w, int h) {
  std::vector<Dart> img(2 * w * (h + 1) + 2 * h * (w + 1));
  for (int y = 0; y <= h; ++y)
    for (int x = 0; x < w; ++x) {
      img[grid_east(w, x, y)] = grid_east(w, x, h - y);
      img[grid_west(w, x + 1, y)] = grid_west(w, x + 1, h - y);
    }
  for (int y = 0; y < h; ++y)
    for (int x = 0; x <= w; ++x) {
      img[grid_north(w, h, x, y)] = grid_south(w, h, x, h - y);
      img[grid_south(w, h, x, y + 1)] = grid_north(w, h, x, h - y - 1);
    }
  return img;
}

inline std::vector<Dart> grid_x_flip(int w, int h) {
  std::vector<Dart> img(2 * w * (h + 1) + 2 * h * (w + 1));
  for (int y = 0; y <= h; ++y)
    for (int x = 0; x < w; ++x) {
      img[grid_east(w, x, y)] = grid_west(w, w - x, y);
      img[grid_west(w, x + 1, y)] = grid_east(w, w - x - 1, y);
    }
  for (int y = 0; y < h; ++y)
    for (int x = 0; x <= w; ++x) {
      img[grid_north(w, h, x, y)] = grid_north(w, h, w - x, y);
      img[grid_south(w, h, x, y + 1)] = grid_south(w, h, w - x, y + 1);
    }
  return img;
}

inline CombinatorialMap planar_grid(int w, int h,
                                    const std::vector<std::pair<int, int>>& hole_squares = {}) {
  require(w >= 1 && h >= 1, Err::BadParameters, "grid needs positive sides");
  const Dart total = static_cast<Dart>(2 * w * (h + 1) + 2 * (w + 1) * h);
  std::vector<Dart> opp(total), nxt(total);
  for (int y = 0; y <= h; ++y) {
    for (int x = 0; x < w; ++x) {
      opp[grid_east(w, x, y)] = grid_east(w, x, y) + 1;
      opp[grid_east(w, x, y) + 1] = grid_east(w, x, y);
    }
  }
  for (int x = 0; x <= w; ++x) {
    for (int y = 0; y < h; ++y) {
      opp[grid_north(w, h, x, y)] = grid_north(w, h, x, y) + 1;
      opp[grid_north(w, h, x, y) + 1] = grid_north(w, h, x, y);
    }
  }
  for (int y = 0; y <= h; ++y) {
    for (int x = 0; x <= w; ++x) {
      std::vector<Dart> fan;
      if (x < w) fan.push_back(grid_east(w, x, y));
      if (y < h) fan.push_back(grid_north(w, h, x, y));
      if (x > 0) fan.push_back(grid_west(w, x, y));
      if (y > 0) fan.push_back(grid_south(w, h, x, y));
      for (size_t k = 0; k < fan.size(); ++k) nxt[fan[k]] = fan[(k + 1) % fan.size()];
    }
  }
  std::vector<Dart> flags = {grid_east(w, 0, 0)};
  for (auto [x, y] : hole_squares) flags.push_back(grid_square(w, x, y));
  return CombinatorialMap(std::move(opp), std::move(nxt), flags);
}

}  // namespace trisect
