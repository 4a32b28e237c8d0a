#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "trisect/core.hpp"
#include "trisect/surgery.hpp"

namespace trisect {

enum class Chirality { Preserving, Reversing };

// Isomorphism between rotation systems, stored as a dart map.  A reversing
// isomorphism conjugates nxt to prv, so faces-as-regions map through the
// opposite dart: the region left of d is the region right of img[d].
struct MapIsomorphism {
  std::vector<Dart> img;
  Chirality chi = Chirality::Preserving;

  Dart operator()(Dart d) const { return img[d]; }
  bool reversing() const { return chi == Chirality::Reversing; }
};

// Validates that img is a dart bijection commuting with opp and conjugating
// nxt either to nxt or to prv, and that hole regions land on hole regions.
inline MapIsomorphism check_isomorphism(const CombinatorialMap& m, std::vector<Dart> img) {
  const Dart n = m.dart_count();
  require(static_cast<Dart>(img.size()) == n, Err::InvalidIsomorphism, "dart map has wrong size");
  std::vector<char> hit(n, 0);
  for (Dart d = 0; d < n; ++d) {
    require(img[d] >= 0 && img[d] < n && !hit[img[d]], Err::InvalidIsomorphism,
            "dart map is not a bijection");
    hit[img[d]] = 1;
  }
  for (Dart d = 0; d < n; ++d)
    require(img[m.opp(d)] == m.opp(img[d]), Err::InvalidIsomorphism, "dart map breaks an edge");
  bool pres = true, rev = true;
  for (Dart d = 0; d < n && (pres || rev); ++d) {
    if (img[m.nxt(d)] != m.nxt(img[d])) pres = false;
    if (img[m.nxt(d)] != m.prv(img[d])) rev = false;
  }
  require(pres || rev, Err::InvalidIsomorphism, "dart map respects no rotation");
  MapIsomorphism f{std::move(img), pres ? Chirality::Preserving : Chirality::Reversing};
  for (Dart d = 0; d < n; ++d) {
    Dart target = f.reversing() ? m.opp(f.img[d]) : f.img[d];
    require(m.on_hole(d) == m.on_hole(target), Err::InvalidIsomorphism,
            "dart map does not respect the boundary");
  }
  return f;
}

inline MapIsomorphism identity_isomorphism(const CombinatorialMap& m) {
  std::vector<Dart> img(m.dart_count());
  for (Dart d = 0; d < m.dart_count(); ++d) img[d] = d;
  return MapIsomorphism{std::move(img), Chirality::Preserving};
}

// f after g; reversing chiralities cancel.
inline MapIsomorphism compose(const MapIsomorphism& f, const MapIsomorphism& g) {
  require(f.img.size() == g.img.size(), Err::InvalidIsomorphism, "composing maps of different surfaces");
  std::vector<Dart> img(g.img.size());
  for (Dart d = 0; d < static_cast<Dart>(img.size()); ++d) img[d] = f.img[g.img[d]];
  Chirality chi = (f.reversing() != g.reversing()) ? Chirality::Reversing : Chirality::Preserving;
  return MapIsomorphism{std::move(img), chi};
}

inline MapIsomorphism inverse(const MapIsomorphism& f) {
  std::vector<Dart> img(f.img.size());
  for (Dart d = 0; d < static_cast<Dart>(img.size()); ++d) img[f.img[d]] = d;
  return MapIsomorphism{std::move(img), f.chi};
}

// Representative of the image region of the face containing d.
inline Dart image_face(const CombinatorialMap& m, const MapIsomorphism& f, Dart d) {
  return m.face_of(f.reversing() ? m.opp(f(d)) : f(d));
}

// Dart walks stay walks under both chiralities: tails map to tails.
inline CurveRef image_curve(const MapIsomorphism& f, const CurveRef& c) {
  std::vector<Dart> out;
  out.reserve(c.darts.size());
  for (Dart d : c.darts) out.push_back(f(d));
  return CurveRef{std::move(out)};
}

inline ArcRef image_arc(const MapIsomorphism& f, const ArcRef& a) {
  std::vector<Dart> out;
  out.reserve(a.darts.size());
  for (Dart d : a.darts) out.push_back(f(d));
  return ArcRef{std::move(out)};
}

inline std::vector<CurveRef> image_family(const MapIsomorphism& f,
                                          const std::vector<CurveRef>& fam) {
  std::vector<CurveRef> out;
  out.reserve(fam.size());
  for (const CurveRef& c : fam) out.push_back(image_curve(f, c));
  return out;
}

enum class SplittingAction { Preserved, Flipped, Undetermined };

namespace detail {

inline std::set<std::set<Dart>> family_edge_sets(const CombinatorialMap& m,
                                                 const std::vector<CurveRef>& fam) {
  std::set<std::set<Dart>> out;
  for (const CurveRef& c : fam) {
    std::set<Dart> edges;
    for (Dart d : c.darts) edges.insert(m.edge_rep(d));
    out.insert(std::move(edges));
  }
  return out;
}

}  // namespace detail

// Whether f fixes both splitting families (curve-wise, as edge sets), swaps
// them, or does neither.
inline SplittingAction splitting_action(const CombinatorialMap& m, const MapIsomorphism& f,
                                        const std::vector<CurveRef>& alpha,
                                        const std::vector<CurveRef>& beta) {
  auto a = detail::family_edge_sets(m, alpha);
  auto b = detail::family_edge_sets(m, beta);
  auto fa = detail::family_edge_sets(m, image_family(f, alpha));
  auto fb = detail::family_edge_sets(m, image_family(f, beta));
  if (fa == a && fb == b) return SplittingAction::Preserved;
  if (fa == b && fb == a) return SplittingAction::Flipped;
  return SplittingAction::Undetermined;
}

// Boundary components of the bundle piece built from a splitting surface with
// monodromy f.  Two wall circles of the fiber feed the same boundary component
// when f identifies them or when they cohang off a common component of either
// compressed side.  Each group records the wall circles it contains, the orbit
// count of f among them, and the component count and total genus of each
// compressed side along it.
struct BoundaryOrbit {
  std::vector<int> holes;
  int phi_orbits = 0;
  int lower_components[2] = {0, 0};
  int lower_genus[2] = {0, 0};
};

inline std::vector<BoundaryOrbit> boundary_orbits(const CombinatorialMap& m,
                                                  const MapIsomorphism& f,
                                                  const std::vector<CurveRef>& alpha,
                                                  const std::vector<CurveRef>& beta) {
  const auto& walls = m.holes();
  const int nb = static_cast<int>(walls.size());

  auto hole_index = [&](Dart face_rep) {
    for (int i = 0; i < nb; ++i)
      if (walls[i] == face_rep) return i;
    throw Error(Err::InvalidIsomorphism, "image of a wall is not a wall");
  };
  std::vector<int> to(nb);
  for (int i = 0; i < nb; ++i) to[i] = hole_index(image_face(m, f, walls[i]));

  // Side data: component id and genus for the wall circles of each compressed side.
  struct Side {
    std::vector<int> comp;
    std::vector<int> genus;
    int comp_count = 0;
  };
  auto compress_side = [&](const std::vector<CurveRef>& fam) {
    Surgery s = compress_along(m, fam);
    Side side;
    side.comp_count = s.map.component_count();
    SurfaceSummary sum = s.map.classify();
    for (int i = 0; i < nb; ++i) {
      Dart carried = carry_walk(s.carry, {walls[i]})[0];
      int c = s.map.component_of(carried);
      side.comp.push_back(c);
      side.genus.push_back(sum.components[c].genus);
    }
    return side;
  };
  Side s1 = compress_side(alpha);
  Side s2 = compress_side(beta);

  // Union-find over the components of both compressed sides.
  std::vector<int> parent(s1.comp_count + s2.comp_count);
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[root(a)] = root(b); };
  auto node1 = [&](int hole) { return s1.comp[hole]; };
  auto node2 = [&](int hole) { return s1.comp_count + s2.comp[hole]; };
  for (int i = 0; i < nb; ++i) {
    unite(node1(i), node2(i));
    unite(node1(i), node1(to[i]));
  }

  std::vector<int> group_of(nb);
  std::vector<int> group_root;
  for (int i = 0; i < nb; ++i) {
    int r = root(node1(i));
    auto it = std::find(group_root.begin(), group_root.end(), r);
    if (it == group_root.end()) {
      group_of[i] = static_cast<int>(group_root.size());
      group_root.push_back(r);
    } else {
      group_of[i] = static_cast<int>(it - group_root.begin());
    }
  }

  std::vector<BoundaryOrbit> out(group_root.size());
  for (int i = 0; i < nb; ++i) out[group_of[i]].holes.push_back(i);
  std::vector<char> seen(nb, 0);
  for (int i = 0; i < nb; ++i) {
    if (seen[i]) continue;
    for (int j = i; !seen[j]; j = to[j]) seen[j] = 1;
    ++out[group_of[i]].phi_orbits;
  }
  for (auto& orbit : out) {
    for (int side = 0; side < 2; ++side) {
      const Side& s = side == 0 ? s1 : s2;
      std::set<int> comps;
      for (int h : orbit.holes) comps.insert(s.comp[h]);
      orbit.lower_components[side] = static_cast<int>(comps.size());
      for (int c : comps) {
        int rep = -1;
        for (int h : orbit.holes)
          if (s.comp[h] == c && rep < 0) rep = h;
        orbit.lower_genus[side] += s.genus[rep];
      }
    }
  }
  return out;
}

}  // namespace trisect
