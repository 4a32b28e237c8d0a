#pragma once

// Sutured Heegaard diagrams and (relative) trisection diagrams: curve
// families on a surface, cut-system validation, handleslides, and syntactic
// recognition of standard position.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trisect/core.hpp"
#include "trisect/routing.hpp"
#include "trisect/surgery.hpp"

namespace trisect {

enum class Color { alpha, beta, gamma };

inline const char* color_name(Color c) {
  switch (c) {
    case Color::alpha: return "alpha";
    case Color::beta: return "beta";
    case Color::gamma: return "gamma";
  }
  return "?";
}

// Pairwise vertex-disjoint embedded curves of one color.
struct CurveFamily {
  Color color = Color::alpha;
  std::vector<CurveRef> curves;
};

// Compact surface with boundary carrying two transverse cut systems.
struct SuturedHeegaardDiagram {
  CombinatorialMap surface;
  CurveFamily alpha;
  CurveFamily beta;
};

// Three cut systems whose pairwise diagrams are sutured diagrams of the same
// fibered boundary pieces.  expected_page stores (page genus, binding count)
// per boundary orbit, in orbit order.
struct RelativeTrisectionDiagram {
  CombinatorialMap surface;
  CurveFamily alpha;
  CurveFamily beta;
  CurveFamily gamma;
  std::vector<std::pair<int, int>> expected_page;
};

// Closed central surface; every family has exactly genus(surface) curves.
struct TrisectionDiagram {
  CombinatorialMap surface;
  CurveFamily alpha;
  CurveFamily beta;
  CurveFamily gamma;
};

inline const CurveFamily& family_of(const RelativeTrisectionDiagram& d, Color c) {
  switch (c) {
    case Color::alpha: return d.alpha;
    case Color::beta: return d.beta;
    case Color::gamma: return d.gamma;
  }
  return d.alpha;
}

inline SuturedHeegaardDiagram pair_diagram(const RelativeTrisectionDiagram& d, Color a, Color b) {
  return {d.surface, family_of(d, a), family_of(d, b)};
}

// --- crossings ------------------------------------------------------------

namespace detail {

// The two walk darts pointing out of each vertex a curve visits.
inline std::map<Dart, std::array<Dart, 2>> curve_ends(const CombinatorialMap& m,
                                                      const CurveRef& c) {
  std::map<Dart, std::array<Dart, 2>> ends;
  const size_t n = c.darts.size();
  for (size_t i = 0; i < n; ++i) {
    Dart out = c.darts[i];
    Dart in = c.darts[(i + n - 1) % n];
    ends[m.vertex_of(out)] = {out, m.opp(in)};
  }
  return ends;
}

}  // namespace detail

// Vertices two embedded curves have in common.
inline std::vector<Dart> common_vertices(const CombinatorialMap& m, const CurveRef& a,
                                         const CurveRef& b) {
  std::vector<Dart> va = curve_vertices(m, a);
  std::vector<Dart> vb = curve_vertices(m, b);
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  std::vector<Dart> out;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
  return out;
}

// Common vertices where the four walk darts alternate around the rotation:
// honest transverse crossings.  Shared vertices that fail the alternation
// test (tangencies, shared edges) are left out.
inline std::vector<Dart> transverse_crossings(const CombinatorialMap& m, const CurveRef& a,
                                              const CurveRef& b) {
  auto ea = detail::curve_ends(m, a);
  auto eb = detail::curve_ends(m, b);
  std::vector<Dart> out;
  for (Dart v : common_vertices(m, a, b)) {
    const auto& da = ea.at(v);
    const auto& db = eb.at(v);
    std::vector<int> marks;
    for (Dart d : m.vertex_cycle(v)) {
      bool ina = d == da[0] || d == da[1];
      bool inb = d == db[0] || d == db[1];
      if (ina && inb) { marks.clear(); break; }  // shared edge: degenerate
      if (ina) marks.push_back(1);
      if (inb) marks.push_back(2);
    }
    if (marks.size() == 4 && marks[0] != marks[1] && marks[1] != marks[2] && marks[2] != marks[3])
      out.push_back(v);
  }
  return out;
}

inline int crossing_count(const CombinatorialMap& m, const CurveRef& a, const CurveRef& b) {
  return static_cast<int>(transverse_crossings(m, a, b).size());
}

// --- validation -----------------------------------------------------------

// Findings for one cut system.
struct CutSystemReport {
  bool disjoint = true;
  std::vector<char> nontrivial;  // per curve: does not bound a disk
  SurfaceSummary compressed;     // surface compressed along the family
};

struct ValidationReport {
  bool valid = true;
  std::vector<CutSystemReport> systems;  // one per family checked
  std::vector<std::string> problems;
};

namespace detail {

// Embeddedness, interiority, pairwise disjointness, nontriviality, and the
// compressed summary, shared by the sutured and closed validators.  Returns
// false when the family is too broken to compress.
inline bool family_checks(const CombinatorialMap& m, const CurveFamily& family,
                          CutSystemReport& sys, std::vector<std::string>& problems) {
  sys.nontrivial.assign(family.curves.size(), 1);

  bool structural = true;
  for (size_t i = 0; i < family.curves.size(); ++i) {
    try {
      require_embedded_curve(m, family.curves[i]);
      require(!curve_touches_hole(m, family.curves[i]), Err::TouchesBoundary,
              "curve touches the boundary");
    } catch (const Error& e) {
      problems.push_back("curve " + std::to_string(i) + ": " + e.what());
      structural = false;
    }
  }
  if (!structural) return false;

  std::map<Dart, size_t> owner;
  for (size_t i = 0; i < family.curves.size() && sys.disjoint; ++i)
    for (Dart v : curve_vertices(m, family.curves[i])) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh && it->second != i) {
        problems.push_back("curves " + std::to_string(it->second) + " and " + std::to_string(i) +
                           " share a vertex");
        sys.disjoint = false;
        break;
      }
    }
  if (!sys.disjoint) return false;

  for (size_t i = 0; i < family.curves.size(); ++i) {
    Surgery s = cut_along(m, family.curves[i]);
    SurfaceSummary sum = s.map.classify();
    for (Dart wall : s.new_holes) {
      const ComponentSummary& side = sum.components[s.map.component_of(wall)];
      if (side.genus == 0 && side.boundary_count == 1) {
        sys.nontrivial[i] = 0;
        problems.push_back("curve " + std::to_string(i) + " bounds a disk");
        break;
      }
    }
  }

  sys.compressed = compress_along(m, family.curves).map.classify();
  return true;
}

}  // namespace detail

// A family is a valid cut system when its curves are embedded, interior,
// pairwise vertex-disjoint, none bounds a disk, and compressing the surface
// along all of them leaves no closed component.
inline ValidationReport validate_cut_system(const CombinatorialMap& m, const CurveFamily& family) {
  ValidationReport rep;
  CutSystemReport& sys = rep.systems.emplace_back();
  if (!detail::family_checks(m, family, sys, rep.problems)) {
    rep.valid = false;
    return rep;
  }
  if (std::find(sys.nontrivial.begin(), sys.nontrivial.end(), 0) != sys.nontrivial.end())
    rep.valid = false;
  if (sys.compressed.closed_component_count > 0) {
    rep.problems.push_back("compressing along the family yields a closed component");
    rep.valid = false;
  }
  return rep;
}

// Sutured Heegaard diagram: connected surface with boundary, both families
// valid.  systems[0] reports alpha, systems[1] beta.
inline ValidationReport validate_sutured(const SuturedHeegaardDiagram& d) {
  ValidationReport a = validate_cut_system(d.surface, d.alpha);
  ValidationReport b = validate_cut_system(d.surface, d.beta);
  ValidationReport rep;
  rep.valid = a.valid && b.valid;
  rep.systems = {a.systems[0], b.systems[0]};
  for (const std::string& p : a.problems) rep.problems.push_back("alpha: " + p);
  for (const std::string& p : b.problems) rep.problems.push_back("beta: " + p);
  if (!d.surface.classify().connected()) {
    rep.problems.push_back("surface is not connected");
    rep.valid = false;
  }
  if (d.surface.hole_count() == 0) {
    rep.problems.push_back("surface has no boundary");
    rep.valid = false;
  }
  return rep;
}

// --- handleslides ---------------------------------------------------------

// A slide refines the surface (the replacement curve needs room to push off
// the configuration), so the rewritten family comes with the new map and the
// dart carry.
struct SlideResult {
  CombinatorialMap surface;
  std::vector<std::vector<Dart>> carry;  // input dart -> walk in result
  CurveFamily family;
};

// Replaces family[slid] by its band sum with family[over] along the band: the
// third boundary component of a ribbon neighborhood of slid + band + over.
// The band is an interior walk from a vertex of slid to a vertex of over,
// meeting no family curve in between.
inline SlideResult handleslide(const CombinatorialMap& m, const CurveFamily& family, int slid,
                               int over, const ArcRef& band) {
  const int nf = static_cast<int>(family.curves.size());
  require(slid >= 0 && slid < nf && over >= 0 && over < nf, Err::BadTarget,
          "curve index out of range");
  require(slid != over, Err::NotConnectingBand, "band must join two distinct curves");
  for (const CurveRef& c : family.curves) require_embedded_curve(m, c);
  require(!band.darts.empty(), Err::NotConnectingBand, "band is empty");

  std::vector<Dart> bv;
  for (size_t i = 0; i < band.darts.size(); ++i) {
    Dart d = band.darts[i];
    require(d >= 0 && d < m.dart_count(), Err::BadTarget, "band dart out of range");
    if (i > 0)
      require(m.vertex_of(d) == m.head_vertex(band.darts[i - 1]), Err::NotConnectingBand,
              "band walk is broken");
    bv.push_back(m.vertex_of(d));
  }
  bv.push_back(m.head_vertex(band.darts.back()));
  {
    std::vector<Dart> sorted = bv;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), Err::NotEmbedded,
            "band revisits a vertex");
  }

  auto on = [&](const CurveRef& c, Dart v) {
    for (Dart w : curve_vertices(m, c))
      if (w == v) return true;
    return false;
  };
  require(on(family.curves[slid], bv.front()), Err::NotConnectingBand,
          "band does not start on the slid curve");
  require(on(family.curves[over], bv.back()), Err::NotConnectingBand,
          "band does not end on the target curve");
  for (size_t i = 1; i + 1 < bv.size(); ++i) {
    require(!m.vertex_on_hole(bv[i]), Err::TouchesBoundary, "band touches the boundary");
    for (const CurveRef& c : family.curves)
      require(!on(c, bv[i]), Err::BandObstructed, "band runs through a family curve");
  }

  std::vector<char> config(m.dart_count(), 0);
  auto mark = [&](const std::vector<Dart>& ds) {
    for (Dart d : ds) config[d] = config[m.opp(d)] = 1;
  };
  mark(family.curves[slid].darts);
  mark(family.curves[over].darts);
  mark(band.darts);

  // The ribbon boundary component seen from the band is the band sum; the
  // other two run parallel to slid and over on their far sides.
  Route r = realize_closed_route(m, ribbon_crossings(m, config, band.darts[0]));

  SlideResult out{std::move(r.map), std::move(r.carry), {family.color, {}}};
  for (int i = 0; i < nf; ++i)
    out.family.curves.push_back(
        i == slid ? CurveRef{r.walk} : CurveRef{carry_walk(out.carry, family.curves[i].darts)});
  return out;
}

// --- standard position ----------------------------------------------------

// How a standard-position diagram decomposes: each non-residual handle
// carries either a dual pair (the two curves meet once and nothing else) or
// a parallel pair (disjoint from everything, jointly bounding an annulus);
// boundary-parallel curves ride along without consuming genus.  What is left
// of the surface is the page.
struct StandardnessReport {
  bool standard = false;
  std::vector<std::pair<int, int>> dual_pairs;      // (alpha index, beta index)
  std::vector<std::pair<int, int>> parallel_pairs;  // (alpha index, beta index)
  std::vector<int> boundary_parallel_alpha;
  std::vector<int> boundary_parallel_beta;
  int page_genus = 0;
  int page_boundary = 0;
  bool ambiguous = false;  // a parallel partner was not unique
  std::string reason;      // set when not standard
};

namespace detail {

// Curve parallel to a boundary component: cutting along it alone leaves an
// annulus bounded by one cut wall and one original hole.
inline bool boundary_parallel(const CombinatorialMap& m, const CurveRef& c) {
  Surgery s = cut_along(m, c);
  SurfaceSummary sum = s.map.classify();
  for (Dart wall : s.new_holes) {
    const ComponentSummary& side = sum.components[s.map.component_of(wall)];
    if (side.genus != 0 || side.boundary_count != 2) continue;
    for (int h = 0; h < m.hole_count(); ++h)
      if (s.map.component_of(m.holes()[h]) == s.map.component_of(wall)) return true;
  }
  return false;
}

// Disjoint curves jointly bounding an annulus: cut along both and look for a
// genus-zero component whose two holes are walls of the two different cuts.
inline bool parallel_curves(const CombinatorialMap& m, const CurveRef& a, const CurveRef& b) {
  Surgery sa = cut_along(m, a);
  Surgery sb = cut_along(sa.map, carry_curve(sa, b));
  SurfaceSummary sum = sb.map.classify();
  for (Dart wa : sa.new_holes)
    for (Dart wb : sb.new_holes) {
      int comp = sb.map.component_of(carry_walk(sb.carry, {wa})[0]);
      if (comp != sb.map.component_of(wb)) continue;
      const ComponentSummary& piece = sum.components[comp];
      if (piece.genus == 0 && piece.boundary_count == 2) return true;
    }
  return false;
}

}  // namespace detail

// Syntactic recognizer for standard position.  Purely combinatorial: no
// handleslides are attempted, so a diagram of a standard pair that is merely
// slide-equivalent to standard position is reported as not standard.
inline StandardnessReport is_standard_position(const SuturedHeegaardDiagram& d) {
  StandardnessReport rep;
  if (!validate_sutured(d).valid) {
    rep.reason = "diagram is not a valid sutured Heegaard diagram";
    return rep;
  }
  const CombinatorialMap& m = d.surface;
  const auto& A = d.alpha.curves;
  const auto& B = d.beta.curves;
  const int na = static_cast<int>(A.size());
  const int nb = static_cast<int>(B.size());
  if (na != nb) {
    rep.reason = "families have different sizes";
    return rep;
  }

  std::vector<std::vector<int>> cross(na, std::vector<int>(nb, 0));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      size_t shared = common_vertices(m, A[i], B[j]).size();
      cross[i][j] = crossing_count(m, A[i], B[j]);
      if (static_cast<size_t>(cross[i][j]) != shared) {
        rep.reason = "curves meet without crossing";
        return rep;
      }
    }

  std::vector<int> row(na, 0), col(nb, 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      row[i] += cross[i][j];
      col[j] += cross[i][j];
    }

  std::vector<char> used_a(na, 0), used_b(nb, 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      if (cross[i][j] == 0) continue;
      if (cross[i][j] != 1 || row[i] != 1 || col[j] != 1) {
        rep.reason = "a curve meets another more than once";
        return rep;
      }
      rep.dual_pairs.emplace_back(i, j);
      used_a[i] = used_b[j] = 1;
    }

  for (int i = 0; i < na; ++i)
    if (!used_a[i] && detail::boundary_parallel(m, A[i])) {
      rep.boundary_parallel_alpha.push_back(i);
      used_a[i] = 1;
    }
  for (int j = 0; j < nb; ++j)
    if (!used_b[j] && detail::boundary_parallel(m, B[j])) {
      rep.boundary_parallel_beta.push_back(j);
      used_b[j] = 1;
    }
  if (rep.boundary_parallel_alpha.size() != rep.boundary_parallel_beta.size()) {
    rep.reason = "families have unbalanced boundary-parallel curves";
    return rep;
  }

  for (int i = 0; i < na; ++i) {
    if (used_a[i]) continue;
    int partner = -1;
    for (int j = 0; j < nb; ++j) {
      if (used_b[j] || !detail::parallel_curves(m, A[i], B[j])) continue;
      if (partner >= 0) {
        rep.ambiguous = true;
        break;
      }
      partner = j;
    }
    if (partner < 0) {
      rep.reason = "a curve has no dual or parallel partner";
      return rep;
    }
    rep.parallel_pairs.emplace_back(i, partner);
    used_a[i] = used_b[partner] = 1;
  }
  for (int j = 0; j < nb; ++j)
    if (!used_b[j]) {
      rep.reason = "a curve has no dual or parallel partner";
      return rep;
    }

  SurfaceSummary sum = m.classify();
  rep.page_genus = sum.only().genus - static_cast<int>(rep.dual_pairs.size()) -
                   static_cast<int>(rep.parallel_pairs.size());
  rep.page_boundary = m.hole_count();
  rep.standard = true;
  return rep;
}

// Page parameters (genus, boundary components) of a standard-position
// diagram.
inline std::pair<int, int> page_of(const SuturedHeegaardDiagram& d) {
  StandardnessReport rep = is_standard_position(d);
  require(rep.standard, Err::NotInStandardPosition,
          rep.reason.empty() ? "diagram is not in standard position" : rep.reason);
  return {rep.page_genus, rep.page_boundary};
}

// --- trisection diagrams --------------------------------------------------

// All three pairwise sutured diagrams, plus the page consistency check: when
// the recognizer succeeds on a pair, its page must total expected_page.
inline ValidationReport validate_relative(const RelativeTrisectionDiagram& d) {
  ValidationReport rep;
  const std::pair<Color, Color> pairs[] = {{Color::alpha, Color::beta},
                                           {Color::beta, Color::gamma},
                                           {Color::alpha, Color::gamma}};
  int want_genus = 0, want_boundary = 0;
  for (const auto& [p, b] : d.expected_page) {
    want_genus += p;
    want_boundary += b;
  }
  for (const auto& [x, y] : pairs) {
    SuturedHeegaardDiagram pair = pair_diagram(d, x, y);
    ValidationReport sub = validate_sutured(pair);
    std::string tag = std::string(color_name(x)) + "/" + color_name(y);
    rep.valid = rep.valid && sub.valid;
    for (const std::string& p : sub.problems) rep.problems.push_back(tag + ": " + p);
    rep.systems.insert(rep.systems.end(), sub.systems.begin(), sub.systems.end());
    if (!d.expected_page.empty()) {
      StandardnessReport std_rep = is_standard_position(pair);
      if (std_rep.standard &&
          (std_rep.page_genus != want_genus || std_rep.page_boundary != want_boundary)) {
        rep.problems.push_back(tag + ": page does not match the expected page");
        rep.valid = false;
      }
    }
  }
  return rep;
}

// Closed trisection diagram: each family is a complete cut system of a
// handlebody, so compressing along it must leave a single sphere.
inline ValidationReport validate_trisection(const TrisectionDiagram& d) {
  ValidationReport rep;
  SurfaceSummary sum = d.surface.classify();
  if (!sum.connected() || d.surface.hole_count() != 0) {
    rep.problems.push_back("surface is not a closed connected surface");
    rep.valid = false;
    return rep;
  }
  const int g = sum.only().genus;
  const std::pair<const CurveFamily*, const char*> fams[] = {
      {&d.alpha, "alpha"}, {&d.beta, "beta"}, {&d.gamma, "gamma"}};
  for (const auto& [f, tag] : fams) {
    CutSystemReport& sys = rep.systems.emplace_back();
    if (static_cast<int>(f->curves.size()) != g) {
      rep.problems.push_back(std::string(tag) + ": family size differs from the genus");
      rep.valid = false;
      continue;
    }
    std::vector<std::string> problems;
    bool compressed = detail::family_checks(d.surface, *f, sys, problems);
    for (const std::string& p : problems) rep.problems.push_back(std::string(tag) + ": " + p);
    if (!compressed || !problems.empty()) {
      rep.valid = false;
      continue;
    }
    if (!(sys.compressed.connected() && sys.compressed.only().genus == 0 &&
          sys.compressed.only().boundary_count == 0)) {
      rep.problems.push_back(std::string(tag) + ": compressing does not yield a sphere");
      rep.valid = false;
    }
  }
  return rep;
}

}  // namespace trisect
