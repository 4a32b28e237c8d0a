#pragma once

// Rotation-system surfaces.
//
// A compact oriented surface (possibly disconnected, possibly with boundary)
// is stored as a half-edge map: darts are 0..n-1, `opposite` is the
// fixed-point-free involution pairing the two darts of each edge, and
// `next_at_vertex` is the counterclockwise rotation around the origin vertex
// of a dart.  Faces are the orbits of next_at_vertex(opposite(d)); a subset
// of faces is flagged as holes, i.e. boundary circles of the surface.
// Everything downstream (curves, surgery, diagram assembly) works on this
// structure, so this header also carries classification, mirroring and a
// canonical relabeling used for equality tests and stable serialization.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trisect {

using Dart = std::int32_t;
inline constexpr Dart kNoDart = -1;

enum class Err {
  MalformedMap,
  NotEmbedded,
  TouchesBoundary,
  FamilyNotDisjoint,
  OverlappingAttachments,
  IntervalNotOnBoundary,
  LengthMismatch,
  OrientationMismatch,
  BadTarget,
  BandObstructed,
  NotConnectingBand,
  NotInStandardPosition,
  InvalidIsomorphism,
  InconsistentOrbitData,
  BadParameters,
  NotFlipped,
  NotPreserved,
  ArcBasisNotTransverse,
  DerivationBudgetExceeded,
  PageMismatch,
  ArcEndpointMismatch,
  NoStabilizationFound,
  BoundaryNotTorus,
  SyntaxError,
  SemanticError,
  LayoutOverflow,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::MalformedMap: return "MalformedMap";
    case Err::NotEmbedded: return "NotEmbedded";
    case Err::TouchesBoundary: return "TouchesBoundary";
    case Err::FamilyNotDisjoint: return "FamilyNotDisjoint";
    case Err::OverlappingAttachments: return "OverlappingAttachments";
    case Err::IntervalNotOnBoundary: return "IntervalNotOnBoundary";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::OrientationMismatch: return "OrientationMismatch";
    case Err::BadTarget: return "BadTarget";
    case Err::BandObstructed: return "BandObstructed";
    case Err::NotConnectingBand: return "NotConnectingBand";
    case Err::NotInStandardPosition: return "NotInStandardPosition";
    case Err::InvalidIsomorphism: return "InvalidIsomorphism";
    case Err::InconsistentOrbitData: return "InconsistentOrbitData";
    case Err::BadParameters: return "BadParameters";
    case Err::NotFlipped: return "NotFlipped";
    case Err::NotPreserved: return "NotPreserved";
    case Err::ArcBasisNotTransverse: return "ArcBasisNotTransverse";
    case Err::DerivationBudgetExceeded: return "DerivationBudgetExceeded";
    case Err::PageMismatch: return "PageMismatch";
    case Err::ArcEndpointMismatch: return "ArcEndpointMismatch";
    case Err::NoStabilizationFound: return "NoStabilizationFound";
    case Err::BoundaryNotTorus: return "BoundaryNotTorus";
    case Err::SyntaxError: return "SyntaxError";
    case Err::SemanticError: return "SemanticError";
    case Err::LayoutOverflow: return "LayoutOverflow";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Error(Err kind, const std::string& msg, int line, int column)
      : std::runtime_error(std::string(err_name(kind)) + " at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + msg),
        kind_(kind),
        line_(line),
        column_(column) {}

  Err kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Err kind_;
  int line_ = -1;
  int column_ = -1;
};

inline void require(bool ok, Err kind, const std::string& msg) {
  if (!ok) throw Error(kind, msg);
}

// A closed walk of darts: head(darts[i]) == tail(darts[i+1]) cyclically.
struct CurveRef {
  std::vector<Dart> darts;

  bool operator==(const CurveRef& o) const { return darts == o.darts; }
};

// An open walk of darts.  Arcs proper run boundary to boundary; slide bands
// reuse the type with endpoints on curves instead.
struct ArcRef {
  std::vector<Dart> darts;

  bool operator==(const ArcRef& o) const { return darts == o.darts; }
};

struct ComponentSummary {
  int genus = 0;
  int boundary_count = 0;
  int euler = 0;
  Dart sample = kNoDart;  // least dart of the component

  bool operator==(const ComponentSummary& o) const {
    return genus == o.genus && boundary_count == o.boundary_count && euler == o.euler;
  }
};

struct SurfaceSummary {
  std::vector<ComponentSummary> components;  // ordered by least dart
  int closed_component_count = 0;

  bool connected() const { return components.size() == 1; }
  const ComponentSummary& only() const {
    require(connected(), Err::BadTarget, "surface is not connected");
    return components.front();
  }
};

class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  CombinatorialMap(std::vector<Dart> opposite, std::vector<Dart> next_at_vertex,
                   const std::vector<Dart>& boundary_faces = {})
      : opp_(std::move(opposite)), nxt_(std::move(next_at_vertex)) {
    validate_permutations();
    build_orbits();
    flag_holes(boundary_faces);
  }

  Dart dart_count() const { return static_cast<Dart>(opp_.size()); }

  Dart opp(Dart d) const { return opp_[d]; }
  Dart nxt(Dart d) const { return nxt_[d]; }
  Dart prv(Dart d) const { return prv_[d]; }
  // Walks the face orbit containing d.
  Dart face_next(Dart d) const { return nxt_[opp_[d]]; }
  Dart face_prev(Dart d) const { return opp_[prv_[d]]; }

  // Undirected edges are named by their least dart.
  Dart edge_rep(Dart d) const { return std::min(d, opp_[d]); }

  // Vertices and faces are named by the least dart of their orbit.
  Dart vertex_of(Dart d) const { return vert_of_[d]; }
  Dart face_of(Dart d) const { return face_of_[d]; }
  Dart head_vertex(Dart d) const { return vert_of_[opp_[d]]; }
  int component_of(Dart d) const { return comp_of_[d]; }
  int component_count() const { return comp_count_; }

  int vertex_count() const { return static_cast<int>(vert_reps_.size()); }
  int edge_count() const { return static_cast<int>(opp_.size() / 2); }
  int face_count() const { return static_cast<int>(face_reps_.size()); }
  int hole_count() const { return static_cast<int>(holes_.size()); }

  const std::vector<Dart>& vertices() const { return vert_reps_; }
  const std::vector<Dart>& faces() const { return face_reps_; }
  const std::vector<Dart>& holes() const { return holes_; }

  bool on_hole(Dart d) const { return on_hole_[d] != 0; }
  bool is_hole(Dart face_rep) const { return on_hole_[face_rep] != 0; }
  bool vertex_on_hole(Dart d) const { return vertex_hole_[d] != 0; }

  std::vector<Dart> vertex_cycle(Dart d) const {
    std::vector<Dart> out;
    Dart e = d;
    do {
      out.push_back(e);
      e = nxt_[e];
    } while (e != d);
    return out;
  }

  std::vector<Dart> face_cycle(Dart d) const {
    std::vector<Dart> out;
    Dart e = d;
    do {
      out.push_back(e);
      e = face_next(e);
    } while (e != d);
    return out;
  }

  int degree(Dart d) const {
    int k = 0;
    Dart e = d;
    do {
      ++k;
      e = nxt_[e];
    } while (e != d);
    return k;
  }

  int face_size(Dart d) const {
    int k = 0;
    Dart e = d;
    do {
      ++k;
      e = face_next(e);
    } while (e != d);
    return k;
  }

  SurfaceSummary classify() const {
    int nc = comp_count_;
    std::vector<int> v(nc, 0), f(nc, 0), b(nc, 0);
    std::vector<int> e(nc, 0);
    std::vector<Dart> sample(nc, kNoDart);
    for (Dart r : vert_reps_) ++v[comp_of_[r]];
    for (Dart r : face_reps_) {
      if (on_hole_[r])
        ++b[comp_of_[r]];
      else
        ++f[comp_of_[r]];
    }
    for (Dart d = 0; d < dart_count(); ++d) {
      if (sample[comp_of_[d]] == kNoDart) sample[comp_of_[d]] = d;
      if (d < opp_[d]) ++e[comp_of_[d]];
    }
    SurfaceSummary out;
    for (int c = 0; c < nc; ++c) {
      ComponentSummary cs;
      cs.euler = v[c] - e[c] + f[c];
      cs.boundary_count = b[c];
      int twice_genus = 2 - cs.boundary_count - cs.euler;
      require(twice_genus >= 0 && twice_genus % 2 == 0, Err::MalformedMap,
              "component is not an orientable surface");
      cs.genus = twice_genus / 2;
      cs.sample = sample[c];
      if (cs.boundary_count == 0) ++out.closed_component_count;
      out.components.push_back(cs);
    }
    return out;
  }

  // Same surface with reversed orientation.  Face orbits survive with their
  // darts replaced by their opposites, so hole flags transfer through opp.
  CombinatorialMap mirrored() const {
    std::vector<Dart> flags;
    flags.reserve(holes_.size());
    for (Dart h : holes_) flags.push_back(opp_[h]);
    return CombinatorialMap(opp_, prv_, flags);
  }

  bool operator==(const CombinatorialMap& o) const {
    return opp_ == o.opp_ && nxt_ == o.nxt_ && holes_ == o.holes_;
  }
  bool operator!=(const CombinatorialMap& o) const { return !(*this == o); }

 private:
  void validate_permutations() {
    const Dart n = dart_count();
    require(nxt_.size() == opp_.size(), Err::MalformedMap, "dart count mismatch");
    std::vector<char> seen(n, 0);
    for (Dart d = 0; d < n; ++d) {
      Dart e = nxt_[d];
      require(e >= 0 && e < n, Err::MalformedMap, "dart out of range in rotation");
      require(!seen[e], Err::MalformedMap, "rotation is not a permutation");
      seen[e] = 1;
    }
    for (Dart d = 0; d < n; ++d) {
      Dart e = opp_[d];
      require(e >= 0 && e < n, Err::MalformedMap, "dart out of range in involution");
      require(opp_[e] == d, Err::MalformedMap, "opposite is not an involution");
      require(e != d, Err::MalformedMap, "fixed-point in involution");
    }
    prv_.assign(n, kNoDart);
    for (Dart d = 0; d < n; ++d) prv_[nxt_[d]] = d;
  }

  // Orbit labels are the least dart of each orbit; computed by a backward
  // sweep so one pass suffices only for cycles, hence the explicit loops.
  static void label_orbits(const std::vector<Dart>& next, std::vector<Dart>& label,
                           std::vector<Dart>& reps) {
    const Dart n = static_cast<Dart>(next.size());
    label.assign(n, kNoDart);
    reps.clear();
    for (Dart d = 0; d < n; ++d) {
      if (label[d] != kNoDart) continue;
      reps.push_back(d);
      Dart e = d;
      do {
        label[e] = d;
        e = next[e];
      } while (e != d);
    }
  }

  void build_orbits() {
    const Dart n = dart_count();
    label_orbits(nxt_, vert_of_, vert_reps_);
    std::vector<Dart> fn(n);
    for (Dart d = 0; d < n; ++d) fn[d] = face_next(d);
    label_orbits(fn, face_of_, face_reps_);

    comp_of_.assign(n, -1);
    comp_count_ = 0;
    std::vector<Dart> stack;
    for (Dart d = 0; d < n; ++d) {
      if (comp_of_[d] >= 0) continue;
      stack.push_back(d);
      comp_of_[d] = comp_count_;
      while (!stack.empty()) {
        Dart e = stack.back();
        stack.pop_back();
        for (Dart f : {opp_[e], nxt_[e]}) {
          if (comp_of_[f] < 0) {
            comp_of_[f] = comp_count_;
            stack.push_back(f);
          }
        }
      }
      ++comp_count_;
    }
  }

  void flag_holes(const std::vector<Dart>& boundary_faces) {
    const Dart n = dart_count();
    on_hole_.assign(n, 0);
    holes_.clear();
    for (Dart d : boundary_faces) {
      require(d >= 0 && d < n, Err::MalformedMap, "boundary flag out of range");
      Dart r = face_of_[d];
      require(!on_hole_[r], Err::MalformedMap, "duplicate boundary face");
      holes_.push_back(r);
      Dart e = r;
      do {
        on_hole_[e] = 1;
        e = face_next(e);
      } while (e != r);
    }
    std::sort(holes_.begin(), holes_.end());
    vertex_hole_.assign(n, 0);
    for (Dart d = 0; d < n; ++d) {
      if (on_hole_[d]) vertex_hole_[vert_of_[d]] = 1;
    }
    for (Dart d = 0; d < n; ++d) vertex_hole_[d] = vertex_hole_[vert_of_[d]];
  }

  std::vector<Dart> opp_, nxt_, prv_;
  std::vector<Dart> vert_of_, face_of_;
  std::vector<Dart> vert_reps_, face_reps_, holes_;
  std::vector<char> on_hole_, vertex_hole_;
  std::vector<int> comp_of_;
  int comp_count_ = 0;
};

// ---- walk checks ----------------------------------------------------------

inline void require_closed_walk(const CombinatorialMap& m, const CurveRef& c) {
  require(!c.darts.empty(), Err::NotEmbedded, "empty curve");
  const Dart n = m.dart_count();
  for (size_t i = 0; i < c.darts.size(); ++i) {
    Dart d = c.darts[i];
    require(d >= 0 && d < n, Err::NotEmbedded, "curve dart out of range");
    Dart e = c.darts[(i + 1) % c.darts.size()];
    require(m.head_vertex(d) == m.vertex_of(e), Err::NotEmbedded, "curve walk is not closed");
  }
}

inline std::vector<Dart> curve_vertices(const CombinatorialMap& m, const CurveRef& c) {
  std::vector<Dart> vs;
  vs.reserve(c.darts.size());
  for (Dart d : c.darts) vs.push_back(m.vertex_of(d));
  return vs;
}

// Simple closed curve: closed walk visiting each vertex once, no edge reuse.
inline void require_embedded_curve(const CombinatorialMap& m, const CurveRef& c) {
  require_closed_walk(m, c);
  std::vector<Dart> vs = curve_vertices(m, c);
  std::sort(vs.begin(), vs.end());
  require(std::adjacent_find(vs.begin(), vs.end()) == vs.end(), Err::NotEmbedded,
          "curve revisits a vertex");
  std::vector<Dart> es;
  es.reserve(c.darts.size());
  for (Dart d : c.darts) es.push_back(m.edge_rep(d));
  std::sort(es.begin(), es.end());
  require(std::adjacent_find(es.begin(), es.end()) == es.end(), Err::NotEmbedded,
          "curve reuses an edge");
}

inline bool curve_touches_hole(const CombinatorialMap& m, const CurveRef& c) {
  for (Dart d : c.darts) {
    if (m.vertex_on_hole(d)) return true;
  }
  return false;
}

// Simple proper arc: endpoints on boundary faces, interior vertices off them.
inline void require_embedded_arc(const CombinatorialMap& m, const ArcRef& a) {
  require(!a.darts.empty(), Err::NotEmbedded, "empty arc");
  const Dart n = m.dart_count();
  std::vector<Dart> vs;
  for (size_t i = 0; i < a.darts.size(); ++i) {
    Dart d = a.darts[i];
    require(d >= 0 && d < n, Err::NotEmbedded, "arc dart out of range");
    if (i + 1 < a.darts.size())
      require(m.head_vertex(d) == m.vertex_of(a.darts[i + 1]), Err::NotEmbedded,
              "arc walk is broken");
    vs.push_back(m.vertex_of(d));
  }
  vs.push_back(m.head_vertex(a.darts.back()));
  require(m.vertex_on_hole(vs.front()), Err::NotEmbedded, "arc endpoint is interior");
  require(m.vertex_on_hole(vs.back()), Err::NotEmbedded, "arc endpoint is interior");
  for (size_t i = 1; i + 1 < vs.size(); ++i)
    require(!m.vertex_on_hole(vs[i]), Err::TouchesBoundary, "arc interior touches boundary");
  std::sort(vs.begin(), vs.end());
  require(std::adjacent_find(vs.begin(), vs.end()) == vs.end(), Err::NotEmbedded,
          "arc revisits a vertex");
}

// ---- relabeling and canonical form ----------------------------------------

// to_new must be a permutation of 0..n-1.
inline CombinatorialMap relabel(const CombinatorialMap& m, const std::vector<Dart>& to_new) {
  const Dart n = m.dart_count();
  require(static_cast<Dart>(to_new.size()) == n, Err::BadTarget, "relabeling size mismatch");
  std::vector<Dart> opp(n), nxt(n), flags;
  for (Dart d = 0; d < n; ++d) {
    opp[to_new[d]] = to_new[m.opp(d)];
    nxt[to_new[d]] = to_new[m.nxt(d)];
  }
  flags.reserve(m.holes().size());
  for (Dart h : m.holes()) flags.push_back(to_new[h]);
  return CombinatorialMap(std::move(opp), std::move(nxt), flags);
}

// Canonical labeling of one connected component.  Every dart of the component
// is tried as BFS root (frontier explored via opposite then rotation); the
// lexicographically least transcript of (opposite, rotation, hole flags) in
// the new labels wins.  All root choices achieving the minimum are kept so
// callers carrying extra structure (curve families) can break ties further.
struct ComponentCanonicalForm {
  std::vector<Dart> darts;                 // component darts, ascending, original labels
  std::vector<Dart> key;                   // winning transcript
  std::vector<std::vector<Dart>> winners;  // original dart -> local label (kNoDart elsewhere)
};

inline ComponentCanonicalForm component_canonical(const CombinatorialMap& m, int component) {
  const Dart n = m.dart_count();
  ComponentCanonicalForm out;
  for (Dart d = 0; d < n; ++d) {
    if (m.component_of(d) == component) out.darts.push_back(d);
  }
  const Dart sz = static_cast<Dart>(out.darts.size());

  std::vector<Dart> to_new(n, kNoDart), order;
  order.reserve(sz);
  std::vector<Dart> key;
  key.reserve(2 * sz + 8);

  for (Dart root : out.darts) {
    for (Dart d : order) to_new[d] = kNoDart;
    order.clear();
    key.clear();

    to_new[root] = 0;
    order.push_back(root);
    for (Dart i = 0; i < sz; ++i) {
      Dart d = order[i];
      for (Dart e : {m.opp(d), m.nxt(d)}) {
        if (to_new[e] == kNoDart) {
          to_new[e] = static_cast<Dart>(order.size());
          order.push_back(e);
        }
      }
    }
    key.push_back(sz);
    for (Dart i = 0; i < sz; ++i) {
      key.push_back(to_new[m.opp(order[i])]);
      key.push_back(to_new[m.nxt(order[i])]);
    }
    std::vector<Dart> hole_labels;
    for (Dart h : m.holes()) {
      if (m.component_of(h) != component) continue;
      Dart best = n;
      Dart e = h;
      do {
        best = std::min(best, to_new[e]);
        e = m.face_next(e);
      } while (e != h);
      hole_labels.push_back(best);
    }
    std::sort(hole_labels.begin(), hole_labels.end());
    key.push_back(static_cast<Dart>(hole_labels.size()));
    key.insert(key.end(), hole_labels.begin(), hole_labels.end());

    if (out.key.empty() || key < out.key) {
      out.key = key;
      out.winners.clear();
      out.winners.push_back(to_new);
    } else if (key == out.key) {
      out.winners.push_back(to_new);
    }
  }
  return out;
}

struct CanonicalResult {
  CombinatorialMap map;
  std::vector<Dart> to_new;  // original dart -> canonical dart
};

// Components are canonicalized independently, ordered by transcript (size
// first), and packed into one label range.
inline CanonicalResult canonicalize(const CombinatorialMap& m) {
  const Dart n = m.dart_count();
  std::vector<ComponentCanonicalForm> comps;
  comps.reserve(m.component_count());
  for (int c = 0; c < m.component_count(); ++c) comps.push_back(component_canonical(m, c));
  std::vector<int> by_key(comps.size());
  std::iota(by_key.begin(), by_key.end(), 0);
  std::stable_sort(by_key.begin(), by_key.end(),
                   [&](int a, int b) { return comps[a].key < comps[b].key; });

  CanonicalResult out;
  out.to_new.assign(n, kNoDart);
  Dart offset = 0;
  for (int c : by_key) {
    for (Dart d : comps[c].darts) out.to_new[d] = comps[c].winners.front()[d] + offset;
    offset += static_cast<Dart>(comps[c].darts.size());
  }
  out.map = relabel(m, out.to_new);
  return out;
}

inline bool equivalent(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.dart_count() != b.dart_count()) return false;
  return canonicalize(a).map == canonicalize(b).map;
}

}  // namespace trisect
