#pragma once

// Routing curves and arcs through a map.
//
// A route is planned as the list of edges it crosses, each named by its
// near-side dart (the dart lying on the face the route is in just before the
// crossing).  Realization subdivides every crossed edge at a fresh midpoint
// and chords consecutive midpoints through their common face, so the produced
// walk is automatically embedded, vertex-disjoint from everything existing,
// and transverse (degree-4, alternating) to the edges it crosses.  Faces may
// be revisited: each chord re-locates the current sub-face and fails loudly
// if an earlier chord separated the plan.

#include <functional>
#include <optional>

#include "trisect/surgery.hpp"

namespace trisect {

struct Route {
  CombinatorialMap map;
  std::vector<std::vector<Dart>> carry;  // input dart -> walk in result map
  std::vector<Dart> walk;                // the routed chord darts, in order
};

namespace routing_detail {

struct State {
  CombinatorialMap cur;
  std::vector<std::vector<Dart>> carry;

  explicit State(const CombinatorialMap& m) : cur(m), carry(identity_carry(m.dart_count())) {}

  void apply(Surgery&& s) {
    carry = compose_carry(s.carry, carry);
    cur = std::move(s.map);
  }
};

}  // namespace routing_detail

// Closed route: crossings[i] is the near-side dart of the i-th crossed edge.
// The walk comes back to its first midpoint, one chord per crossing.
inline Route realize_closed_route(const CombinatorialMap& m, const std::vector<Dart>& crossings) {
  require(!crossings.empty(), Err::BadTarget, "empty route");
  {
    std::vector<Dart> cs = crossings;
    std::sort(cs.begin(), cs.end());
    require(std::adjacent_find(cs.begin(), cs.end()) == cs.end(), Err::BadTarget,
            "route crosses a dart twice");
  }
  routing_detail::State st(m);
  std::vector<Dart> walk;

  Surgery first = subdivide_edge(st.cur, crossings[0]);
  const Dart first_near = first.made[0];
  Dart pos = first.made[1];
  st.apply(std::move(first));

  for (size_t i = 1; i < crossings.size(); ++i) {
    Surgery sub = subdivide_edge(st.cur, crossings[i]);
    const Dart near = sub.made[0], far = sub.made[1];
    st.apply(std::move(sub));
    Surgery chord = split_face(st.cur, pos, near);
    walk.push_back(chord.made[0]);
    st.apply(std::move(chord));
    pos = far;
  }
  Surgery wrap = split_face(st.cur, pos, first_near);
  walk.push_back(wrap.made[0]);
  st.apply(std::move(wrap));
  return Route{std::move(st.cur), std::move(st.carry), std::move(walk)};
}

// Open route from tail(start_anchor) to tail(end_anchor); the anchor darts
// also select the faces the route leaves from and arrives in.  k crossings
// produce k+1 chords.
inline Route realize_open_route(const CombinatorialMap& m, Dart start_anchor, Dart end_anchor,
                                const std::vector<Dart>& crossings) {
  routing_detail::State st(m);
  std::vector<Dart> walk;
  Dart pos = start_anchor;
  for (Dart c : crossings) {
    Surgery sub = subdivide_edge(st.cur, c);
    const Dart near = sub.made[0], far = sub.made[1];
    st.apply(std::move(sub));
    Surgery chord = split_face(st.cur, pos, near);
    walk.push_back(chord.made[0]);
    st.apply(std::move(chord));
    pos = far;
  }
  Surgery last = split_face(st.cur, pos, end_anchor);
  walk.push_back(last.made[0]);
  st.apply(std::move(last));
  return Route{std::move(st.cur), std::move(st.carry), std::move(walk)};
}

// Breadth-first route between two interior faces.  edge_ok(d) may veto
// crossing the edge of d; holes are never entered.  Returns the crossing
// plan, or nothing if no route exists.
inline std::optional<std::vector<Dart>> plan_face_route(
    const CombinatorialMap& m, Dart from_face, Dart to_face,
    const std::function<bool(Dart)>& edge_ok = {}) {
  from_face = m.face_of(from_face);
  to_face = m.face_of(to_face);
  require(!m.is_hole(from_face) && !m.is_hole(to_face), Err::BadTarget,
          "route endpoints must be interior faces");
  if (from_face == to_face) return std::vector<Dart>{};

  std::vector<Dart> via(m.dart_count(), kNoDart);  // face rep -> crossing dart into it
  std::vector<Dart> queue = {from_face};
  via[from_face] = from_face;  // sentinel
  for (size_t head = 0; head < queue.size(); ++head) {
    for (Dart d : m.face_cycle(queue[head])) {
      Dart next = m.face_of(m.opp(d));
      if (m.is_hole(next) || via[next] != kNoDart) continue;
      if (edge_ok && !edge_ok(d)) continue;
      via[next] = d;
      if (next == to_face) {
        std::vector<Dart> plan;
        for (Dart f = to_face; f != from_face; f = m.face_of(via[f])) plan.push_back(via[f]);
        std::reverse(plan.begin(), plan.end());
        return plan;
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

// Crossing plan for the boundary of a ribbon neighborhood of a configuration
// of interior walks (curves and bands, closed under opp).  Starting from the
// config dart `start`, walks the boundary orbit on its right-hand side and
// collects the non-config darts hanging off each visited vertex, in crossing
// order.  Distinct orbits give the distinct boundary components.
inline std::vector<Dart> ribbon_crossings(const CombinatorialMap& m,
                                          const std::vector<char>& config, Dart start) {
  require(start >= 0 && start < m.dart_count() && config[start], Err::BadTarget,
          "start dart is not in the configuration");
  std::vector<Dart> crossings;
  Dart d = start;
  do {
    Dart e = m.nxt(m.opp(d));
    while (!config[e]) {
      crossings.push_back(e);
      e = m.nxt(e);
    }
    d = e;
  } while (d != start);
  return crossings;
}

// Crossing plan for a cycle parallel to the given hole: every edge hanging
// off the hole's wall vertices, in the order the hole's link visits them.
inline std::vector<Dart> hole_spokes(const CombinatorialMap& m, Dart hole) {
  require(m.on_hole(hole), Err::BadTarget, "not a hole dart");
  std::vector<Dart> w = m.face_cycle(hole);
  const int L = static_cast<int>(w.size());
  std::vector<Dart> plan;
  for (int step = 0; step < L; ++step) {
    int i = (L - step) % L;  // vertex order: tail(w_0), tail(w_{L-1}), ..., tail(w_1)
    std::vector<Dart> fan = m.vertex_cycle(w[i]);
    // fan = (w_i, spokes..., opp(w_{i-1})); the ends flank the hole corner.
    for (size_t j = 1; j + 1 < fan.size(); ++j) plan.push_back(fan[j]);
  }
  return plan;
}

inline Route pushoff_hole(const CombinatorialMap& m, Dart hole) {
  std::vector<Dart> plan = hole_spokes(m, hole);
  require(!plan.empty(), Err::BadTarget, "hole link has no spokes to cross");
  return realize_closed_route(m, plan);
}

}  // namespace trisect
