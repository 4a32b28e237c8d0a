#pragma once

// Surgery on rotation-system surfaces: subdivision, chords, cutting along
// curves, compressions, band attachment, capping and boundary gluing.
//
// Every operation is pure: it returns a fresh map plus a carry table sending
// each old dart to its walk in the new map (empty for deleted darts).  Ops
// that only add darts keep the old indices, so curves tracked through a chain
// of subdivisions stay cheap to rewrite.

#include "trisect/core.hpp"

namespace trisect {

struct Surgery {
  CombinatorialMap map;
  std::vector<std::vector<Dart>> carry;  // old dart -> walk of new darts
  std::vector<Dart> made;                // fresh darts, in op-specific order
  std::vector<Dart> new_holes;           // a dart on each hole the op created
};

inline std::vector<std::vector<Dart>> identity_carry(Dart n) {
  std::vector<std::vector<Dart>> c(n);
  for (Dart d = 0; d < n; ++d) c[d] = {d};
  return c;
}

inline std::vector<Dart> carry_walk(const std::vector<std::vector<Dart>>& carry,
                                    const std::vector<Dart>& walk) {
  std::vector<Dart> out;
  for (Dart d : walk) {
    const auto& w = carry[d];
    require(!w.empty(), Err::BadTarget, "walk dart was removed by surgery");
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

inline CurveRef carry_curve(const Surgery& s, const CurveRef& c) {
  return CurveRef{carry_walk(s.carry, c.darts)};
}

inline ArcRef carry_arc(const Surgery& s, const ArcRef& a) {
  return ArcRef{carry_walk(s.carry, a.darts)};
}

// carry for the composite "inner then outer".
inline std::vector<std::vector<Dart>> compose_carry(const std::vector<std::vector<Dart>>& outer,
                                                    const std::vector<std::vector<Dart>>& inner) {
  std::vector<std::vector<Dart>> out(inner.size());
  for (size_t d = 0; d < inner.size(); ++d) {
    for (Dart e : inner[d]) {
      const auto& w = outer[e];
      out[d].insert(out[d].end(), w.begin(), w.end());
    }
  }
  return out;
}

// Splits edge {d, opp(d)} at a new midpoint vertex.  made = {p, q} where p
// continues d's direction from the midpoint and q = opp points back; the new
// edge pairs are {d, q} and {p, old opp(d)}.
inline Surgery subdivide_edge(const CombinatorialMap& m, Dart d) {
  const Dart n = m.dart_count();
  require(d >= 0 && d < n, Err::BadTarget, "dart out of range");
  const Dart e = m.opp(d), p = n, q = n + 1;
  std::vector<Dart> opp(n + 2), nxt(n + 2);
  for (Dart i = 0; i < n; ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  opp[d] = q;
  opp[q] = d;
  opp[p] = e;
  opp[e] = p;
  nxt[p] = q;
  nxt[q] = p;

  Surgery s{CombinatorialMap(std::move(opp), std::move(nxt), m.holes()), identity_carry(n),
            {p, q},
            {}};
  s.carry[d] = {d, p};
  s.carry[e] = {e, q};
  return s;
}

// Adds a chord edge across the interior face containing both a and b, from
// tail(a) to tail(b).  made = {p, q}: p runs tail(a) -> tail(b).  The face
// splits into (q, a, ..) and (p, b, ..).
inline Surgery split_face(const CombinatorialMap& m, Dart a, Dart b) {
  const Dart n = m.dart_count();
  require(a >= 0 && a < n && b >= 0 && b < n, Err::BadTarget, "dart out of range");
  require(a != b, Err::BadTarget, "chord needs two corners");
  require(m.face_of(a) == m.face_of(b), Err::BadTarget, "corners on different faces");
  require(!m.on_hole(a), Err::BadTarget, "cannot chord across a hole");
  const Dart p = n, q = n + 1;
  std::vector<Dart> opp(n + 2), nxt(n + 2);
  for (Dart i = 0; i < n; ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  opp[p] = q;
  opp[q] = p;
  nxt[m.prv(a)] = p;
  nxt[p] = a;
  nxt[m.prv(b)] = q;
  nxt[q] = b;

  Surgery s{CombinatorialMap(std::move(opp), std::move(nxt), m.holes()), identity_carry(n),
            {p, q},
            {}};
  return s;
}

// Cuts the surface open along an interior simple closed curve.  All old darts
// survive: the curve's own darts become the wall of the left-hand hole, and a
// fresh copy of the curve (made) walls the right-hand hole.
// new_holes = {left rep, right rep}.
inline Surgery cut_along(const CombinatorialMap& m, const CurveRef& c) {
  require_embedded_curve(m, c);
  require(!curve_touches_hole(m, c), Err::TouchesBoundary, "curve touches the boundary");
  const Dart n = m.dart_count();
  const int k = static_cast<int>(c.darts.size());

  std::vector<Dart> opp(n + 2 * k), nxt(n + 2 * k);
  for (Dart i = 0; i < n; ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  auto tb = [&](int i) { return static_cast<Dart>(n + 2 * ((i + k) % k)); };
  auto ub = [&](int i) { return static_cast<Dart>(n + 2 * ((i + k) % k) + 1); };
  for (int i = 0; i < k; ++i) {
    opp[tb(i)] = ub(i);
    opp[ub(i)] = tb(i);
  }
  for (int i = 0; i < k; ++i) {
    const Dart t = c.darts[i];
    const Dart u = m.opp(c.darts[(i + k - 1) % k]);  // backward dart at tail(t)
    // Right-hand side of the rotation at this vertex moves to the new copy.
    std::vector<Dart> ys;
    for (Dart e = m.nxt(u); e != t; e = m.nxt(e)) ys.push_back(e);
    nxt[u] = t;
    nxt[tb(i)] = ub(i - 1);
    if (ys.empty()) {
      nxt[ub(i - 1)] = tb(i);
    } else {
      nxt[ub(i - 1)] = ys.front();
      nxt[ys.back()] = tb(i);
    }
  }
  std::vector<Dart> flags = m.holes();
  flags.push_back(c.darts[0]);
  flags.push_back(ub(0));

  Surgery s{CombinatorialMap(std::move(opp), std::move(nxt), flags), identity_carry(n), {}, {}};
  for (int i = 0; i < k; ++i) {
    s.made.push_back(tb(i));
    s.made.push_back(ub(i));
  }
  s.new_holes = {c.darts[0], ub(0)};
  return s;
}

// Fills the hole containing d with a disk.
inline Surgery cap_hole(const CombinatorialMap& m, Dart d) {
  require(d >= 0 && d < m.dart_count(), Err::BadTarget, "dart out of range");
  require(m.on_hole(d), Err::BadTarget, "face is not a hole");
  std::vector<Dart> flags;
  for (Dart h : m.holes()) {
    if (h != m.face_of(d)) flags.push_back(h);
  }
  std::vector<Dart> opp(m.dart_count()), nxt(m.dart_count());
  for (Dart i = 0; i < m.dart_count(); ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  return Surgery{CombinatorialMap(std::move(opp), std::move(nxt), flags),
                 identity_carry(m.dart_count()),
                 {},
                 {}};
}

// Removes the open disk bounded by the face of d, turning it into a hole.
inline Surgery open_face(const CombinatorialMap& m, Dart d) {
  require(d >= 0 && d < m.dart_count(), Err::BadTarget, "dart out of range");
  require(!m.on_hole(d), Err::BadTarget, "face is already a hole");
  std::vector<Dart> flags = m.holes();
  flags.push_back(m.face_of(d));
  std::vector<Dart> opp(m.dart_count()), nxt(m.dart_count());
  for (Dart i = 0; i < m.dart_count(); ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  Surgery s{CombinatorialMap(std::move(opp), std::move(nxt), flags),
            identity_carry(m.dart_count()),
            {},
            {}};
  s.new_holes = {d};
  return s;
}

// Cut along every curve of the family and cap all the new holes.
inline Surgery compress_along(const CombinatorialMap& m, const std::vector<CurveRef>& family) {
  std::vector<Dart> all;
  for (const CurveRef& c : family) {
    require_embedded_curve(m, c);
    require(!curve_touches_hole(m, c), Err::TouchesBoundary, "curve touches the boundary");
    for (Dart d : c.darts) all.push_back(m.vertex_of(d));
  }
  std::sort(all.begin(), all.end());
  require(std::adjacent_find(all.begin(), all.end()) == all.end(), Err::FamilyNotDisjoint,
          "curves share a vertex");

  CombinatorialMap cur = m;
  for (const CurveRef& c : family) {
    Surgery s = cut_along(cur, c);
    Surgery s2 = cap_hole(s.map, s.new_holes[0]);
    cur = cap_hole(s2.map, s.new_holes[1]).map;
  }
  return Surgery{std::move(cur), identity_carry(m.dart_count()), {}, {}};
}

// Attaches a band (a new quad face) to the boundary along the hole edges d1
// and d2.  The edges must not share endpoints.  made = {x, xo, y, yo}: the
// band's free sides, x running head(d1) -> tail(d2) and y running
// head(d2) -> tail(d1).  Distinct holes merge; a single hole splits in two.
inline Surgery attach_band(const CombinatorialMap& m, Dart d1, Dart d2) {
  const Dart n = m.dart_count();
  require(d1 >= 0 && d1 < n && d2 >= 0 && d2 < n, Err::BadTarget, "dart out of range");
  require(m.on_hole(d1) && m.on_hole(d2), Err::IntervalNotOnBoundary,
          "attachment edge is not on a hole");
  Dart vs[4] = {m.vertex_of(d1), m.head_vertex(d1), m.vertex_of(d2), m.head_vertex(d2)};
  std::sort(std::begin(vs), std::end(vs));
  require(std::adjacent_find(std::begin(vs), std::end(vs)) == std::end(vs),
          Err::OverlappingAttachments, "attachment edges share a vertex");

  const bool same_hole = m.face_of(d1) == m.face_of(d2);
  const Dart x = n, xo = n + 1, y = n + 2, yo = n + 3;
  std::vector<Dart> opp(n + 4), nxt(n + 4);
  for (Dart i = 0; i < n; ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  opp[x] = xo;
  opp[xo] = x;
  opp[y] = yo;
  opp[yo] = y;
  nxt[x] = m.nxt(m.opp(d1));
  nxt[m.opp(d1)] = x;
  nxt[xo] = d2;
  nxt[m.prv(d2)] = xo;
  nxt[y] = m.nxt(m.opp(d2));
  nxt[m.opp(d2)] = y;
  nxt[yo] = d1;
  nxt[m.prv(d1)] = yo;

  std::vector<Dart> flags;
  for (Dart h : m.holes()) {
    if (h != m.face_of(d1) && h != m.face_of(d2)) flags.push_back(h);
  }
  flags.push_back(yo);
  if (same_hole) flags.push_back(xo);

  Surgery s{CombinatorialMap(std::move(opp), std::move(nxt), flags), identity_carry(n),
            {x, xo, y, yo},
            {}};
  s.new_holes = same_hole ? std::vector<Dart>{xo, yo} : std::vector<Dart>{yo};
  return s;
}

// A band spanning several boundary edges at once, subdivided into cells by
// parallel rungs.  The attachment intervals are consecutive wall darts
// starting at e0 (nE edges) and f0 (nF edges); a rung joins interior interval
// vertex s on side 1 to interior vertex t on side 2, and the rung list must
// run forward along side 1 and backward along side 2 so the rungs stay
// disjoint.  Euler characteristic drops by exactly one however many rungs the
// band carries.  made = {x, xo, y, yo} followed by one dart pair per rung,
// the first of each running side 1 -> side 2.
inline Surgery attach_ladder(const CombinatorialMap& m, Dart e0, int nE, Dart f0, int nF,
                             const std::vector<std::pair<int, int>>& rungs = {}) {
  require(nE >= 1 && nF >= 1, Err::BadTarget, "empty attachment interval");
  require(m.on_hole(e0) && m.on_hole(f0), Err::IntervalNotOnBoundary,
          "attachment interval is not on a hole");
  std::vector<Dart> E{e0}, F{f0};
  for (int i = 1; i < nE; ++i) E.push_back(m.face_next(E.back()));
  for (int i = 1; i < nF; ++i) F.push_back(m.face_next(F.back()));
  {
    std::vector<Dart> vs;
    for (Dart d : E) vs.push_back(m.vertex_of(d));
    vs.push_back(m.head_vertex(E.back()));
    for (Dart d : F) vs.push_back(m.vertex_of(d));
    vs.push_back(m.head_vertex(F.back()));
    std::sort(vs.begin(), vs.end());
    require(std::adjacent_find(vs.begin(), vs.end()) == vs.end(), Err::OverlappingAttachments,
            "attachment intervals revisit a vertex");
  }
  for (size_t r = 0; r < rungs.size(); ++r) {
    auto [s, t] = rungs[r];
    require(s >= 1 && s < nE && t >= 1 && t < nF, Err::BadTarget, "rung foot outside interval");
    if (r > 0) {
      require(s > rungs[r - 1].first && t < rungs[r - 1].second, Err::OrientationMismatch,
              "rungs must advance on side 1 and retreat on side 2");
    }
  }

  const bool same_hole = m.face_of(e0) == m.face_of(f0);
  const Dart n = m.dart_count();
  const Dart x = n, xo = n + 1, y = n + 2, yo = n + 3;
  std::vector<Dart> opp(n + 4), nxt(n + 4);
  for (Dart i = 0; i < n; ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  opp[x] = xo;
  opp[xo] = x;
  opp[y] = yo;
  opp[yo] = y;
  nxt[x] = m.nxt(m.opp(E.back()));
  nxt[m.opp(E.back())] = x;
  nxt[xo] = f0;
  nxt[m.prv(f0)] = xo;
  nxt[y] = m.nxt(m.opp(F.back()));
  nxt[m.opp(F.back())] = y;
  nxt[yo] = e0;
  nxt[m.prv(e0)] = yo;

  std::vector<Dart> flags;
  for (Dart h : m.holes()) {
    if (h != m.face_of(e0) && h != m.face_of(f0)) flags.push_back(h);
  }
  flags.push_back(yo);
  if (same_hole) flags.push_back(xo);

  Surgery s{CombinatorialMap(std::move(opp), std::move(nxt), flags), identity_carry(n),
            {x, xo, y, yo},
            {}};
  s.new_holes = same_hole ? std::vector<Dart>{xo, yo} : std::vector<Dart>{yo};
  for (auto [sv, tv] : rungs) {
    Surgery c = split_face(s.map, carry_walk(s.carry, {E[sv]})[0], carry_walk(s.carry, {F[tv]})[0]);
    s.carry = compose_carry(c.carry, s.carry);
    for (Dart& d : s.made) d = c.carry[d][0];
    for (Dart& d : s.new_holes) d = c.carry[d][0];
    s.made.push_back(c.made[0]);
    s.made.push_back(c.made[1]);
    s.map = std::move(c.map);
  }
  return s;
}

// Slits the surface open along a properly embedded arc running between hole
// vertices.  As with cut_along, the arc's own darts wall one side of the slit
// and fresh copies (made) wall the other.  Distinct holes merge into one;
// a single hole splits in two.
inline Surgery cut_along_arc(const CombinatorialMap& m, const ArcRef& arc) {
  require_embedded_arc(m, arc);
  const int L = static_cast<int>(arc.darts.size());
  const Dart v0 = m.vertex_of(arc.darts[0]);
  const Dart vE = m.head_vertex(arc.darts[L - 1]);
  require(m.vertex_on_hole(v0) && m.vertex_on_hole(vE), Err::IntervalNotOnBoundary,
          "arc endpoints must sit on the boundary");
  for (int i = 0; i + 1 < L; ++i) {
    require(!m.vertex_on_hole(m.head_vertex(arc.darts[i])), Err::TouchesBoundary,
            "arc interior touches the boundary");
  }
  for (Dart d : arc.darts) {
    require(!m.on_hole(d) && !m.on_hole(m.opp(d)), Err::BadTarget, "arc runs along a wall");
  }
  // The unique wall darts leaving the endpoint vertices.
  auto wall_out = [&](Dart v) {
    Dart found = kNoDart;
    for (Dart d : m.vertex_cycle(v)) {
      if (m.on_hole(d)) {
        require(found == kNoDart, Err::BadTarget, "hole passes the endpoint twice");
        found = d;
      }
    }
    require(found != kNoDart, Err::IntervalNotOnBoundary, "endpoint is not on a hole");
    return found;
  };
  const Dart h0 = wall_out(v0), h1 = wall_out(vE);

  const Dart n = m.dart_count();
  std::vector<Dart> opp(n + 2 * L), nxt(n + 2 * L);
  for (Dart i = 0; i < n; ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  auto tb = [&](int i) { return static_cast<Dart>(n + 2 * (i - 1)); };      // i in 1..L
  auto ub = [&](int i) { return static_cast<Dart>(n + 2 * (i - 1) + 1); };  // opp of tb(i)
  for (int i = 1; i <= L; ++i) {
    opp[tb(i)] = ub(i);
    opp[ub(i)] = tb(i);
  }
  // Interior arc vertices split exactly as under cut_along.
  for (int i = 1; i < L; ++i) {
    const Dart t = arc.darts[i];
    const Dart u = m.opp(arc.darts[i - 1]);
    std::vector<Dart> ys;
    for (Dart e = m.nxt(u); e != t; e = m.nxt(e)) ys.push_back(e);
    nxt[u] = t;
    nxt[tb(i + 1)] = ub(i);
    if (ys.empty()) {
      nxt[ub(i)] = tb(i + 1);
    } else {
      nxt[ub(i)] = ys.front();
      nxt[ys.back()] = tb(i + 1);
    }
  }
  // At the start the fan between the returning wall dart and the arc stays
  // put while the rest moves across the slit with the old wall dart.
  {
    const Dart d1 = arc.darts[0];
    std::vector<Dart> right;  // h0 .. up to the dart before d1
    for (Dart e = h0; e != d1; e = m.nxt(e)) right.push_back(e);
    nxt[m.opp(m.face_prev(h0))] = d1;
    right.insert(right.begin(), tb(1));
    for (size_t t = 0; t < right.size(); ++t) nxt[right[t]] = right[(t + 1) % right.size()];
  }
  // At the far end the wall dart ahead of the slit stays with the arc side.
  {
    const Dart o = m.opp(arc.darts[L - 1]);
    std::vector<Dart> right;  // after o, up to and including the returning wall dart
    const Dart oh = m.opp(m.face_prev(h1));
    for (Dart e = m.nxt(o); e != h1; e = m.nxt(e)) right.push_back(e);
    require(!right.empty() && right.back() == oh, Err::BadTarget, "arc approaches the far hole from the wrong side");
    nxt[o] = h1;
    right.insert(right.begin(), ub(L));
    for (size_t t = 0; t < right.size(); ++t) nxt[right[t]] = right[(t + 1) % right.size()];
  }

  std::vector<Dart> flags;
  for (Dart h : m.holes()) {
    if (h != m.face_of(h0) && h != m.face_of(h1)) flags.push_back(h);
  }
  // The slit walls join the old holes into one or two new boundary walks.
  {
    std::vector<char> seen(n + 2 * L, 0);
    for (Dart start : {arc.darts[0], ub(1)}) {
      if (seen[start]) continue;
      Dart d = start;
      do {
        seen[d] = 1;
        d = nxt[opp[d]];
      } while (d != start);
      flags.push_back(start);
    }
  }

  Surgery s{CombinatorialMap(std::move(opp), std::move(nxt), flags), identity_carry(n), {}, {}};
  for (int i = 1; i <= L; ++i) {
    s.made.push_back(tb(i));
    s.made.push_back(ub(i));
  }
  s.new_holes = {arc.darts[0]};
  if (s.map.face_of(ub(1)) != s.map.face_of(arc.darts[0])) s.new_holes.push_back(ub(1));
  return s;
}

// Opens a puncture inside an interior face: a stem from the corner at
// vertex_of(d) leads to a fresh vertex carrying a one-edge loop, and the disk
// inside the loop becomes a hole.  made = {stem, stem back, loop, loop back};
// the loop's back dart walls the new hole.
inline Surgery puncture_face(const CombinatorialMap& m, Dart d) {
  const Dart n = m.dart_count();
  require(d >= 0 && d < n, Err::BadTarget, "dart out of range");
  require(!m.on_hole(d), Err::BadTarget, "cannot puncture a hole");
  const Dart st = n, sb = n + 1, lp = n + 2, lb = n + 3;
  std::vector<Dart> opp(n + 4), nxt(n + 4);
  for (Dart i = 0; i < n; ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  opp[st] = sb;
  opp[sb] = st;
  opp[lp] = lb;
  opp[lb] = lp;
  nxt[m.prv(d)] = st;
  nxt[st] = d;
  nxt[sb] = lp;
  nxt[lp] = lb;
  nxt[lb] = sb;

  std::vector<Dart> flags = m.holes();
  flags.push_back(lb);
  Surgery s{CombinatorialMap(std::move(opp), std::move(nxt), flags), identity_carry(n),
            {st, sb, lp, lb},
            {}};
  s.new_holes = {lb};
  return s;
}

// Glues two distinct holes along an orientation-reversing matching of their
// walls, anchored so that the edge of a1 is identified with the edge of a2.
// Both hole walls are deleted and the map is re-indexed (see carry).
inline Surgery glue_boundary_circles(const CombinatorialMap& m, Dart a1, Dart a2) {
  const Dart n = m.dart_count();
  require(a1 >= 0 && a1 < n && a2 >= 0 && a2 < n, Err::BadTarget, "dart out of range");
  require(m.on_hole(a1) && m.on_hole(a2), Err::BadTarget, "gluing needs hole darts");
  require(m.face_of(a1) != m.face_of(a2), Err::BadTarget, "cannot glue a hole to itself");
  std::vector<Dart> w1 = m.face_cycle(a1);
  std::vector<Dart> w2 = m.face_cycle(a2);
  const int L = static_cast<int>(w1.size());
  require(static_cast<int>(w2.size()) == L, Err::LengthMismatch,
          "hole walls have different lengths");
  {
    std::vector<Dart> vs;
    for (Dart d : w1) vs.push_back(m.vertex_of(d));
    for (Dart d : w2) vs.push_back(m.vertex_of(d));
    std::sort(vs.begin(), vs.end());
    require(std::adjacent_find(vs.begin(), vs.end()) == vs.end(), Err::BadTarget,
            "hole walls touch each other");
  }

  std::vector<char> dead(n, 0);
  for (Dart d : w1) dead[d] = 1;
  for (Dart d : w2) dead[d] = 1;

  std::vector<Dart> opp(n), nxt(n);
  for (Dart i = 0; i < n; ++i) {
    opp[i] = m.opp(i);
    nxt[i] = m.nxt(i);
  }
  auto at2 = [&](int i) { return w2[((L - i) % L + L) % L]; };
  for (int i = 0; i < L; ++i) {
    Dart o1 = m.opp(w1[i]), o2 = m.opp(at2(i));
    opp[o1] = o2;
    opp[o2] = o1;
  }
  for (int i = 0; i < L; ++i) {
    // Merge tail(w1[i]) with head(at2(i)); the dead dart at the latter vertex
    // is the next wall dart of hole 2.
    Dart dead2 = at2(i - 1);
    std::vector<Dart> cycle;
    for (Dart e = m.nxt(w1[i]); e != w1[i]; e = m.nxt(e)) cycle.push_back(e);
    for (Dart e = m.nxt(dead2); e != dead2; e = m.nxt(e)) cycle.push_back(e);
    for (size_t t = 0; t < cycle.size(); ++t) nxt[cycle[t]] = cycle[(t + 1) % cycle.size()];
  }

  std::vector<Dart> trans(n, kNoDart);
  Dart m2 = 0;
  for (Dart d = 0; d < n; ++d) {
    if (!dead[d]) trans[d] = m2++;
  }
  std::vector<Dart> opp2(m2), nxt2(m2), flags;
  for (Dart d = 0; d < n; ++d) {
    if (dead[d]) continue;
    opp2[trans[d]] = trans[opp[d]];
    nxt2[trans[d]] = trans[nxt[d]];
  }
  for (Dart h : m.holes()) {
    if (h != m.face_of(a1) && h != m.face_of(a2)) flags.push_back(trans[h]);
  }

  Surgery s{CombinatorialMap(std::move(opp2), std::move(nxt2), flags), {}, {}, {}};
  s.carry.resize(n);
  for (Dart d = 0; d < n; ++d) {
    if (!dead[d]) s.carry[d] = {trans[d]};
  }
  return s;
}

// Validates a full wall correspondence against the anchored matching and then
// glues.  pairs[i] = (dart on hole 1, the dart its edge is glued to).
inline Surgery glue_boundary_circles(const CombinatorialMap& m,
                                     const std::vector<std::pair<Dart, Dart>>& pairs) {
  require(!pairs.empty(), Err::BadTarget, "empty identification");
  const Dart a1 = pairs[0].first, a2 = pairs[0].second;
  require(a1 >= 0 && a1 < m.dart_count() && a2 >= 0 && a2 < m.dart_count(), Err::BadTarget,
          "dart out of range");
  require(m.on_hole(a1) && m.on_hole(a2), Err::BadTarget, "gluing needs hole darts");
  std::vector<Dart> w1 = m.face_cycle(a1);
  std::vector<Dart> w2 = m.face_cycle(a2);
  const int L = static_cast<int>(w1.size());
  require(static_cast<int>(w2.size()) == L, Err::LengthMismatch,
          "hole walls have different lengths");
  for (const auto& [u, v] : pairs) {
    auto i1 = std::find(w1.begin(), w1.end(), u);
    auto i2 = std::find(w2.begin(), w2.end(), v);
    require(i1 != w1.end() && i2 != w2.end(), Err::BadTarget,
            "identified dart is not on the glued holes");
    int i = static_cast<int>(i1 - w1.begin());
    int j = static_cast<int>(i2 - w2.begin());
    require(j == (L - i) % L, Err::OrientationMismatch,
            "identification does not reverse orientation");
  }
  return glue_boundary_circles(m, a1, a2);
}

// Side-by-side union; darts of b are shifted by a.dart_count().
inline CombinatorialMap disjoint_union(const CombinatorialMap& a, const CombinatorialMap& b) {
  const Dart na = a.dart_count(), nb = b.dart_count();
  std::vector<Dart> opp(na + nb), nxt(na + nb), flags;
  for (Dart d = 0; d < na; ++d) {
    opp[d] = a.opp(d);
    nxt[d] = a.nxt(d);
  }
  for (Dart d = 0; d < nb; ++d) {
    opp[na + d] = na + b.opp(d);
    nxt[na + d] = na + b.nxt(d);
  }
  for (Dart h : a.holes()) flags.push_back(h);
  for (Dart h : b.holes()) flags.push_back(na + h);
  return CombinatorialMap(std::move(opp), std::move(nxt), flags);
}

// Spec-facing subdivision entry point: subdivide the edge of d and return the
// re-indexing through Surgery::carry.
inline Surgery refine(const CombinatorialMap& m, Dart d) { return subdivide_edge(m, d); }

}  // namespace trisect
