#pragma once

// Extremal families. Vertex id layout (documented so witness sets are reproducible):
//
//   stacked_triangulation(s)    0,1,2 the seed triangle; vertex k >= 3 is the k-th stacked vertex.
//   stacked_quadrangulation(s)  0..3 the seed 4-cycle; vertex k >= 4 is the k-th stacked vertex.
//   family_delta3(s)            0..s-1 triangulation (the witness); then three per face, in face-id order.
//   family_delta4(s)            0..s-1 quadrangulation (the witness); then two per face, in face-id order.
//   family_delta4_k5(k)         0,1 the shared edge (the witness); copy i owns 2+3i, 3+3i, 4+3i.
//   family_delta5/6/7(g)        0 is the hub v_s (the witness); block i owns the next 5/7/23 ids.
//   random_oneplanar(n, x, r)   0..n-2x-1 random stacked triangulation; then two per crossing.
//
// Canonical crossing patterns:
//   delta3, triangle (u,v,w): a joins u,v,w planar; b sits in (a,u,v), joins u,v
//     planar and crosses a-v to reach w; c sits beside u, joins u planar, crosses
//     b-u to reach v and a-u to reach w.
//   delta4, quad (u,v,w,x): a joins all four planar; b sits in (a,u,v), joins u,v
//     planar, crosses a-v to reach w and a-u to reach x.
//   K6: triangular prism with both diagonals in each of its three quads.
//   delta6 block: cube with both diagonals in each of its six quads.
//   delta7 block: rhombicuboctahedron (one vertex per corner of the cube's faces)
//     with both diagonals in each of its eighteen quads; every degree is 7.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "onepm/embedding.hpp"
#include "onepm/error.hpp"
#include "onepm/graph.hpp"

namespace onepm {

struct FamilyInstance {
  std::string name;
  Graph graph;
  OnePlanarDrawing drawing;
  int delta = 0;
  VertexSet witness;
  int predicted_deficiency = 0;
  int predicted_matching_upper = 0;
};

namespace detail {

inline Face face_of_dart(const OnePlanarDrawing& d, SegmentEnd dart) {
  for (Face& f : trace_faces(d))
    for (const SegmentEnd& h : f.walk)
      if (h == dart) return f;
  fail(Errc::invalid_drawing, "dart not found");
}

inline int find_edge(const OnePlanarDrawing& d, Vertex u, Vertex v) {
  const Edge key = Edge{u, v}.normalized();
  for (int e = 0; e < d.edge_count(); ++e)
    if (d.edge(e).normalized() == key) return e;
  fail(Errc::invalid_edge, "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

/// Star insertion addressed by vertex ids; returns the new vid.
inline Vertex star(OnePlanarDrawing& d, const Face& f, std::initializer_list<Vertex> attach) {
  std::vector<std::size_t> positions;
  for (Vertex v : attach) positions.push_back(corner_position(f, d.real_pid(v)));
  return add_star_at(d, f, positions);
}

/// Darts leaving vertex `vid`; each starts a distinct face around it.
inline std::vector<SegmentEnd> darts_from(const OnePlanarDrawing& d, Vertex vid) { return d.rotation(d.real_pid(vid)); }

inline Face face_by_vertices(const OnePlanarDrawing& d, std::initializer_list<Vertex> vids) {
  std::vector<int> pids;
  for (Vertex v : vids) pids.push_back(d.real_pid(v));
  std::optional<Face> found;
  for (Face& f : trace_faces(d)) {
    if (std::all_of(pids.begin(), pids.end(), [&](int p) { return f.has_corner(p); })) {
      if (found) fail(Errc::not_on_face, "vertex set does not identify a unique face");
      found = std::move(f);
    }
  }
  if (!found) fail(Errc::not_on_face, "no face has the requested vertices");
  return *found;
}

inline std::vector<Vertex> face_vertices(const OnePlanarDrawing& d, const Face& f) {
  std::vector<Vertex> out;
  for (int p : f.corners) out.push_back(d.pvertex(p).vid);
  return out;
}

inline OnePlanarDrawing triangle_drawing() { return from_rotation(3, {{1, 2}, {2, 0}, {0, 1}}); }

inline OnePlanarDrawing square_drawing() { return from_rotation(4, {{1, 3}, {2, 0}, {3, 1}, {0, 2}}); }

/// Both diagonals of the quadrilateral face `f`: one planar chord, one crossing it.
inline void cross_quad(OnePlanarDrawing& d, const Face& f) {
  const auto q = face_vertices(d, f);
  add_chord_at(d, f, 0, 2);
  add_crossing_edge(d, q[1], q[3], find_edge(d, q[0], q[2]));
}

/// Portable bounded draw from a 64-bit Mersenne Twister by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline OnePlanarDrawing stack_triangles(int s, std::mt19937_64* rng) {
  OnePlanarDrawing d = triangle_drawing();
  std::vector<SegmentEnd> open = {{0, 0}, {0, 1}};  // one dart per face, breadth-first
  std::size_t head = 0;
  for (Vertex k = 3; k < s; ++k) {
    const auto current = trace_faces(d);
    Face f;
    if (rng) {
      f = current[uniform_below(*rng, current.size())];
    } else {
      f = face_of_dart(d, open[head++]);
    }
    const Vertex z = add_star_at(d, f, {0, 1, 2});
    for (const SegmentEnd& h : darts_from(d, z)) open.push_back(h);
  }
  return d;
}

}  // namespace detail

/// Planar triangulation on s vertices grown from a triangle by stacking a
/// vertex into faces in breadth-first order.
inline OnePlanarDrawing stacked_triangulation(int s) {
  if (s < 3) fail(Errc::too_small, "stacked triangulation needs s >= 3");
  return detail::stack_triangles(s, nullptr);
}

/// Planar quadrangulation on s vertices grown from a 4-cycle; each step adds a
/// vertex adjacent to two opposite corners of a face, in breadth-first order.
inline OnePlanarDrawing stacked_quadrangulation(int s) {
  if (s < 4) fail(Errc::too_small, "stacked quadrangulation needs s >= 4");
  if (s % 2 != 0) fail(Errc::bad_parity, "stacked quadrangulation needs even s");
  OnePlanarDrawing d = detail::square_drawing();
  std::vector<SegmentEnd> open = {{0, 0}, {0, 1}};
  std::size_t head = 0;
  for (Vertex k = 4; k < s; ++k) {
    const Face f = detail::face_of_dart(d, open[head++]);
    const Vertex z = detail::add_star_at(d, f, {0, 2});
    for (const SegmentEnd& h : detail::darts_from(d, z)) open.push_back(h);
  }
  return d;
}

namespace detail {

inline FamilyInstance finish(std::string name, OnePlanarDrawing d, int delta, VertexSet witness, int deficiency) {
  FamilyInstance inst;
  inst.name = std::move(name);
  inst.graph = d.graph();
  inst.drawing = std::move(d);
  inst.delta = delta;
  inst.witness = std::move(witness);
  inst.predicted_deficiency = deficiency;
  inst.predicted_matching_upper = (inst.graph.vertex_count() - deficiency) / 2;
  return inst;
}

/// Three vertices adjacent to all of u, v, w inside the triangular face `f`.
inline void fill_triangle(OnePlanarDrawing& d, const Face& f) {
  const auto t = face_vertices(d, f);
  const Vertex u = t[0], v = t[1], w = t[2];
  const Vertex a = star(d, f, {u, v, w});
  const Vertex b = star(d, face_by_vertices(d, {a, u, v}), {u, v});
  add_crossing_edge(d, b, w, find_edge(d, a, v));
  const Vertex c = star(d, face_by_vertices(d, {a, u, b}), {u});
  add_crossing_edge(d, c, v, find_edge(d, b, u));
  add_crossing_edge(d, c, w, find_edge(d, a, u));
}

/// Two vertices adjacent to all of u, v, w, x inside the quadrilateral face `f`.
inline void fill_quad(OnePlanarDrawing& d, const Face& f) {
  const auto q = face_vertices(d, f);
  const Vertex u = q[0], v = q[1], w = q[2], x = q[3];
  const Vertex a = star(d, f, {u, v, w, x});
  const Vertex b = star(d, face_by_vertices(d, {a, u, v}), {u, v});
  add_crossing_edge(d, b, w, find_edge(d, a, v));
  add_crossing_edge(d, b, x, find_edge(d, a, u));
}

inline OnePlanarDrawing prism_k6() {
  OnePlanarDrawing d = from_rotation(6, {{1, 3, 2}, {2, 4, 0}, {0, 5, 1}, {0, 4, 5}, {1, 5, 3}, {2, 3, 4}});
  for (auto quad : {std::array<Vertex, 4>{0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5}})
    cross_quad(d, face_by_vertices(d, {quad[0], quad[1], quad[2], quad[3]}));
  return d;
}

inline OnePlanarDrawing cube() {
  return from_rotation(8, {{1, 4, 3}, {2, 5, 0}, {3, 6, 1}, {0, 7, 2}, {0, 5, 7}, {1, 6, 4}, {2, 7, 5}, {3, 4, 6}});
}

inline OnePlanarDrawing crossed_cube() {
  OnePlanarDrawing d = cube();
  std::vector<SegmentEnd> quads;
  for (const Face& f : trace_faces(d)) quads.push_back(f.walk[0]);
  for (const SegmentEnd& h : quads) cross_quad(d, face_of_dart(d, h));
  return d;
}

/// Rhombicuboctahedron built from the cube: one vertex per dart of the cube,
/// joined to the next and previous darts of its face and to its rotation neighbours.
inline OnePlanarDrawing rhombicuboctahedron() {
  const OnePlanarDrawing c = cube();
  const int darts = 2 * c.segment_count();
  std::vector<SegmentEnd> prev(static_cast<std::size_t>(darts));
  for (int i = 0; i < darts; ++i) {
    const SegmentEnd h{i / 2, i % 2};
    prev[c.next_in_face(h).index()] = h;
  }
  std::vector<std::vector<Vertex>> order(static_cast<std::size_t>(darts));
  for (int i = 0; i < darts; ++i) {
    const SegmentEnd h{i / 2, i % 2};
    const auto& rot = c.rotation(c.pid_at(h));
    const auto at = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), h) - rot.begin());
    const SegmentEnd succ = rot[(at + 1) % rot.size()];
    const SegmentEnd pred = rot[(at + rot.size() - 1) % rot.size()];
    order[i] = {c.next_in_face(h).index(), succ.index(), pred.index(), prev[i].index()};
  }
  return from_rotation(darts, order);
}

inline OnePlanarDrawing crossed_rhombicuboctahedron() {
  OnePlanarDrawing d = rhombicuboctahedron();
  std::vector<SegmentEnd> quads;
  for (const Face& f : trace_faces(d))
    if (f.size() == 4) quads.push_back(f.walk[0]);
  for (const SegmentEnd& h : quads) cross_quad(d, face_of_dart(d, h));
  return d;
}

inline FamilyInstance hub_family(std::string name, const OnePlanarDrawing& block, int g, int delta) {
  if (g < 1) fail(Errc::too_small, "need at least one block");
  OnePlanarDrawing d = block;
  for (int i = 1; i < g; ++i) d = glue_at_vertex(d, block, 0, 0);
  return finish(std::move(name), std::move(d), delta, VertexSet{0}, g - 1);
}

}  // namespace detail

/// K6 drawn as a triangular prism plus crossing quad diagonals.
inline OnePlanarDrawing canonical_k6() { return detail::prism_k6(); }

/// The cube Q3 drawn without crossings.
inline OnePlanarDrawing planar_cube() { return detail::cube(); }

/// Minimum degree 3: s-vertex triangulation with three vertices stacked on every face.
inline FamilyInstance family_delta3(int s) {
  if (s < 4) fail(Errc::too_small, "family_delta3 needs s >= 4");
  OnePlanarDrawing d = stacked_triangulation(s);
  std::vector<SegmentEnd> faces;
  for (const Face& f : detail::trace_faces(d)) faces.push_back(f.walk[0]);
  for (const SegmentEnd& h : faces) detail::fill_triangle(d, detail::face_of_dart(d, h));
  return detail::finish("delta3-s" + std::to_string(s), std::move(d), 3, VertexSet::range(0, s), 5 * s - 12);
}

/// Minimum degree 4: s-vertex quadrangulation with two vertices inside every face.
inline FamilyInstance family_delta4(int s) {
  OnePlanarDrawing d = stacked_quadrangulation(s);
  std::vector<SegmentEnd> faces;
  for (const Face& f : detail::trace_faces(d)) faces.push_back(f.walk[0]);
  for (const SegmentEnd& h : faces) detail::fill_quad(d, detail::face_of_dart(d, h));
  return detail::finish("delta4-s" + std::to_string(s), std::move(d), 4, VertexSet::range(0, s), s - 4);
}

/// Minimum degree 4: k copies of K5 sharing the edge (0, 1), nested around it.
inline FamilyInstance family_delta4_k5(int k) {
  if (k < 1) fail(Errc::too_small, "family_delta4_k5 needs k >= 1");
  OnePlanarDrawing d = from_rotation(2, {{1}, {0}});
  const SegmentEnd shared{0, 0};  // dart 0 -> 1
  for (int i = 0; i < k; ++i) {
    const Vertex x = detail::star(d, detail::face_of_dart(d, shared), {0, 1});
    const Vertex y = detail::star(d, detail::face_of_dart(d, shared), {0, 1, x});
    const Vertex z = detail::star(d, detail::face_by_vertices(d, {y, 1, x}), {y, 1, x});
    add_crossing_edge(d, z, 0, detail::find_edge(d, x, y));
  }
  // Each private triple is an odd component once the shared edge is removed.
  return detail::finish("delta4-k5-k" + std::to_string(k), std::move(d), 4, VertexSet{0, 1}, k - 2);
}

/// Minimum degree 5: g copies of K6 sharing the hub 0.
inline FamilyInstance family_delta5(int g) {
  return detail::hub_family("delta5-g" + std::to_string(g), detail::prism_k6(), g, 5);
}

/// Minimum degree 6: g crossed cubes sharing the hub 0.
inline FamilyInstance family_delta6(int g) {
  return detail::hub_family("delta6-g" + std::to_string(g), detail::crossed_cube(), g, 6);
}

/// The 24-vertex block of minimum degree 7 used by family_delta7.
inline OnePlanarDrawing delta7_block() { return detail::crossed_rhombicuboctahedron(); }

/// Minimum degree 7: g copies of the 24-vertex block sharing the hub 0.
inline FamilyInstance family_delta7(int g) {
  return detail::hub_family("delta7-g" + std::to_string(g), delta7_block(), g, 7);
}

/// Random stacked triangulation on n - 2*crossings vertices, then `crossings`
/// distinct faces (u,v,w) each receive a vertex a joined to u,v,w and a vertex
/// b joined to a, u and, across a-v, to w. Deterministic in its arguments;
/// draws come from std::mt19937_64 seeded with `seed`, reduced by rejection.
inline OnePlanarDrawing random_oneplanar(int n, int crossings, std::uint64_t seed) {
  if (n < 4) fail(Errc::too_small, "random_oneplanar needs n >= 4");
  if (crossings < 0) fail(Errc::too_many_crossings, "negative crossing count");
  const int base = n - 2 * crossings;
  if (base < 3 || crossings > 2 * base - 4)
    fail(Errc::too_many_crossings, std::to_string(crossings) + " crossings do not fit in " + std::to_string(n) + " vertices");
  std::mt19937_64 rng(seed);
  OnePlanarDrawing d = detail::stack_triangles(base, &rng);

  std::vector<SegmentEnd> faces;
  for (const Face& f : detail::trace_faces(d)) faces.push_back(f.walk[0]);
  for (std::size_t i = faces.size(); i > 1; --i) std::swap(faces[i - 1], faces[detail::uniform_below(rng, i)]);
  for (int c = 0; c < crossings; ++c) {
    const Face f = detail::face_of_dart(d, faces[c]);
    auto t = detail::face_vertices(d, f);
    std::rotate(t.begin(), t.begin() + static_cast<long>(detail::uniform_below(rng, 3)), t.end());
    const Vertex u = t[0], v = t[1], w = t[2];
    const Vertex a = detail::star(d, f, {u, v, w});
    const Vertex b = detail::star(d, detail::face_by_vertices(d, {a, u, v}), {a, u});
    add_crossing_edge(d, b, w, detail::find_edge(d, a, v));
  }
  return d;
}

}  // namespace onepm
