#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "onepm/error.hpp"
#include "onepm/graph.hpp"
#include "onepm/rational.hpp"

namespace onepm {

/// One end of a planarization segment: `end == 0` sits at `Segment::a`,
/// `end == 1` at `Segment::b`. Read as a dart, it leaves the pvertex it sits at.
struct SegmentEnd {
  int segment = 0;
  int end = 0;

  SegmentEnd twin() const { return {segment, 1 - end}; }
  int index() const { return 2 * segment + end; }

  friend bool operator==(const SegmentEnd&, const SegmentEnd&) = default;
  friend auto operator<=>(const SegmentEnd&, const SegmentEnd&) = default;
};

/// A planarization vertex: an original vertex, or a crossing of two edges.
struct PVertex {
  bool dummy = false;
  Vertex vid = -1;   // real only
  int edge_a = -1;   // dummy only
  int edge_b = -1;   // dummy only
};

/// A curve between two pvertices, carrying part 0 or 1 of an original edge.
/// Part 0 starts at the edge's first endpoint; part 1 ends at its second.
struct Segment {
  int a = 0;
  int b = 0;
  int edge = 0;
  int part = 0;
};

/// Combinatorial 1-planar drawing, stored as its planarization: real and
/// dummy pvertices, segments, and a rotation (cyclic order of segment ends)
/// at every pvertex. Faces are traced with next(h) = successor of twin(h)
/// in the rotation around twin(h).
class OnePlanarDrawing {
 public:
  OnePlanarDrawing() = default;
  explicit OnePlanarDrawing(EdgeMode mode) : mode_(mode) {}

  // --- construction primitives; validate() catches misuse ---

  int add_real(Vertex vid) {
    pvertices_.push_back({false, vid, -1, -1});
    rotations_.emplace_back();
    if (vid >= static_cast<Vertex>(real_pid_.size())) real_pid_.resize(static_cast<std::size_t>(vid) + 1, -1);
    real_pid_[vid] = pvertex_count() - 1;
    return pvertex_count() - 1;
  }

  int add_dummy(int edge_a, int edge_b) {
    pvertices_.push_back({true, -1, edge_a, edge_b});
    rotations_.emplace_back();
    return pvertex_count() - 1;
  }

  int add_edge(Vertex u, Vertex v) {
    edges_.push_back({u, v});
    return edge_count() - 1;
  }

  int add_segment(int a, int b, int edge, int part) {
    segments_.push_back({a, b, edge, part});
    return segment_count() - 1;
  }

  void set_rotation(int pid, std::vector<SegmentEnd> ends) { rotations_.at(pid) = std::move(ends); }

  /// Places `fresh` directly before `anchor` in the rotation at `pid`.
  void insert_before(int pid, SegmentEnd fresh, std::optional<SegmentEnd> anchor) {
    auto& rot = rotations_.at(pid);
    if (!anchor) {
      rot.push_back(fresh);
      return;
    }
    auto it = std::find(rot.begin(), rot.end(), *anchor);
    if (it == rot.end()) fail(Errc::invalid_drawing, "rotation anchor missing");
    rot.insert(it, fresh);
  }

  void replace_end(int pid, SegmentEnd from, SegmentEnd to) {
    auto& rot = rotations_.at(pid);
    auto it = std::find(rot.begin(), rot.end(), from);
    if (it == rot.end()) fail(Errc::invalid_drawing, "rotation entry missing");
    *it = to;
  }

  void set_segment(int sid, Segment seg) { segments_.at(sid) = seg; }
  void set_pvertex(int pid, PVertex pv) { pvertices_.at(pid) = pv; }
  void set_mode(EdgeMode mode) { mode_ = mode; }

  // --- queries ---

  EdgeMode mode() const { return mode_; }
  int pvertex_count() const { return static_cast<int>(pvertices_.size()); }
  int segment_count() const { return static_cast<int>(segments_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int real_count() const { return static_cast<int>(real_pid_.size()); }
  int dummy_count() const {
    return static_cast<int>(std::count_if(pvertices_.begin(), pvertices_.end(), [](const PVertex& p) { return p.dummy; }));
  }

  const std::vector<PVertex>& pvertices() const { return pvertices_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const PVertex& pvertex(int pid) const { return pvertices_.at(pid); }
  const Segment& segment(int sid) const { return segments_.at(sid); }
  const Edge& edge(int eid) const { return edges_.at(eid); }
  const std::vector<SegmentEnd>& rotation(int pid) const { return rotations_.at(pid); }

  int real_pid(Vertex vid) const {
    if (vid < 0 || vid >= real_count() || real_pid_[vid] < 0)
      fail(Errc::bad_vertex, "no real pvertex for vertex " + std::to_string(vid));
    return real_pid_[vid];
  }

  int pid_at(SegmentEnd h) const {
    const Segment& s = segments_.at(h.segment);
    return h.end == 0 ? s.a : s.b;
  }

  /// Next dart along the face to the left of `h` under the tracing rule.
  SegmentEnd next_in_face(SegmentEnd h) const {
    const SegmentEnd t = h.twin();
    const auto& rot = rotations_[pid_at(t)];
    const auto it = std::find(rot.begin(), rot.end(), t);
    const auto pos = static_cast<std::size_t>(it - rot.begin());
    return rot[(pos + 1) % rot.size()];
  }

  /// Segment ids carrying edge `eid`, ordered by part.
  std::vector<int> edge_segments(int eid) const {
    std::vector<int> out;
    for (int s = 0; s < segment_count(); ++s)
      if (segments_[s].edge == eid) out.push_back(s);
    std::sort(out.begin(), out.end(), [&](int x, int y) { return segments_[x].part < segments_[y].part; });
    return out;
  }

  /// Per edge: does it pass through a dummy?
  std::vector<char> crossed_flags() const {
    std::vector<char> crossed(static_cast<std::size_t>(edge_count()), 0);
    for (const Segment& s : segments_)
      if (s.edge >= 0 && s.edge < edge_count() && (pvertices_[s.a].dummy || pvertices_[s.b].dummy)) crossed[s.edge] = 1;
    return crossed;
  }

  bool is_crossed(int eid) const { return crossed_flags().at(eid) != 0; }

  /// Underlying abstract graph on the real vertices.
  Graph graph() const { return build_graph(real_count(), std::span<const Edge>(edges_), mode_); }

 private:
  std::vector<PVertex> pvertices_;
  std::vector<Segment> segments_;
  std::vector<Edge> edges_;
  std::vector<std::vector<SegmentEnd>> rotations_;
  std::vector<int> real_pid_;
  EdgeMode mode_ = EdgeMode::simple;
};

/// A face of the planarization: the closed dart walk and the pvertex each dart leaves.
struct Face {
  int id = 0;
  std::vector<SegmentEnd> walk;
  std::vector<int> corners;

  std::size_t size() const { return walk.size(); }
  bool has_corner(int pid) const { return std::find(corners.begin(), corners.end(), pid) != corners.end(); }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

/// Traces every face; faces are numbered by their smallest dart index and each
/// walk starts at that dart. Assumes the rotation system is structurally sound.
inline std::vector<Face> trace_faces(const OnePlanarDrawing& d) {
  const int darts = 2 * d.segment_count();
  std::vector<int> pos(static_cast<std::size_t>(darts), -1);
  for (int p = 0; p < d.pvertex_count(); ++p) {
    const auto& rot = d.rotation(p);
    for (std::size_t i = 0; i < rot.size(); ++i) pos[rot[i].index()] = static_cast<int>(i);
  }
  std::vector<char> used(static_cast<std::size_t>(darts), 0);
  std::vector<Face> faces;
  for (int start = 0; start < darts; ++start) {
    if (used[start]) continue;
    Face f;
    f.id = static_cast<int>(faces.size());
    SegmentEnd h{start / 2, start % 2};
    while (!used[h.index()]) {
      used[h.index()] = 1;
      f.walk.push_back(h);
      f.corners.push_back(d.pid_at(h));
      const SegmentEnd t = h.twin();
      const auto& rot = d.rotation(d.pid_at(t));
      h = rot[(static_cast<std::size_t>(pos[t.index()]) + 1) % rot.size()];
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

/// Connected components of the planarization, as a component id per pvertex.
inline std::pair<int, std::vector<int>> planarization_components(const OnePlanarDrawing& d) {
  const int np = d.pvertex_count();
  std::vector<int> parent(static_cast<std::size_t>(np));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Segment& s : d.segments()) parent[find(s.a)] = find(s.b);
  std::vector<int> comp(static_cast<std::size_t>(np), -1);
  std::map<int, int> ids;
  for (int p = 0; p < np; ++p) {
    const int r = find(p);
    auto [it, fresh] = ids.emplace(r, static_cast<int>(ids.size()));
    comp[p] = it->second;
  }
  return {static_cast<int>(ids.size()), comp};
}

/// Two distinct segments bounding a face. The single face of a lone edge
/// (one segment seen from both sides) does not count.
inline bool is_bigon(const Face& f) { return f.size() == 2 && f.walk[0].segment != f.walk[1].segment; }

inline bool face_is_current(const OnePlanarDrawing& d, const Face& f) {
  if (f.walk.empty()) return false;
  for (std::size_t i = 0; i < f.walk.size(); ++i) {
    const SegmentEnd h = f.walk[i];
    if (h.segment < 0 || h.segment >= d.segment_count() || h.end < 0 || h.end > 1) return false;
    if (d.pid_at(h) != f.corners[i]) return false;
    if (!(d.next_in_face(h) == f.walk[(i + 1) % f.walk.size()])) return false;
  }
  return true;
}

}  // namespace detail

/// Lists every violated structural invariant; an empty report means valid.
inline ValidationReport validate(const OnePlanarDrawing& d) {
  ValidationReport report;
  auto bad = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const int np = d.pvertex_count();
  const int ns = d.segment_count();
  const int ne = d.edge_count();

  std::vector<int> real_seen(static_cast<std::size_t>(d.real_count()), 0);
  for (int p = 0; p < np; ++p) {
    const PVertex& pv = d.pvertex(p);
    if (!pv.dummy) {
      if (pv.vid < 0 || pv.vid >= d.real_count()) bad("pvertex " + std::to_string(p) + " has bad vertex id");
      else ++real_seen[pv.vid];
    } else if (pv.edge_a < 0 || pv.edge_a >= ne || pv.edge_b < 0 || pv.edge_b >= ne || pv.edge_a == pv.edge_b) {
      bad("dummy " + std::to_string(p) + " has bad crossing edge ids");
    }
  }
  for (int v = 0; v < d.real_count(); ++v)
    if (real_seen[v] != 1) bad("vertex " + std::to_string(v) + " appears " + std::to_string(real_seen[v]) + " times");

  bool structural = report.ok();
  for (int s = 0; s < ns; ++s) {
    const Segment& seg = d.segment(s);
    if (seg.a < 0 || seg.a >= np || seg.b < 0 || seg.b >= np || seg.a == seg.b || seg.edge < 0 || seg.edge >= ne ||
        seg.part < 0 || seg.part > 1) {
      bad("segment " + std::to_string(s) + " is malformed");
      structural = false;
    }
  }
  if (!structural) return report;

  // Every segment end occurs exactly once, in the rotation of the pvertex it sits at.
  std::vector<int> end_seen(static_cast<std::size_t>(2 * ns), 0);
  for (int p = 0; p < np; ++p) {
    for (const SegmentEnd& h : d.rotation(p)) {
      if (h.segment < 0 || h.segment >= ns || h.end < 0 || h.end > 1) {
        bad("rotation at " + std::to_string(p) + " names a missing segment end");
        structural = false;
        continue;
      }
      ++end_seen[h.index()];
      if (d.pid_at(h) != p) {
        bad("segment end " + std::to_string(h.segment) + "." + std::to_string(h.end) + " listed at wrong pvertex " +
            std::to_string(p));
        structural = false;
      }
    }
  }
  for (int i = 0; i < 2 * ns; ++i) {
    if (end_seen[i] != 1) {
      bad("segment end " + std::to_string(i / 2) + "." + std::to_string(i % 2) + " appears " +
          std::to_string(end_seen[i]) + " times in rotations");
      structural = false;
    }
  }
  if (!structural) {
    for (int p = 0; p < np; ++p)
      if (d.pvertex(p).dummy && d.rotation(p).size() != 4) bad("dummy " + std::to_string(p) + " degree != 4");
    return report;
  }

  // Edge to segment consistency; at most one crossing per edge.
  std::vector<std::vector<int>> by_edge(static_cast<std::size_t>(ne));
  for (int s = 0; s < ns; ++s) by_edge[d.segment(s).edge].push_back(s);
  for (int e = 0; e < ne; ++e) {
    const Edge& ed = d.edge(e);
    const std::string tag = "edge " + std::to_string(e);
    if (ed.u == ed.v) bad(tag + " is a loop");
    if (ed.u < 0 || ed.u >= d.real_count() || ed.v < 0 || ed.v >= d.real_count()) {
      bad(tag + " has an endpoint out of range");
      continue;
    }
    const int pu = d.real_pid(ed.u);
    const int pv = d.real_pid(ed.v);
    auto& segs = by_edge[e];
    std::sort(segs.begin(), segs.end(), [&](int x, int y) { return d.segment(x).part < d.segment(y).part; });
    if (segs.size() == 1) {
      const Segment& s = d.segment(segs[0]);
      if (s.part != 0 || s.a != pu || s.b != pv) bad(tag + " uncrossed segment does not join its endpoints");
    } else if (segs.size() == 2) {
      const Segment& s0 = d.segment(segs[0]);
      const Segment& s1 = d.segment(segs[1]);
      if (s0.part != 0 || s1.part != 1 || s0.a != pu || s1.b != pv || s0.b != s1.a) {
        bad(tag + " crossed segments do not meet at one crossing");
      } else {
        const PVertex& c = d.pvertex(s0.b);
        if (!c.dummy || (c.edge_a != e && c.edge_b != e)) bad(tag + " passes through a pvertex that is not its crossing");
      }
    } else {
      bad(tag + " has " + std::to_string(segs.size()) + " segments (more than one crossing or missing)");
    }
  }

  // Dummies: degree 4 with the two crossing edges alternating.
  for (int p = 0; p < np; ++p) {
    const PVertex& pv = d.pvertex(p);
    const auto& rot = d.rotation(p);
    if (!pv.dummy) {
      for (const SegmentEnd& h : rot) {
        const Segment& s = d.segment(h.segment);
        const Edge& ed = d.edge(s.edge);
        if (ed.u != pv.vid && ed.v != pv.vid)
          bad("vertex " + std::to_string(pv.vid) + " carries a segment of non-incident edge " + std::to_string(s.edge));
      }
      continue;
    }
    const std::string tag = "dummy " + std::to_string(p);
    if (rot.size() != 4) {
      bad(tag + " degree != 4");
      continue;
    }
    for (std::size_t i = 0; i < 4; ++i) {
      const int e0 = d.segment(rot[i].segment).edge;
      const int e1 = d.segment(rot[(i + 1) % 4].segment).edge;
      if (e0 == e1) bad(tag + " rotation does not alternate between its crossing edges");
      if (e0 != pv.edge_a && e0 != pv.edge_b) bad(tag + " carries a segment of a foreign edge");
    }
    const Edge& ea = d.edge(pv.edge_a);
    const Edge& eb = d.edge(pv.edge_b);
    if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v)
      bad(tag + " is a crossing of two edges that share an endpoint");
  }

  if (d.mode() == EdgeMode::simple) {
    std::vector<Edge> pairs;
    for (const Edge& e : d.edges()) pairs.push_back(e.normalized());
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
      if (pairs[i] == pairs[i + 1])
        bad("parallel edges between " + std::to_string(pairs[i].u) + " and " + std::to_string(pairs[i].v) + " in simple mode");
  }
  if (!report.ok()) return report;

  const auto faces = detail::trace_faces(d);
  for (const Face& f : faces)
    if (detail::is_bigon(f)) bad("face " + std::to_string(f.id) + " is a bigon");

  // Euler's formula per component of the planarization; an isolated pvertex
  // contributes one face with an empty walk.
  const auto [ncomp, comp] = detail::planarization_components(d);
  std::vector<long> euler(static_cast<std::size_t>(ncomp), 0);
  std::vector<int> comp_degree(static_cast<std::size_t>(ncomp), 0);
  for (int p = 0; p < np; ++p) {
    euler[comp[p]] += 1;
    comp_degree[comp[p]] += static_cast<int>(d.rotation(p).size());
  }
  for (const Segment& s : d.segments()) euler[comp[s.a]] -= 1;
  for (const Face& f : faces) euler[comp[f.corners[0]]] += 1;
  for (int c = 0; c < ncomp; ++c) {
    if (comp_degree[c] == 0) euler[c] += 1;
    if (euler[c] != 2) bad("planarization component " + std::to_string(c) + " violates Euler's formula (not planar)");
  }
  return report;
}

inline void require_valid(const OnePlanarDrawing& d) {
  const auto report = validate(d);
  if (!report.ok()) fail(Errc::invalid_drawing, report.violations.front());
}

/// All faces of a valid, connected drawing.
inline std::vector<Face> faces(const OnePlanarDrawing& d) {
  require_valid(d);
  if (detail::planarization_components(d).first > 1) fail(Errc::invalid_drawing, "drawing is disconnected");
  return detail::trace_faces(d);
}

/// Faces bounded by exactly two segments.
inline std::vector<Face> bigons(const OnePlanarDrawing& d) {
  std::vector<Face> out;
  for (Face& f : detail::trace_faces(d))
    if (detail::is_bigon(f)) out.push_back(std::move(f));
  return out;
}

struct CrossingPartition {
  std::vector<int> crossed;
  std::vector<int> uncrossed;
};

inline CrossingPartition crossing_partition(const OnePlanarDrawing& d) {
  CrossingPartition part;
  const auto flags = d.crossed_flags();
  for (int e = 0; e < d.edge_count(); ++e) (flags[e] ? part.crossed : part.uncrossed).push_back(e);
  return part;
}

struct BoundCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// Half the crossed plus all uncrossed edges of a bipartite bigon-free
/// drawing, against 2n - 4.
inline BoundCheck check_observation1(const OnePlanarDrawing& d, const std::pair<VertexSet, VertexSet>& sides) {
  require_valid(d);
  const int n = d.real_count();
  if (n < 3) fail(Errc::too_small, "need at least 3 vertices");
  sides.first.require_within(n);
  sides.second.require_within(n);
  for (Vertex v = 0; v < n; ++v)
    if (sides.first.contains(v) == sides.second.contains(v))
      fail(Errc::not_bipartite, "vertex " + std::to_string(v) + " is not on exactly one side");
  for (const Edge& e : d.edges())
    if (sides.first.contains(e.u) == sides.first.contains(e.v))
      fail(Errc::not_bipartite, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") inside one side");
  if (!bigons(d).empty()) fail(Errc::bigon_present, "drawing has a bigon");
  const auto part = crossing_partition(d);
  BoundCheck out;
  out.lhs = Rational(static_cast<std::int64_t>(part.crossed.size()), 2) + Rational(static_cast<std::int64_t>(part.uncrossed.size()));
  out.rhs = Rational(2 * n - 4);
  out.holds = out.lhs <= out.rhs;
  return out;
}

/// Degree plus number of incident uncrossed edges, for the real pvertex `pid`.
inline int crossing_weighted_degree(const OnePlanarDrawing& d, int pid) {
  if (pid < 0 || pid >= d.pvertex_count() || d.pvertex(pid).dummy)
    fail(Errc::bad_vertex, "pvertex " + std::to_string(pid) + " is not a real vertex");
  int weight = 0;
  for (const SegmentEnd& h : d.rotation(pid)) {
    const Segment& s = d.segment(h.segment);
    const int other = h.end == 0 ? s.b : s.a;
    weight += d.pvertex(other).dummy ? 1 : 2;
  }
  return weight;
}

// --- surgery ---------------------------------------------------------------

namespace detail {

/// Adds a segment for `edge`/`part` from the corner at walk position `i` to
/// the corner at position `j` of face `f`, splitting it in two.
inline int split_face(OnePlanarDrawing& d, const Face& f, std::size_t i, std::size_t j, int edge, int part) {
  const int pa = f.corners[i];
  const int pb = f.corners[j];
  const int sid = d.add_segment(pa, pb, edge, part);
  d.insert_before(pa, {sid, 0}, f.walk[i]);
  d.insert_before(pb, {sid, 1}, f.walk[j]);
  return sid;
}

/// Sizes of the two faces produced by joining walk positions i and j.
inline std::pair<std::size_t, std::size_t> split_sizes(std::size_t k, std::size_t i, std::size_t j) {
  const std::size_t first = 1 + (i + k - j) % k;   // new dart, walk j..i-1
  const std::size_t second = 1 + (j + k - i) % k;  // reverse dart, walk i..j-1
  return {first, second};
}

inline std::size_t corner_position(const Face& f, int pid) {
  const auto it = std::find(f.corners.begin(), f.corners.end(), pid);
  if (it == f.corners.end()) fail(Errc::not_on_face, "pvertex " + std::to_string(pid) + " is not a corner of face " + std::to_string(f.id));
  return static_cast<std::size_t>(it - f.corners.begin());
}

inline void require_current(const OnePlanarDrawing& d, const Face& f) {
  if (!face_is_current(d, f)) fail(Errc::not_on_face, "face " + std::to_string(f.id) + " is not a face of this drawing");
}

/// Adds a new uncrossed edge between walk positions i and j of `f` in place.
inline int add_chord_at(OnePlanarDrawing& d, const Face& f, std::size_t i, std::size_t j) {
  const int pu = f.corners[i];
  const int pv = f.corners[j];
  if (pu == pv) fail(Errc::invalid_edge, "chord would be a loop");
  const auto [s1, s2] = split_sizes(f.size(), i, j);
  if (s1 <= 2 || s2 <= 2) fail(Errc::would_create_bigon, "chord would bound a two-sided face");
  const Vertex u = d.pvertex(pu).vid;
  const Vertex v = d.pvertex(pv).vid;
  if (d.mode() == EdgeMode::simple) {
    for (const Edge& e : d.edges())
      if (e.normalized() == Edge{u, v}.normalized())
        fail(Errc::duplicate_edge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
  }
  const int eid = d.add_edge(u, v);
  split_face(d, f, i, j, eid, 0);
  return eid;
}

/// Inserts a new real vertex inside `f` joined by uncrossed edges to the
/// corners at the given walk positions (distinct, any order). Returns its vid.
inline Vertex add_star_at(OnePlanarDrawing& d, const Face& f, std::vector<std::size_t> positions) {
  std::sort(positions.begin(), positions.end());
  const Vertex vid = d.real_count();
  const int z = d.add_real(vid);
  std::vector<SegmentEnd> z_ends;
  for (std::size_t pos : positions) {
    const int corner = f.corners[pos];
    const int eid = d.add_edge(d.pvertex(corner).vid, vid);
    const int sid = d.add_segment(corner, z, eid, 0);
    d.insert_before(corner, {sid, 0}, f.walk[pos]);
    z_ends.push_back({sid, 1});
  }
  // Attachments in walk order get reverse cyclic order around the new vertex.
  std::vector<SegmentEnd> rot;
  rot.push_back(z_ends.front());
  for (std::size_t k = z_ends.size(); k-- > 1;) rot.push_back(z_ends[k]);
  d.set_rotation(z, std::move(rot));
  return vid;
}

}  // namespace detail

/// Returns `d` with a new uncrossed edge (u, v) drawn inside face `f`; u and
/// v are pvertex ids of real corners, joined at their first occurrences.
inline OnePlanarDrawing add_chord_in_face(const OnePlanarDrawing& d, const Face& f, int u, int v) {
  detail::require_current(d, f);
  const std::size_t i = detail::corner_position(f, u);
  const std::size_t j = detail::corner_position(f, v);
  if (d.pvertex(u).dummy || d.pvertex(v).dummy) fail(Errc::not_on_face, "chord endpoints must be real corners");
  OnePlanarDrawing out = d;
  detail::add_chord_at(out, f, i, j);
  return out;
}

/// Returns `d` with a new real vertex inside `f` joined to three distinct real corners.
inline OnePlanarDrawing insert_vertex_in_face(const OnePlanarDrawing& d, const Face& f, std::span<const int> attach) {
  detail::require_current(d, f);
  std::set<int> distinct(attach.begin(), attach.end());
  if (attach.size() != 3 || distinct.size() != 3) fail(Errc::bad_attachment, "need three distinct attachment corners");
  std::vector<std::size_t> positions;
  for (int pid : attach) {
    if (d.pvertex(pid).dummy) fail(Errc::bad_attachment, "cannot attach to a crossing");
    positions.push_back(detail::corner_position(f, pid));
  }
  OnePlanarDrawing out = d;
  detail::add_star_at(out, f, positions);
  return out;
}

inline OnePlanarDrawing insert_vertex_in_face(const OnePlanarDrawing& d, const Face& f, std::initializer_list<int> attach) {
  return insert_vertex_in_face(d, f, std::span<const int>(attach.begin(), attach.size()));
}

/// Builds a drawing without crossings from cyclic neighbour orders. Edge ids
/// follow ascending (u, v) with u < v; segment id equals edge id.
inline OnePlanarDrawing from_rotation(int n, const std::vector<std::vector<Vertex>>& order, EdgeMode mode = EdgeMode::simple) {
  if (static_cast<int>(order.size()) != n) fail(Errc::invalid_drawing, "rotation table size mismatch");
  OnePlanarDrawing d(mode);
  for (Vertex v = 0; v < n; ++v) d.add_real(v);
  std::map<Edge, int> ids;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : order[u])
      if (u < v) ids.emplace(Edge{u, v}, 0);
  for (auto& [e, id] : ids) {
    id = d.add_edge(e.u, e.v);
    d.add_segment(e.u, e.v, id, 0);
  }
  for (Vertex u = 0; u < n; ++u) {
    std::vector<SegmentEnd> rot;
    for (Vertex v : order[u]) {
      const auto it = ids.find(Edge{u, v}.normalized());
      if (it == ids.end()) fail(Errc::invalid_drawing, "rotation table is not symmetric");
      rot.push_back({it->second, u < v ? 0 : 1});
    }
    d.set_rotation(u, std::move(rot));
  }
  return d;
}

/// The unique face whose corner set includes all of `pids`.
inline Face face_with_corners(const OnePlanarDrawing& d, std::initializer_list<int> pids) {
  std::optional<Face> found;
  for (Face& f : detail::trace_faces(d)) {
    if (std::all_of(pids.begin(), pids.end(), [&](int p) { return f.has_corner(p); })) {
      if (found) fail(Errc::not_on_face, "corner set does not identify a unique face");
      found = std::move(f);
    }
  }
  if (!found) fail(Errc::not_on_face, "no face has the requested corners");
  return *found;
}

/// Adds edge (u, v) crossing the uncrossed edge `crossed`. u must share a
/// face with one side of `crossed` and v with the other. Returns the new edge id.
inline int add_crossing_edge(OnePlanarDrawing& d, Vertex u, Vertex v, int crossed) {
  if (d.is_crossed(crossed)) fail(Errc::invalid_drawing, "edge " + std::to_string(crossed) + " is already crossed");
  const int sid = d.edge_segments(crossed).at(0);
  const Segment old = d.segment(sid);
  const int eid = d.add_edge(u, v);
  const int c = d.add_dummy(crossed, eid);
  // Split the crossed segment at the new dummy: sid keeps part 0, a new one takes part 1.
  const int tail = d.add_segment(c, old.b, crossed, 1);
  d.set_segment(sid, {old.a, c, crossed, 0});
  d.replace_end(old.b, {sid, 1}, {tail, 1});
  d.set_rotation(c, {{sid, 1}, {tail, 0}});

  const int pu = d.real_pid(u);
  const int pv = d.real_pid(v);
  const auto all = detail::trace_faces(d);
  const Face* side_u = nullptr;
  const Face* side_v = nullptr;
  for (const Face& f : all) {
    if (!f.has_corner(c)) continue;
    if (f.has_corner(pu) && !side_u) side_u = &f;
    else if (f.has_corner(pv) && !side_v) side_v = &f;
  }
  if (!side_u || !side_v || side_u == side_v) fail(Errc::not_on_face, "endpoints do not face opposite sides of the crossed edge");
  const Face fu = *side_u;
  const Face fv = *side_v;
  const int first = detail::split_face(d, fu, detail::corner_position(fu, pu), detail::corner_position(fu, c), eid, 0);
  (void)first;
  // Re-trace: the second face is untouched by the first split.
  for (const Face& f : detail::trace_faces(d)) {
    if (f.walk == fv.walk) {
      detail::split_face(d, f, detail::corner_position(f, c), detail::corner_position(f, pv), eid, 1);
      return eid;
    }
  }
  fail(Errc::invalid_drawing, "lost the far face while crossing");
}

/// Disjoint union of `a` and `b` with vertex `hub_b` of `b` identified with
/// `hub_a` of `a`. Other vertices of `b` are renumbered after those of `a`
/// in ascending order. The rotation at the hub lists `a`'s ends then `b`'s,
/// so `b` sits in one angular sector at the hub.
inline OnePlanarDrawing glue_at_vertex(const OnePlanarDrawing& a, const OnePlanarDrawing& b, Vertex hub_a, Vertex hub_b) {
  OnePlanarDrawing out = a;
  std::vector<Vertex> vid_map(static_cast<std::size_t>(b.real_count()), -1);
  Vertex next = a.real_count();
  for (Vertex v = 0; v < b.real_count(); ++v) vid_map[v] = (v == hub_b) ? hub_a : next++;

  const int hub_pid_a = a.real_pid(hub_a);
  const int hub_pid_b = b.real_pid(hub_b);
  std::vector<int> pid_map(static_cast<std::size_t>(b.pvertex_count()), -1);
  const int edge_offset = a.edge_count();
  const int seg_offset = a.segment_count();
  for (int p = 0; p < b.pvertex_count(); ++p) {
    const PVertex& pv = b.pvertex(p);
    if (p == hub_pid_b) pid_map[p] = hub_pid_a;
    else if (pv.dummy) pid_map[p] = out.add_dummy(pv.edge_a + edge_offset, pv.edge_b + edge_offset);
    else pid_map[p] = -2;  // placed below in vid order
  }
  for (Vertex v = 0; v < b.real_count(); ++v) {
    if (v == hub_b) continue;
    pid_map[b.real_pid(v)] = out.add_real(vid_map[v]);
  }
  for (const Edge& e : b.edges()) out.add_edge(vid_map[e.u], vid_map[e.v]);
  for (const Segment& s : b.segments()) out.add_segment(pid_map[s.a], pid_map[s.b], s.edge + edge_offset, s.part);
  for (int p = 0; p < b.pvertex_count(); ++p) {
    std::vector<SegmentEnd> rot;
    for (const SegmentEnd& h : b.rotation(p)) rot.push_back({h.segment + seg_offset, h.end});
    if (p == hub_pid_b) {
      auto merged = out.rotation(hub_pid_a);
      merged.insert(merged.end(), rot.begin(), rot.end());
      out.set_rotation(hub_pid_a, std::move(merged));
    } else {
      out.set_rotation(pid_map[p], std::move(rot));
    }
  }
  return out;
}

struct EdgeRemoval {
  OnePlanarDrawing drawing;
  /// Old edge id to new edge id, -1 for removed edges.
  std::vector<int> edge_map;
};

/// Deletes the given edges. A crossing loses its dummy when either edge goes;
/// the surviving edge becomes a single uncrossed segment. Real vertex ids are kept.
inline EdgeRemoval remove_edges(const OnePlanarDrawing& d, const std::vector<int>& doomed_list) {
  std::vector<char> doomed(static_cast<std::size_t>(d.edge_count()), 0);
  for (int e : doomed_list) doomed.at(e) = 1;

  EdgeRemoval result;
  result.edge_map.assign(static_cast<std::size_t>(d.edge_count()), -1);
  OnePlanarDrawing& out = result.drawing;
  out.set_mode(d.mode());
  for (int e = 0; e < d.edge_count(); ++e)
    if (!doomed[e]) result.edge_map[e] = out.add_edge(d.edge(e).u, d.edge(e).v);

  // Keep real pvertices in order, and dummies whose both edges survive.
  std::vector<int> pid_map(static_cast<std::size_t>(d.pvertex_count()), -1);
  for (int p = 0; p < d.pvertex_count(); ++p) {
    const PVertex& pv = d.pvertex(p);
    if (!pv.dummy) pid_map[p] = out.add_real(pv.vid);
    else if (!doomed[pv.edge_a] && !doomed[pv.edge_b])
      pid_map[p] = out.add_dummy(result.edge_map[pv.edge_a], result.edge_map[pv.edge_b]);
  }

  // Old segment end -> new segment end at a kept pvertex.
  std::map<SegmentEnd, SegmentEnd> end_map;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (doomed[e]) continue;
    const auto segs = d.edge_segments(e);
    const int ne = result.edge_map[e];
    if (segs.size() == 2 && pid_map[d.segment(segs[0]).b] < 0) {
      // Lost its crossing partner: merge into one uncrossed segment.
      const Segment& s0 = d.segment(segs[0]);
      const Segment& s1 = d.segment(segs[1]);
      const int sid = out.add_segment(pid_map[s0.a], pid_map[s1.b], ne, 0);
      end_map[{segs[0], 0}] = {sid, 0};
      end_map[{segs[1], 1}] = {sid, 1};
    } else {
      for (int s : segs) {
        const Segment& seg = d.segment(s);
        const int sid = out.add_segment(pid_map[seg.a], pid_map[seg.b], ne, seg.part);
        end_map[{s, 0}] = {sid, 0};
        end_map[{s, 1}] = {sid, 1};
      }
    }
  }
  for (int p = 0; p < d.pvertex_count(); ++p) {
    if (pid_map[p] < 0) continue;
    std::vector<SegmentEnd> rot;
    for (const SegmentEnd& h : d.rotation(p)) {
      const auto it = end_map.find(h);
      if (it != end_map.end()) rot.push_back(it->second);
    }
    out.set_rotation(pid_map[p], std::move(rot));
  }
  return result;
}

}  // namespace onepm
