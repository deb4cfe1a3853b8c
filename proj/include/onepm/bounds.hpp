#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "onepm/embedding.hpp"
#include "onepm/error.hpp"
#include "onepm/graph.hpp"
#include "onepm/matching.hpp"
#include "onepm/rational.hpp"

namespace onepm {

/// Evidence that a graph is 1-planar: a drawing of it, or the name of the
/// generator that produced it. Recognition itself is out of scope.
struct Provenance {
  std::optional<OnePlanarDrawing> drawing;
  std::string generator;

  static Provenance from_drawing(OnePlanarDrawing d) { return {std::move(d), {}}; }
  static Provenance from_generator(std::string name) { return {std::nullopt, std::move(name)}; }
};

/// Throws NoProvenance unless `p` attests that `g` is 1-planar.
inline void require_provenance(const Graph& g, const Provenance& p) {
  if (p.drawing) {
    const auto report = validate(*p.drawing);
    if (!report.ok()) fail(Errc::no_provenance, "supplied drawing is invalid: " + report.violations.front());
    if (!(p.drawing->graph() == g)) fail(Errc::no_provenance, "supplied drawing is not a drawing of this graph");
    return;
  }
  if (p.generator.empty()) fail(Errc::no_provenance, "no drawing or generator attestation supplied");
}

/// Counts of T-vertices per degree (T_d) and per crossing-weighted degree (W_d).
struct DegreeClassCount {
  std::map<int, int> by_degree;
  std::map<int, int> by_cw_degree;
};

namespace detail {

inline void require_lemma_t(const Graph& g, const VertexSet& t) {
  if (t.empty()) fail(Errc::empty_t, "T must be non-empty");
  t.require_within(g.vertex_count());
  for (Vertex v : t)
    if (g.degree(v) < 3) fail(Errc::degree_too_low, "vertex " + std::to_string(v) + " in T has degree " + std::to_string(g.degree(v)));
  if (!is_independent(g, t)) fail(Errc::not_independent, "T is not independent");
}

inline BoundCheck compare(Rational lhs, Rational rhs) { return {lhs, rhs, lhs <= rhs}; }

}  // namespace detail

inline DegreeClassCount degree_classes(const OnePlanarDrawing& d, const VertexSet& t) {
  const Graph g = d.graph();
  DegreeClassCount out;
  for (Vertex v : t) {
    ++out.by_degree[g.degree(v)];
    ++out.by_cw_degree[crossing_weighted_degree(d, d.real_pid(v))];
  }
  return out;
}

/// 2|T_3| + sum_{d>=4} (3d-6)|T_d|  against  12|V - T| - 24.
inline BoundCheck lemma5_check(const OnePlanarDrawing& d, const VertexSet& t) {
  require_valid(d);
  if (d.mode() != EdgeMode::simple) fail(Errc::invalid_drawing, "graph must be simple");
  const Graph g = d.graph();
  detail::require_lemma_t(g, t);
  std::int64_t lhs = 0;
  for (const auto& [deg, count] : degree_classes(d, t).by_degree) lhs += (deg == 3 ? 2 : 3 * deg - 6) * count;
  const std::int64_t rest = g.vertex_count() - static_cast<std::int64_t>(t.size());
  return detail::compare(lhs, 12 * rest - 24);
}

/// 2|W_3| + 2|W_4| + sum_{d>=5} (3d-12)|W_d|  against  12|V - T| - 24, with
/// crossing-weighted degrees read from this drawing.
inline BoundCheck lemma6_check(const OnePlanarDrawing& d, const VertexSet& t) {
  require_valid(d);
  if (d.mode() != EdgeMode::simple) fail(Errc::invalid_drawing, "graph must be simple");
  const Graph g = d.graph();
  detail::require_lemma_t(g, t);
  std::int64_t lhs = 0;
  for (const auto& [cw, count] : degree_classes(d, t).by_cw_degree) lhs += (cw <= 4 ? 2 : 3 * cw - 12) * count;
  const std::int64_t rest = g.vertex_count() - static_cast<std::int64_t>(t.size());
  return detail::compare(lhs, 12 * rest - 24);
}

struct Reduction {
  Graph graph;
  VertexSet s;                     // S in the reduced ids
  std::vector<Vertex> original_of; // reduced id -> original id
  int removed_odd = 0;
  int removed_even = 0;
};

/// Deletes the edges inside S, every even component of G - S, and every odd
/// component with at least `odd_threshold` vertices. Surviving vertices keep
/// their relative order.
inline Reduction reduce_components(const Graph& g, const VertexSet& s, int odd_threshold) {
  s.require_within(g.vertex_count());
  const auto split = odd_components(g, s);
  std::vector<char> keep(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) keep[v] = 1;
  Reduction out;
  for (const auto& comp : split.components) {
    const int size = static_cast<int>(comp.size());
    if (size % 2 == 0) ++out.removed_even;
    else if (size >= odd_threshold) ++out.removed_odd;
    else
      for (Vertex v : comp) keep[v] = 1;
  }
  std::vector<Vertex> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!keep[v]) continue;
    new_id[v] = static_cast<Vertex>(out.original_of.size());
    out.original_of.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!keep[e.u] || !keep[e.v]) continue;
    if (s.contains(e.u) && s.contains(e.v)) continue;
    edges.push_back({new_id[e.u], new_id[e.v]});
  }
  std::vector<Vertex> s_new;
  for (Vertex v : s) s_new.push_back(new_id[v]);
  out.graph = build_graph(static_cast<int>(out.original_of.size()), edges, g.mode());
  out.s = VertexSet(std::move(s_new));
  return out;
}

/// odd(G - S) - |S| against (5n-24)/7 (delta 3) or (n-8)/3 (delta 4), for |S| >= 2.
inline BoundCheck lemma7_check(const Graph& g, const VertexSet& s, int delta, const Provenance& provenance) {
  if (delta != 3 && delta != 4) fail(Errc::degree_too_low, "lemma7_check supports delta 3 and 4 only");
  s.require_within(g.vertex_count());
  if (s.size() < 2) fail(Errc::s_too_small, "|S| must be at least 2");
  if (min_degree(g) < delta) fail(Errc::degree_too_low, "minimum degree below " + std::to_string(delta));
  require_provenance(g, provenance);
  const std::int64_t n = g.vertex_count();
  const Rational lhs(odd_components(g, s).odd_count - static_cast<std::int64_t>(s.size()));
  const Rational rhs = delta == 3 ? Rational(5 * n - 24, 7) : Rational(n - 8, 3);
  return detail::compare(lhs, rhs);
}

/// odd(G - S) - |S| against (n-6)/5 for minimum degree 5 and |S| >= 1.
inline BoundCheck lemma8_check(const Graph& g, const VertexSet& s, const Provenance& provenance) {
  s.require_within(g.vertex_count());
  if (s.empty()) fail(Errc::s_too_small, "|S| must be at least 1");
  if (min_degree(g) < 5) fail(Errc::degree_too_low, "minimum degree below 5");
  require_provenance(g, provenance);
  const std::int64_t n = g.vertex_count();
  const Rational lhs(odd_components(g, s).odd_count - static_cast<std::int64_t>(s.size()));
  return detail::compare(lhs, Rational(n - 6, 5));
}

/// Smallest odd X with X >= delta + 1 - |S| (and X >= 1).
inline int min_odd_component_size(int delta, std::size_t s_size) {
  int x = std::max(1, delta + 1 - static_cast<int>(s_size));
  if (x % 2 == 0) ++x;
  return x;
}

/// Whether every odd component of G - S has at least min_odd_component_size vertices.
inline bool min_odd_component_size_check(const Graph& g, const VertexSet& s, int delta) {
  s.require_within(g.vertex_count());
  if (min_degree(g) < delta) fail(Errc::degree_too_low, "minimum degree below " + std::to_string(delta));
  const int x = min_odd_component_size(delta, s.size());
  for (const auto& comp : odd_components(g, s).components)
    if (comp.size() % 2 == 1 && static_cast<int>(comp.size()) < x) return false;
  return true;
}

struct CertReport {
  int delta = 0;
  int n = 0;
  int matching = 0;
  Rational bound;
  bool applicable = false;
  int threshold = 0;
  bool holds = false;
  bool tight = false;
};

/// Lower bound on the maximum matching for minimum degree 3, 4, 5, and the
/// smallest n at which it is guaranteed.
inline std::pair<Rational, int> theorem1_bound(int delta, std::int64_t n) {
  switch (delta) {
    case 3: return {Rational(n + 12, 7), 7};
    case 4: return {Rational(n + 4, 3), 20};
    case 5: return {Rational(2 * n + 3, 5), 21};
    default: fail(Errc::degree_too_low, "no matching bound for delta " + std::to_string(delta));
  }
}

/// Computes a maximum matching and compares it with the exact bound.
inline CertReport theorem1_certify(const Graph& g, int delta, const Provenance& provenance) {
  if (delta < 3 || delta > 5) fail(Errc::degree_too_low, "delta must be 3, 4 or 5");
  if (g.vertex_count() == 0 || min_degree(g) < delta) fail(Errc::degree_too_low, "minimum degree below " + std::to_string(delta));
  require_provenance(g, provenance);
  CertReport r;
  r.delta = delta;
  r.n = g.vertex_count();
  const auto [bound, threshold] = theorem1_bound(delta, r.n);
  r.bound = bound;
  r.threshold = threshold;
  r.matching = maximum_matching(g).size();
  r.applicable = r.n >= threshold;
  r.holds = Rational(r.matching) >= bound;
  r.tight = Rational(r.matching) == bound;
  return r;
}

}  // namespace onepm
