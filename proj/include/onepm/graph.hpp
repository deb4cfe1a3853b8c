#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "onepm/error.hpp"

namespace onepm {

using Vertex = int;

/// Unordered vertex pair; graphs store it with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const { return u <= v ? *this : Edge{v, u}; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeMode { simple, multi };

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
  explicit VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet range(Vertex first, Vertex last) {
    std::vector<Vertex> ids;
    for (Vertex v = first; v < last; ++v) ids.push_back(v);
    return VertexSet(std::move(ids));
  }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Members of 0..n-1 not in this set.
  VertexSet complement(int n) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
      if (!contains(v)) out.push_back(v);
    return VertexSet(std::move(out));
  }

  void require_within(int n) const {
    for (Vertex v : members_)
      if (v < 0 || v >= n) fail(Errc::bad_vertex, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n - 1));
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Undirected graph on vertices 0..n-1 without loops. In simple mode every
/// unordered pair occurs at most once; multi mode admits parallel edges.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(neighbors_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  EdgeMode mode() const { return mode_; }

  /// Distinct neighbours of `v`, ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[check(v)]; }

  /// Number of incident edges (parallel copies counted separately).
  int degree(Vertex v) const { return degree_[check(v)]; }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbors_[check(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  friend Graph build_graph(int n, std::span<const Edge> edge_list, EdgeMode mode);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::size_t check(Vertex v) const {
    if (v < 0 || v >= vertex_count()) fail(Errc::bad_vertex, "vertex " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<int> degree_;
  EdgeMode mode_ = EdgeMode::simple;
};

/// Builds a graph; edges are normalized to `u < v` and stored sorted.
inline Graph build_graph(int n, std::span<const Edge> edge_list, EdgeMode mode = EdgeMode::simple) {
  if (n < 0) fail(Errc::bad_vertex, "negative vertex count");
  Graph g;
  g.mode_ = mode;
  g.neighbors_.assign(static_cast<std::size_t>(n), {});
  g.degree_.assign(static_cast<std::size_t>(n), 0);
  g.edges_.reserve(edge_list.size());
  for (const Edge& raw : edge_list) {
    if (raw.u < 0 || raw.u >= n || raw.v < 0 || raw.v >= n)
      fail(Errc::bad_vertex, "edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) + ") has an endpoint out of range");
    if (raw.u == raw.v) fail(Errc::invalid_edge, "loop at vertex " + std::to_string(raw.u));
    g.edges_.push_back(raw.normalized());
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (std::size_t i = 0; i + 1 < g.edges_.size(); ++i) {
    if (mode == EdgeMode::simple && g.edges_[i] == g.edges_[i + 1])
      fail(Errc::duplicate_edge, "edge (" + std::to_string(g.edges_[i].u) + "," + std::to_string(g.edges_[i].v) + ") repeated");
  }
  for (const Edge& e : g.edges_) {
    ++g.degree_[e.u];
    ++g.degree_[e.v];
    g.neighbors_[e.u].push_back(e.v);
    g.neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : g.neighbors_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

inline Graph build_graph(int n, std::initializer_list<Edge> edge_list, EdgeMode mode = EdgeMode::simple) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()), mode);
}

struct ComponentSplit {
  int odd_count = 0;
  /// Components of G minus S, each sorted, ordered by smallest member.
  std::vector<std::vector<Vertex>> components;
};

/// Connected components of the graph with `removed` deleted.
inline ComponentSplit odd_components(const Graph& g, const VertexSet& removed) {
  const int n = g.vertex_count();
  removed.require_within(n);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : removed) seen[v] = 1;

  ComponentSplit split;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (comp.size() % 2 == 1) ++split.odd_count;
    split.components.push_back(std::move(comp));
  }
  return split;
}

inline bool is_independent(const Graph& g, const VertexSet& t) {
  t.require_within(g.vertex_count());
  for (Vertex v : t)
    for (Vertex w : g.neighbors(v))
      if (t.contains(w)) return false;
  return true;
}

inline int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) fail(Errc::empty_graph, "minimum degree of the empty graph");
  int best = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

/// Proper 2-colouring as (side of vertex 0's component colour 0, other side),
/// or nullopt when the graph has an odd cycle.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Vertex> side0, side1;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? side0 : side1).push_back(v);
  return std::make_pair(VertexSet(std::move(side0)), VertexSet(std::move(side1)));
}

}  // namespace onepm
