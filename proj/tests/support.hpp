#pragma once

// Corpus builders and small independent oracles shared by the test binaries.
// The oracles here use bitmask brute force and never call the library's
// component or matching code.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "onepm/onepm.hpp"

namespace testsupport {

using namespace onepm;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return build_graph(n, edges);
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

/// Odd components of G minus `removed`, by flood fill over bitmasks.
inline int odd_count_mask(const std::vector<std::uint32_t>& adj, std::uint32_t removed) {
  const int n = static_cast<int>(adj.size());
  std::uint32_t left = (n == 32 ? ~0u : (1u << n) - 1u) & ~removed;
  int odd = 0;
  while (left) {
    std::uint32_t comp = left & (0u - left);
    for (std::uint32_t grow = comp; grow;) {
      std::uint32_t reach = 0;
      for (std::uint32_t f = grow; f; f &= f - 1) reach |= adj[std::countr_zero(f)];
      grow = reach & left & ~comp;
      comp |= grow;
    }
    left &= ~comp;
    odd += std::popcount(comp) & 1;
  }
  return odd;
}

/// Maximum matching size by memoised recursion on vertex subsets (n <= 24).
inline int matching_size_oracle(const Graph& g) {
  const auto adj = adjacency_masks(g);
  std::unordered_map<std::uint32_t, int> memo;
  std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
    if (std::popcount(mask) < 2) return 0;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    int value = best(rest);
    for (std::uint32_t nb = adj[v] & rest; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      value = std::max(value, 1 + best(rest & ~(1u << w)));
    }
    memo[mask] = value;
    return value;
  };
  return best(g.vertex_count() == 32 ? ~0u : (1u << g.vertex_count()) - 1u);
}

/// Every non-empty independent set of vertices with degree >= min_degree.
inline std::vector<VertexSet> independent_sets(const Graph& g, int min_degree) {
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= min_degree) cand.push_back(v);
  std::vector<VertexSet> out;
  std::vector<Vertex> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cand.size()) {
      if (!pick.empty()) out.push_back(VertexSet(pick));
      return;
    }
    rec(i + 1);
    for (Vertex w : pick)
      if (g.adjacent(w, cand[i])) return;
    pick.push_back(cand[i]);
    rec(i + 1);
    pick.pop_back();
  };
  rec(0);
  return out;
}

/// Seeded 1-planar drawings with 5..12 vertices. Odd entries are thinned by
/// deleting about a quarter of the edges, so the corpus is not all
/// triangulations.
inline std::vector<OnePlanarDrawing> drawing_corpus(int count = 200, std::uint64_t seed = 20261015) {
  std::mt19937_64 rng(seed);
  std::vector<OnePlanarDrawing> out;
  for (int i = 0; i < count; ++i) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const int max_x = std::min((n - 3) / 2, 3);
    int x = static_cast<int>(rng() % static_cast<std::uint64_t>(max_x + 1));
    while (x > 0 && x > 2 * (n - 2 * x) - 4) --x;
    OnePlanarDrawing d = random_oneplanar(n, x, rng());
    if (i % 2 == 1) {
      std::vector<int> doomed;
      for (int e = 0; e < d.edge_count(); ++e)
        if (rng() % 4 == 0) doomed.push_back(e);
      d = remove_edges(d, doomed).drawing;
    }
    out.push_back(std::move(d));
  }
  return out;
}

/// The corpus drawing with every edge inside one colour class removed, for a
/// seeded 2-colouring; always bipartite and bigon-free.
inline OnePlanarDrawing bipartitize(const OnePlanarDrawing& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> side(static_cast<std::size_t>(d.real_count()));
  for (auto& s : side) s = static_cast<int>(rng() & 1u);
  std::vector<int> doomed;
  for (int e = 0; e < d.edge_count(); ++e)
    if (side[d.edge(e).u] == side[d.edge(e).v]) doomed.push_back(e);
  return remove_edges(d, doomed).drawing;
}

/// Some crossing-free drawing of the given graph, found by trying every
/// rotation system (small graphs only); nullopt if none is planar.
inline std::optional<OnePlanarDrawing> planar_drawing(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    nbrs[e.u].push_back(e.v);
    nbrs[e.v].push_back(e.u);
  }
  for (auto& l : nbrs) std::sort(l.begin(), l.end());
  std::optional<OnePlanarDrawing> found;
  std::function<void(int)> rec = [&](int v) {
    if (found) return;
    if (v == n) {
      OnePlanarDrawing d = from_rotation(n, nbrs);
      if (validate(d).ok()) found = d;
      return;
    }
    // Fix the first neighbour, permute the rest.
    auto& l = nbrs[v];
    if (l.size() < 3) {
      rec(v + 1);
      return;
    }
    std::sort(l.begin() + 1, l.end());
    do rec(v + 1);
    while (!found && std::next_permutation(l.begin() + 1, l.end()));
  };
  rec(0);
  return found;
}

/// K_{3,3} (sides {0,1,2} and {3,4,5}) drawn with exactly one crossing.
inline OnePlanarDrawing k33_one_crossing() {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b)
      if (!(a == 2 && b == 3)) edges.push_back({a, b});
  const OnePlanarDrawing base = *planar_drawing(6, edges);
  for (int c = 0; c < base.edge_count(); ++c) {
    OnePlanarDrawing d = base;
    try {
      add_crossing_edge(d, 2, 3, c);
    } catch (const Error&) {
      continue;
    }
    if (validate(d).ok()) return d;
  }
  fail(Errc::invalid_drawing, "no one-crossing K3,3 drawing found");
}

}  // namespace testsupport
