#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "onepm/error.hpp"
#include "onepm/graph.hpp"

namespace onepm {

/// Set of pairwise vertex-disjoint edges, stored with u < v and sorted.
struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

struct DeficiencyWitness {
  VertexSet s;
  int odd_count = 0;
  int deficiency = 0;
};

/// Maximum cardinality matching by Edmonds' blossom algorithm: one BFS per
/// exposed root, shrinking odd cycles through their base. O(n^3).
inline Matching maximum_matching(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> mate(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n)), base(static_cast<std::size_t>(n));
  std::vector<char> in_tree(static_cast<std::size_t>(n)), in_blossom(static_cast<std::size_t>(n));
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));

  auto lowest_common_base = [&](int a, int b) {
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (;;) {
      a = base[a];
      on_path[a] = 1;
      if (mate[a] < 0) break;
      a = parent[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (on_path[b]) return b;
      b = parent[mate[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = in_blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };

  // Returns the exposed vertex reached by an augmenting path from root, or -1.
  auto grow = [&](int root) {
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(in_tree.begin(), in_tree.end(), 0);
    for (int i = 0; i < n; ++i) base[i] = i;
    queue.assign(1, root);
    in_tree[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (base[v] == base[w] || mate[v] == w) continue;
        if (w == root || (mate[w] >= 0 && parent[mate[w]] >= 0)) {
          // Odd cycle: contract the blossom into its base.
          const int b = lowest_common_base(v, w);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, b, w);
          mark_path(w, b, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = b;
              if (!in_tree[i]) {
                in_tree[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[w] < 0) {
          parent[w] = v;
          if (mate[w] < 0) return w;
          in_tree[mate[w]] = 1;
          queue.push_back(mate[w]);
        }
      }
    }
    return -1;
  };

  // Greedy start; augmentations fix the rest.
  for (const Edge& e : g.edges()) {
    if (mate[e.u] < 0 && mate[e.v] < 0) {
      mate[e.u] = e.v;
      mate[e.v] = e.u;
    }
  }
  for (int root = 0; root < n; ++root) {
    if (mate[root] >= 0) continue;
    int v = grow(root);
    while (v >= 0) {
      const int pv = parent[v];
      const int next = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = next;
    }
  }

  Matching m;
  for (int v = 0; v < n; ++v)
    if (mate[v] > v) m.edges.push_back({v, mate[v]});
  return m;
}

/// Checks the Matching invariants against `g`: disjoint edges of the graph.
inline bool is_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count() || e.v >= g.vertex_count()) return false;
    if (!g.adjacent(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

/// floor((n - (odd(G - S) - |S|)) / 2), an upper bound on every matching.
inline int matching_upper_from_witness(const Graph& g, const VertexSet& s) {
  const int odd = odd_components(g, s).odd_count;
  const int deficiency = odd - static_cast<int>(s.size());
  const int slack = g.vertex_count() - deficiency;
  return slack >= 0 ? slack / 2 : -((-slack + 1) / 2);
}

inline constexpr int default_bruteforce_limit = 20;

/// Exhaustive Tutte-Berge search: the S maximizing odd(G - S) - |S|, ties
/// broken by smaller |S| and then lexicographically smaller member list.
inline DeficiencyWitness tutte_berge_bruteforce(const Graph& g, int n_limit = default_bruteforce_limit) {
  const int n = g.vertex_count();
  if (n > n_limit) fail(Errc::too_large, "n = " + std::to_string(n) + " exceeds brute-force limit " + std::to_string(n_limit));
  if (n > 30) fail(Errc::too_large, "brute force supports at most 30 vertices");

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);

  auto odd_after_removal = [&](std::uint32_t removed) {
    std::uint32_t left = all & ~removed;
    int odd = 0;
    while (left) {
      std::uint32_t comp = left & (~left + 1u);
      std::uint32_t frontier = comp;
      while (frontier) {
        std::uint32_t reach = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) reach |= adj[std::countr_zero(f)];
        frontier = reach & left & ~comp;
        comp |= frontier;
      }
      left &= ~comp;
      odd += std::popcount(comp) & 1;
    }
    return odd;
  };

  DeficiencyWitness best;
  best.odd_count = odd_after_removal(0);
  best.deficiency = best.odd_count;
  std::uint32_t best_mask = 0;

  std::vector<int> pick;
  for (int k = 1; k <= n; ++k) {
    // A k-set leaves at most n - k odd components.
    if (n - 2 * k <= best.deficiency) break;
    pick.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      std::uint32_t mask = 0;
      for (int v : pick) mask |= 1u << v;
      const int odd = odd_after_removal(mask);
      if (odd - k > best.deficiency) {
        best.deficiency = odd - k;
        best.odd_count = odd;
        best_mask = mask;
      }
      // Next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  std::vector<Vertex> members;
  for (int v = 0; v < n; ++v)
    if (best_mask >> v & 1u) members.push_back(v);
  best.s = VertexSet(std::move(members));
  return best;
}

/// Whether the blossom matching size equals (n - max deficiency) / 2.
inline bool verify_duality(const Graph& g, int n_limit = default_bruteforce_limit) {
  const auto witness = tutte_berge_bruteforce(g, n_limit);
  const int matched = maximum_matching(g).size();
  return 2 * matched == g.vertex_count() - witness.deficiency;
}

}  // namespace onepm
