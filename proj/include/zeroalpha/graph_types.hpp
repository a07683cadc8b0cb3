#pragma once

/// Plain undirected graphs with a vertex colouring, and the validated
/// bipartite refinement used by the construction pipeline.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "zeroalpha/errors.hpp"

namespace za {

struct Graph {
  std::vector<std::vector<std::int32_t>> adj;  // sorted, loop-free, symmetric
  std::vector<int> colour;                     // class label per vertex

  std::size_t vertex_count() const { return adj.size(); }

  bool has_edge(std::int32_t u, std::int32_t v) const {
    const auto& nu = adj[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  static Graph create(std::vector<std::vector<std::int32_t>> adjacency, std::vector<int> colours) {
    Graph g{std::move(adjacency), std::move(colours)};
    const auto n = g.adj.size();
    if (g.colour.size() != n) throw StructureError("colour vector size mismatch");
    for (std::size_t u = 0; u < n; ++u) {
      auto& nb = g.adj[u];
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
        throw StructureError("duplicate edge");
      for (std::int32_t v : nb) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw StructureError("neighbour out of range");
        if (static_cast<std::size_t>(v) == u) throw StructureError("loop");
      }
    }
    for (std::size_t u = 0; u < n; ++u)
      for (std::int32_t v : g.adj[u])
        if (!g.has_edge(v, static_cast<std::int32_t>(u))) throw StructureError("asymmetric adjacency");
    return g;
  }

  bool connected() const {
    if (adj.empty()) return true;
    std::vector<char> seen(adj.size(), 0);
    std::queue<std::int32_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
      std::int32_t u = q.front();
      q.pop();
      for (std::int32_t v : adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          ++reached;
          q.push(v);
        }
      }
    }
    return reached == adj.size();
  }

  int colour_class_count() const {
    int m = -1;
    for (int c : colour) m = std::max(m, c);
    return m + 1;
  }
};

// Connected graph, colours in {0, 1}, every edge crossing.
class BipartiteGraph {
 public:
  static BipartiteGraph from_graph(Graph g) {
    const auto n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
      if (g.colour[u] != 0 && g.colour[u] != 1) throw StructureError("colour outside {0,1}");
      for (std::int32_t v : g.adj[u])
        if (g.colour[static_cast<std::size_t>(v)] == g.colour[u])
          throw StructureError("edge inside a colour class");
    }
    if (!g.connected()) throw StructureError("graph is not connected");
    BipartiteGraph b;
    b.g_ = std::move(g);
    return b;
  }

  const Graph& graph() const { return g_; }
  std::size_t vertex_count() const { return g_.vertex_count(); }
  const std::vector<std::int32_t>& neighbours(std::int32_t v) const {
    return g_.adj[static_cast<std::size_t>(v)];
  }
  int colour_of(std::int32_t v) const { return g_.colour[static_cast<std::size_t>(v)]; }
  bool has_edge(std::int32_t u, std::int32_t v) const { return g_.has_edge(u, v); }

  std::vector<std::int32_t> class_vertices(int c) const {
    std::vector<std::int32_t> out;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v)
      if (g_.colour[v] == c) out.push_back(static_cast<std::int32_t>(v));
    return out;
  }

 private:
  Graph g_;
};

}  // namespace za
