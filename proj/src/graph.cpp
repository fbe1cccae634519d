#include "cising/graph.hpp"

namespace cising {

ClusteredGraph ClusteredGraph::build(const Params& params) {
  params.validate();
  ClusteredGraph g;
  g.n = params.n;
  g.k = params.k;
  g.adjacency.assign(g.vertex_count(), {});

  for (int c = 0; c < g.k; ++c) {
    for (int i = 0; i < g.n; ++i) {
      for (int j = i + 1; j < g.n; ++j) {
        g.internal_edges.emplace_back(g.vertex(c, i), g.vertex(c, j));
      }
    }
  }
  for (int i = 0; i < g.n; ++i) {
    for (int c = 0; c < g.k; ++c) {
      for (int d = c + 1; d < g.k; ++d) {
        g.cross_edges.emplace_back(g.vertex(c, i), g.vertex(d, i));
      }
    }
  }
  for (const auto& [u, v] : g.internal_edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (const auto& [u, v] : g.cross_edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  return g;
}

}  // namespace cising
