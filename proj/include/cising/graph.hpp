#pragma once

#include <utility>
#include <vector>

#include "cising/params.hpp"

namespace cising {

/// k complete clusters of n vertices each; vertex i of a cluster is joined to
/// the vertex with the same index in every other cluster ("twins"). Vertex ids
/// are 0-based, cluster c owns ids [c*n, (c+1)*n).
struct ClusteredGraph {
  int n = 0;
  int k = 0;
  std::vector<std::pair<int, int>> internal_edges;
  std::vector<std::pair<int, int>> cross_edges;
  std::vector<std::vector<int>> adjacency;

  static ClusteredGraph build(const Params& params);

  int vertex_count() const { return n * k; }
  int degree() const { return n + k - 2; }
  int cluster_of(int v) const { return v / n; }
  int index_in_cluster(int v) const { return v % n; }
  int vertex(int cluster, int index) const { return cluster * n + index; }
};

}  // namespace cising
