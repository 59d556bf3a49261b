#pragma once

#include <vector>

namespace pebbling::flow {

struct Edge {
  int to;
  int cap;
  int flow;
};

/// Small integer-capacity max-flow network (BFS augmenting paths).
/// Reverse edges are created automatically; edge i pairs with i^1.
class Network {
 public:
  explicit Network(int n) : out_(n) {}

  int node_count() const { return static_cast<int>(out_.size()); }

  int add_edge(int u, int v, int cap) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({v, cap, 0});
    edges_.push_back({u, 0, 0});
    out_[u].push_back(id);
    out_[v].push_back(id + 1);
    return id;
  }

  int max_flow(int s, int t);

  int flow_on(int e) const { return edges_[e].flow; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }

  /// Residual reachability from s; valid after max_flow.
  std::vector<char> source_side(int s) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
};

/// Internally vertex-disjoint s-t paths in an undirected graph given by
/// adjacency lists, via the standard vertex-split construction (unit
/// capacity per vertex, large capacity on edges and on s,t).
/// Requires s,t non-adjacent (callers handle the adjacent case).
/// If min_cut is non-null it receives the flow-derived minimum vertex cut.
std::vector<std::vector<int>> vertex_disjoint_paths(
    const std::vector<std::vector<int>>& adj, int s, int t,
    const std::vector<char>& forbidden, std::vector<int>* min_cut = nullptr);

}  // namespace pebbling::flow
