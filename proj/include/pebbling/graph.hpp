#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pebbling {

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  /// Edges as (u,v) pairs with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Copy with one extra edge (no-op copy if already present).
  Graph with_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// A simple path; consecutive vertices must be adjacent, all distinct.
struct PathInGraph {
  std::vector<int> vertices;

  int endpoint_front() const { return vertices.front(); }
  int endpoint_back() const { return vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool valid_in(const Graph& g) const;
};

inline constexpr int kUnreachable = -1;

/// BFS hop counts from v; kUnreachable for vertices in other components.
std::vector<int> distances(const Graph& g, int v);

/// nullopt means infinite (disconnected graph).
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);

/// Minimum number of vertices whose removal disconnects g or leaves a single
/// vertex. K_n yields n-1. Computed via Menger (max disjoint paths over
/// non-adjacent pairs).
int vertex_connectivity(const Graph& g);

/// Maximum family of internally vertex-disjoint s-t paths avoiding the
/// forbidden set. Adjacent s,t allowed (the direct edge counts as one path).
std::vector<PathInGraph> max_disjoint_paths(const Graph& g, int s, int t,
                                            const std::vector<int>& forbidden);

/// Brute-force permutation search with degree-sequence pruning; meant for
/// n <= 8.
bool is_isomorphic(const Graph& g1, const Graph& g2);

/// Yields every labeled simple graph on n vertices in lexicographic
/// edge-mask order. Guarded at n <= 6 unless override_guard.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn,
                      bool override_guard = false);

/// orbit[v] = smallest vertex in v's automorphism orbit. Brute force for
/// n <= 8; identity (singleton orbits) beyond that.
std::vector<int> automorphism_orbits(const Graph& g);

/// Edge-list text format: "n m" line, then m lines "u v". '#' comments
/// allowed. Throws std::runtime_error with a line number on bad input.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace pebbling
