#include "pebbling/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "pebbling/flow.hpp"

namespace pebbling {

Graph::Graph(int n) : n_(n), adj_(std::max(n, 0)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v});
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("parallel edge");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

Graph Graph::with_edge(int u, int v) const {
  if (has_edge(u, v)) return *this;
  auto es = edges_;
  es.push_back({std::min(u, v), std::max(u, v)});
  return Graph(n_, es);
}

bool PathInGraph::valid_in(const Graph& g) const {
  if (vertices.empty()) return false;
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  return true;
}

std::vector<int> distances(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  std::vector<int> dist(g.order(), kUnreachable);
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("empty graph");
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    for (int d : distances(g, v)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = distances(g, 0);
  return std::none_of(d.begin(), d.end(),
                      [](int x) { return x == kUnreachable; });
}

std::vector<PathInGraph> max_disjoint_paths(const Graph& g, int s, int t,
                                            const std::vector<int>& forbidden) {
  if (s == t) throw std::invalid_argument("s == t");
  std::vector<char> forb(g.order(), 0);
  for (int v : forbidden) {
    if (v == s || v == t)
      throw std::invalid_argument("endpoint in forbidden set");
    forb[v] = 1;
  }
  std::vector<PathInGraph> result;
  std::vector<std::vector<int>> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  if (g.has_edge(s, t)) {
    // At most one path may use the direct edge; drop it and prepend.
    result.push_back({{s, t}});
    adj[s].erase(std::find(adj[s].begin(), adj[s].end(), t));
    adj[t].erase(std::find(adj[t].begin(), adj[t].end(), s));
  }
  for (auto& p : flow::vertex_disjoint_paths(adj, s, t, forb))
    result.push_back({std::move(p)});
  return result;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  std::vector<char> none(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  int best = n - 1;  // complete-graph convention
  bool found_pair = false;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      found_pair = true;
      int k = static_cast<int>(flow::vertex_disjoint_paths(adj, s, t, none).size());
      best = std::min(best, k);
      if (best == 0) return 0;
    }
  }
  return found_pair ? best : n - 1;
}

namespace {

bool iso_extend(const Graph& g1, const Graph& g2, std::vector<int>& map,
                std::vector<char>& used, int v) {
  const int n = g1.order();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || g1.degree(v) != g2.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g1.has_edge(u, v) != g2.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (iso_extend(g1, g2, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count())
    return false;
  const int n = g1.order();
  std::vector<int> d1(n), d2(n);
  for (int v = 0; v < n; ++v) {
    d1[v] = g1.degree(v);
    d2[v] = g2.degree(v);
  }
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  return iso_extend(g1, g2, map, used, 0);
}

void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn,
                      bool override_guard) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > 6 && !override_guard)
    throw std::invalid_argument("enumerate_graphs guarded at n <= 6");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const int m = static_cast<int>(pairs.size());
  for (long long mask = 0; mask < (1LL << m); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    fn(Graph(n, edges));
  }
}

std::vector<int> automorphism_orbits(const Graph& g) {
  const int n = g.order();
  std::vector<int> orbit(n);
  std::iota(orbit.begin(), orbit.end(), 0);
  if (n > 8) return orbit;  // brute force not attempted

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };

  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> search = [&](int v) {
    if (v == n) {
      for (int u = 0; u < n; ++u) {
        int a = find(u), b = find(perm[u]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(v) != g.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) != g.has_edge(perm[u], w)) ok = false;
      if (!ok) continue;
      perm[v] = w;
      used[w] = 1;
      search(v + 1);
      used[w] = 0;
    }
  };
  search(0);
  for (int v = 0; v < n; ++v) orbit[v] = find(v);
  return orbit;
}

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
  };
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0) fail("expected header 'n m'");
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) fail("expected edge 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex out of range");
    if (u == v) fail("self-loop");
    auto e = std::minmax(u, v);
    if (std::find(edges.begin(), edges.end(),
                  std::make_pair(e.first, e.second)) != edges.end())
      fail("duplicate edge");
    edges.push_back({e.first, e.second});
  }
  ++lineno;
  if (n < 0) fail("missing header");
  if (static_cast<int>(edges.size()) != m) fail("edge count mismatch");
  return Graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace pebbling
