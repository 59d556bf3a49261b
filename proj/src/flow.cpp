#include "pebbling/flow.hpp"

#include <cassert>
#include <limits>
#include <queue>
#include <stdexcept>

namespace pebbling::flow {

int Network::max_flow(int s, int t) {
  int total = 0;
  const int n = node_count();
  std::vector<int> pred_edge(n);
  for (;;) {
    std::fill(pred_edge.begin(), pred_edge.end(), -1);
    std::queue<int> q;
    q.push(s);
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      int u = q.front();
      q.pop();
      for (int e : out_[u]) {
        const Edge& ed = edges_[e];
        if (!seen[ed.to] && ed.cap - ed.flow > 0) {
          seen[ed.to] = 1;
          pred_edge[ed.to] = e;
          q.push(ed.to);
        }
      }
    }
    if (!seen[t]) break;
    int push = std::numeric_limits<int>::max();
    for (int v = t; v != s;) {
      int e = pred_edge[v];
      push = std::min(push, edges_[e].cap - edges_[e].flow);
      v = edges_[e ^ 1].to;
    }
    for (int v = t; v != s;) {
      int e = pred_edge[v];
      edges_[e].flow += push;
      edges_[e ^ 1].flow -= push;
      v = edges_[e ^ 1].to;
    }
    total += push;
  }
  return total;
}

std::vector<char> Network::source_side(int s) const {
  std::vector<char> seen(node_count(), 0);
  std::queue<int> q;
  q.push(s);
  seen[s] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int e : out_[u]) {
      const Edge& ed = edges_[e];
      if (!seen[ed.to] && ed.cap - ed.flow > 0) {
        seen[ed.to] = 1;
        q.push(ed.to);
      }
    }
  }
  return seen;
}

std::vector<std::vector<int>> vertex_disjoint_paths(
    const std::vector<std::vector<int>>& adj, int s, int t,
    const std::vector<char>& forbidden, std::vector<int>* min_cut) {
  const int n = static_cast<int>(adj.size());
  const int big = n + 1;
  // node 2v = v_in, 2v+1 = v_out
  Network net(2 * n);
  std::vector<int> split_edge(n, -1);
  for (int v = 0; v < n; ++v) {
    if (forbidden[v]) continue;
    int cap = (v == s || v == t) ? big : 1;
    split_edge[v] = net.add_edge(2 * v, 2 * v + 1, cap);
  }
  for (int u = 0; u < n; ++u) {
    if (forbidden[u]) continue;
    for (int v : adj[u]) {
      if (forbidden[v]) continue;
      net.add_edge(2 * u + 1, 2 * v, big);
    }
  }
  int value = net.max_flow(2 * s + 1, 2 * t);

  // Decompose flow into paths; vertex capacities make the walk unambiguous.
  std::vector<std::vector<int>> paths;
  std::vector<int> use(n, 0);  // remaining flow through v's split arc
  for (int v = 0; v < n; ++v)
    if (split_edge[v] >= 0) use[v] = net.flow_on(split_edge[v]);
  // consumable flow on inter-vertex arcs
  std::vector<std::vector<std::pair<int, int>>> arcs(n);  // u -> (v, units)
  for (int u = 0; u < n; ++u) {
    if (forbidden[u]) continue;
    for (int e : net.out_edges(2 * u + 1)) {
      const Edge& ed = net.edge(e);
      if (ed.cap > 0 && ed.flow > 0 && ed.to % 2 == 0 && ed.to / 2 != u)
        arcs[u].push_back({ed.to / 2, ed.flow});
    }
  }
  for (int i = 0; i < value; ++i) {
    std::vector<int> path = {s};
    int cur = s;
    while (cur != t) {
      bool advanced = false;
      for (auto& [v, units] : arcs[cur]) {
        if (units > 0 && (v == t || use[v] > 0)) {
          --units;
          if (v != t) --use[v];
          path.push_back(v);
          cur = v;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw std::logic_error("flow decomposition stuck");
    }
    paths.push_back(std::move(path));
  }

  if (min_cut) {
    min_cut->clear();
    std::vector<char> side = net.source_side(2 * s + 1);
    for (int v = 0; v < n; ++v) {
      if (v == s || v == t || forbidden[v]) continue;
      if (side[2 * v] && !side[2 * v + 1]) min_cut->push_back(v);
    }
    assert(static_cast<int>(min_cut->size()) == value);
  }
  return paths;
}

}  // namespace pebbling::flow
