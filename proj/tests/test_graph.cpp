#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "pebbling/generators.hpp"
#include "pebbling/graph.hpp"
#include "oracles.hpp"

using namespace pebbling;

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS(Graph(3, {{0, 0}}));
  CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));
  CHECK_THROWS(Graph(2, {{0, 2}}));
  Graph g(3, {{1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  int degsum = 0;
  for (int v = 0; v < 3; ++v) degsum += g.degree(v);
  CHECK(degsum == 2 * g.edge_count());
}

TEST_CASE("distances") {
  Graph k4 = named_graph(NamedKind::Complete, 4);
  auto d = distances(k4, 0);
  CHECK(d == std::vector<int>{0, 1, 1, 1});

  Graph p3 = named_graph(NamedKind::Path, 3);
  CHECK(distances(p3, 0) == std::vector<int>{0, 1, 2});

  Graph two(2, {});
  auto iso = distances(two, 0);
  CHECK(iso[0] == 0);
  CHECK(iso[1] == kUnreachable);

  CHECK_THROWS(distances(p3, 3));
}

TEST_CASE("diameter") {
  CHECK(diameter(named_graph(NamedKind::Complete, 6)) == 1);
  CHECK(diameter(chh_graph(ChhKind::G1)) == 2);
  CHECK(diameter(named_graph(NamedKind::Path, 3)) == 2);
  CHECK(!diameter(Graph(2, {})).has_value());
  for (int n = 2; n <= 6; ++n) {
    CHECK(diameter(named_graph(NamedKind::Complete, n)) == 1);
    CHECK(diameter(named_graph(NamedKind::Path, n)) == n - 1);
  }
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(named_graph(NamedKind::Complete, 6)) == 5);
  CHECK(vertex_connectivity(named_graph(NamedKind::Path, 3)) == 1);
  CHECK(vertex_connectivity(chh_graph(ChhKind::G1)) == 2);
  CHECK(vertex_connectivity(chh_graph(ChhKind::G2)) == 2);
  CHECK(vertex_connectivity(named_graph(NamedKind::Cycle, 6)) == 2);
  CHECK(vertex_connectivity(Graph(3, {{0, 1}})) == 0);
}

TEST_CASE("G1 connectivity exactness by removal scan") {
  // 2-connected but some pair of removals disconnects
  Graph g1 = chh_graph(ChhKind::G1);
  auto connected_after = [&](std::vector<int> removed) {
    std::vector<std::vector<int>> adj(6);
    for (auto [u, v] : g1.edges()) {
      if (std::count(removed.begin(), removed.end(), u)) continue;
      if (std::count(removed.begin(), removed.end(), v)) continue;
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    int start = 0;
    while (std::count(removed.begin(), removed.end(), start)) ++start;
    std::vector<char> seen(6, 0);
    std::queue<int> q;
    seen[start] = 1;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    for (int v = 0; v < 6; ++v) {
      if (std::count(removed.begin(), removed.end(), v)) continue;
      if (!seen[v]) return false;
    }
    return true;
  };
  for (int v = 0; v < 6; ++v) CHECK(connected_after({v}));
  bool some_pair_cuts = false;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!connected_after({u, v})) some_pair_cuts = true;
  CHECK(some_pair_cuts);
}

TEST_CASE("max disjoint paths") {
  Graph k4 = named_graph(NamedKind::Complete, 4);
  auto fam = max_disjoint_paths(k4, 0, 1, {});
  CHECK(fam.size() == 3);
  for (const auto& p : fam) CHECK(p.valid_in(k4));

  Graph c6 = named_graph(NamedKind::Cycle, 6);
  CHECK(max_disjoint_paths(c6, 0, 3, {}).size() == 2);
  CHECK(max_disjoint_paths(c6, 0, 3, {1}).size() == 1);
  CHECK(max_disjoint_paths(Graph(4, {{0, 1}, {2, 3}}), 0, 2, {}).empty());
  CHECK_THROWS(max_disjoint_paths(c6, 0, 0, {}));
  CHECK_THROWS(max_disjoint_paths(c6, 0, 3, {0}));
}

TEST_CASE("paths are internally disjoint and respect forbidden sets") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Graph g = gnp_sample(8, 0.4, rng());
    int s = static_cast<int>(rng() % 8), t = static_cast<int>(rng() % 8);
    if (s == t) continue;
    auto fam = max_disjoint_paths(g, s, t, {});
    std::vector<int> used(8, 0);
    for (const auto& p : fam) {
      REQUIRE(p.valid_in(g));
      CHECK(p.endpoint_front() == s);
      CHECK(p.endpoint_back() == t);
      for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
        ++used[p.vertices[i]];
    }
    for (int v = 0; v < 8; ++v) CHECK(used[v] <= 1);
  }
}

TEST_CASE("Menger duality against brute-force cuts") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int it = 0; it < 150; ++it) {
    int n = 5 + static_cast<int>(rng() % 4);
    Graph g = gnp_sample(n, 0.45, rng());
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    for (int s = 0; s < n; ++s) {
      for (int t = s + 1; t < n; ++t) {
        if (g.has_edge(s, t)) continue;
        int flow = static_cast<int>(max_disjoint_paths(g, s, t, {}).size());
        CHECK(flow == oracles::min_vertex_cut_brute(adj, s, t));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("connectivity bounded by min degree") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    Graph g = gnp_sample(7, 0.5, rng());
    int mindeg = 7;
    for (int v = 0; v < 7; ++v) mindeg = std::min(mindeg, g.degree(v));
    CHECK(vertex_connectivity(g) <= mindeg);
  }
}

TEST_CASE("isomorphism") {
  Graph c6 = named_graph(NamedKind::Cycle, 6);
  Graph c6r(6, {{3, 5}, {5, 1}, {1, 0}, {0, 2}, {2, 4}, {4, 3}});
  CHECK(is_isomorphic(c6, c6r));
  CHECK(!is_isomorphic(chh_graph(ChhKind::G1), chh_graph(ChhKind::G2)));
  CHECK(!is_isomorphic(named_graph(NamedKind::Complete, 3),
                       named_graph(NamedKind::Path, 3)));
  CHECK(!is_isomorphic(c6, named_graph(NamedKind::Path, 5)));
}

TEST_CASE("isomorphism is an equivalence on a pool") {
  std::vector<Graph> pool;
  std::mt19937_64 rng(5);
  for (int it = 0; it < 12; ++it) pool.push_back(gnp_sample(5, 0.5, rng()));
  for (const auto& a : pool) CHECK(is_isomorphic(a, a));
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j)
      CHECK(is_isomorphic(pool[i], pool[j]) == is_isomorphic(pool[j], pool[i]));
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j)
      for (size_t k = 0; k < pool.size(); ++k)
        if (is_isomorphic(pool[i], pool[j]) && is_isomorphic(pool[j], pool[k]))
          CHECK(is_isomorphic(pool[i], pool[k]));
}

TEST_CASE("graph enumeration") {
  for (int n : {1, 2, 3, 4}) {
    long long count = 0;
    enumerate_graphs(n, [&](const Graph& g) {
      ++count;
      CHECK(g.order() == n);
      int degsum = 0;
      for (int v = 0; v < n; ++v) degsum += g.degree(v);
      CHECK(degsum == 2 * g.edge_count());
    });
    CHECK(count == 1LL << (n * (n - 1) / 2));
  }
  CHECK_THROWS(enumerate_graphs(7, [](const Graph&) {}));
}

TEST_CASE("automorphism orbits") {
  auto orb = automorphism_orbits(named_graph(NamedKind::Cycle, 6));
  CHECK(std::count(orb.begin(), orb.end(), 0) == 6);  // vertex-transitive
  auto g1 = automorphism_orbits(chh_graph(ChhKind::G1));
  // x3 (vertex 2) and x6 (vertex 5) fixed; {x1,x5} and {x2,x4} paired
  CHECK(g1[2] == 2);
  CHECK(g1[5] == 5);
  CHECK(g1[0] == g1[4]);
  CHECK(g1[1] == g1[3]);
  CHECK(g1[0] != g1[1]);
}

TEST_CASE("edge-list io") {
  std::istringstream in("# cycle\n3 3\n0 1\n1 2\n0 2\n");
  Graph g = read_graph(in);
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 3);

  std::ostringstream out;
  write_graph(out, g);
  std::istringstream back(out.str());
  CHECK(read_graph(back) == g);

  auto bad = [](const std::string& text) {
    std::istringstream s(text);
    CHECK_THROWS_AS(read_graph(s), std::runtime_error);
  };
  bad("");
  bad("2 1\n0 0\n");
  bad("2 2\n0 1\n0 1\n");
  bad("2 1\n0 5\n");
  bad("2 2\n0 1\n");
  bad("x y\n");
}
