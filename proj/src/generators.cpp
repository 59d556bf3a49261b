#include "pebbling/generators.hpp"

#include <random>
#include <stdexcept>

namespace pebbling {

Graph named_graph(NamedKind kind, int n) {
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case NamedKind::Complete:
      if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
      break;
    case NamedKind::Path:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    case NamedKind::Cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
      break;
  }
  return Graph(n, edges);
}

Graph chh_graph(ChhKind which) {
  // x_i is vertex i-1
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3},
                                            {3, 4}, {4, 5}, {0, 5},
                                            {0, 2}, {2, 4}};
  if (which == ChhKind::G2) edges.push_back({0, 4});
  return Graph(6, edges);
}

Graph path_blowup(const BlowupSpec& spec) {
  if (spec.class_sizes.size() < 2)
    throw std::invalid_argument("blow-up needs at least two classes");
  int n = 0;
  std::vector<int> start;
  for (int s : spec.class_sizes) {
    if (s < 1) throw std::invalid_argument("class sizes must be positive");
    start.push_back(n);
    n += s;
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i + 1 < spec.class_sizes.size(); ++i)
    for (int a = 0; a < spec.class_sizes[i]; ++a)
      for (int b = 0; b < spec.class_sizes[i + 1]; ++b)
        edges.push_back({start[i] + a, start[i + 1] + b});
  return Graph(n, edges);
}

Graph gnp_sample(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // uniform in [0,1) built directly from 53 bits; avoids the
      // implementation-defined std distributions
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace pebbling
