#include "pebbling/number.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pebbling {

void enumerate_distributions(int n, int total, std::optional<int> zero_at,
                             const std::function<void(const Distribution&)>& fn) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (total < 0) throw std::invalid_argument("negative total");
  if (zero_at && (*zero_at < 0 || *zero_at >= n))
    throw std::out_of_range("zero_at out of range");
  Distribution d(n, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == n - 1) {
      if (zero_at && *zero_at == v && left != 0) return;
      d[v] = left;
      fn(d);
      d[v] = 0;
      return;
    }
    if (zero_at && *zero_at == v) {
      rec(v + 1, left);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      d[v] = c;
      rec(v + 1, left - c);
    }
    d[v] = 0;
  };
  rec(0, total);
}

namespace {

// Enumerate candidate unreachable distributions for one target: total
// pebbles, zero on the target, and every entry below 2^dist(v,target)
// (anything larger is reachable outright and need not be solved).
// Returns the first unreachable distribution found, in lexicographic order.
struct TargetSearch {
  const Graph& g;
  int target;
  std::vector<int> cap;
  long long tested = 0;

  TargetSearch(const Graph& g, int target) : g(g), target(target) {
    auto dist = distances(g, target);
    cap.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
      if (dist[v] == kUnreachable)
        throw std::invalid_argument("graph must be connected");
      if (dist[v] > 30) throw std::invalid_argument("graph too deep");
      cap[v] = (1 << dist[v]) - 1;  // cap 0 at the target itself
    }
    suffix_cap.resize(g.order() + 1, 0);
    for (int v = g.order() - 1; v >= 0; --v)
      suffix_cap[v] = suffix_cap[v + 1] + cap[v];
  }

  std::vector<int> suffix_cap;

  std::optional<Distribution> find_unreachable(int total) {
    Distribution d(g.order(), 0);
    return rec(d, 0, total);
  }

 private:
  std::optional<Distribution> rec(Distribution& d, int v, int left) {
    if (left > suffix_cap[v]) return std::nullopt;
    if (v == g.order()) {
      ++tested;
      if (!can_pebble(g, d, target).reachable) return d;
      return std::nullopt;
    }
    for (int c = 0; c <= std::min(cap[v], left); ++c) {
      d[v] = c;
      if (auto r = rec(d, v + 1, left - c)) return r;
    }
    d[v] = 0;
    return std::nullopt;
  }
};

std::vector<int> orbit_representatives(const Graph& g) {
  auto orbit = automorphism_orbits(g);
  std::vector<int> reps;
  for (int v = 0; v < g.order(); ++v)
    if (orbit[v] == v) reps.push_back(v);
  return reps;
}

}  // namespace

NumberReport pebbling_number_report(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("pebbling number undefined: graph disconnected");
  auto t0 = std::chrono::steady_clock::now();
  NumberReport rep;
  const int n = g.order();
  auto reps = orbit_representatives(g);
  std::vector<TargetSearch> searches;
  searches.reserve(reps.size());
  for (int t : reps) searches.emplace_back(g, t);
  int diam = diameter(g).value();
  // pigeonhole termination: some vertex holds 2^D pebbles beyond this
  long long bound = static_cast<long long>(n) * ((1LL << diam) - 1) + 1;
  for (int p = n;; ++p) {
    if (p > bound) throw std::logic_error("termination bound exceeded");
    bool failed = false;
    for (size_t i = 0; i < searches.size() && !failed; ++i) {
      ++rep.targets_tested;
      if (auto d = searches[i].find_unreachable(p)) {
        failed = true;
        rep.last_failure = Class1Witness{reps[i], *d};
      }
    }
    if (!failed) {
      rep.f = p;
      break;
    }
  }
  for (auto& s : searches) rep.distributions_tested += s.tested;
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

int pebbling_number(const Graph& g) { return pebbling_number_report(g).f; }

ClassResult is_class0(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("empty graph");
  ClassResult res;
  const int n = g.order();
  if (!is_connected(g)) {
    // all pebbles in a component missing the target
    auto dist = distances(g, 0);
    int other = -1;
    for (int v = 0; v < n; ++v)
      if (dist[v] == kUnreachable) {
        other = v;
        break;
      }
    Distribution d(n, 0);
    d[other] = n;
    res.class0 = false;
    res.disconnected = true;
    res.witness = Class1Witness{0, d};
    return res;
  }
  for (int t : orbit_representatives(g)) {
    ++res.targets_tested;
    TargetSearch search(g, t);
    auto d = search.find_unreachable(n);
    res.distributions_tested += search.tested;
    if (d) {
      res.class0 = false;
      res.witness = Class1Witness{t, *d};
      return res;
    }
  }
  res.class0 = true;
  return res;
}

std::vector<ClassifiedGraph> classify_small(
    int n_max, const std::function<void(int, long long, long long)>& progress) {
  if (n_max > 6) throw std::invalid_argument("classify_small guarded at n <= 6");
  std::vector<ClassifiedGraph> classes;
  for (int n = 2; n <= n_max; ++n) {
    long long total = 1LL << (n * (n - 1) / 2);
    long long done = 0;
    enumerate_graphs(n, [&](const Graph& g) {
      ++done;
      if (progress && done % 4096 == 0) progress(n, done, total);
      if (!is_connected(g)) return;
      if (n >= 3 && vertex_connectivity(g) < 2) return;
      if (n == 2) return;  // K2 has connectivity 1
      if (diameter(g) != std::optional<int>(2)) return;
      auto cls = is_class0(g);
      if (cls.class0) return;
      for (auto& c : classes) {
        if (is_isomorphic(c.representative, g)) {
          ++c.labeled_count;
          return;
        }
      }
      classes.push_back({g, 1, *cls.witness});
    });
    if (progress) progress(n, total, total);
  }
  return classes;
}

static nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

std::string number_report_to_json(const Graph& g, const NumberReport& r) {
  nlohmann::json j = {{"graph", graph_json(g)},
                      {"f", r.f},
                      {"class", r.f == g.order() ? 0 : 1},
                      {"targets_tested", r.targets_tested},
                      {"distributions_tested", r.distributions_tested},
                      {"elapsed", r.elapsed_seconds}};
  if (r.last_failure)
    j["witness"] = {{"target", r.last_failure->target},
                    {"distribution", r.last_failure->distribution}};
  return j.dump(2);
}

std::string class_result_to_json(const Graph& g, const ClassResult& r) {
  nlohmann::json j = {{"graph", graph_json(g)},
                      {"class", r.class0 ? 0 : 1},
                      {"disconnected", r.disconnected},
                      {"targets_tested", r.targets_tested},
                      {"distributions_tested", r.distributions_tested}};
  if (r.witness)
    j["witness"] = {{"target", r.witness->target},
                    {"distribution", r.witness->distribution}};
  return j.dump(2);
}

}  // namespace pebbling
