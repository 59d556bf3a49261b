#include "pebbling/solver.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace pebbling {

int size_of(const Distribution& d) {
  return std::accumulate(d.begin(), d.end(), 0);
}

static void check_sized(const Graph& g, const Distribution& d) {
  if (static_cast<int>(d.size()) != g.order())
    throw std::invalid_argument("distribution size does not match graph");
  for (int c : d)
    if (c < 0) throw std::invalid_argument("negative pebble count");
}

Distribution apply_move(const Graph& g, const Distribution& d, Move m) {
  check_sized(g, d);
  if (!g.has_edge(m.from, m.to)) throw std::invalid_argument("move on non-edge");
  if (d[m.from] < 2) throw std::invalid_argument("insufficient pebbles");
  Distribution out = d;
  out[m.from] -= 2;
  out[m.to] += 1;
  return out;
}

Weight weight(const Graph& g, const Distribution& d, int target) {
  check_sized(g, d);
  auto dist = distances(g, target);
  Weight w;
  for (int v = 0; v < g.order(); ++v)
    if (dist[v] != kUnreachable) w.exp = std::max(w.exp, dist[v]);
  if (w.exp > 62) throw std::invalid_argument("graph too deep for dyadic weight");
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] == kUnreachable) {
      if (d[v] > 0) w.dropped_unreachable = true;
      continue;
    }
    w.num += static_cast<std::uint64_t>(d[v]) << (w.exp - dist[v]);
  }
  return w;
}

namespace {

struct StateHash {
  size_t operator()(const std::vector<int>& s) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : s) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

class Solver {
 public:
  Solver(const Graph& g, int target) : g_(g), target_(target) {
    dist_ = distances(g, target);
    maxd_ = 0;
    for (int d : dist_)
      if (d != kUnreachable) maxd_ = std::max(maxd_, d);
    if (maxd_ > 62) throw std::invalid_argument("graph too deep");
    unit_.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v)
      if (dist_[v] != kUnreachable)
        unit_[v] = std::uint64_t{1} << (maxd_ - dist_[v]);
    // expand pebbles nearest the target first; within a vertex, prefer
    // neighbors closer to the target
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      int da = dist_[a] == kUnreachable ? g_.order() + 1 : dist_[a];
      int db = dist_[b] == kUnreachable ? g_.order() + 1 : dist_[b];
      return da != db ? da < db : a < b;
    });
    nbr_.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
      nbr_[v] = g.neighbors(v);
      std::sort(nbr_[v].begin(), nbr_[v].end(), [&](int a, int b) {
        int da = dist_[a] == kUnreachable ? g_.order() + 1 : dist_[a];
        int db = dist_[b] == kUnreachable ? g_.order() + 1 : dist_[b];
        return da != db ? da < db : a < b;
      });
    }
  }

  bool solve(std::vector<int> state, std::vector<Move>* cert) {
    std::uint64_t w = 0;
    for (int v = 0; v < g_.order(); ++v)
      w += unit_[v] * static_cast<std::uint64_t>(state[v]);
    bool ok = dfs(state, w);
    if (ok && cert) *cert = trail_;
    return ok;
  }

 private:
  // phi(v) >= 2^dist(v) lets a shortest path finish the job outright
  bool greedy_finish(std::vector<int>& s) {
    for (int v : order_) {
      if (dist_[v] == kUnreachable) continue;
      if (static_cast<std::uint64_t>(s[v]) >= (std::uint64_t{1} << dist_[v])) {
        int cur = v;
        while (cur != target_) {
          int next = -1;
          for (int w : nbr_[cur])
            if (dist_[w] == dist_[cur] - 1) {
              next = w;
              break;
            }
          int k = 1 << (dist_[next]);  // pebbles to land on next
          for (int i = 0; i < k; ++i) trail_.push_back({cur, next});
          cur = next;
        }
        return true;
      }
    }
    return false;
  }

  bool dfs(std::vector<int>& s, std::uint64_t w) {
    if (s[target_] > 0) return true;
    if (w < (std::uint64_t{1} << maxd_)) return false;  // weight below one
    if (greedy_finish(s)) return true;
    if (failed_.count(s)) return false;
    for (int x : order_) {
      if (s[x] < 2) continue;
      for (int y : nbr_[x]) {
        s[x] -= 2;
        s[y] += 1;
        trail_.push_back({x, y});
        if (dfs(s, w - 2 * unit_[x] + unit_[y])) return true;
        trail_.pop_back();
        s[x] += 2;
        s[y] -= 1;
      }
    }
    failed_.insert(s);
    return false;
  }

  const Graph& g_;
  int target_;
  int maxd_;
  std::vector<int> dist_;
  std::vector<std::uint64_t> unit_;
  std::vector<int> order_;
  std::vector<std::vector<int>> nbr_;
  std::vector<Move> trail_;
  std::unordered_set<std::vector<int>, StateHash> failed_;
};

}  // namespace

ReachResult can_pebble(const Graph& g, const Distribution& d, int target) {
  check_sized(g, d);
  if (target < 0 || target >= g.order())
    throw std::out_of_range("target out of range");
  ReachResult r;
  Solver solver(g, target);
  r.reachable = solver.solve(d, &r.certificate.moves);
  return r;
}

bool verify_certificate(const Graph& g, const Distribution& d, int target,
                        const MoveCertificate& c, std::string* reason) {
  if (static_cast<int>(d.size()) != g.order() || target < 0 ||
      target >= g.order()) {
    if (reason) *reason = "malformed instance";
    return false;
  }
  Distribution cur = d;
  for (size_t i = 0; i < c.moves.size(); ++i) {
    Move m = c.moves[i];
    if (m.from < 0 || m.from >= g.order() || m.to < 0 || m.to >= g.order() ||
        !g.has_edge(m.from, m.to)) {
      if (reason) *reason = "move " + std::to_string(i) + ": not an edge";
      return false;
    }
    if (cur[m.from] < 2) {
      if (reason)
        *reason = "move " + std::to_string(i) + ": fewer than two pebbles on " +
                  std::to_string(m.from);
      return false;
    }
    cur[m.from] -= 2;
    cur[m.to] += 1;
  }
  if (cur[target] < 1) {
    if (reason) *reason = "final distribution leaves target empty";
    return false;
  }
  return true;
}

Distribution read_distribution(std::istream& in, int n) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("line 1: empty distribution input");
  std::istringstream ls(line);
  Distribution d;
  long long x;
  while (ls >> x) {
    if (x < 0) throw std::runtime_error("line 1: negative pebble count");
    d.push_back(static_cast<int>(x));
  }
  if (!ls.eof()) throw std::runtime_error("line 1: non-integer token");
  if (static_cast<int>(d.size()) != n)
    throw std::runtime_error("line 1: expected " + std::to_string(n) +
                             " counts, got " + std::to_string(d.size()));
  return d;
}

Distribution read_distribution_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_distribution(in, n);
}

std::string certificate_to_json(const MoveCertificate& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const Move& m : c.moves) j.push_back({{"from", m.from}, {"to", m.to}});
  return j.dump();
}

MoveCertificate certificate_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  MoveCertificate c;
  for (const auto& e : j)
    c.moves.push_back({e.at("from").get<int>(), e.at("to").get<int>()});
  return c;
}

}  // namespace pebbling
