#include "pebbling/threshold.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "pebbling/generators.hpp"
#include "pebbling/number.hpp"

namespace pebbling {

std::string PropertySpec::name() const {
  switch (kind) {
    case PropertyKind::Connected:
      return "connected";
    case PropertyKind::DiamLe:
      return "diam_le(" + std::to_string(param) + ")";
    case PropertyKind::KappaGe:
      return "kappa_ge(" + std::to_string(param) + ")";
    default:
      return "class0";
  }
}

PropertySpec PropertySpec::parse(const std::string& text) {
  auto param_of = [&](size_t prefix) {
    if (text.back() != ')') throw std::invalid_argument("bad property: " + text);
    int k = std::stoi(text.substr(prefix, text.size() - prefix - 1));
    if (k < 1) throw std::invalid_argument("bad parameter in: " + text);
    return k;
  };
  if (text == "connected") return {PropertyKind::Connected, 0};
  if (text == "class0") return {PropertyKind::Class0, 0};
  if (text.rfind("diam_le(", 0) == 0) return {PropertyKind::DiamLe, param_of(8)};
  if (text.rfind("kappa_ge(", 0) == 0)
    return {PropertyKind::KappaGe, param_of(9)};
  throw std::invalid_argument("unknown property: " + text);
}

bool eval_property(const Graph& g, const PropertySpec& prop) {
  switch (prop.kind) {
    case PropertyKind::Connected:
      return is_connected(g);
    case PropertyKind::DiamLe: {
      auto d = diameter(g);
      return d.has_value() && *d <= prop.param;
    }
    case PropertyKind::KappaGe:
      return vertex_connectivity(g) >= prop.param;
    case PropertyKind::Class0:
      if (g.order() > kClass0Guard)
        throw std::invalid_argument("class0 evaluation guarded at n <= " +
                                    std::to_string(kClass0Guard));
      return is_class0(g).class0;
  }
  return false;
}

static std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, int grid_index, int trial) {
  std::uint64_t x = splitmix64(master);
  x = splitmix64(x ^ (static_cast<std::uint64_t>(grid_index) << 32));
  return splitmix64(x ^ static_cast<std::uint64_t>(trial));
}

std::pair<double, double> wilson_interval(int successes, int trials) {
  const double z = 1.959963984540054;  // 95%
  if (successes == 0) {
    double n = trials;
    return {0.0, (z * z / n) / (1.0 + z * z / n)};
  }
  if (successes == trials) {
    auto [lo, hi] = wilson_interval(0, trials);
    return {1.0 - hi, 1.0};
  }
  double n = trials, ph = successes / n;
  double denom = 1.0 + z * z / n;
  double center = (ph + z * z / (2 * n)) / denom;
  double half = z * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SweepRow estimate_probability(int n, double p, int trials,
                              std::uint64_t master_seed, int grid_index,
                              const PropertySpec& prop, int threads) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");
  if (prop.kind == PropertyKind::Class0 && n > kClass0Guard)
    throw std::invalid_argument("class0 sweep guarded at n <= " +
                                std::to_string(kClass0Guard));
  threads = std::max(1, std::min(threads, trials));
  std::atomic<int> successes{0};
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int t = next.fetch_add(1);
      if (t >= trials) break;
      Graph g = gnp_sample(n, p, trial_seed(master_seed, grid_index, t));
      if (eval_property(g, prop)) successes.fetch_add(1);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  SweepRow row;
  row.n = n;
  row.p = p;
  row.property = prop.name();
  row.trials = trials;
  row.successes = successes.load();
  row.estimate = static_cast<double>(row.successes) / trials;
  std::tie(row.ci_low, row.ci_high) = wilson_interval(row.successes, trials);
  row.seed = master_seed;
  return row;
}

std::vector<SweepRow> sweep(const ExperimentConfig& config) {
  std::vector<SweepRow> rows;
  for (size_t gi = 0; gi < config.p_grid.size(); ++gi)
    for (const auto& prop : config.properties)
      rows.push_back(estimate_probability(config.n, config.p_grid[gi],
                                          config.trials, config.seed,
                                          static_cast<int>(gi), prop,
                                          config.threads));
  return rows;
}

std::vector<ScalingRow> scaling_reference(int d,
                                          const std::vector<int>& n_list) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  std::vector<ScalingRow> rows;
  for (int n : n_list) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    ScalingRow r;
    r.n = n;
    double lg = std::log2(static_cast<double>(n));
    r.diam_threshold = std::pow(n * lg, 1.0 / d) / n;
    r.conn_threshold = lg / n;
    rows.push_back(r);
  }
  return rows;
}

static std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n,p,property,trials,successes,estimate,ci_low,ci_high,seed\n";
  for (const auto& r : rows)
    out << r.n << ',' << fmt(r.p) << ',' << r.property << ',' << r.trials
        << ',' << r.successes << ',' << fmt(r.estimate) << ',' << fmt(r.ci_low)
        << ',' << fmt(r.ci_high) << ',' << r.seed << '\n';
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"n", r.n},
                   {"p", r.p},
                   {"property", r.property},
                   {"trials", r.trials},
                   {"successes", r.successes},
                   {"estimate", r.estimate},
                   {"ci_low", r.ci_low},
                   {"ci_high", r.ci_high},
                   {"seed", r.seed}});
  nlohmann::json j = {
      {"rows", arr},
      {"note",
       "Monte Carlo estimates at fixed n; finite sweeps bound no asymptotic "
       "threshold, see the scaling reference curves for the analytic guides"}};
  return j.dump(2);
}

void write_scaling_csv(std::ostream& out, int d,
                       const std::vector<ScalingRow>& rows) {
  out << "n,d,diam_threshold,conn_threshold\n";
  for (const auto& r : rows)
    out << r.n << ',' << d << ',' << fmt(r.diam_threshold) << ','
        << fmt(r.conn_threshold) << '\n';
}

}  // namespace pebbling
