#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

enum class PropertyKind { Connected, DiamLe, KappaGe, Class0 };

struct PropertySpec {
  PropertyKind kind = PropertyKind::Connected;
  int param = 0;  // d for DiamLe, k for KappaGe

  std::string name() const;
  /// "connected", "diam_le(2)", "kappa_ge(3)", "class0"
  static PropertySpec parse(const std::string& text);
};

/// Exact evaluation via graph-core / pebbling-number.
bool eval_property(const Graph& g, const PropertySpec& prop);

inline constexpr int kClass0Guard = 10;

struct SweepRow {
  int n = 0;
  double p = 0.0;
  std::string property;
  int trials = 0;
  int successes = 0;
  double estimate = 0.0;
  double ci_low = 0.0;   // 95% Wilson
  double ci_high = 0.0;
  std::uint64_t seed = 0;
};

struct ExperimentConfig {
  int n = 0;
  std::vector<double> p_grid;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertySpec> properties;
  int threads = 1;
};

/// Counter-based per-trial seed so worker count and execution order cannot
/// change the sampled graphs.
std::uint64_t trial_seed(std::uint64_t master, int grid_index, int trial);

/// 95% Wilson score interval for successes/trials.
std::pair<double, double> wilson_interval(int successes, int trials);

SweepRow estimate_probability(int n, double p, int trials,
                              std::uint64_t master_seed, int grid_index,
                              const PropertySpec& prop, int threads = 1);

std::vector<SweepRow> sweep(const ExperimentConfig& config);

struct ScalingRow {
  int n = 0;
  double diam_threshold = 0.0;  // (n lg n)^{1/d} / n
  double conn_threshold = 0.0;  // lg n / n
};

/// Asymptotic guide curves for plotting next to sweep estimates; not
/// desk-scale predictions.
std::vector<ScalingRow> scaling_reference(int d, const std::vector<int>& n_list);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);
void write_scaling_csv(std::ostream& out, int d,
                       const std::vector<ScalingRow>& rows);

}  // namespace pebbling
