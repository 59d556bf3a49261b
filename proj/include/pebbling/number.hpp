#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

/// All vectors of n non-negative integers summing to total, lexicographic
/// (first coordinate ascending). zero_at pins one entry to zero.
void enumerate_distributions(int n, int total, std::optional<int> zero_at,
                             const std::function<void(const Distribution&)>& fn);

struct Class1Witness {
  int target = -1;
  Distribution distribution;
};

struct NumberReport {
  int f = 0;
  long long targets_tested = 0;
  long long distributions_tested = 0;
  double elapsed_seconds = 0.0;
  /// A maximal failing example: size f-1, unreachable.
  std::optional<Class1Witness> last_failure;
};

/// Exact pebbling number by exhaustive search, p = |V| upward. Only
/// distributions that are not trivially reachable are solved: an entry
/// phi(v) >= 2^dist(v,target) already pebbles the target along a shortest
/// path, so enumeration caps each entry at 2^dist - 1. Targets reduced to
/// automorphism-orbit representatives. Throws on disconnected input.
NumberReport pebbling_number_report(const Graph& g);
int pebbling_number(const Graph& g);

struct ClassResult {
  bool class0 = false;
  std::optional<Class1Witness> witness;  // set when class 1
  bool disconnected = false;             // trivial witness case
  long long targets_tested = 0;
  long long distributions_tested = 0;
};

/// Class 0 iff every size-|V| distribution can pebble every target.
ClassResult is_class0(const Graph& g);

struct ClassifiedGraph {
  Graph representative;
  long long labeled_count = 0;  // labeled graphs in this isomorphism class
  Class1Witness witness;
};

/// All 2-connected, diameter-2, Class-1 graphs on 2..n_max vertices, up to
/// isomorphism. Guarded at n_max <= 6. The progress callback, when given,
/// reports (n, graphs_done, graphs_total).
std::vector<ClassifiedGraph> classify_small(
    int n_max,
    const std::function<void(int, long long, long long)>& progress = nullptr);

std::string number_report_to_json(const Graph& g, const NumberReport& r);
std::string class_result_to_json(const Graph& g, const ClassResult& r);

}  // namespace pebbling
