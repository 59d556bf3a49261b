#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

/// V split by pebble count: zeroes (phi=0), units (phi=1), bigs (phi>1).
struct ZubPartition {
  std::vector<int> zeroes;
  std::vector<int> units;
  std::vector<int> bigs;
  long long big_total = 0;  // sum of phi over bigs; omega = big_total/m
  int m = 0;                // |B|
  bool size_is_order = false;
  /// big_total == |B|+|Z| and |Z| == m*(omega-1); checked when size == |V|.
  bool identities_hold = false;
};

ZubPartition zub_partition(const Graph& g, const Distribution& d);

/// H'_v: the subgraph induced by {v} u U u B, with each big b != v replaced
/// by an independent class A_b of floor(phi(b)/2) nodes, plus an apex
/// adjacent to exactly the class nodes.
struct BlowupGraph {
  int base_vertex = -1;
  int root = -1;  // node id of v
  int apex = -1;
  std::vector<int> node_base;        // node id -> base vertex, -1 for apex
  std::vector<char> node_is_class;   // member of some A_b
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> class_nodes;  // base vertex -> its A_b ids

  int node_count() const { return static_cast<int>(node_base.size()); }
};

BlowupGraph blowup_graph(const Graph& g, const Distribution& d, int v);

/// Minimum v-apex separator S'_v in H'_v with its Menger certificate, the
/// derived base separator S_v, and the Claim 2 statement checks.
struct SeparatorReport {
  int v = -1;
  BlowupGraph blowup;
  std::vector<int> cut_nodes;       // S'_v (node ids)
  std::vector<int> base_separator;  // S_v (base vertices)
  std::vector<std::vector<int>> path_family;  // disjoint root-apex paths
  bool stmt1_holds = false;  // every v-to-class path meets S'_v
  bool stmt3_holds = false;  // partially cut classes never survive repair
  bool repaired = false;     // cut had to be exchanged to satisfy stmt 3
};

SeparatorReport min_separator(const Graph& g, const Distribution& d, int v);

/// Largest family of v-rooted paths ending in B: interiors in B u U, at most
/// floor(phi(b)/2) paths per endpoint b, pairwise disjoint apart from v and
/// shared endpoints. Computed by max flow after truncating every path at its
/// first big, which keeps the optimum and leaves interiors among units.
int claim1_bound(const Graph& g, const Distribution& d, int v);

/// Greedy subset B0 = b_1..b_q: pick the smallest remaining big, drop
/// S_b n B, repeat. Guarantees b_j not in S_{b_i} for j > i.
struct B0Selection {
  std::vector<int> order;
  std::vector<std::vector<int>> separators;  // S_{b_i}, aligned with order
  std::vector<long long> step_pebbles;       // phi(b_i) + sum_{S_{b_i}} phi
  bool steps_within_bound = false;           // every step < 2^{D+2}
  bool claim4_holds = false;                 // q * 2^{D+2} > m*omega
  bool pairwise_ok = false;
};

B0Selection select_b0(const Graph& g, const Distribution& d);

struct RootedPath {
  int root = -1;
  int terminal = -1;
  std::vector<int> vertices;  // root..terminal
};

/// For each root b in B0: maximum internally disjoint b-z0 families, paths
/// meeting S_b discarded, survivors truncated at their first point of W u Z.
struct TerminalFamilies {
  std::vector<int> w_set;  // W = union of the S_b
  std::vector<RootedPath> family;
  std::vector<int> kept_per_root;       // aligned with b0.order
  std::vector<int> discarded_per_root;  // paths that met S_b
  bool root_edge_premise_ok = false;    // no root adjacent to z0
};

TerminalFamilies terminal_families(const Graph& g, const Distribution& d,
                                   const B0Selection& b0, int z0);

enum class Verdict { Holds, Fails, PremiseNotMet };

const char* verdict_name(Verdict v);

struct ClaimResult {
  std::string claim;
  bool premise_met = false;
  Verdict verdict = Verdict::PremiseNotMet;
  nlohmann::json quantities;
  std::string witness;  // what failed, when verdict == Fails
};

/// Full audit of one would-be counterexample (g, phi, z0): partition,
/// per-vertex separators, claim inequalities, greedy B0, terminal families,
/// final counting ratio. Stops early when z0 is in fact reachable.
struct AuditReport {
  bool premise_ok = false;
  std::string premise_note;
  int diameter_used = 0;
  std::vector<ClaimResult> claims;

  const ClaimResult* find(const std::string& name) const;
  bool all_met_claims_hold() const;
};

AuditReport audit_counterexample(const Graph& g, const Distribution& d, int z0);

std::string audit_to_json(const AuditReport& r);

}  // namespace pebbling
