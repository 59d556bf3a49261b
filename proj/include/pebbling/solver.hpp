#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

/// Pebble counts indexed by vertex.
using Distribution = std::vector<int>;

int size_of(const Distribution& d);

struct Move {
  int from;
  int to;
  bool operator==(const Move&) const = default;
};

struct MoveCertificate {
  std::vector<Move> moves;
};

/// Removes two pebbles from m.from, adds one to m.to. Throws on a non-edge
/// or when fewer than two pebbles are present.
Distribution apply_move(const Graph& g, const Distribution& d, Move m);

/// Exact dyadic value num / 2^exp of sum over v of phi(v) * 2^-dist(v,target).
/// Pebbles on vertices with no path to the target contribute nothing and set
/// dropped_unreachable. Never increases under apply_move; below one means
/// the target cannot be pebbled.
struct Weight {
  std::uint64_t num = 0;
  int exp = 0;
  bool dropped_unreachable = false;

  bool less_than_one() const { return num < (std::uint64_t{1} << exp); }
};

Weight weight(const Graph& g, const Distribution& d, int target);

struct ReachResult {
  bool reachable = false;
  MoveCertificate certificate;  // valid when reachable
};

/// Exact decision: does d or some descendant place a pebble on target?
/// DFS over distribution states with failed-state memoization, weight
/// pruning, and target-directed move ordering.
ReachResult can_pebble(const Graph& g, const Distribution& d, int target);

/// Replays the certificate with full precondition checks. On failure the
/// reason (when requested) says which move broke and why.
bool verify_certificate(const Graph& g, const Distribution& d, int target,
                        const MoveCertificate& c, std::string* reason = nullptr);

/// One line of n space-separated non-negative integers.
Distribution read_distribution(std::istream& in, int n);
Distribution read_distribution_file(const std::string& path, int n);

/// JSON list of {"from": x, "to": y}.
std::string certificate_to_json(const MoveCertificate& c);
MoveCertificate certificate_from_json(const std::string& text);

}  // namespace pebbling
