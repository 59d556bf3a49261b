#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

enum class NamedKind { Complete, Path, Cycle };

Graph named_graph(NamedKind kind, int n);

enum class ChhKind { G1, G2 };

/// The two 2-connected diameter-2 Class-1 graphs on six vertices:
/// G1 = C6 (x1..x6 as 0..5) plus chords {x1,x3},{x3,x5};
/// G2 = G1 plus {x1,x5}.
Graph chh_graph(ChhKind which);

/// One independent class per position; consecutive classes fully joined.
struct BlowupSpec {
  std::vector<int> class_sizes;
};

Graph path_blowup(const BlowupSpec& spec);

/// G(n,p) with a fixed generator (mt19937_64, pairs in lexicographic
/// order); identical (n,p,seed) gives identical edge sets on any platform.
Graph gnp_sample(int n, double p, std::uint64_t seed);

}  // namespace pebbling
