#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "circlekit/graph.hpp"

namespace circlekit {

// A split (V1, X1; V2, X2): V1/V2 partition the vertex set with both sides
// of size >= 2, the crossing edges form the complete bipartite graph
// X1 x X2, and X1/X2 are exactly the endpoints of crossing edges (both empty
// when no edge crosses). Vertex lists are sorted label lists.
struct Split {
  std::vector<std::string> v1, x1, v2, x2;

  friend bool operator==(const Split&, const Split&) = default;
  friend auto operator<=>(const Split&, const Split&) = default;
};

// Checks every Split invariant against g. The two vertex lists must
// partition the label set (NotAPartition otherwise).
bool validate_split(const Graph& g, const Split& s);

// First valid split in a fixed enumeration order (increasing |V1|, then
// lexicographic by vertex index set), or nullopt. Errors: TooSmall for
// |V| < 4, TooLarge for |V| > 16.
std::optional<Split> find_split(const Graph& g);

// |V| >= 5 and no split.
bool is_prime(const Graph& g);

// The splits produced by the three simple constructions, in order: twin
// pairs, unions of connected components, cutpoint-separated components.
// Each is validated before emission; duplicates (as exact tuples) are
// dropped. Errors: TooSmall for |V| < 4.
std::vector<Split> simple_splits(const Graph& g);

// True iff g and local_complement(g, v) admit a split on exactly the same
// bipartitions. Errors: UnknownVertex, TooSmall, TooLarge for |V| > 14.
bool split_lc_commutes(const Graph& g, int v);

}  // namespace circlekit
