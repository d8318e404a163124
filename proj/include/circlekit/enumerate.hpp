#pragma once

#include <functional>
#include <vector>

#include "circlekit/graph.hpp"

namespace circlekit {

// Streams exactly one representative per isomorphism class of 3-regular
// graphs on n vertices, connected ones first via edge backtracking with
// canonical-form deduplication, then (unless connected_only) disjoint
// unions assembled from smaller connected classes. Deterministic order.
// Errors: BadOrder unless n is even and 4 <= n <= 14.
void enumerate_cubic(int n, bool connected_only,
                     const std::function<void(const Graph&)>& sink);
std::vector<Graph> enumerate_cubic(int n, bool connected_only);

}  // namespace circlekit
