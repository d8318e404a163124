#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "circlekit/graph.hpp"

namespace circlekit {

// Decodes one graph6 line (optionally prefixed by the ">>graph6<<" header).
// Errors: MalformedGraph6, TooLarge for orders above kMaxVertices.
Graph parse_graph6(const std::string& line);

// Encodes a graph of order <= 62 as a single graph6 line (no newline).
// Errors: TooLarge.
std::string format_graph6(const Graph& g);

// One graph per non-empty line; a leading ">>graph6<<" header is skipped.
// MalformedGraph6 errors carry the 1-based line number.
void ingest_graph6(std::istream& in, const std::function<void(Graph)>& sink);
std::vector<Graph> ingest_graph6(std::istream& in);

}  // namespace circlekit
