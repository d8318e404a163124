#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlekit/graph.hpp"

namespace circlekit {

inline constexpr int kMaxCanonicalVertices = 16;

// Canonical form of a graph on <= 16 vertices: the row-major upper adjacency
// triangle of the canonically relabeled graph, packed into two 64-bit words.
// Equal forms <=> isomorphic graphs. Labels play no part.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits[2] = {0, 0};

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.bits[0] == b.bits[0] && a.bits[1] == b.bits[1];
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.bits[1] <=> b.bits[1]; c != 0) return c;
    return a.bits[0] <=> b.bits[0];
  }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(f.n);
    for (std::uint64_t w : f.bits) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Minimum adjacency encoding over an individualization-refinement search
// tree. Errors: TooLarge for graphs above kMaxCanonicalVertices.
CanonicalForm canonical_form(const Graph& g);

// The canonical form rendered as a compact hex key; equal keys <=>
// isomorphic graphs.
std::string canonical_label(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

// An injective map m (pattern vertex -> host vertex) with h adjacent(i, j)
// <=> g adjacent(m[i], m[j]), i.e. an induced copy of h inside g.
std::optional<std::vector<int>> contains_induced(const Graph& g,
                                                 const Graph& h);

}  // namespace circlekit
