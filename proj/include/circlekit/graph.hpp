#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "circlekit/error.hpp"

namespace circlekit {

inline constexpr int kMaxVertices = 64;

// Simple graph on vertices 0..n-1 with bitmask adjacency rows and stable
// external labels. Labels default to "0".."n-1"; operations that remove or
// permute vertices carry the labels along, and operator== compares by label
// (vertex order is irrelevant).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);
  Graph(std::vector<std::string> labels,
        const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const;
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);  // UnknownVertex; loops rejected (BadParameter)
  std::uint64_t neighbors(int v) const;
  int degree(int v) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const;
  int index_of(const std::string& label) const;  // -1 when absent
  Graph relabeled(std::vector<std::string> labels) const;  // LabelClash

  std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)

  // Induced subgraph on the vertices in `keep`, preserving labels and
  // relative order.
  Graph induced(std::uint64_t keep) const;

  // Label-based equality: same label set and the same adjacency between
  // every pair of labels.
  friend bool operator==(const Graph& a, const Graph& b);
  friend Graph local_complement(const Graph& g, int v);

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

struct TwinPair {
  int u, v;       // u < v
  bool adjacent;  // adjacent vs nonadjacent twins
};

enum class ConnectivityClass {
  Disconnected,
  HasCutpoint,
  TwoConnected,
  ThreeConnectedOrMore,  // classification is capped at 3; exact for cubic graphs
};
const char* to_string(ConnectivityClass c);

struct ConnectivityReport {
  ConnectivityClass cls;
  std::vector<int> cutpoints;  // vertices whose removal disconnects, sorted
};

// Complements the adjacency inside the open neighborhood of v; everything
// else, including edges at v, is untouched. Involution. Errors: UnknownVertex.
Graph local_complement(const Graph& g, int v);
Graph delete_vertex(const Graph& g, int v);  // UnknownVertex

bool is_connected(const Graph& g);  // the empty graph counts as connected
int component_count(const Graph& g);
// Vertex masks of the connected components, by smallest contained vertex.
std::vector<std::uint64_t> components(const Graph& g);

// All unordered twin pairs (equal neighborhoods outside the pair), sorted by
// (u, v).
std::vector<TwinPair> twin_pairs(const Graph& g);
// Number of unordered couples {p, q} of vertex-disjoint twin pairs.
int disjoint_twin_pair_couples(const Graph& g);
bool has_two_disjoint_twin_pairs(const Graph& g);

// Brute-force classification by removal of all vertex subsets of size 0, 1, 2.
ConnectivityReport connectivity_class(const Graph& g);

bool is_regular(const Graph& g, int k);

Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);   // n >= 1
// Cycle on `rim` vertices plus a hub (last vertex) adjacent to the whole rim.
Graph wheel(int rim);  // rim >= 3
// W3 with every rim edge subdivided once: hub 0 adjacent to 1, 3, 5 on the
// hexagon 1..6. 7 vertices, 9 edges. Isomorphic to the cube minus a vertex.
Graph bw3();
// Parses "K4", "K3,3", "C5", "P4", "W5", "BW3". Errors: BadParameter.
Graph standard_graph(const std::string& name);

}  // namespace circlekit
