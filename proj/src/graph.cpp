#include "circlekit/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace circlekit {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

void check_labels_unique(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      fail("LabelClash", "duplicate vertex label '" + l + "'");
}

}  // namespace

Graph::Graph(int n) : n_(n), rows_(n, 0), labels_(default_labels(n)) {
  if (n < 0 || n > kMaxVertices)
    fail("TooLarge", "order " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxVertices) + "]");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<int, int>>& edges)
    : Graph(static_cast<int>(labels.size()), edges) {
  check_labels_unique(labels);
  labels_ = std::move(labels);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail("UnknownVertex", "vertex " + std::to_string(v) + " not in graph of order " +
                              std::to_string(n_));
}

int Graph::edge_count() const {
  int total = 0;
  for (auto row : rows_) total += std::popcount(row);
  return total / 2;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail("BadParameter", "loop at vertex " + std::to_string(u));
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

std::uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return rows_[v];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

const std::string& Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

int Graph::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Graph Graph::relabeled(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_)
    fail("BadParameter", "expected " + std::to_string(n_) + " labels");
  check_labels_unique(labels);
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if ((rows_[u] >> v) & 1) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::uint64_t keep) const {
  std::vector<int> verts;
  for (int v = 0; v < n_; ++v)
    if ((keep >> v) & 1) verts.push_back(v);
  Graph out(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    out.labels_[i] = labels_[verts[i]];
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if ((rows_[verts[i]] >> verts[j]) & 1)
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  // Match vertices by label, then compare adjacency under that matching.
  std::vector<int> to_b(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    int j = b.index_of(a.labels_[i]);
    if (j < 0) return false;
    to_b[i] = j;
  }
  for (int u = 0; u < a.n_; ++u)
    for (int v = u + 1; v < a.n_; ++v)
      if (((a.rows_[u] >> v) & 1) !=
          ((b.rows_[to_b[u]] >> to_b[v]) & 1))
        return false;
  return true;
}

const char* to_string(ConnectivityClass c) {
  switch (c) {
    case ConnectivityClass::Disconnected: return "disconnected";
    case ConnectivityClass::HasCutpoint: return "1-connected-with-cutpoint";
    case ConnectivityClass::TwoConnected: return "2-connected";
    case ConnectivityClass::ThreeConnectedOrMore: return "3-connected-or-more";
  }
  return "?";
}

Graph local_complement(const Graph& g, int v) {
  std::uint64_t nbr = g.neighbors(v);
  Graph out = g;
  for (int u = 0; u < g.order(); ++u) {
    if (!((nbr >> u) & 1)) continue;
    // XOR u's row against N(v), then clear the self bit.
    std::uint64_t row = g.neighbors(u) ^ nbr;
    row &= ~(std::uint64_t{1} << u);
    out.rows_[u] = row;
  }
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  std::uint64_t keep = 0;
  for (int u = 0; u < g.order(); ++u)
    if (u != v) keep |= std::uint64_t{1} << u;
  g.neighbors(v);  // UnknownVertex check
  return g.induced(keep);
}

namespace {

// Mask of vertices reachable from `start` inside `alive`.
std::uint64_t reach(const Graph& g, std::uint64_t alive, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(v) & alive;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool mask_connected(const Graph& g, std::uint64_t alive) {
  if (!alive) return true;
  int start = std::countr_zero(alive);
  return reach(g, alive, start) == alive;
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

bool is_connected(const Graph& g) {
  return mask_connected(g, full_mask(g.order()));
}

std::vector<std::uint64_t> components(const Graph& g) {
  std::vector<std::uint64_t> out;
  std::uint64_t remaining = full_mask(g.order());
  while (remaining) {
    int v = std::countr_zero(remaining);
    std::uint64_t comp = reach(g, remaining, v);
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

int component_count(const Graph& g) {
  return static_cast<int>(components(g).size());
}

std::vector<TwinPair> twin_pairs(const Graph& g) {
  std::vector<TwinPair> out;
  for (int u = 0; u < g.order(); ++u) {
    std::uint64_t ru = g.neighbors(u);
    for (int v = u + 1; v < g.order(); ++v) {
      std::uint64_t rv = g.neighbors(v);
      if ((ru & ~(std::uint64_t{1} << v)) == (rv & ~(std::uint64_t{1} << u)))
        out.push_back({u, v, static_cast<bool>((ru >> v) & 1)});
    }
  }
  return out;
}

int disjoint_twin_pair_couples(const Graph& g) {
  auto twins = twin_pairs(g);
  int count = 0;
  for (std::size_t i = 0; i < twins.size(); ++i)
    for (std::size_t j = i + 1; j < twins.size(); ++j) {
      const auto &p = twins[i], &q = twins[j];
      if (p.u != q.u && p.u != q.v && p.v != q.u && p.v != q.v) ++count;
    }
  return count;
}

bool has_two_disjoint_twin_pairs(const Graph& g) {
  return disjoint_twin_pair_couples(g) >= 1;
}

ConnectivityReport connectivity_class(const Graph& g) {
  int n = g.order();
  if (n < 1) fail("BadParameter", "connectivity of the empty graph");
  std::uint64_t all = full_mask(n);

  auto disconnected_without = [&](std::uint64_t removed) {
    std::uint64_t alive = all & ~removed;
    if (std::popcount(alive) < 2) return false;
    return !mask_connected(g, alive);
  };

  ConnectivityReport report;
  for (int v = 0; v < n; ++v)
    if (disconnected_without(std::uint64_t{1} << v)) report.cutpoints.push_back(v);

  if (!mask_connected(g, all)) {
    report.cls = ConnectivityClass::Disconnected;
    return report;
  }
  if (!report.cutpoints.empty()) {
    report.cls = ConnectivityClass::HasCutpoint;
    return report;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (disconnected_without((std::uint64_t{1} << u) | (std::uint64_t{1} << v))) {
        report.cls = ConnectivityClass::TwoConnected;
        return report;
      }
  report.cls = ConnectivityClass::ThreeConnectedOrMore;
  return report;
}

bool is_regular(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

Graph complete_graph(int n) {
  if (n < 1) fail("BadParameter", "K" + std::to_string(n));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1)
    fail("BadParameter", "K" + std::to_string(m) + "," + std::to_string(n));
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) fail("BadParameter", "C" + std::to_string(n));
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) fail("BadParameter", "P" + std::to_string(n));
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph wheel(int rim) {
  if (rim < 3) fail("BadParameter", "W" + std::to_string(rim));
  Graph g(rim + 1);
  for (int v = 0; v < rim; ++v) {
    g.add_edge(v, (v + 1) % rim);
    g.add_edge(v, rim);
  }
  return g;
}

Graph bw3() {
  // Wheel W3 with each rim edge subdivided: the hub 0 keeps its three spokes
  // and the rim becomes a hexagon 1..6 with the spoke ends at 1, 3, 5.
  Graph g(7);
  for (int v = 1; v <= 6; ++v) g.add_edge(v, v % 6 + 1);
  for (int v : {1, 3, 5}) g.add_edge(0, v);
  return g;
}

Graph standard_graph(const std::string& name) {
  auto numeric = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c);
    });
  };
  if (name == "BW3") return bw3();
  if (name.size() >= 2) {
    char kind = name[0];
    std::string rest = name.substr(1);
    auto comma = rest.find(',');
    if (kind == 'K' && comma != std::string::npos) {
      std::string a = rest.substr(0, comma), b = rest.substr(comma + 1);
      if (numeric(a) && numeric(b))
        return complete_bipartite(std::stoi(a), std::stoi(b));
    } else if (numeric(rest)) {
      int k = std::stoi(rest);
      switch (kind) {
        case 'K': return complete_graph(k);
        case 'C': return cycle_graph(k);
        case 'P': return path_graph(k);
        case 'W': return wheel(k);
        default: break;
      }
    }
  }
  fail("BadParameter", "unknown graph name '" + name + "'");
}

}  // namespace circlekit
