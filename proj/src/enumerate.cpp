#include "circlekit/enumerate.hpp"

#include <bit>
#include <map>
#include <set>
#include <utility>

#include "circlekit/isomorphism.hpp"

namespace circlekit {

namespace {

// Edge backtracking over first-appearance-numbered graphs: the lowest
// deficient vertex gains its missing edges first, each batch in increasing
// partner order, and fresh vertices always take the smallest unused index.
// Isomorph rejection happens at the leaves via canonical forms.
class CubicGenerator {
 public:
  CubicGenerator(int n, const std::function<void(const Graph&)>& sink)
      : n_(n), sink_(sink), deg_(n, 0), rows_(n, 0) {}

  void run() {
    if (n_ == 0) return;
    used_ = 1;
    dfs();
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  void link(int u, int v) {
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
    ++deg_[u];
    ++deg_[v];
  }

  void unlink(int u, int v) {
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
    --deg_[u];
    --deg_[v];
  }

  void dfs() {
    int v = -1;
    for (int i = 0; i < used_; ++i) {
      if (deg_[i] < 3) {
        v = i;
        break;
      }
    }
    if (v < 0) {
      if (used_ == n_) emit();
      return;
    }

    // Partners above v already attached to v; new ones must come later.
    int floor = v;
    std::uint64_t above = rows_[v] >> (v + 1);
    if (above) floor = v + 1 + (63 - std::countl_zero(above));

    for (int w = std::max(v + 1, floor + 1); w < used_; ++w) {
      if (deg_[w] < 3 && !(rows_[v] & bit(w))) {
        link(v, w);
        dfs();
        unlink(v, w);
      }
    }
    if (used_ < n_) {
      int w = used_++;
      link(v, w);
      dfs();
      unlink(v, w);
      --used_;
    }
  }

  void emit() {
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
      std::uint64_t m = rows_[u] >> (u + 1);
      while (m) {
        int w = u + 1 + std::countr_zero(m);
        m &= m - 1;
        g.add_edge(u, w);
      }
    }
    if (seen_.insert(canonical_form(g)).second) sink_(g);
  }

  const int n_;
  const std::function<void(const Graph&)>& sink_;
  std::vector<int> deg_;
  std::vector<std::uint64_t> rows_;
  int used_ = 0;
  std::set<CanonicalForm> seen_;
};

std::vector<Graph>& connected_classes(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Graph> found;
    CubicGenerator(n, [&](const Graph& g) { found.push_back(g); }).run();
    it = cache.emplace(n, std::move(found)).first;
  }
  return it->second;
}

Graph disjoint_union(const std::vector<const Graph*>& parts) {
  int total = 0;
  for (const Graph* p : parts) total += p->order();
  Graph g(total);
  int offset = 0;
  for (const Graph* p : parts) {
    for (auto [u, v] : p->edges()) g.add_edge(offset + u, offset + v);
    offset += p->order();
  }
  return g;
}

// Multisets of connected classes summing to the target order, components
// chosen in nonincreasing (order, class index) sequence.
void assemble(int remaining, int max_order, int max_class,
              std::vector<const Graph*>& chosen,
              const std::function<void(const Graph&)>& sink) {
  if (remaining == 0) {
    if (chosen.size() >= 2) sink(disjoint_union(chosen));
    return;
  }
  for (int s = std::min(remaining, max_order); s >= 4; s -= 2) {
    if (remaining - s != 0 && remaining - s < 4) continue;
    const std::vector<Graph>& classes = connected_classes(s);
    int top = s == max_order ? max_class : static_cast<int>(classes.size()) - 1;
    for (int c = top; c >= 0; --c) {
      chosen.push_back(&classes[c]);
      assemble(remaining - s, s, c, chosen, sink);
      chosen.pop_back();
    }
  }
}

}  // namespace

void enumerate_cubic(int n, bool connected_only,
                     const std::function<void(const Graph&)>& sink) {
  if (n % 2 != 0 || n < 4 || n > 14) {
    fail("BadOrder", "cubic enumeration needs an even order in [4, 14], got " +
                         std::to_string(n));
  }
  for (const Graph& g : connected_classes(n)) sink(g);
  if (connected_only || n < 8) return;
  std::vector<const Graph*> chosen;
  int top = static_cast<int>(connected_classes(n - 4).size()) - 1;
  assemble(n, n - 4, top, chosen, sink);
}

std::vector<Graph> enumerate_cubic(int n, bool connected_only) {
  std::vector<Graph> out;
  enumerate_cubic(n, connected_only,
                  [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace circlekit
