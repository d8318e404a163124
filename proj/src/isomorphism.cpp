#include "circlekit/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <utility>

namespace circlekit {

namespace {

int pair_bit(int n, int i, int j) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

CanonicalForm encode(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  CanonicalForm f;
  f.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(order[i], order[j])) {
        int b = pair_bit(n, i, j);
        f.bits[b >> 6] |= std::uint64_t{1} << (b & 63);
      }
    }
  }
  return f;
}

// Equitable refinement: re-key every vertex by (color, sorted neighbor
// colors) until the class count stops growing. Key order depends only on
// colors, so the result is isomorphism-invariant.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
  const int n = g.order();
  int classes = 0;
  for (int c : color) classes = std::max(classes, c + 1);
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> keyed;
    keyed.reserve(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      std::uint64_t row = g.neighbors(v);
      std::vector<int> nb;
      while (row) {
        nb.push_back(color[std::countr_zero(row)]);
        row &= row - 1;
      }
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> next(n);
    int rank = -1;
    for (int k = 0; k < n; ++k) {
      if (k == 0 || keyed[k].first != keyed[k - 1].first) ++rank;
      next[keyed[k].second] = rank;
    }
    if (rank + 1 == classes) return next;
    classes = rank + 1;
    color = std::move(next);
  }
}

// True when swapping u and v is an automorphism, i.e. the pair is a twin
// pair (equal neighborhoods outside {u, v}).
bool swap_is_automorphism(const Graph& g, int u, int v) {
  std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
  return (g.neighbors(u) & mask) == (g.neighbors(v) & mask);
}

void search(const Graph& g, std::vector<int> color, CanonicalForm& best,
            bool& have_best) {
  const int n = g.order();
  color = refine(g, color);

  std::vector<int> size(n + 1, 0);
  for (int c : color) ++size[c];
  int target = -1;
  for (int c = 0; c <= n; ++c) {
    if (size[c] >= 2) {
      target = c;
      break;
    }
  }

  if (target < 0) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[color[v]] = v;
    CanonicalForm f = encode(g, order);
    if (!have_best || f < best) {
      best = f;
      have_best = true;
    }
    return;
  }

  std::vector<int> cell;
  for (int v = 0; v < n; ++v) {
    if (color[v] == target) cell.push_back(v);
  }
  for (std::size_t i = 0; i < cell.size(); ++i) {
    // A cell sibling that differs from an earlier one by a transposition
    // automorphism explores an identical subtree; skip it. This keeps
    // complete graphs, stars and the like from exploding factorially.
    bool redundant = false;
    for (std::size_t k = 0; k < i && !redundant; ++k) {
      redundant = swap_is_automorphism(g, cell[k], cell[i]);
    }
    if (redundant) continue;
    std::vector<int> next(color);
    for (int u = 0; u < n; ++u) {
      if (u != cell[i] && next[u] >= target) ++next[u];
    }
    search(g, next, best, have_best);
  }
}

void check_size(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices) {
    fail("TooLarge", "canonical forms support at most " +
                         std::to_string(kMaxCanonicalVertices) +
                         " vertices, got " + std::to_string(g.order()));
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  check_size(g);
  CanonicalForm best;
  best.n = g.order();
  if (g.order() == 0) return best;
  bool have_best = false;
  search(g, std::vector<int>(g.order(), 0), best, have_best);
  return best;
}

std::string canonical_label(const Graph& g) {
  CanonicalForm f = canonical_form(g);
  char buf[2 + 1 + 16 + 16 + 1];
  std::snprintf(buf, sizeof(buf), "%02x:%016llx%016llx", f.n,
                static_cast<unsigned long long>(f.bits[1]),
                static_cast<unsigned long long>(f.bits[0]));
  return buf;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto degrees = [](const Graph& x) {
    std::vector<int> d(x.order());
    for (int v = 0; v < x.order(); ++v) d[v] = x.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

std::optional<std::vector<int>> contains_induced(const Graph& g,
                                                 const Graph& h) {
  const int hn = h.order();
  const int gn = g.order();
  if (hn > gn) return std::nullopt;
  if (hn == 0) return std::vector<int>{};

  // Place pattern vertices so each one after the first touches as many
  // already-placed vertices as possible.
  std::vector<int> order;
  {
    std::vector<bool> placed(hn, false);
    for (int step = 0; step < hn; ++step) {
      int best = -1, best_touch = -1, best_deg = -1;
      for (int v = 0; v < hn; ++v) {
        if (placed[v]) continue;
        int touch = 0;
        for (int u : order) touch += h.adjacent(u, v) ? 1 : 0;
        if (touch > best_touch ||
            (touch == best_touch && h.degree(v) > best_deg)) {
          best = v;
          best_touch = touch;
          best_deg = h.degree(v);
        }
      }
      order.push_back(best);
      placed[best] = true;
    }
  }

  std::vector<int> map(hn, -1);
  std::vector<bool> used(gn, false);

  auto dfs = [&](auto&& self, int step) -> bool {
    if (step == hn) return true;
    int v = order[step];
    for (int cand = 0; cand < gn; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int k = 0; k < step && ok; ++k) {
        int u = order[k];
        ok = h.adjacent(u, v) == g.adjacent(map[u], cand);
      }
      if (!ok) continue;
      map[v] = cand;
      used[cand] = true;
      if (self(self, step + 1)) return true;
      used[cand] = false;
      map[v] = -1;
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  return map;
}

}  // namespace circlekit
