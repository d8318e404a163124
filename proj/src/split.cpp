#include "circlekit/split.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace circlekit {

namespace {

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::vector<std::string> mask_labels(const Graph& g, std::uint64_t m) {
  std::vector<std::string> out;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    out.push_back(g.label(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t attachment(const Graph& g, std::uint64_t side,
                         std::uint64_t other) {
  std::uint64_t a = 0;
  std::uint64_t rest = side;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (g.neighbors(v) & other) a |= std::uint64_t{1} << v;
  }
  return a;
}

// True iff the bipartition (v1, complement) carries a split: every crossing
// vertex on the V1 side sees exactly the same set on the V2 side.
bool bipartition_splits(const Graph& g, std::uint64_t v1, std::uint64_t all) {
  std::uint64_t v2 = all & ~v1;
  std::uint64_t x2 = 0;
  std::uint64_t rest = v1;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    x2 |= g.neighbors(v) & v2;
  }
  rest = v1;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t cross = g.neighbors(v) & v2;
    if (cross && cross != x2) return false;
  }
  return true;
}

Split make_split(const Graph& g, std::uint64_t v1, std::uint64_t all) {
  std::uint64_t v2 = all & ~v1;
  Split s;
  s.v1 = mask_labels(g, v1);
  s.v2 = mask_labels(g, v2);
  s.x1 = mask_labels(g, attachment(g, v1, v2));
  s.x2 = mask_labels(g, attachment(g, v2, v1));
  return s;
}

std::optional<std::uint64_t> labels_to_mask(const Graph& g,
                                            const std::vector<std::string>& ls) {
  std::uint64_t m = 0;
  for (const auto& l : ls) {
    int v = g.index_of(l);
    if (v < 0) return std::nullopt;
    m |= std::uint64_t{1} << v;
  }
  return m;
}

}  // namespace

bool validate_split(const Graph& g, const Split& s) {
  auto v1 = labels_to_mask(g, s.v1);
  auto v2 = labels_to_mask(g, s.v2);
  if (!v1 || !v2 || (*v1 & *v2) ||
      (*v1 | *v2) != full_mask(g.order()) ||
      std::popcount(*v1) != static_cast<int>(s.v1.size()) ||
      std::popcount(*v2) != static_cast<int>(s.v2.size())) {
    fail("NotAPartition", "V1 and V2 must partition the vertex set");
  }
  if (std::popcount(*v1) < 2 || std::popcount(*v2) < 2) return false;
  if (!bipartition_splits(g, *v1, full_mask(g.order()))) return false;
  std::uint64_t a1 = attachment(g, *v1, *v2);
  std::uint64_t a2 = attachment(g, *v2, *v1);
  auto x1 = labels_to_mask(g, s.x1);
  auto x2 = labels_to_mask(g, s.x2);
  if (!x1 || !x2) return false;
  return *x1 == a1 && *x2 == a2;
}

std::optional<Split> find_split(const Graph& g) {
  const int n = g.order();
  if (n < 4) fail("TooSmall", "splits need at least 4 vertices");
  if (n > 16) fail("TooLarge", "split search supports at most 16 vertices");
  const std::uint64_t all = full_mask(n);

  // Subsets of each size in lexicographic order of their sorted index lists.
  std::vector<int> pick;
  std::optional<Split> found;
  auto dfs = [&](auto&& self, int start, int remaining,
                 std::uint64_t mask) -> bool {
    if (remaining == 0) {
      if (bipartition_splits(g, mask, all)) {
        found = make_split(g, mask, all);
        return true;
      }
      return false;
    }
    for (int v = start; v <= n - remaining; ++v) {
      if (self(self, v + 1, remaining - 1, mask | (std::uint64_t{1} << v))) {
        return true;
      }
    }
    return false;
  };
  for (int size = 2; size <= n - 2; ++size) {
    if (dfs(dfs, 0, size, 0)) return found;
  }
  return std::nullopt;
}

bool is_prime(const Graph& g) {
  if (g.order() < 5) return false;
  return !find_split(g).has_value();
}

std::vector<Split> simple_splits(const Graph& g) {
  const int n = g.order();
  if (n < 4) fail("TooSmall", "splits need at least 4 vertices");
  const std::uint64_t all = full_mask(n);

  std::vector<Split> out;
  std::set<Split> seen;
  auto emit = [&](std::uint64_t v1) {
    if (std::popcount(v1) < 2 || std::popcount(all & ~v1) < 2) return;
    if (!bipartition_splits(g, v1, all)) return;
    Split s = make_split(g, v1, all);
    if (seen.insert(s).second) out.push_back(std::move(s));
  };

  for (const TwinPair& t : twin_pairs(g)) {
    emit((std::uint64_t{1} << t.u) | (std::uint64_t{1} << t.v));
  }

  std::vector<std::uint64_t> comps = components(g);
  if (comps.size() >= 2) {
    // Every union of some but not all components, as V(H) and as V(H - h).
    const int k = static_cast<int>(comps.size());
    for (std::uint64_t sel = 1; sel + 1 < (std::uint64_t{1} << k); ++sel) {
      std::uint64_t h = 0;
      for (int i = 0; i < k; ++i) {
        if (sel & (std::uint64_t{1} << i)) h |= comps[i];
      }
      if (std::popcount(h) < 2) continue;
      emit(h);
      std::uint64_t rest = h;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        emit(h & ~(std::uint64_t{1} << v));
      }
    }
  }

  for (int v : connectivity_class(g).cutpoints) {
    Graph without = delete_vertex(g, v);
    // Component masks of G - v, re-expressed in g's vertex numbering.
    std::vector<std::uint64_t> parts;
    for (std::uint64_t m : components(without)) {
      std::uint64_t lifted = 0;
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        lifted |= std::uint64_t{1} << g.index_of(without.label(w));
      }
      parts.push_back(lifted);
    }
    const int k = static_cast<int>(parts.size());
    for (std::uint64_t sel = 1; sel + 1 < (std::uint64_t{1} << k); ++sel) {
      std::uint64_t h = 0;
      for (int i = 0; i < k; ++i) {
        if (sel & (std::uint64_t{1} << i)) h |= parts[i];
      }
      if (std::popcount(h) >= 2) emit(h);
    }
  }

  return out;
}

bool split_lc_commutes(const Graph& g, int v) {
  const int n = g.order();
  if (n < 4) fail("TooSmall", "needs at least 4 vertices");
  if (n > 14) fail("TooLarge", "bipartition sweep supports at most 14 vertices");
  Graph h = local_complement(g, v);  // checks the vertex
  const std::uint64_t all = full_mask(n);
  // Fix vertex 0 on the V1 side so each bipartition is visited once.
  for (std::uint64_t v1 = 1; v1 < all; v1 += 2) {
    int c = std::popcount(v1);
    if (c < 2 || n - c < 2) continue;
    if (bipartition_splits(g, v1, all) != bipartition_splits(h, v1, all)) {
      return false;
    }
  }
  return true;
}

}  // namespace circlekit
