#include "circlekit/recognize.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <utility>

#include "circlekit/isomorphism.hpp"

namespace circlekit {

OrbitCapExceeded::OrbitCapExceeded(std::size_t cap, LocalEquivalenceOrbit p)
    : Error("OrbitCapExceeded",
            "orbit exceeds " + std::to_string(cap) + " members"),
      partial(std::move(p)) {}

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Backtracking search for a linear layout of letter occurrences. Positions
// fill left to right; at each one either an open letter closes or an
// unplaced vertex opens. The relative close order of the open letters is
// forced pairwise: an open letter must close before its younger open
// neighbors (their intervals interlace) and after its younger open
// non-neighbors (overlapping intervals that do not interlace must nest), so
// the open set carries a single feasible close order. A letter may open only
// when its open neighbors are exactly a prefix of that order (it slots in
// right after them), only the head of the order may close, and no letter may
// close while a neighbor is unplaced or open after a neighbor has closed.
// Together these checks reject a pair violation at the earliest event that
// determines it, and every surviving full layout realizes the graph.
// Rotations are quotiented by pinning the first vertex's opening to position
// 0; with halve_by_reversal the first vertex must additionally close by
// position n, which folds each word with its reversal. The graph must be
// connected.
class WordSearch {
 public:
  WordSearch(const Graph& g, bool halve_by_reversal)
      : g_(g), n_(g.order()), halve_(halve_by_reversal) {
    order_.resize(n_);
    for (int v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    slots_.assign(2 * n_, -1);
    prefix_.assign(n_ + 1, 0);
    close_order_.reserve(n_);
  }

  std::optional<std::vector<int>> first() {
    all_ = nullptr;
    found_ = false;
    if (n_ == 0) return std::vector<int>{};
    step(0);
    if (!found_) return std::nullopt;
    return solution_;
  }

  std::vector<std::vector<int>> all() {
    std::vector<std::vector<int>> out;
    if (n_ == 0) {
      out.emplace_back();
      return out;
    }
    all_ = &out;
    step(0);
    all_ = nullptr;
    return out;
  }

 private:
  // prefix_[i] is the vertex mask of close_order_[0..i-1].
  void rebuild_prefix() {
    for (std::size_t i = 0; i < close_order_.size(); ++i)
      prefix_[i + 1] = prefix_[i] | bit(close_order_[i]);
  }

  void step(int p) {
    if (p == 2 * n_) {
      if (all_) {
        all_->push_back(slots_);
      } else {
        found_ = true;
        solution_ = slots_;
      }
      return;
    }

    const int first_v = order_[0];
    const bool must_close_first =
        halve_ && p == n_ && (open_mask_ & bit(first_v)) != 0;

    if (!close_order_.empty()) {
      const int v = close_order_.front();
      const bool neighbor_unplaced =
          (g_.neighbors(v) & ~(open_mask_ | closed_mask_)) != 0;
      if (!neighbor_unplaced && (!must_close_first || v == first_v)) {
        close_order_.erase(close_order_.begin());
        rebuild_prefix();
        slots_[p] = v;
        open_mask_ &= ~bit(v);
        closed_mask_ |= bit(v);
        step(p + 1);
        closed_mask_ &= ~bit(v);
        open_mask_ |= bit(v);
        slots_[p] = -1;
        close_order_.insert(close_order_.begin(), v);
        rebuild_prefix();
        if (found_ && !all_) return;
      }
    }
    if (must_close_first) return;

    // A second run of openings after everything closed would realize a
    // disconnected graph; the caller only hands us connected ones.
    if (p > 0 && open_mask_ == 0) return;

    for (int v : order_) {
      if ((open_mask_ | closed_mask_) & bit(v)) continue;
      if (p == 0 && v != first_v) continue;
      if (g_.neighbors(v) & closed_mask_) continue;
      const std::uint64_t open_neighbors = g_.neighbors(v) & open_mask_;
      const int k = std::popcount(open_neighbors);
      if (prefix_[k] != open_neighbors) continue;
      close_order_.insert(close_order_.begin() + k, v);
      rebuild_prefix();
      slots_[p] = v;
      open_mask_ |= bit(v);
      step(p + 1);
      open_mask_ &= ~bit(v);
      slots_[p] = -1;
      close_order_.erase(close_order_.begin() + k);
      rebuild_prefix();
      if (found_ && !all_) return;
      if (p == 0) break;
    }
  }

  const Graph& g_;
  const int n_;
  const bool halve_;
  std::vector<int> order_;
  std::vector<int> slots_;
  std::vector<int> close_order_;       // forced close order of open letters
  std::vector<std::uint64_t> prefix_;
  std::uint64_t open_mask_ = 0, closed_mask_ = 0;
  bool found_ = false;
  std::vector<int> solution_;
  std::vector<std::vector<int>>* all_ = nullptr;
};

void check_cap(const Graph& g, int cap) {
  if (g.order() > cap) {
    fail("TooLarge", "word search capped at " + std::to_string(cap) +
                         " vertices, got " + std::to_string(g.order()));
  }
}

}  // namespace

std::optional<Word> recognize(const Graph& g, int cap) {
  check_cap(g, cap);
  if (g.order() == 0) return Word();
  std::vector<std::string> tokens;
  for (std::uint64_t mask : components(g)) {
    Graph comp = g.induced(mask);
    WordSearch search(comp, true);
    auto layout = search.first();
    if (!layout) return std::nullopt;
    for (int v : *layout) tokens.push_back(comp.label(v));
  }
  Word w = Word::from_tokens(std::move(tokens));
  if (!verify_realization(g, w)) {
    fail("InternalError", "found word fails realization check");
  }
  return w;
}

bool verify_realization(const Graph& g, const Word& w) {
  std::vector<std::string> labels = g.labels();
  std::sort(labels.begin(), labels.end());
  if (w.letters() != labels) {
    fail("AlphabetMismatch",
         "the word's letter set must equal the graph's label set");
  }
  return interlacement(w) == g;
}

std::vector<Word> enumerate_realizations(const Graph& g, int cap) {
  check_cap(g, cap);
  if (g.order() > 0 && !is_connected(g)) {
    fail("NotConnected", "realization enumeration needs a connected graph");
  }
  WordSearch search(g, false);
  std::vector<Word> out;
  for (const std::vector<int>& layout : search.all()) {
    std::vector<std::string> tokens;
    tokens.reserve(layout.size());
    for (int v : layout) tokens.push_back(g.label(v));
    out.push_back(Word::from_tokens(std::move(tokens)));
  }
  return out;
}

namespace {

struct ScanResult {
  LocalEquivalenceOrbit orbit;
  std::optional<ObstructionWitness> witness;
};

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

ScanResult orbit_scan(const Graph& g, std::size_t cap, bool scan) {
  ScanResult res;
  LocalEquivalenceOrbit& orbit = res.orbit;
  std::deque<const Graph*> queue;

  auto finalize_keys = [&] {
    orbit.keys.clear();
    for (const auto& kv : orbit.representatives) orbit.keys.push_back(kv.first);
  };

  auto scan_member = [&](const Graph& h) {
    for (const auto& [name, pattern] : bouchet_obstructions()) {
      if (pattern.order() > h.order()) continue;
      if (pattern.edge_count() > h.edge_count()) continue;
      if (max_degree(pattern) > max_degree(h)) continue;
      if (auto emb = contains_induced(h, pattern)) {
        res.witness = ObstructionWitness{h, name, *emb};
        return true;
      }
    }
    return false;
  };

  // Returns true when the caller should stop expanding.
  auto add = [&](Graph h) -> bool {
    std::string key = canonical_label(h);
    auto [it, fresh] = orbit.representatives.emplace(std::move(key),
                                                     std::move(h));
    if (!fresh) return false;
    if (orbit.representatives.size() > cap) {
      finalize_keys();
      throw OrbitCapExceeded(cap, std::move(orbit));
    }
    if (scan && scan_member(it->second)) return true;
    queue.push_back(&it->second);
    return false;
  };

  bool stop = add(g);
  while (!stop && !queue.empty()) {
    const Graph* cur = queue.front();
    queue.pop_front();
    for (int v = 0; v < cur->order() && !stop; ++v) {
      stop = add(local_complement(*cur, v));
    }
  }
  finalize_keys();
  return res;
}

}  // namespace

LocalEquivalenceOrbit local_equivalence_orbit(const Graph& g,
                                              std::size_t cap) {
  return orbit_scan(g, cap, false).orbit;
}

RecognitionCertificate obstruction_free(const Graph& g, std::size_t cap) {
  ScanResult res = orbit_scan(g, cap, true);
  RecognitionCertificate cert;
  cert.verdict = !res.witness.has_value();
  cert.witness = std::move(res.witness);
  return cert;
}

const std::vector<std::pair<std::string, Graph>>& bouchet_obstructions() {
  static const std::vector<std::pair<std::string, Graph>> obs = [] {
    std::vector<std::pair<std::string, Graph>> v;
    v.emplace_back("W5", wheel(5));
    v.emplace_back("BW3", bw3());
    v.emplace_back("W7", wheel(7));
    return v;
  }();
  return obs;
}

}  // namespace circlekit
