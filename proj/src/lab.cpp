#include "circlekit/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"

#include "circlekit/enumerate.hpp"
#include "circlekit/isomorphism.hpp"
#include "circlekit/recognize.hpp"
#include "circlekit/split.hpp"

namespace circlekit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename T, typename F>
auto parallel_map(const std::vector<T>& in, int workers, F f)
    -> std::vector<decltype(f(in.front()))> {
  using R = decltype(f(in.front()));
  std::vector<R> out(in.size());
  if (workers <= 1 || in.size() <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= in.size()) return;
      try {
        out[i] = f(in[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(workers, static_cast<int>(in.size()));
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

GraphVerdict classify(const Graph& g) {
  GraphVerdict r;
  r.graph = g;
  r.key = canonical_label(g);
  r.word = recognize(g);
  r.is_circle = r.word.has_value();
  if (!r.is_circle && g.order() <= 10) {
    // Rejections get a second opinion from the obstruction scan.
    if (obstruction_free(g).verdict) {
      fail("RecognizerDisagreement",
           "word search rejected a graph the obstruction scan clears: " +
               r.key);
    }
  }
  r.twin_couples = disjoint_twin_pair_couples(g);
  r.connectivity = connectivity_class(g).cls;
  r.prime = is_prime(g);
  return r;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) {
    edges.push_back({g.label(u), g.label(v)});
  }
  return {{"n", g.order()}, {"labels", g.labels()}, {"edges", edges}};
}

}  // namespace

int default_worker_count() {
  const char* env = std::getenv("CIRCLEKIT_WORKERS");
  if (!env) return 1;
  int n = std::atoi(env);
  return std::clamp(n, 1, 64);
}

std::vector<GraphVerdict> cubic_circle_sweep(int n_max, int workers) {
  if (n_max < 4 || n_max > 14) {
    fail("BadOrder", "sweep order must lie in [4, 14], got " +
                         std::to_string(n_max));
  }
  if (workers == 0) workers = default_worker_count();

  static std::mutex cache_mu;
  static std::map<int, std::shared_ptr<const std::vector<GraphVerdict>>> cache;
  const int top = n_max - (n_max % 2);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(top);
    if (it != cache.end()) return *it->second;
  }

  std::vector<Graph> graphs;
  for (int n = 4; n <= top; n += 2) {
    enumerate_cubic(n, false, [&](const Graph& g) { graphs.push_back(g); });
  }
  std::vector<GraphVerdict> verdicts =
      parallel_map(graphs, workers, [](const Graph& g) { return classify(g); });

  std::lock_guard<std::mutex> lock(cache_mu);
  cache.emplace(top,
                std::make_shared<const std::vector<GraphVerdict>>(verdicts));
  return verdicts;
}

void write_verdict_csv(std::ostream& out,
                       const std::vector<GraphVerdict>& verdicts) {
  out << "canonical_key,is_circle,twin_couples,connectivity,prime\n";
  for (const GraphVerdict& r : verdicts) {
    out << r.key << ',' << (r.is_circle ? "true" : "false") << ','
        << r.twin_couples << ',' << to_string(r.connectivity) << ','
        << (r.prime ? "true" : "false") << '\n';
  }
}

VerificationReport verify_twin_theorem(int n_max, int workers) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.property = "twin-theorem";
  rep.n_min = 4;
  rep.n_max = n_max;
  for (const GraphVerdict& r : cubic_circle_sweep(n_max, workers)) {
    ++rep.graphs_examined;
    if (!r.is_circle) continue;
    ++rep.circle_graphs;
    if (r.twin_couples >= 1) {
      ++rep.verdicts["has_two_disjoint_twin_pairs"];
    } else {
      rep.counterexamples.push_back(
          {r.graph, "cubic circle graph without two disjoint twin pairs"});
    }
  }
  rep.wall_time_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_no_prime(int n_max, int workers) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.property = "no-prime";
  rep.n_min = 4;
  rep.n_max = n_max;
  for (const GraphVerdict& r : cubic_circle_sweep(n_max, workers)) {
    ++rep.graphs_examined;
    if (!r.is_circle) continue;
    ++rep.circle_graphs;
    if (!r.prime) {
      ++rep.verdicts["not_prime"];
    } else {
      rep.counterexamples.push_back({r.graph, "prime cubic circle graph"});
    }
  }
  rep.wall_time_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_three_connected_classification(int n_max,
                                                         int workers) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.property = "three-connected-classification";
  rep.n_min = 4;
  rep.n_max = n_max;
  const std::string k4 = canonical_label(complete_graph(4));
  const std::string k33 = canonical_label(complete_bipartite(3, 3));
  bool seen_k4 = false, seen_k33 = false;
  for (const GraphVerdict& r : cubic_circle_sweep(n_max, workers)) {
    ++rep.graphs_examined;
    if (!r.is_circle) continue;
    ++rep.circle_graphs;
    bool three = r.connectivity == ConnectivityClass::ThreeConnectedOrMore;
    if (three && r.key == k4) seen_k4 = true;
    if (three && r.key == k33) seen_k33 = true;
    if (!three || r.key == k4 || r.key == k33) {
      ++rep.verdicts["classification_respected"];
    } else {
      rep.counterexamples.push_back(
          {r.graph, "3-connected cubic circle graph other than K4 and K3,3"});
    }
  }
  if (!seen_k4) {
    rep.counterexamples.push_back(
        {complete_graph(4), "K4 missing from the 3-connected circle sweep"});
  } else {
    ++rep.verdicts["k4_present"];
  }
  if (n_max >= 6) {
    if (!seen_k33) {
      rep.counterexamples.push_back(
          {complete_bipartite(3, 3),
           "K3,3 missing from the 3-connected circle sweep"});
    } else {
      ++rep.verdicts["k33_present"];
    }
  }
  rep.wall_time_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_cycle_word_uniqueness(int c) {
  if (c < 3) fail("BadParameter", "cycles need length at least 3");
  if (c > 6) fail("CycleTooLong", "cycle word check supports c <= 6");
  auto start = Clock::now();

  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < c; ++k) {
    labels.push_back("v" + std::to_string(k + 1));
    edges.emplace_back(k, (k + 1) % c);
  }
  Graph cycle(labels, edges);
  const Word target = cycle_word(c);

  // The dihedral relabelings of the cycle; only c <= 4 may need them.
  std::vector<std::vector<int>> autos;
  if (c <= 4) {
    for (int r = 0; r < c; ++r) {
      std::vector<int> rot(c), ref(c);
      for (int k = 0; k < c; ++k) {
        rot[k] = (k + r) % c;
        ref[k] = (c - k + r) % c;
      }
      autos.push_back(rot);
      autos.push_back(ref);
    }
  } else {
    std::vector<int> id(c);
    for (int k = 0; k < c; ++k) id[k] = k;
    autos.push_back(id);
  }

  auto matches = [&](const Word& w) {
    for (const std::vector<int>& a : autos) {
      std::vector<std::string> tokens;
      tokens.reserve(w.length());
      for (const std::string& t : w.tokens()) {
        int k = std::stoi(t.substr(1)) - 1;
        tokens.push_back("v" + std::to_string(a[k] + 1));
      }
      if (cyclically_equivalent(Word::from_tokens(std::move(tokens)), target)) {
        return true;
      }
    }
    return false;
  };

  VerificationReport rep;
  rep.property = "cycle-word-uniqueness";
  rep.n_min = c;
  rep.n_max = c;
  for (const Word& w : enumerate_realizations(cycle)) {
    ++rep.graphs_examined;
    if (matches(w)) {
      ++rep.verdicts["equivalent_to_cycle_word"];
    } else {
      rep.counterexamples.push_back(
          {cycle, "realization " + w.render() +
                      " is not cyclically equivalent to the cycle word"});
    }
  }
  if (rep.graphs_examined == 0) {
    rep.counterexamples.push_back(
        {cycle, "no realization found, expected the cycle word itself"});
  }
  rep.wall_time_seconds = seconds_since(start);
  return rep;
}

Graph assemble_disconnected(const std::vector<Graph>& components) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  std::vector<std::pair<int, int>> edges;
  int offset = 0;
  for (const Graph& comp : components) {
    for (const std::string& l : comp.labels()) {
      if (!seen.insert(l).second) {
        fail("LabelClash", "components share the label \"" + l + "\"");
      }
      labels.push_back(l);
    }
    for (auto [u, v] : comp.edges()) edges.emplace_back(offset + u, offset + v);
    offset += comp.order();
  }
  return Graph(labels, edges);
}

std::string to_json_string(const VerificationReport& r, int indent) {
  nlohmann::json j;
  j["property"] = r.property;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["graphs_examined"] = r.graphs_examined;
  j["circle_graphs"] = r.circle_graphs;
  j["verdicts"] = r.verdicts;
  nlohmann::json counter = nlohmann::json::array();
  for (const Counterexample& c : r.counterexamples) {
    counter.push_back({{"graph", graph_to_json(c.graph)},
                       {"failed_property", c.failed_property}});
  }
  j["counterexamples"] = counter;
  j["wall_time_seconds"] = r.wall_time_seconds;
  return j.dump(indent);
}

}  // namespace circlekit
