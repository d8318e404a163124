#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "circlekit/graph.hpp"
#include "circlekit/word.hpp"

namespace circlekit {

struct Counterexample {
  Graph graph;
  std::string failed_property;
};

struct VerificationReport {
  std::string property;
  int n_min = 0;
  int n_max = 0;
  long graphs_examined = 0;
  long circle_graphs = 0;
  std::map<std::string, long> verdicts;  // per-check pass counts
  std::vector<Counterexample> counterexamples;
  double wall_time_seconds = 0.0;

  bool passed() const { return counterexamples.empty(); }
};

std::string to_json_string(const VerificationReport& r, int indent = 2);

// Everything the sweeps record about one enumerated cubic graph.
struct GraphVerdict {
  Graph graph;
  std::string key;  // canonical key
  bool is_circle = false;
  std::optional<Word> word;
  int twin_couples = 0;
  ConnectivityClass connectivity = ConnectivityClass::Disconnected;
  bool prime = false;
};

// All cubic graphs (connected classes plus assembled disjoint unions) on
// 4..n_max vertices, classified. Circle-graph rejections on <= 10 vertices
// are cross-checked against the obstruction scan; a disagreement throws.
// workers = 0 reads CIRCLEKIT_WORKERS (default 1); output order does not
// depend on the worker count.
std::vector<GraphVerdict> cubic_circle_sweep(int n_max, int workers = 0);

void write_verdict_csv(std::ostream& out,
                       const std::vector<GraphVerdict>& verdicts);

// Every cubic circle graph on <= n_max vertices has two disjoint twin pairs.
VerificationReport verify_twin_theorem(int n_max, int workers = 0);

// No cubic circle graph on <= n_max vertices is prime.
VerificationReport verify_no_prime(int n_max, int workers = 0);

// Among cubic circle graphs on <= n_max vertices, exactly K4 and K3,3 are
// 3-connected.
VerificationReport verify_three_connected_classification(int n_max,
                                                         int workers = 0);

// Every double occurrence word realizing the labeled cycle v1..vc is
// cyclically equivalent to cycle_word(c) -- exactly for c >= 5, up to
// relabeling along a cycle automorphism for c = 3, 4.
// Errors: BadParameter (c < 3), CycleTooLong (c > 6).
VerificationReport verify_cycle_word_uniqueness(int c);

// Disjoint union. Components must have pairwise disjoint label sets
// (LabelClash).
Graph assemble_disconnected(const std::vector<Graph>& components);

// CIRCLEKIT_WORKERS, default 1.
int default_worker_count();

}  // namespace circlekit
