#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "circlekit/enumerate.hpp"
#include "circlekit/graph.hpp"
#include "circlekit/graph6.hpp"
#include "circlekit/lab.hpp"
#include "circlekit/recognize.hpp"
#include "circlekit/split.hpp"
#include "circlekit/word.hpp"
#include "json.hpp"

namespace {

using circlekit::Graph;
using circlekit::Word;
using nlohmann::json;

struct GraphInput {
  std::string graph6, edges, standard;
  CLI::Option* graph6_opt = nullptr;
  CLI::Option* edges_opt = nullptr;
};

void add_graph_input(CLI::App* cmd, GraphInput& gi) {
  auto* grp = cmd->add_option_group("graph", "graph input (exactly one)");
  gi.graph6_opt = grp->add_option("--graph6", gi.graph6, "graph6 line");
  gi.edges_opt =
      grp->add_option("--edges", gi.edges,
                      "edge list file: first line is the order, then one "
                      "'u v' pair per line");
  grp->add_option("--standard", gi.standard,
                  "named graph: K4, K3,3, C5, P4, W5, BW3, ...");
  grp->require_option(1);
}

Graph read_edge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) circlekit::fail("FileError", "cannot open " + path);
  long long n = -1;
  if (!(in >> n)) circlekit::fail("MalformedEdgeList", path + ": missing order");
  Graph g(static_cast<int>(n));
  long long u = 0, v = 0;
  while (in >> u >> v) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  if (!in.eof())
    circlekit::fail("MalformedEdgeList", path + ": stray token after edges");
  return g;
}

Graph load_graph(const GraphInput& gi) {
  if (gi.graph6_opt->count()) return circlekit::parse_graph6(gi.graph6);
  if (gi.edges_opt->count()) return read_edge_file(gi.edges);
  return circlekit::standard_graph(gi.standard);
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"labels", g.labels()}, {"edges", edges}};
}

void print_graph(const Graph& g, bool as_json) {
  if (as_json) {
    std::cout << graph_json(g).dump(2) << "\n";
    return;
  }
  std::cout << g.order() << "\n";
  for (auto [u, v] : g.edges()) std::cout << u << " " << v << "\n";
}

void print_word(const Word& w, bool as_json) {
  if (as_json)
    std::cout << json{{"word", w.render()}, {"letters", w.letters()}}.dump(2)
              << "\n";
  else
    std::cout << w.render() << "\n";
}

void print_report(const circlekit::VerificationReport& rep, bool as_json) {
  if (as_json) {
    std::cout << circlekit::to_json_string(rep) << "\n";
    return;
  }
  std::cout << "property: " << rep.property << "\n"
            << "range: " << rep.n_min << ".." << rep.n_max << "\n"
            << "graphs examined: " << rep.graphs_examined << "\n"
            << "circle graphs: " << rep.circle_graphs << "\n";
  for (const auto& [check, count] : rep.verdicts)
    std::cout << "  " << check << ": " << count << "\n";
  std::cout << "counterexamples: " << rep.counterexamples.size() << "\n"
            << "wall time: " << rep.wall_time_seconds << "s\n"
            << (rep.passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circle graph toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;
  bool as_json = false;

  std::string word_text;
  auto* interlace =
      app.add_subcommand("interlace", "interlacement graph of a word");
  interlace->add_option("word", word_text, "double occurrence word")
      ->required();
  interlace->add_flag("--json", as_json, "JSON output");
  interlace->callback([&] {
    print_graph(circlekit::interlacement(Word::parse(word_text)), as_json);
  });

  GraphInput rec_in;
  int rec_cap = circlekit::kRecognizeCap;
  auto* rec = app.add_subcommand(
      "recognize", "find a realizing word or an obstruction witness");
  add_graph_input(rec, rec_in);
  rec->add_option("--cap", rec_cap, "largest order the word search accepts");
  rec->add_flag("--json", as_json, "JSON output");
  rec->callback([&] {
    Graph g = load_graph(rec_in);
    auto w = circlekit::recognize(g, rec_cap);
    if (w) {
      if (as_json)
        std::cout << json{{"circle", true}, {"word", w->render()}}.dump(2)
                  << "\n";
      else
        std::cout << w->render() << "\n";
      return;
    }
    auto cert = circlekit::obstruction_free(g);
    json out = {{"circle", false}};
    if (cert.witness) {
      out["obstruction"] = cert.witness->obstruction;
      out["orbit_member"] = graph_json(cert.witness->orbit_member);
      out["embedding"] = cert.witness->embedding;
    }
    if (as_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "not a circle graph\n";
      if (cert.witness)
        std::cout << "obstruction: " << cert.witness->obstruction << "\n";
    }
  });

  GraphInput lc_in;
  std::string lc_at;
  auto* lc = app.add_subcommand("lc", "local complement at a vertex");
  add_graph_input(lc, lc_in);
  lc->add_option("--at", lc_at, "vertex label")->required();
  lc->add_flag("--json", as_json, "JSON output");
  lc->callback([&] {
    Graph g = load_graph(lc_in);
    int at = g.index_of(lc_at);
    if (at < 0)
      circlekit::fail("UnknownVertex", "no vertex labeled '" + lc_at + "'");
    print_graph(circlekit::local_complement(g, at), as_json);
  });

  GraphInput twins_in;
  auto* twins =
      app.add_subcommand("twins", "twin pairs and disjoint twin couples");
  add_graph_input(twins, twins_in);
  twins->add_flag("--json", as_json, "JSON output");
  twins->callback([&] {
    Graph g = load_graph(twins_in);
    auto pairs = circlekit::twin_pairs(g);
    int couples = circlekit::disjoint_twin_pair_couples(g);
    if (as_json) {
      json jp = json::array();
      for (const auto& p : pairs)
        jp.push_back({{"u", g.label(p.u)},
                      {"v", g.label(p.v)},
                      {"adjacent", p.adjacent}});
      std::cout << json{{"pairs", jp},
                        {"disjoint_couples", couples},
                        {"has_two_disjoint_pairs",
                         circlekit::has_two_disjoint_twin_pairs(g)}}
                       .dump(2)
                << "\n";
      return;
    }
    for (const auto& p : pairs)
      std::cout << g.label(p.u) << " " << g.label(p.v) << " "
                << (p.adjacent ? "adjacent" : "nonadjacent") << "\n";
    std::cout << "disjoint couples: " << couples << "\n";
  });

  GraphInput split_in;
  auto* split = app.add_subcommand("split", "find a split or report prime");
  add_graph_input(split, split_in);
  split->add_flag("--json", as_json, "JSON output");
  split->callback([&] {
    Graph g = load_graph(split_in);
    auto s = circlekit::find_split(g);
    if (as_json) {
      json out;
      if (s)
        out["split"] = {{"v1", s->v1}, {"x1", s->x1}, {"v2", s->v2},
                        {"x2", s->x2}};
      else
        out["split"] = nullptr;
      out["prime"] = !s && g.order() >= 5;
      std::cout << out.dump(2) << "\n";
      return;
    }
    if (!s) {
      std::cout << (g.order() >= 5 ? "prime" : "no split") << "\n";
      return;
    }
    auto line = [](const char* tag, const std::vector<std::string>& part) {
      std::cout << tag << ":";
      for (const auto& l : part) std::cout << " " << l;
      std::cout << "\n";
    };
    line("V1", s->v1);
    line("X1", s->x1);
    line("V2", s->v2);
    line("X2", s->x2);
  });

  GraphInput orbit_in;
  std::size_t orbit_cap = circlekit::kOrbitCap;
  auto* orbit =
      app.add_subcommand("orbit", "local equivalence orbit, canonical keys");
  add_graph_input(orbit, orbit_in);
  orbit->add_option("--cap", orbit_cap, "orbit member cap");
  orbit->add_flag("--json", as_json, "JSON output");
  orbit->callback([&] {
    auto orb = circlekit::local_equivalence_orbit(load_graph(orbit_in),
                                                  orbit_cap);
    if (as_json) {
      std::cout << json{{"size", orb.size()}, {"keys", orb.keys}}.dump(2)
                << "\n";
      return;
    }
    std::cout << "size " << orb.size() << "\n";
    for (const auto& key : orb.keys) std::cout << key << "\n";
  });

  int cycle_c = 0;
  auto* cyc = app.add_subcommand(
      "cycle-word", "the standard word realizing the labeled cycle");
  cyc->add_option("c", cycle_c, "cycle length")->required();
  cyc->add_flag("--json", as_json, "JSON output");
  cyc->callback([&] { print_word(circlekit::cycle_word(cycle_c), as_json); });

  std::string subject;
  int n_max = 12;
  int verify_c = 0;
  int workers = 0;
  std::string csv_path;
  auto* verify = app.add_subcommand(
      "verify", "sweep-check a property; exit 0 iff no counterexamples");
  verify
      ->add_option("subject", subject,
                   "twin-theorem | no-prime | three-connected | cycle-words")
      ->required()
      ->check(CLI::IsMember(
          {"twin-theorem", "no-prime", "three-connected", "cycle-words"}));
  verify->add_option("--n-max", n_max, "largest order swept (default 12)");
  verify->add_option("--c", verify_c, "cycle length for cycle-words");
  verify->add_option("--workers", workers,
                     "worker threads (default: CIRCLEKIT_WORKERS or 1)");
  verify->add_option("--csv", csv_path, "write per-graph verdicts as CSV");
  verify->add_flag("--json", as_json, "JSON output");
  verify->callback([&] {
    circlekit::VerificationReport rep;
    if (subject == "cycle-words") {
      if (verify_c == 0)
        throw CLI::ValidationError("verify", "cycle-words requires --c");
      rep = circlekit::verify_cycle_word_uniqueness(verify_c);
    } else if (subject == "twin-theorem") {
      rep = circlekit::verify_twin_theorem(n_max, workers);
    } else if (subject == "no-prime") {
      rep = circlekit::verify_no_prime(n_max, workers);
    } else {
      rep = circlekit::verify_three_connected_classification(n_max, workers);
    }
    if (!csv_path.empty() && subject != "cycle-words") {
      std::ofstream out(csv_path);
      if (!out) circlekit::fail("FileError", "cannot write " + csv_path);
      circlekit::write_verdict_csv(out,
                                   circlekit::cubic_circle_sweep(n_max, workers));
    }
    print_report(rep, as_json);
    if (!rep.passed()) exit_code = 1;
  });

  int enum_n = 0;
  bool connected_only = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "cubic graphs, one per isomorphism class, as graph6");
  enumerate->add_option("n", enum_n, "order (even, 4..14)")->required();
  enumerate->add_flag("--connected-only", connected_only,
                      "connected classes only");
  enumerate->add_flag("--json", as_json, "JSON output");
  enumerate->callback([&] {
    if (as_json) {
      json lines = json::array();
      circlekit::enumerate_cubic(enum_n, connected_only, [&](const Graph& g) {
        lines.push_back(circlekit::format_graph6(g));
      });
      std::cout << json{{"count", lines.size()}, {"graph6", lines}}.dump(2)
                << "\n";
      return;
    }
    circlekit::enumerate_cubic(enum_n, connected_only, [](const Graph& g) {
      std::cout << circlekit::format_graph6(g) << "\n";
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const circlekit::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
