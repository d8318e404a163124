#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "circlekit/enumerate.hpp"
#include "circlekit/error.hpp"
#include "circlekit/graph.hpp"
#include "circlekit/graph6.hpp"
#include "circlekit/isomorphism.hpp"
#include "circlekit/lab.hpp"
#include "circlekit/recognize.hpp"
#include "circlekit/split.hpp"
#include "circlekit/word.hpp"

namespace py = pybind11;
using namespace circlekit;

PYBIND11_MODULE(_circlekit, m) {
  m.doc() = "circle graph toolkit";

  py::register_exception<Error>(m, "CirclekitError");

  py::class_<Word>(m, "Word")
      .def(py::init<>())
      .def_static("parse", &Word::parse, py::arg("text"))
      .def_static("from_tokens", &Word::from_tokens, py::arg("tokens"))
      .def_property_readonly("tokens", &Word::tokens)
      .def("__len__", &Word::length)
      .def_property_readonly("letter_count", &Word::letter_count)
      .def("letters", &Word::letters)
      .def("contains", &Word::contains, py::arg("letter"))
      .def("occurrences", &Word::occurrences, py::arg("letter"))
      .def("render", &Word::render)
      .def("cyclic_shift", &Word::cyclic_shift, py::arg("i"))
      .def("reversed", &Word::reversed)
      .def("canonical_cyclic_form", &Word::canonical_cyclic_form)
      .def("delete_letter", &Word::delete_letter, py::arg("letter"))
      .def("reverse_between", &Word::reverse_between, py::arg("letter"))
      .def("restrict", &Word::restrict, py::arg("keep"))
      .def(py::self == py::self)
      .def("__str__", &Word::render)
      .def("__repr__",
           [](const Word& w) { return "Word('" + w.render() + "')"; });

  m.def("cyclically_equivalent", &cyclically_equivalent, py::arg("a"),
        py::arg("b"));
  m.def("join_single_edge", &join_single_edge, py::arg("w1"), py::arg("w2"),
        py::arg("a"), py::arg("b"));
  m.def("cycle_word", &cycle_word, py::arg("c"));
  m.def("interlacement", &interlacement, py::arg("w"));

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(),
           py::arg("n"), py::arg("edges"))
      .def(py::init<std::vector<std::string>,
                    const std::vector<std::pair<int, int>>&>(),
           py::arg("labels"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def_property_readonly("labels", &Graph::labels)
      .def("label", &Graph::label, py::arg("v"))
      .def("index_of", &Graph::index_of, py::arg("label"))
      .def("relabeled", &Graph::relabeled, py::arg("labels"))
      .def("edges", &Graph::edges)
      .def("induced", &Graph::induced, py::arg("keep"))
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("local_complement", &local_complement, py::arg("g"), py::arg("v"));
  m.def("delete_vertex", &delete_vertex, py::arg("g"), py::arg("v"));
  m.def("is_connected", &is_connected, py::arg("g"));
  m.def("component_count", &component_count, py::arg("g"));
  m.def("components", &components, py::arg("g"));

  py::class_<TwinPair>(m, "TwinPair")
      .def_readonly("u", &TwinPair::u)
      .def_readonly("v", &TwinPair::v)
      .def_readonly("adjacent", &TwinPair::adjacent)
      .def("__repr__", [](const TwinPair& t) {
        return "TwinPair(" + std::to_string(t.u) + ", " + std::to_string(t.v) +
               (t.adjacent ? ", adjacent)" : ", nonadjacent)");
      });

  m.def("twin_pairs", &twin_pairs, py::arg("g"));
  m.def("disjoint_twin_pair_couples", &disjoint_twin_pair_couples,
        py::arg("g"));
  m.def("has_two_disjoint_twin_pairs", &has_two_disjoint_twin_pairs,
        py::arg("g"));

  py::enum_<ConnectivityClass>(m, "ConnectivityClass")
      .value("DISCONNECTED", ConnectivityClass::Disconnected)
      .value("HAS_CUTPOINT", ConnectivityClass::HasCutpoint)
      .value("TWO_CONNECTED", ConnectivityClass::TwoConnected)
      .value("THREE_CONNECTED_OR_MORE",
             ConnectivityClass::ThreeConnectedOrMore);
  m.def("connectivity_name",
        [](ConnectivityClass c) { return std::string(to_string(c)); });

  py::class_<ConnectivityReport>(m, "ConnectivityReport")
      .def_readonly("cls", &ConnectivityReport::cls)
      .def_readonly("cutpoints", &ConnectivityReport::cutpoints);

  m.def("connectivity_class", &connectivity_class, py::arg("g"));
  m.def("is_regular", &is_regular, py::arg("g"), py::arg("k"));

  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("m"), py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("wheel", &wheel, py::arg("rim"));
  m.def("bw3", &bw3);
  m.def("standard_graph", &standard_graph, py::arg("name"));

  m.def("parse_graph6", &parse_graph6, py::arg("line"));
  m.def("format_graph6", &format_graph6, py::arg("g"));
  m.def(
      "ingest_graph6",
      [](const std::string& text) {
        std::istringstream in(text);
        return ingest_graph6(in);
      },
      py::arg("text"));

  m.def("canonical_label", &canonical_label, py::arg("g"));
  m.def("is_isomorphic", &is_isomorphic, py::arg("g"), py::arg("h"));
  m.def("contains_induced", &contains_induced, py::arg("g"),
        py::arg("pattern"));

  py::class_<Split>(m, "Split")
      .def_readonly("v1", &Split::v1)
      .def_readonly("x1", &Split::x1)
      .def_readonly("v2", &Split::v2)
      .def_readonly("x2", &Split::x2);

  m.def("validate_split", &validate_split, py::arg("g"), py::arg("s"));
  m.def("find_split", &find_split, py::arg("g"));
  m.def("is_prime", &is_prime, py::arg("g"));
  m.def("simple_splits", &simple_splits, py::arg("g"));
  m.def("split_lc_commutes", &split_lc_commutes, py::arg("g"), py::arg("v"));

  m.def("recognize", &recognize, py::arg("g"), py::arg("cap") = kRecognizeCap);
  m.def("verify_realization", &verify_realization, py::arg("g"), py::arg("w"));
  m.def("enumerate_realizations", &enumerate_realizations, py::arg("g"),
        py::arg("cap") = kRecognizeCap);

  py::class_<LocalEquivalenceOrbit>(m, "LocalEquivalenceOrbit")
      .def_readonly("keys", &LocalEquivalenceOrbit::keys)
      .def_readonly("representatives", &LocalEquivalenceOrbit::representatives)
      .def("__len__", &LocalEquivalenceOrbit::size)
      .def("contains", &LocalEquivalenceOrbit::contains, py::arg("key"));

  py::class_<ObstructionWitness>(m, "ObstructionWitness")
      .def_readonly("orbit_member", &ObstructionWitness::orbit_member)
      .def_readonly("obstruction", &ObstructionWitness::obstruction)
      .def_readonly("embedding", &ObstructionWitness::embedding);

  py::class_<RecognitionCertificate>(m, "RecognitionCertificate")
      .def_readonly("verdict", &RecognitionCertificate::verdict)
      .def_readonly("word", &RecognitionCertificate::word)
      .def_readonly("witness", &RecognitionCertificate::witness);

  m.def("local_equivalence_orbit", &local_equivalence_orbit, py::arg("g"),
        py::arg("cap") = kOrbitCap);
  m.def("obstruction_free", &obstruction_free, py::arg("g"),
        py::arg("cap") = kOrbitCap);
  m.def("bouchet_obstructions", &bouchet_obstructions);

  m.def(
      "enumerate_cubic",
      [](int n, bool connected_only) {
        return enumerate_cubic(n, connected_only);
      },
      py::arg("n"), py::arg("connected_only") = false);

  py::class_<Counterexample>(m, "Counterexample")
      .def_readonly("graph", &Counterexample::graph)
      .def_readonly("failed_property", &Counterexample::failed_property);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("property", &VerificationReport::property)
      .def_readonly("n_min", &VerificationReport::n_min)
      .def_readonly("n_max", &VerificationReport::n_max)
      .def_readonly("graphs_examined", &VerificationReport::graphs_examined)
      .def_readonly("circle_graphs", &VerificationReport::circle_graphs)
      .def_readonly("verdicts", &VerificationReport::verdicts)
      .def_readonly("counterexamples", &VerificationReport::counterexamples)
      .def_readonly("wall_time_seconds", &VerificationReport::wall_time_seconds)
      .def("passed", &VerificationReport::passed)
      .def("to_json", [](const VerificationReport& r) {
        return to_json_string(r);
      });

  py::class_<GraphVerdict>(m, "GraphVerdict")
      .def_readonly("graph", &GraphVerdict::graph)
      .def_readonly("key", &GraphVerdict::key)
      .def_readonly("is_circle", &GraphVerdict::is_circle)
      .def_readonly("word", &GraphVerdict::word)
      .def_readonly("twin_couples", &GraphVerdict::twin_couples)
      .def_readonly("connectivity", &GraphVerdict::connectivity)
      .def_readonly("prime", &GraphVerdict::prime);

  m.def("cubic_circle_sweep", &cubic_circle_sweep, py::arg("n_max"),
        py::arg("workers") = 0);
  m.def(
      "verdict_csv",
      [](const std::vector<GraphVerdict>& verdicts) {
        std::ostringstream out;
        write_verdict_csv(out, verdicts);
        return out.str();
      },
      py::arg("verdicts"));
  m.def("verify_twin_theorem", &verify_twin_theorem, py::arg("n_max"),
        py::arg("workers") = 0);
  m.def("verify_no_prime", &verify_no_prime, py::arg("n_max"),
        py::arg("workers") = 0);
  m.def("verify_three_connected_classification",
        &verify_three_connected_classification, py::arg("n_max"),
        py::arg("workers") = 0);
  m.def("verify_cycle_word_uniqueness", &verify_cycle_word_uniqueness,
        py::arg("c"));
  m.def("assemble_disconnected", &assemble_disconnected,
        py::arg("components"));
  m.def("default_worker_count", &default_worker_count);
}
