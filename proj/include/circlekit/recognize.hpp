#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circlekit/graph.hpp"
#include "circlekit/word.hpp"

namespace circlekit {

inline constexpr int kRecognizeCap = 14;
inline constexpr std::size_t kOrbitCap = 100000;

// Closure of a seed graph under local complementation, deduplicated by
// canonical key. Representatives map each key to the first concrete graph
// reached with that key.
struct LocalEquivalenceOrbit {
  std::vector<std::string> keys;  // sorted canonical keys
  std::map<std::string, Graph> representatives;

  std::size_t size() const { return keys.size(); }
  bool contains(const std::string& key) const {
    return representatives.count(key) != 0;
  }
};

// Thrown when the orbit closure exceeds the member cap; carries everything
// discovered so far.
class OrbitCapExceeded : public Error {
 public:
  OrbitCapExceeded(std::size_t cap, LocalEquivalenceOrbit partial);
  LocalEquivalenceOrbit partial;
};

struct ObstructionWitness {
  Graph orbit_member;         // locally equivalent to the input
  std::string obstruction;    // "W5", "BW3" or "W7"
  std::vector<int> embedding; // obstruction vertex -> orbit_member vertex
};

struct RecognitionCertificate {
  bool verdict = false;
  std::optional<Word> word;                  // realization, when one exists
  std::optional<ObstructionWitness> witness; // set on obstruction rejection
};

// Backtracking search for a double occurrence word whose interlacement graph
// equals g, labels included. Disconnected graphs are solved per component
// and concatenated. Errors: TooLarge above the cap.
std::optional<Word> recognize(const Graph& g, int cap = kRecognizeCap);

// True iff interlacement(w) == g exactly. The letter set must equal the
// label set (AlphabetMismatch).
bool verify_realization(const Graph& g, const Word& w);

// Every word realizing g exactly, rotation-normalized by pinning one
// occurrence of a fixed vertex (the first in descending-degree order) to the
// front; reversals are not quotiented. Connected graphs only (NotConnected).
// Errors: TooLarge above the cap.
std::vector<Word> enumerate_realizations(const Graph& g,
                                         int cap = kRecognizeCap);

// Breadth-first closure under local complementation at every vertex.
// Errors: OrbitCapExceeded (carries the partial orbit), TooLarge via
// canonicalization.
LocalEquivalenceOrbit local_equivalence_orbit(const Graph& g,
                                              std::size_t cap = kOrbitCap);

// Scans the local-equivalence orbit for an induced W5, BW3 or W7. Verdict
// true means none was found anywhere in the orbit. Errors: OrbitCapExceeded.
RecognitionCertificate obstruction_free(const Graph& g,
                                        std::size_t cap = kOrbitCap);

// The three obstructions, in scan order: ("W5", ...), ("BW3", ...),
// ("W7", ...).
const std::vector<std::pair<std::string, Graph>>& bouchet_obstructions();

}  // namespace circlekit
