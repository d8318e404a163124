#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "circlekit/error.hpp"

namespace circlekit {

class Graph;

// A double occurrence word: a token sequence in which every letter that
// occurs, occurs exactly twice. Letters are arbitrary non-empty tokens
// ("a", "v12", ...); comparisons use plain string order throughout.
class Word {
 public:
  Word() = default;  // the empty word (n = 0)

  // Accepts either whitespace-separated tokens ("v1 v4 v2 ...") or, when the
  // text contains no whitespace, one letter per character ("abab").
  // Errors: OddLength, Unbalanced.
  static Word parse(const std::string& text);
  static Word from_tokens(std::vector<std::string> tokens);

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t length() const { return tokens_.size(); }        // 2n
  std::size_t letter_count() const { return length() / 2; }    // n
  bool empty() const { return tokens_.empty(); }

  std::vector<std::string> letters() const;  // sorted, unique
  bool contains(const std::string& letter) const;
  // Positions of the two occurrences, first < second. Errors: LetterAbsent.
  std::pair<int, int> occurrences(const std::string& letter) const;

  // Single-character letters render as a bare string, otherwise tokens are
  // space-separated; parse(render(w)) == w either way.
  std::string render() const;

  Word cyclic_shift(std::size_t i) const;  // OffsetOutOfRange unless 0 <= i < 2n
  Word reversed() const;

  // Lexicographically least token sequence over all rotations of the word
  // and of its reversal. Letters are not relabeled.
  Word canonical_cyclic_form() const;

  Word delete_letter(const std::string& letter) const;    // LetterAbsent
  // Reverses the segment strictly between the two occurrences of the letter;
  // realizes local complementation on the interlacement graph.
  Word reverse_between(const std::string& letter) const;  // LetterAbsent
  // Subsequence on the given letters. Errors: UnknownLetter.
  Word restrict(const std::vector<std::string>& keep) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<std::string> tokens);  // validates
  std::vector<std::string> tokens_;
};

// True iff the words are equal up to rotations and reversal.
bool cyclically_equivalent(const Word& a, const Word& b);

// The single-edge join: rotates w1 so an occurrence of `a` is last and w2 so
// an occurrence of `b` is first, then splices w2 into w1 just before a's
// final occurrence. The interlacement graph of the result is the disjoint
// union of the two interlacement graphs plus the edge a-b.
// Errors: SharedAlphabet, LetterAbsent.
Word join_single_edge(const Word& w1, const Word& w2, const std::string& a,
                      const std::string& b);

// The word v1 vc v2 v1 v3 v2 ... vc v(c-1) on letters "v1".."vc", whose
// interlacement graph is the cycle v1 v2 ... vc. Errors: CycleTooShort.
Word cycle_word(int c);

// Vertex set = letter set (sorted); two letters are adjacent iff their
// occurrences alternate abab / baba along the word.
Graph interlacement(const Word& w);

}  // namespace circlekit
