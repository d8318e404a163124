#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "circlekit/graph.hpp"
#include "circlekit/word.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using circlekit::Graph;
using circlekit::Word;
using circlekit::cycle_word;
using circlekit::cyclically_equivalent;
using circlekit::interlacement;
using circlekit::join_single_edge;

namespace {

// Random double occurrence word on n single-character letters.
Word random_word(std::mt19937& rng, int n) {
  std::vector<std::string> tokens;
  for (int i = 0; i < n; ++i) {
    std::string letter(1, static_cast<char>('a' + i));
    tokens.push_back(letter);
    tokens.push_back(letter);
  }
  std::shuffle(tokens.begin(), tokens.end(), rng);
  return Word::from_tokens(tokens);
}

}  // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("parse splits on characters or whitespace") {
  Word w = Word::parse("abab");
  CHECK(w.tokens() == toks({"a", "b", "a", "b"}));
  CHECK(w.length() == 4);
  CHECK(w.letter_count() == 2);

  Word v = Word::parse("v1 v4 v2 v1 v3 v2 v4 v3");
  CHECK(v.length() == 8);
  CHECK(v.letters() == toks({"v1", "v2", "v3", "v4"}));
  CHECK(v.tokens()[1] == "v4");

  CHECK(Word::parse("").empty());
  CHECK(Word::parse("  ").empty());
}

TEST_CASE("parse rejects words that are not double occurrence") {
  CHECK(error_name([] { Word::parse("aba"); }) == "OddLength");
  CHECK(error_name([] { Word::parse("v1 v2 v1"); }) == "OddLength");
  CHECK(error_name([] { Word::parse("abca"); }) == "Unbalanced");
  CHECK(error_name([] { Word::parse("aaaa"); }) == "Unbalanced");
  CHECK(error_name([] { Word::parse("v1 v1 v2 v3"); }) == "Unbalanced");
}

TEST_CASE("render inverts parse") {
  CHECK(Word::parse("abab").render() == "abab");
  CHECK(Word::parse("v1 v4 v2 v1 v3 v2 v4 v3").render() ==
        "v1 v4 v2 v1 v3 v2 v4 v3");
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Word w = random_word(rng, oracle::random_int(rng, 0, 8));
    CHECK(Word::parse(w.render()) == w);
  }
}

TEST_CASE("occurrences and containment") {
  Word w = Word::parse("abcabc");
  CHECK(w.contains("b"));
  CHECK(!w.contains("d"));
  CHECK(w.occurrences("b") == std::pair<int, int>(1, 4));
  CHECK(error_name([&] { w.occurrences("d"); }) == "LetterAbsent");
}

TEST_CASE("interlacement spec examples") {
  Graph edge = interlacement(Word::parse("abab"));
  CHECK(edge.order() == 2);
  CHECK(edge.edge_count() == 1);
  CHECK(edge.adjacent(0, 1));
  CHECK(edge.labels() == toks({"a", "b"}));

  Graph isolated = interlacement(Word::parse("aabb"));
  CHECK(isolated.order() == 2);
  CHECK(isolated.edge_count() == 0);

  Graph k4 = interlacement(Word::parse("abcdabcd"));
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);

  Graph c4 = interlacement(Word::parse("v1 v4 v2 v1 v3 v2 v4 v3"));
  CHECK(c4.order() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent(c4.index_of("v1"), c4.index_of("v2")));
  CHECK(c4.adjacent(c4.index_of("v2"), c4.index_of("v3")));
  CHECK(c4.adjacent(c4.index_of("v3"), c4.index_of("v4")));
  CHECK(c4.adjacent(c4.index_of("v4"), c4.index_of("v1")));
  CHECK(!c4.adjacent(c4.index_of("v1"), c4.index_of("v3")));

  CHECK(interlacement(Word()).order() == 0);
}

TEST_CASE("interlacement matches the quadratic alternation check") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    Word w = random_word(rng, oracle::random_int(rng, 0, 8));
    CHECK(interlacement(w) == oracle::interlacement_quadratic(w.tokens()));
  }
}

TEST_CASE("cyclic shift and reversal") {
  Word w = Word::parse("abab");
  CHECK(w.cyclic_shift(0) == w);
  CHECK(w.cyclic_shift(1).render() == "baba");
  CHECK(w.cyclic_shift(3).render() == "baba");
  CHECK(w.reversed().render() == "baba");
  CHECK(Word::parse("abcabc").reversed().render() == "cbacba");
  CHECK(error_name([&] { w.cyclic_shift(4); }) == "OffsetOutOfRange");
}

TEST_CASE("shift and reversal preserve the interlacement graph") {
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    Word w = random_word(rng, oracle::random_int(rng, 1, 7));
    Graph g = interlacement(w);
    CHECK(interlacement(w.reversed()) == g);
    std::size_t i = oracle::random_int(rng, 0, static_cast<int>(w.length()) - 1);
    CHECK(interlacement(w.cyclic_shift(i)) == g);
  }
}

TEST_CASE("canonical cyclic form and cyclic equivalence") {
  CHECK(Word::parse("baba").canonical_cyclic_form().render() == "abab");
  CHECK(Word::parse("bcacba").canonical_cyclic_form().render() == "abcacb");
  CHECK(cyclically_equivalent(Word::parse("abab"), Word::parse("baba")));
  CHECK(cyclically_equivalent(Word::parse("abcabc"), Word::parse("cbacba")));
  CHECK(!cyclically_equivalent(Word::parse("abab"), Word::parse("aabb")));
  CHECK(!cyclically_equivalent(Word::parse("abab"), Word::parse("abcabc")));

  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    Word w = random_word(rng, oracle::random_int(rng, 1, 6));
    Word c = w.canonical_cyclic_form();
    CHECK(cyclically_equivalent(w, c));
    std::size_t i = oracle::random_int(rng, 0, static_cast<int>(w.length()) - 1);
    CHECK(w.cyclic_shift(i).canonical_cyclic_form() == c);
    CHECK(w.reversed().canonical_cyclic_form() == c);
    // The canonical form never beats itself.
    CHECK(c.canonical_cyclic_form() == c);
  }
}

TEST_CASE("delete_letter realizes vertex deletion") {
  CHECK(Word::parse("abab").delete_letter("b").render() == "aa");
  Word c4 = cycle_word(4);
  Graph path = interlacement(c4.delete_letter("v1"));
  CHECK(path.order() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(path.adjacent(path.index_of("v2"), path.index_of("v3")));
  CHECK(path.adjacent(path.index_of("v3"), path.index_of("v4")));
  CHECK(error_name([] { Word::parse("abab").delete_letter("c"); }) ==
        "LetterAbsent");

  std::mt19937 rng(19);
  for (int t = 0; t < 100; ++t) {
    Word w = random_word(rng, oracle::random_int(rng, 2, 7));
    std::string x = w.letters()[oracle::random_int(
        rng, 0, static_cast<int>(w.letter_count()) - 1)];
    Graph g = interlacement(w);
    CHECK(interlacement(w.delete_letter(x)) ==
          circlekit::delete_vertex(g, g.index_of(x)));
  }
}

TEST_CASE("reverse_between realizes local complementation") {
  Word w = Word::parse("abcabc").reverse_between("a");
  CHECK(w.render() == "acbabc");
  Graph star = interlacement(w);
  CHECK(star.edge_count() == 2);
  CHECK(star.adjacent(star.index_of("a"), star.index_of("b")));
  CHECK(star.adjacent(star.index_of("a"), star.index_of("c")));
  CHECK(error_name([] { Word::parse("abab").reverse_between("x"); }) ==
        "LetterAbsent");

  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    Word v = random_word(rng, oracle::random_int(rng, 1, 7));
    std::string x = v.letters()[oracle::random_int(
        rng, 0, static_cast<int>(v.letter_count()) - 1)];
    CHECK(v.reverse_between(x).reverse_between(x) == v);
    Graph g = interlacement(v);
    CHECK(interlacement(v.reverse_between(x)) ==
          circlekit::local_complement(g, g.index_of(x)));
  }
}

TEST_CASE("restrict is the induced subword") {
  CHECK(Word::parse("abcabc").restrict(toks({"a", "c"})).render() == "acac");
  CHECK(Word::parse("abab").restrict({}).empty());
  CHECK(error_name([] { Word::parse("abab").restrict(toks({"z"})); }) ==
        "UnknownLetter");

  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    Word w = random_word(rng, oracle::random_int(rng, 1, 7));
    std::vector<std::string> keep;
    std::uint64_t pick = 0;
    for (const std::string& l : w.letters()) {
      if (rng() & 1) keep.push_back(l);
    }
    Graph g = interlacement(w);
    for (const std::string& l : keep) pick |= 1ull << g.index_of(l);
    CHECK(interlacement(w.restrict(keep)) == g.induced(pick));
  }
}

TEST_CASE("join_single_edge spec examples") {
  Word w = join_single_edge(Word::parse("aa"), Word::parse("bb"), "a", "b");
  CHECK(w.render() == "abab");

  Word j = join_single_edge(Word::parse("abab"), Word::parse("cdcd"), "b", "c");
  Graph g = interlacement(j);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(g.index_of("a"), g.index_of("b")));
  CHECK(g.adjacent(g.index_of("b"), g.index_of("c")));
  CHECK(g.adjacent(g.index_of("c"), g.index_of("d")));

  CHECK(error_name([] {
          join_single_edge(Word::parse("abab"), Word::parse("bcbc"), "a", "b");
        }) == "SharedAlphabet");
  CHECK(error_name([] {
          join_single_edge(Word::parse("aa"), Word::parse("bb"), "x", "b");
        }) == "LetterAbsent");
  CHECK(error_name([] {
          join_single_edge(Word::parse("aa"), Word::parse("bb"), "a", "x");
        }) == "LetterAbsent");
}

TEST_CASE("join_single_edge adds exactly the bridging edge") {
  std::mt19937 rng(31);
  for (int t = 0; t < 100; ++t) {
    Word w1 = random_word(rng, oracle::random_int(rng, 1, 4));
    int n2 = oracle::random_int(rng, 1, 4);
    std::vector<std::string> tokens;
    for (int i = 0; i < n2; ++i) {
      std::string letter(1, static_cast<char>('p' + i));
      tokens.push_back(letter);
      tokens.push_back(letter);
    }
    std::shuffle(tokens.begin(), tokens.end(), rng);
    Word w2 = Word::from_tokens(tokens);
    std::string a = w1.letters()[oracle::random_int(
        rng, 0, static_cast<int>(w1.letter_count()) - 1)];
    std::string b = w2.letters()[oracle::random_int(
        rng, 0, static_cast<int>(w2.letter_count()) - 1)];

    Graph joined = interlacement(join_single_edge(w1, w2, a, b));
    Graph g1 = interlacement(w1);
    Graph g2 = interlacement(w2);
    CHECK(joined.order() == g1.order() + g2.order());
    CHECK(joined.edge_count() == g1.edge_count() + g2.edge_count() + 1);
    for (auto [u, v] : g1.edges()) {
      CHECK(joined.adjacent(joined.index_of(g1.label(u)),
                            joined.index_of(g1.label(v))));
    }
    for (auto [u, v] : g2.edges()) {
      CHECK(joined.adjacent(joined.index_of(g2.label(u)),
                            joined.index_of(g2.label(v))));
    }
    CHECK(joined.adjacent(joined.index_of(a), joined.index_of(b)));
  }
}

TEST_CASE("cycle_word produces the labeled cycle") {
  CHECK(cycle_word(3).render() == "v1 v3 v2 v1 v3 v2");
  CHECK(cycle_word(4).render() == "v1 v4 v2 v1 v3 v2 v4 v3");
  CHECK(cycle_word(5).render() == "v1 v5 v2 v1 v3 v2 v4 v3 v5 v4");
  CHECK(error_name([] { cycle_word(2); }) == "CycleTooShort");

  for (int c = 3; c <= 8; ++c) {
    Graph g = interlacement(cycle_word(c));
    CHECK(g.order() == c);
    CHECK(g.edge_count() == c);
    for (int k = 1; k <= c; ++k) {
      int u = g.index_of("v" + std::to_string(k));
      int v = g.index_of("v" + std::to_string(k % c + 1));
      CHECK(g.adjacent(u, v));
    }
  }
}

TEST_SUITE_END();
