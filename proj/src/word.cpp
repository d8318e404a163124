#include "circlekit/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "circlekit/graph.hpp"

namespace circlekit {

Word::Word(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.size() % 2 != 0)
    fail("OddLength", "word has " + std::to_string(tokens_.size()) + " tokens");
  std::map<std::string, int> count;
  for (const auto& t : tokens_) {
    if (t.empty()) fail("Unbalanced", "empty token");
    ++count[t];
  }
  for (const auto& [letter, c] : count)
    if (c != 2)
      fail("Unbalanced",
           "letter '" + letter + "' occurs " + std::to_string(c) + " times");
}

Word Word::parse(const std::string& text) {
  std::vector<std::string> tokens;
  if (text.find_first_of(" \t\n\r") != std::string::npos) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }
  return Word(std::move(tokens));
}

Word Word::from_tokens(std::vector<std::string> tokens) {
  return Word(std::move(tokens));
}

std::vector<std::string> Word::letters() const {
  std::vector<std::string> out(tokens_.begin(), tokens_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Word::contains(const std::string& letter) const {
  return std::find(tokens_.begin(), tokens_.end(), letter) != tokens_.end();
}

std::pair<int, int> Word::occurrences(const std::string& letter) const {
  int first = -1;
  for (int i = 0; i < static_cast<int>(tokens_.size()); ++i) {
    if (tokens_[i] == letter) {
      if (first < 0)
        first = i;
      else
        return {first, i};
    }
  }
  fail("LetterAbsent", "letter '" + letter + "' does not occur");
}

std::string Word::render() const {
  bool bare = std::all_of(tokens_.begin(), tokens_.end(),
                          [](const std::string& t) { return t.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i > 0 && !bare) out += ' ';
    out += tokens_[i];
  }
  return out;
}

Word Word::cyclic_shift(std::size_t i) const {
  if (i >= tokens_.size())
    fail("OffsetOutOfRange", "offset " + std::to_string(i) + " for word of length " +
                                 std::to_string(tokens_.size()));
  std::vector<std::string> out(tokens_.begin() + i, tokens_.end());
  out.insert(out.end(), tokens_.begin(), tokens_.begin() + i);
  return Word(std::move(out));
}

Word Word::reversed() const {
  return Word(std::vector<std::string>(tokens_.rbegin(), tokens_.rend()));
}

Word Word::canonical_cyclic_form() const {
  if (empty()) return *this;
  Word best = *this;
  for (const Word& base : {*this, reversed()}) {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      Word cand = base.cyclic_shift(i);
      if (cand.tokens_ < best.tokens_) best = std::move(cand);
    }
  }
  return best;
}

Word Word::delete_letter(const std::string& letter) const {
  occurrences(letter);  // LetterAbsent check
  std::vector<std::string> out;
  out.reserve(tokens_.size() - 2);
  for (const auto& t : tokens_)
    if (t != letter) out.push_back(t);
  return Word(std::move(out));
}

Word Word::reverse_between(const std::string& letter) const {
  auto [p, q] = occurrences(letter);
  std::vector<std::string> out = tokens_;
  std::reverse(out.begin() + p + 1, out.begin() + q);
  return Word(std::move(out));
}

Word Word::restrict(const std::vector<std::string>& keep) const {
  auto all = letters();
  for (const auto& s : keep)
    if (!std::binary_search(all.begin(), all.end(), s))
      fail("UnknownLetter", "letter '" + s + "' does not occur");
  std::vector<std::string> out;
  for (const auto& t : tokens_)
    if (std::find(keep.begin(), keep.end(), t) != keep.end()) out.push_back(t);
  return Word(std::move(out));
}

bool cyclically_equivalent(const Word& a, const Word& b) {
  return a.canonical_cyclic_form() == b.canonical_cyclic_form();
}

Word join_single_edge(const Word& w1, const Word& w2, const std::string& a,
                      const std::string& b) {
  auto l1 = w1.letters(), l2 = w2.letters();
  std::vector<std::string> shared;
  std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(),
                        std::back_inserter(shared));
  if (!shared.empty())
    fail("SharedAlphabet", "letter '" + shared.front() + "' occurs in both words");

  // Rotate w1 so an occurrence of a is the last token, w2 so an occurrence
  // of b is the first.
  auto [pa, pa2] = w1.occurrences(a);
  auto [pb, pb2] = w2.occurrences(b);
  (void)pa2;
  (void)pb2;
  Word left = w1.cyclic_shift((pa + 1) % w1.length());
  Word right = w2.cyclic_shift(pb);

  std::vector<std::string> out(left.tokens().begin(), left.tokens().end() - 1);
  out.push_back(right.tokens().front());
  out.push_back(left.tokens().back());
  out.insert(out.end(), right.tokens().begin() + 1, right.tokens().end());
  return Word::from_tokens(std::move(out));
}

Word cycle_word(int c) {
  if (c < 3) fail("CycleTooShort", "cycle length " + std::to_string(c));
  std::vector<std::string> tokens;
  tokens.reserve(2 * c);
  auto name = [](int k) { return "v" + std::to_string(k); };
  for (int k = 1; k <= c; ++k) {
    tokens.push_back(name(k));
    tokens.push_back(name(k == 1 ? c : k - 1));
  }
  return Word::from_tokens(std::move(tokens));
}

Graph interlacement(const Word& w) {
  auto ls = w.letters();
  Graph g(std::vector<std::string>(ls.begin(), ls.end()), {});
  int n = static_cast<int>(ls.size());
  for (int i = 0; i < n; ++i) {
    auto [a1, a2] = w.occurrences(ls[i]);
    for (int j = i + 1; j < n; ++j) {
      auto [b1, b2] = w.occurrences(ls[j]);
      bool in1 = a1 < b1 && b1 < a2;
      bool in2 = a1 < b2 && b2 < a2;
      if (in1 != in2) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace circlekit
