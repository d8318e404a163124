#include "circlekit/graph6.hpp"

#include <string>

namespace circlekit {

namespace {

constexpr char kHeader[] = ">>graph6<<";

int data_byte(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    fail("MalformedGraph6", "byte out of range: " + std::to_string(u));
  }
  return u - 63;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string line = raw;
  if (line.rfind(kHeader, 0) == 0) line = line.substr(sizeof(kHeader) - 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty()) fail("MalformedGraph6", "empty line");

  std::size_t at = 0;
  long n;
  if (line[0] != '~') {
    n = data_byte(line[0]);
    at = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) fail("MalformedGraph6", "truncated order field");
    n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | data_byte(line[k]);
    at = 4;
  } else {
    if (line.size() < 8) fail("MalformedGraph6", "truncated order field");
    n = 0;
    for (int k = 2; k <= 7; ++k) n = (n << 6) | data_byte(line[k]);
    at = 8;
  }
  if (n > kMaxVertices) {
    fail("TooLarge", "graph6 order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxVertices));
  }

  long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - at != need) {
    fail("MalformedGraph6", "expected " + std::to_string(need) +
                                " data bytes, got " +
                                std::to_string(line.size() - at));
  }

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = data_byte(line[at + bit / 6]);
      if (byte & (1 << (5 - bit % 6))) g.add_edge(i, j);
    }
  }
  return g;
}

std::string format_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) fail("TooLarge", "graph6 output supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

void ingest_graph6(std::istream& in, const std::function<void(Graph)>& sink) {
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line;
    if (body.rfind(kHeader, 0) == 0) body = body.substr(sizeof(kHeader) - 1);
    if (!body.empty() && body.back() == '\r') body.pop_back();
    if (body.empty()) continue;
    try {
      sink(parse_graph6(body));
    } catch (const Error& e) {
      fail(e.name(), "line " + std::to_string(line_no) + ": " + e.message());
    }
  }
}

std::vector<Graph> ingest_graph6(std::istream& in) {
  std::vector<Graph> out;
  ingest_graph6(in, [&](Graph g) { out.push_back(std::move(g)); });
  return out;
}

}  // namespace circlekit
