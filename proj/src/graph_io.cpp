#include "tdim/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "tdim/errors.hpp"

namespace tdim {

namespace {

class Tokens {
public:
  explicit Tokens(std::string_view text) : text_(text) {}

  // Next integer on the current line; the line must not end first.
  long long next_int(const char *what) {
    skip_blanks();
    if (pos_ >= text_.size() || text_[pos_] == '\n')
      fail(std::string("expected ") + what);
    const char *begin = text_.data() + pos_;
    const char *end = text_.data() + text_.size();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin)
      fail(std::string("malformed ") + what);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void end_line() {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == '\r')
      ++pos_;
    if (pos_ < text_.size() && text_[pos_] != '\n')
      fail("trailing characters");
    if (pos_ < text_.size())
      ++pos_;
    ++line_;
  }

  void expect_end() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r')
        fail("unexpected content after last edge");
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("edge list line " + std::to_string(line_) + ": " + msg);
  }

private:
  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

} // namespace

Graph parse_edge_list(std::string_view text) {
  Tokens tok(text);
  const long long n = tok.next_int("order");
  const long long m = tok.next_int("edge count");
  tok.end_line();
  if (n < 1 || n > kMaxOrder)
    tok.fail("order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
  if (m < 0 || m > n * (n - 1) / 2)
    tok.fail("edge count " + std::to_string(m) + " impossible for order " + std::to_string(n));
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    const long long u = tok.next_int("vertex");
    const long long v = tok.next_int("vertex");
    if (!(0 <= u && u < v && v < n))
      tok.fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") violates 0 <= u < v < n");
    if (g.adjacent(static_cast<VertexId>(u), static_cast<VertexId>(v)))
      tok.fail("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    tok.end_line();
  }
  tok.expect_end();
  return g;
}

Graph read_edge_list(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

std::string format_edge_list(const Graph &g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto &e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

void write_edge_list(const std::string &path, const Graph &g) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << format_edge_list(g);
}

std::string format_dot(const Graph &g, const VertexSet &highlight) {
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (highlight.contains(v))
      out += " [style=filled, fillcolor=black, fontcolor=white]";
    out += ";\n";
  }
  for (const auto &e : g.edges())
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

std::string content_hash(const Graph &g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

} // namespace tdim
