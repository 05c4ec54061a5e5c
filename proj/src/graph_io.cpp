#include "bdim/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bdim {

namespace {

// Integer tokens with comments stripped.
std::vector<long long> read_tokens(std::istream& in) {
  std::vector<long long> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty())
        throw InvalidInput("line " + std::to_string(line_no) + ": bad token '" + tok + "'");
      out.push_back(value);
    }
  }
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  const auto toks = read_tokens(in);
  if (toks.size() < 2) throw InvalidInput("graph file needs an 'n m' header");
  const long long n = toks[0], m = toks[1];
  if (n < 0 || m < 0) throw InvalidInput("negative n or m in header");
  if (static_cast<long long>(toks.size()) != 2 + 2 * m)
    throw InvalidInput("header declares " + std::to_string(m) + " edges but the body has " +
                       std::to_string(toks.size() - 2) + " endpoint tokens");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i)
    edges.emplace_back(static_cast<Vertex>(toks[2 + 2 * i]),
                       static_cast<Vertex>(toks[3 + 2 * i]));
  return Graph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

BroadcastFn read_broadcast(std::istream& in, int n) {
  const auto toks = read_tokens(in);
  if (toks.size() % 2 != 0) throw InvalidInput("broadcast file needs 'v value' pairs");
  BroadcastFn f(n);
  for (std::size_t i = 0; i < toks.size(); i += 2) {
    const long long v = toks[i], value = toks[i + 1];
    if (v < 0 || v >= n) throw InvalidInput("broadcast vertex " + std::to_string(v) + " out of range");
    if (value < 0) throw InvalidInput("negative broadcast value");
    f.set(static_cast<Vertex>(v), static_cast<int>(value));
  }
  return f;
}

void write_broadcast(std::ostream& out, const BroadcastFn& f) {
  for (Vertex v = 0; v < f.order(); ++v)
    if (f[v] > 0) out << v << ' ' << f[v] << '\n';
}

std::vector<Vertex> read_vertex_set(std::istream& in, int n) {
  std::vector<Vertex> set;
  for (long long v : read_tokens(in)) {
    if (v < 0 || v >= n) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    set.push_back(static_cast<Vertex>(v));
  }
  return set;
}

void write_vertex_set(std::ostream& out, const std::vector<Vertex>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
  out << '\n';
}

Graph load_graph(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

BroadcastFn load_broadcast(const std::string& path, int n) {
  auto in = open(path);
  return read_broadcast(in, n);
}

std::vector<Vertex> load_vertex_set(const std::string& path, int n) {
  auto in = open(path);
  return read_vertex_set(in, n);
}

}  // namespace bdim
