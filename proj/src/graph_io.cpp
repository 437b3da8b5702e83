#include "locyc/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "locyc/errors.hpp"

namespace locyc {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("edge list line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_count(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    auto tokens = split(text);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) fail(line_no, "expected two fields, got " + std::to_string(tokens.size()));
    std::uint64_t a = to_count(tokens[0], line_no);
    std::uint64_t b = to_count(tokens[1], line_no);
    if (!have_header) {
      if (a > static_cast<std::uint64_t>(INT32_MAX)) fail(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
      continue;
    }
    if (a >= b) fail(line_no, "expected u < v");
    if (b >= n) fail(line_no, "vertex " + std::to_string(b) + " out of range for n = " + std::to_string(n));
    if (edges.size() == m) fail(line_no, "more edge lines than the declared m = " + std::to_string(m));
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    if (edges.size() >= 2 && edges[edges.size() - 2] == edges.back()) fail(line_no, "duplicate edge");
  }
  if (!have_header) throw InputError("edge list is empty: missing `n m` header");
  if (edges.size() != m) {
    fail(line_no, "declared m = " + std::to_string(m) + " but found " + std::to_string(edges.size()) + " edges");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file " + path.string());
  write_edge_list(out, g);
}

LabeledGraph parse_labeled_edge_list(std::istream& in) {
  LabeledGraph result;
  std::unordered_map<std::string, Vertex> ids;
  std::vector<Edge> edges;
  auto id_of = [&](std::string_view label) {
    auto [it, inserted] = ids.try_emplace(std::string(label), static_cast<Vertex>(result.labels.size()));
    if (inserted) result.labels.emplace_back(label);
    return it->second;
  };
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    auto tokens = split(text);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) fail(line_no, "expected two labels, got " + std::to_string(tokens.size()));
    Vertex a = id_of(tokens[0]);
    Vertex b = id_of(tokens[1]);
    if (a == b) fail(line_no, "self-loop on '" + std::string(tokens[0]) + "'");
    edges.push_back(Edge::of(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  result.graph = Graph::from_edges(result.labels.size(), std::move(edges));
  return result;
}

void write_label_map(std::ostream& out, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << ' ' << labels[i] << '\n';
}

}  // namespace locyc
