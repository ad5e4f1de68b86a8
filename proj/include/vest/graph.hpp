#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vest/bits.hpp"
#include "vest/error.hpp"
#include "vest/scalar.hpp"

namespace vest {

using VertexSet = BitVector;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
/// Self-loops are dropped and parallel edges collapse on construction.
class Graph {
 public:
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges = {})
      : n_(n), adjacency_(n, BitVector(n)) {
    if (n == 0) throw Error(ErrorCode::empty_graph, "graph must have at least one vertex");
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v || adjacency_[u].test(v)) continue;
      adjacency_[u].set(v);
      adjacency_[v].set(u);
      ++edge_count_;
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return adjacency_[u].test(v);
  }

  const BitVector& neighbors(std::size_t u) const {
    check_vertex(u);
    return adjacency_[u];
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (adjacency_[u].test(v)) out.emplace_back(u, v);
    return out;
  }

  void check_vertex(std::size_t u) const {
    if (u >= n_)
      throw Error(ErrorCode::vertex_out_of_range, "vertex " + std::to_string(u) + " not in [0, " +
                                                      std::to_string(n_) + ")");
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::size_t edge_count_ = 0;
  std::vector<BitVector> adjacency_;
};

/// N[u] = adj(u) ∪ {u}.
inline VertexSet closed_neighborhood(const Graph& g, std::size_t u) {
  VertexSet out = g.neighbors(u);
  out.set(u);
  return out;
}

inline bool is_dominating(const Graph& g, const VertexSet& set) {
  if (set.size() != g.vertex_count())
    throw Error(ErrorCode::vertex_out_of_range, "vertex set over " + std::to_string(set.size()) +
                                                    " vertices, graph has " + std::to_string(g.vertex_count()));
  VertexSet covered(g.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    if (set.test(u)) covered |= closed_neighborhood(g, u);
  return covered.count() == g.vertex_count();
}

inline VertexSet make_vertex_set(const Graph& g, std::initializer_list<std::size_t> members) {
  VertexSet out(g.vertex_count());
  for (auto u : members) {
    g.check_vertex(u);
    out.set(u);
  }
  return out;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

/// D_k: number of k-subsets that dominate g, by plain enumeration of all
/// C(n, k) subsets. Deliberately shares nothing with the reduction.
inline BigInt count_dominating_sets(const Graph& g, std::size_t k, const BigInt& cap = 100'000'000) {
  const std::size_t n = g.vertex_count();
  if (k > n) return 0;
  if (BigInt subsets = binomial(n, k); subsets > cap)
    throw Error(ErrorCode::resource_bound, "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                               subsets.str() + " subsets exceeds cap " + cap.str());
  std::vector<VertexSet> closed;
  closed.reserve(n);
  for (std::size_t u = 0; u < n; ++u) closed.push_back(closed_neighborhood(g, u));

  // Lexicographic k-combinations; prefix unions are kept per depth.
  std::vector<std::size_t> pick(k);
  std::vector<VertexSet> covered(k + 1, VertexSet(n));
  std::uint64_t count = 0;
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == k) {
      if (covered[k].count() == n) ++count;
      return;
    }
    for (std::size_t u = start; u + (k - depth) <= n; ++u) {
      covered[depth + 1] = covered[depth];
      covered[depth + 1] |= closed[u];
      self(self, depth + 1, u + 1);
    }
  };
  recurse(recurse, 0, 0);
  return BigInt(count);
}

enum class GraphFormat { edge_list, dimacs };

namespace detail {

inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (!all_digits(tok)) throw Error(ErrorCode::syntax_error, "expected a non-negative integer, got '" + tok + "'", line);
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::syntax_error, "integer '" + tok + "' is too large", line);
  }
}

inline bool blank(const std::vector<std::string>& tokens) { return tokens.empty(); }

}  // namespace detail

/// EdgeList: "n m" header, then "u v" lines (0-indexed), '#' comments.
/// DIMACS: 'c' comments, "p edge n m", then "e u v" lines (1-indexed).
/// Self-loops are dropped; a note is appended to `warnings` when given.
inline Graph parse_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings = nullptr) {
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::size_t edge_lines = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = detail::tokenize(raw);
    if (detail::blank(tokens)) continue;

    std::size_t u = 0;
    std::size_t v = 0;
    if (format == GraphFormat::edge_list) {
      if (tokens.front().front() == '#') continue;
      if (tokens.size() != 2) throw Error(ErrorCode::syntax_error, "expected two integers, got '" + raw + "'", line_no);
      std::size_t a = detail::parse_count(tokens[0], line_no);
      std::size_t b = detail::parse_count(tokens[1], line_no);
      if (!n) {
        n = a;
        declared_edges = b;
        if (a == 0) throw Error(ErrorCode::empty_graph, "graph must have at least one vertex", line_no);
        continue;
      }
      u = a;
      v = b;
    } else {
      const std::string& kind = tokens.front();
      if (kind == "c") continue;
      if (kind == "p") {
        if (n) throw Error(ErrorCode::syntax_error, "duplicate problem line", line_no);
        if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
          throw Error(ErrorCode::syntax_error, "expected 'p edge <n> <m>', got '" + raw + "'", line_no);
        n = detail::parse_count(tokens[2], line_no);
        declared_edges = detail::parse_count(tokens[3], line_no);
        if (*n == 0) throw Error(ErrorCode::empty_graph, "graph must have at least one vertex", line_no);
        continue;
      }
      if (kind != "e") throw Error(ErrorCode::syntax_error, "unknown line type '" + kind + "'", line_no);
      if (!n) throw Error(ErrorCode::syntax_error, "edge line before problem line", line_no);
      if (tokens.size() != 3) throw Error(ErrorCode::syntax_error, "expected 'e <u> <v>', got '" + raw + "'", line_no);
      u = detail::parse_count(tokens[1], line_no);
      v = detail::parse_count(tokens[2], line_no);
      if (u == 0 || v == 0)
        throw Error(ErrorCode::vertex_out_of_range, "DIMACS vertices are 1-indexed, got 0", line_no);
      --u;
      --v;
    }
    if (!n) throw Error(ErrorCode::syntax_error, "missing header", line_no);
    if (u >= *n || v >= *n)
      throw Error(ErrorCode::vertex_out_of_range, "edge endpoint outside " + std::to_string(*n) + " vertices: '" +
                                                      raw + "'", line_no);
    if (u == v && warnings) warnings->push_back("line " + std::to_string(line_no) + ": self-loop dropped");
    ++edge_lines;
    edges.emplace_back(u, v);
  }
  if (!n) throw Error(ErrorCode::syntax_error, "missing header", line_no);
  if (format == GraphFormat::dimacs && edge_lines != declared_edges)
    throw Error(ErrorCode::inconsistent_header, "header declares " + std::to_string(declared_edges) +
                                                    " edges, found " + std::to_string(edge_lines));
  return Graph(*n, edges);
}

inline Graph read_graph_file(const std::string& path, GraphFormat format, std::vector<std::string>* warnings = nullptr) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format, warnings);
}

}  // namespace vest
