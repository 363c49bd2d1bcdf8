#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ordo/error.hpp"

namespace ordo {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Unordered pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Undirected loop-free graph on 0..n-1 with bitset adjacency rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count);
  /// Duplicate edges collapse; loops and out-of-range endpoints throw.
  SimpleGraph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighbours(Vertex u) const { return rows_[u]; }
  std::size_t degree(Vertex u) const { return rows_[u].count(); }

  /// Edges in lexicographic order of (u, v), u < v.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Directed graph; loops allowed, parallel arcs collapse.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertex_count);
  Digraph(std::size_t vertex_count, std::span<const Arc> arcs);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }
  std::size_t loop_count() const;
  bool has_arc(Vertex u, Vertex v) const { return out_[u].test(v); }
  const VertexSet& out_neighbours(Vertex u) const { return out_[u]; }
  std::size_t out_degree(Vertex u) const { return out_[u].count(); }
  std::size_t in_degree(Vertex v) const;

  /// Arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<VertexSet> out_;
  std::size_t arc_count_ = 0;
};

/// Complete antisymmetric orientation: exactly one arc per vertex pair.
class Tournament {
 public:
  Tournament() = default;
  /// Throws NotATournament unless `graph` satisfies the tournament invariant.
  explicit Tournament(Digraph graph);

  /// i -> j iff i < j.
  static Tournament transitive(std::size_t n);
  /// Bit p of `orientation` (pairs in lexicographic order) set means v -> u
  /// for the p-th pair (u, v); clear means u -> v.
  static Tournament from_orientation(std::size_t n, std::uint64_t orientation);
  /// Orientation drawn from `bit` (one call per pair, lexicographic order).
  static Tournament from_coin_flips(std::size_t n, const std::function<bool()>& bit);

  std::size_t vertex_count() const { return graph_.vertex_count(); }
  bool beats(Vertex u, Vertex v) const { return graph_.has_arc(u, v); }
  const Digraph& digraph() const { return graph_; }

 private:
  Digraph graph_;
};

/// Total colouring of the edges of K_n with colours 0..c-1.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(std::size_t vertex_count, std::size_t color_count,
               const std::function<std::size_t(Vertex, Vertex)>& color_of);
  /// Colours indexed by pair_index().
  EdgeColoring(std::size_t vertex_count, std::size_t color_count,
               std::vector<std::uint8_t> colors);
  /// Colour 0 for edges of g, colour 1 for edges of its complement.
  static EdgeColoring from_graph(const SimpleGraph& g);

  std::size_t vertex_count() const { return n_; }
  std::size_t color_count() const { return c_; }
  std::size_t color(Vertex u, Vertex v) const { return colors_[pair_index(n_, u, v)]; }
  /// Graph formed by the edges of one colour.
  SimpleGraph color_class(std::size_t color) const;

  /// Position of {u, v} in the lexicographic enumeration of pairs.
  static std::size_t pair_index(std::size_t n, Vertex u, Vertex v);

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t c_ = 1;
  std::vector<std::uint8_t> colors_;
};

inline std::size_t choose2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

SimpleGraph empty_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph complement(const SimpleGraph& g);
/// Parts occupy consecutive vertex ranges in the given order.
SimpleGraph complete_multipartite(std::span<const std::size_t> part_sizes);

/// Lexicographically smallest clique of the given size, if any.
std::optional<std::vector<Vertex>> find_clique(const SimpleGraph& g, std::size_t size);
bool has_clique(const SimpleGraph& g, std::size_t size);
std::optional<std::vector<Vertex>> find_independent_set(const SimpleGraph& g, std::size_t size);
bool has_independent_set(const SimpleGraph& g, std::size_t size);
std::size_t clique_number(const SimpleGraph& g);

/// Maximum edge count over all n-vertex graphs without K_{k+1}, by
/// enumerating every labelled graph. n <= 7.
std::size_t max_edges_without_clique_oracle(std::size_t n, std::size_t k);

inline constexpr std::size_t kCliqueOracleMaxVertices = 7;

}  // namespace ordo
