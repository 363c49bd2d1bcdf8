#include "ordo/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace ordo {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::NoParts: return "no parts";
    case ErrorCode::OracleLimit: return "oracle limit";
    case ErrorCode::SearchLimit: return "search limit";
    case ErrorCode::EnumerationLimit: return "enumeration limit";
    case ErrorCode::ArityMismatch: return "arity mismatch";
    case ErrorCode::BadLength: return "bad length";
    case ErrorCode::BadAlphabet: return "bad alphabet";
    case ErrorCode::WrapMismatch: return "wrap mismatch";
    case ErrorCode::RepeatedWindow: return "window repeated";
    case ErrorCode::NotATournament: return "not a tournament";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown";
}

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : rows_(vertex_count, VertexSet(vertex_count)) {}

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : SimpleGraph(vertex_count) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= vertex_count) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (!rows_[e.u].test(e.v)) {
      rows_[e.u].set(e.v);
      rows_[e.v].set(e.u);
      ++edge_count_;
    }
  }
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < rows_.size(); ++u) {
    for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

Digraph::Digraph(std::size_t vertex_count) : out_(vertex_count, VertexSet(vertex_count)) {}

Digraph::Digraph(std::size_t vertex_count, std::span<const Arc> arcs) : Digraph(vertex_count) {
  for (const Arc& a : arcs) {
    if (a.from >= vertex_count || a.to >= vertex_count) {
      throw Error(ErrorCode::InvalidArgument, "arc endpoint out of range");
    }
    if (!out_[a.from].test(a.to)) {
      out_[a.from].set(a.to);
      ++arc_count_;
    }
  }
}

std::size_t Digraph::loop_count() const {
  std::size_t loops = 0;
  for (Vertex u = 0; u < out_.size(); ++u) loops += out_[u].test(u) ? 1 : 0;
  return loops;
}

std::size_t Digraph::in_degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto& row : out_) d += row.test(v) ? 1 : 0;
  return d;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < out_.size(); ++u) {
    for (auto v = out_[u].find_first(); v != VertexSet::npos; v = out_[u].find_next(v)) {
      out.push_back({u, v});
    }
  }
  return out;
}

Tournament::Tournament(Digraph graph) : graph_(std::move(graph)) {
  const std::size_t n = graph_.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (graph_.has_arc(u, u)) {
      throw Error(ErrorCode::NotATournament, "loop at vertex " + std::to_string(u + 1));
    }
    for (Vertex v = u + 1; v < n; ++v) {
      if (graph_.has_arc(u, v) == graph_.has_arc(v, u)) {
        throw Error(ErrorCode::NotATournament,
                    "pair " + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                        " must carry exactly one arc");
      }
    }
  }
}

Tournament Tournament::transitive(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) arcs.push_back({u, v});
  return Tournament(Digraph(n, arcs));
}

Tournament Tournament::from_orientation(std::size_t n, std::uint64_t orientation) {
  if (choose2(n) > 64) {
    throw Error(ErrorCode::InvalidArgument, "orientation mask holds at most 64 pairs");
  }
  std::size_t bit = 0;
  return from_coin_flips(n, [&] { return ((orientation >> bit++) & 1U) != 0; });
}

Tournament Tournament::from_coin_flips(std::size_t n, const std::function<bool()>& bit) {
  std::vector<Arc> arcs;
  arcs.reserve(choose2(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bit()) {
        arcs.push_back({v, u});
      } else {
        arcs.push_back({u, v});
      }
    }
  }
  return Tournament(Digraph(n, arcs));
}

std::size_t EdgeColoring::pair_index(std::size_t n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  // pairs (0,1)..(0,n-1) come first, then (1,2).., so row u starts after
  // u*(n-1) - u*(u-1)/2 entries.
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

EdgeColoring::EdgeColoring(std::size_t vertex_count, std::size_t color_count,
                           const std::function<std::size_t(Vertex, Vertex)>& color_of)
    : n_(vertex_count), c_(color_count), colors_(choose2(vertex_count)) {
  if (c_ == 0 || c_ > 255) {
    throw Error(ErrorCode::InvalidArgument, "colour count must be in [1, 255]");
  }
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      const std::size_t c = color_of(u, v);
      if (c >= c_) throw Error(ErrorCode::InvalidArgument, "colour out of range");
      colors_[pair_index(n_, u, v)] = static_cast<std::uint8_t>(c);
    }
  }
}

EdgeColoring::EdgeColoring(std::size_t vertex_count, std::size_t color_count,
                           std::vector<std::uint8_t> colors)
    : n_(vertex_count), c_(color_count), colors_(std::move(colors)) {
  if (c_ == 0 || c_ > 255) {
    throw Error(ErrorCode::InvalidArgument, "colour count must be in [1, 255]");
  }
  if (colors_.size() != choose2(n_)) {
    throw Error(ErrorCode::InvalidArgument, "colouring must cover every pair exactly once");
  }
  if (std::any_of(colors_.begin(), colors_.end(), [&](auto c) { return c >= c_; })) {
    throw Error(ErrorCode::InvalidArgument, "colour out of range");
  }
}

EdgeColoring EdgeColoring::from_graph(const SimpleGraph& g) {
  return EdgeColoring(g.vertex_count(), 2,
                      [&](Vertex u, Vertex v) -> std::size_t { return g.adjacent(u, v) ? 0 : 1; });
}

SimpleGraph EdgeColoring::color_class(std::size_t color) const {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (this->color(u, v) == color) edges.emplace_back(u, v);
  return SimpleGraph(n_, edges);
}

SimpleGraph empty_graph(std::size_t n) { return SimpleGraph(n); }

SimpleGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(choose2(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return SimpleGraph(n, edges);
}

SimpleGraph complement(const SimpleGraph& g) {
  std::vector<Edge> edges;
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

SimpleGraph complete_multipartite(std::span<const std::size_t> part_sizes) {
  if (part_sizes.empty()) throw Error(ErrorCode::NoParts, "no parts");
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] == 0) throw Error(ErrorCode::InvalidArgument, "part sizes must be positive");
    part_of.insert(part_of.end(), part_sizes[p], p);
  }
  const std::size_t n = part_of.size();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

namespace {

// Greedy colouring of `candidates`; a clique uses at most one vertex per
// colour class. Stops counting once `enough` classes are found.
std::size_t colour_bound(const SimpleGraph& g, const VertexSet& candidates, std::size_t enough) {
  VertexSet uncoloured = candidates;
  std::size_t colours = 0;
  while (uncoloured.any() && colours < enough) {
    ++colours;
    VertexSet available = uncoloured;
    for (auto v = available.find_first(); v != VertexSet::npos; v = available.find_next(v)) {
      uncoloured.reset(v);
      available -= g.neighbours(v);
    }
  }
  return colours;
}

// Extends `chosen` with vertices from `candidates`, smallest first, so the
// first clique reached is the lexicographically smallest one.
bool extend_clique(const SimpleGraph& g, std::vector<Vertex>& chosen, const VertexSet& candidates,
                   std::size_t size) {
  if (chosen.size() == size) return true;
  const std::size_t need = size - chosen.size();
  if (candidates.count() < need) return false;
  if (need > 2 && colour_bound(g, candidates, need) < need) return false;
  for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
    chosen.push_back(v);
    VertexSet next = candidates & g.neighbours(v);
    // only later vertices, keeping each clique's vertices ascending
    for (auto w = next.find_first(); w != VertexSet::npos && w <= v; w = next.find_next(w)) {
      next.reset(w);
    }
    if (extend_clique(g, chosen, next, size)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_clique(const SimpleGraph& g, std::size_t size) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "clique size must be positive");
  if (size > g.vertex_count()) return std::nullopt;
  std::vector<Vertex> chosen;
  VertexSet all(g.vertex_count());
  all.set();
  if (extend_clique(g, chosen, all, size)) return chosen;
  return std::nullopt;
}

bool has_clique(const SimpleGraph& g, std::size_t size) { return find_clique(g, size).has_value(); }

std::optional<std::vector<Vertex>> find_independent_set(const SimpleGraph& g, std::size_t size) {
  return find_clique(complement(g), size);
}

bool has_independent_set(const SimpleGraph& g, std::size_t size) {
  return find_independent_set(g, size).has_value();
}

std::size_t clique_number(const SimpleGraph& g) {
  std::size_t best = g.vertex_count() > 0 ? 1 : 0;
  while (best < g.vertex_count() && has_clique(g, best + 1)) ++best;
  return best;
}

std::size_t max_edges_without_clique_oracle(std::size_t n, std::size_t k) {
  if (n > kCliqueOracleMaxVertices) {
    throw Error(ErrorCode::OracleLimit, "oracle limit: n must be at most 7");
  }
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const std::size_t pairs = choose2(n);
  const std::size_t forbidden = k + 1;
  if (forbidden > n) return pairs;

  std::vector<std::pair<unsigned, unsigned>> pair_list;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);

  // Every vertex subset of the forbidden size, as a bitmask.
  std::vector<unsigned> subsets;
  for (unsigned s = 0; s < (1U << n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == forbidden) subsets.push_back(s);

  std::size_t best = 0;
  std::array<unsigned, kCliqueOracleMaxVertices> adj{};
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    const auto edges = static_cast<std::size_t>(std::popcount(mask));
    if (edges <= best) continue;
    adj.fill(0);
    for (std::size_t p = 0; p < pairs; ++p) {
      if ((mask >> p) & 1U) {
        adj[pair_list[p].first] |= 1U << pair_list[p].second;
        adj[pair_list[p].second] |= 1U << pair_list[p].first;
      }
    }
    bool contains = false;
    for (unsigned s : subsets) {
      bool complete = true;
      for (unsigned u = 0; u < n && complete; ++u) {
        if (((s >> u) & 1U) && (adj[u] | (1U << u) | ~s) != ~0U) complete = false;
      }
      if (complete) {
        contains = true;
        break;
      }
    }
    if (!contains) best = edges;
  }
  return best;
}

}  // namespace ordo
