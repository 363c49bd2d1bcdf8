#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ordo/graph.hpp"

using namespace ordo;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ordo::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("complete graph edge counts") {
  CHECK(complete_graph(0).edge_count() == 0);
  CHECK(complete_graph(1).edge_count() == 0);
  CHECK(complete_graph(2).edge_count() == 1);
  CHECK(complete_graph(6).edge_count() == 15);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(5)) == empty_graph(5));
  CHECK(complement(empty_graph(4)) == complete_graph(4));

  // the pentagon's complement is the pentagram {i, i+2}
  std::vector<Edge> star;
  for (Vertex i = 0; i < 5; ++i) star.emplace_back(i, (i + 2) % 5);
  CHECK(complement(cycle_graph(5)) == SimpleGraph(5, star));
}

TEST_CASE("complete multipartite") {
  const std::vector<std::size_t> a{2, 3}, b{3, 2, 2}, ones{1, 1, 1, 1};
  CHECK(complete_multipartite(a).edge_count() == 6);
  CHECK(complete_multipartite(b).edge_count() == 16);
  CHECK(complete_multipartite(ones) == complete_graph(4));

  const auto g = complete_multipartite(a);
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(2, 4));

  CHECK(code_of([] { complete_multipartite(std::vector<std::size_t>{}); }) == ErrorCode::NoParts);
  CHECK(code_of([] { complete_multipartite(std::vector<std::size_t>{2, 0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cliques and independent sets") {
  CHECK(has_clique(complete_graph(5), 5));
  CHECK_FALSE(has_clique(cycle_graph(5), 3));
  CHECK_FALSE(has_clique(complete_multipartite(std::vector<std::size_t>{3, 2, 2}), 4));
  CHECK(has_independent_set(empty_graph(4), 4));
  CHECK_FALSE(has_independent_set(cycle_graph(5), 3));
  CHECK(oracle::has_independent_set(cycle_graph(5), 3) == false);
  CHECK(has_clique(empty_graph(3), 1));
  CHECK_FALSE(has_clique(empty_graph(0), 1));

  const auto k = find_clique(complete_multipartite(std::vector<std::size_t>{2, 2, 2}), 3);
  REQUIRE(k.has_value());
  CHECK(*k == std::vector<Vertex>{0, 2, 4});  // lexicographically first
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(empty_graph(0)) == 0);

  CHECK(code_of([] { has_clique(complete_graph(3), 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("random graphs agree with brute force") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 11;
    const auto g = oracle::random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    const auto h = complement(g);
    CHECK(complement(h) == g);
    CHECK(g.edge_count() + h.edge_count() == choose2(n));
    for (std::size_t s = 1; s <= std::min<std::size_t>(n, 5); ++s) {
      CHECK(has_independent_set(g, s) == has_clique(h, s));
      CHECK(has_clique(g, s) == oracle::has_clique(g, s));
      const auto w = find_clique(g, s);
      if (w) CHECK(oracle::pairwise(*w, [&](Vertex a, Vertex b) { return g.adjacent(a, b); }));
    }
  }
}

TEST_CASE("multipartite edge identity") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> parts(1 + rng() % 6);
    std::size_t n = 0, inside = 0;
    for (auto& p : parts) {
      p = 1 + rng() % 5;
      n += p;
      inside += choose2(p);
    }
    const auto g = complete_multipartite(parts);
    CHECK(g.vertex_count() == n);
    CHECK(g.edge_count() == choose2(n) - inside);
  }
}

TEST_CASE("edge set semantics") {
  const std::vector<Edge> edges{{0, 1}, {1, 0}, {2, 1}};
  const SimpleGraph g(3, edges);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(code_of([] { SimpleGraph(3, std::vector<Edge>{{1, 1}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { SimpleGraph(3, std::vector<Edge>{{1, 3}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("digraphs and tournaments") {
  const std::vector<Arc> arcs{{0, 0}, {0, 1}, {1, 0}, {0, 1}};
  const Digraph d(2, arcs);
  CHECK(d.arc_count() == 3);
  CHECK(d.loop_count() == 1);
  CHECK(d.in_degree(0) == 2);

  for (std::size_t n = 0; n <= 6; ++n) CHECK(Tournament::transitive(n).digraph().arc_count() == choose2(n));
  CHECK(code_of([&] { Tournament{d}; }) == ErrorCode::NotATournament);
  CHECK(code_of([] { Tournament(Digraph(3, std::vector<Arc>{{0, 1}, {1, 2}})); }) == ErrorCode::NotATournament);

  // pair order (0,1), (0,2), (1,2); bit 1 flips 0 -> 2
  const auto t = Tournament::from_orientation(3, 0b010);
  CHECK(t.beats(0, 1));
  CHECK(t.beats(2, 0));
  CHECK(t.beats(1, 2));
}

TEST_CASE("edge colourings") {
  const std::size_t n = 6;
  std::size_t expected = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) CHECK(EdgeColoring::pair_index(n, v, u) == expected++);

  const auto c = EdgeColoring::from_graph(cycle_graph(5));
  CHECK(c.color(0, 1) == 0);
  CHECK(c.color(0, 2) == 1);
  CHECK(c.color_class(0) == cycle_graph(5));
  CHECK(c.color_class(1) == complement(cycle_graph(5)));
  CHECK(code_of([] { EdgeColoring(3, 2, std::vector<std::uint8_t>{0, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { EdgeColoring(3, 2, std::vector<std::uint8_t>{0, 1, 2}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("clique-free edge maximum by brute force") {
  CHECK(max_edges_without_clique_oracle(5, 2) == 6);
  CHECK(max_edges_without_clique_oracle(7, 3) == 16);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(max_edges_without_clique_oracle(n, n) == choose2(n));
  CHECK(max_edges_without_clique_oracle(4, 1) == 0);
  CHECK(code_of([] { max_edges_without_clique_oracle(8, 3); }) == ErrorCode::OracleLimit);
}
