#include "doctest.h"
#include "ordo/io.hpp"

using namespace ordo;

namespace {

std::string parse_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("graph format") {
  const auto g = io::parse_graph("# pentagon\nn 5\n1 2\n2 3\n\n3 4\n4 5\n5 1\n");
  CHECK(g == cycle_graph(5));
  CHECK(io::write_graph(g) == "n 5\n1 2\n1 5\n2 3\n3 4\n4 5\n");
  CHECK(io::parse_graph(io::write_graph(complete_graph(4))) == complete_graph(4));

  CHECK(parse_error([] { io::parse_graph(""); }) == "empty graph file");
  CHECK(parse_error([] { io::parse_graph("n 3\n1 4\n"); }) == "line 2: vertex 4 outside 1..3");
  CHECK(parse_error([] { io::parse_graph("n 3\n0 1\n"); }) == "line 2: vertex 0 outside 1..3");
  CHECK(parse_error([] { io::parse_graph("n 3\n2 2\n"); }).starts_with("line 2: loops"));
  CHECK(parse_error([] { io::parse_graph("vertices 3\n"); }).starts_with("line 1:"));
  CHECK(parse_error([] { io::parse_graph("n x\n"); }).starts_with("line 1: expected a number"));
}

TEST_CASE("digraph format") {
  const auto d = io::parse_digraph("digraph n 3\n1 -> 2\n2 -> 3\n3 -> 1\n3 -> 3\n");
  CHECK(d.arc_count() == 4);
  CHECK(d.has_arc(2, 0));
  CHECK(d.loop_count() == 1);
  CHECK(io::write_digraph(d) == "digraph n 3\n1 -> 2\n2 -> 3\n3 -> 1\n3 -> 3\n");
  CHECK(parse_error([] { io::parse_digraph("digraph n 3\n1 2\n"); }) == "line 2: expected 'u -> v'");
  CHECK(parse_error([] { io::parse_digraph("n 3\n"); }).starts_with("line 1:"));
}

TEST_CASE("colouring format") {
  const std::string text = "n 3 c 2\n1 2 0\n1 3 1\n2 3 1\n";
  const auto c = io::parse_coloring(text);
  CHECK(c.color_count() == 2);
  CHECK(c.color(0, 1) == 0);
  CHECK(c.color(2, 1) == 1);
  CHECK(io::write_coloring(c) == text);

  CHECK(parse_error([] { io::parse_coloring("n 3 c 2\n1 2 0\n2 1 1\n1 3 0\n2 3 0\n"); }) ==
        "line 3: pair coloured twice");
  CHECK(parse_error([] { io::parse_coloring("n 3 c 2\n1 2 0\n1 3 0\n"); }) == "colouring leaves some pair uncoloured");
  CHECK(parse_error([] { io::parse_coloring("n 3 c 2\n1 2 2\n"); }) == "line 2: colour 2 outside 0..1");
  CHECK(parse_error([] { io::parse_coloring("n 3 c 0\n"); }).starts_with("line 1:"));
}

TEST_CASE("dot export") {
  io::DotOptions options;
  options.name = "P";
  options.highlighted_edges = {{0, 1}};
  const auto dot = io::to_dot(complete_graph(3), options);
  CHECK(dot.starts_with("graph \"P\" {\n"));
  CHECK(dot.find("\"1\" -- \"2\" [color=red, penwidth=2];") != std::string::npos);
  CHECK(dot.find("\"1\" -- \"3\";") != std::string::npos);

  io::DotOptions arcs;
  arcs.highlighted_arcs = {{1, 0}};
  arcs.label = [](Vertex v) { return std::string(1, static_cast<char>('a' + v)); };
  const auto ddot = io::to_dot(Tournament::from_orientation(2, 1).digraph(), arcs);
  CHECK(ddot.find("\"b\" -> \"a\" [color=red, penwidth=2];") != std::string::npos);

  const auto cdot = io::to_dot(EdgeColoring::from_graph(complete_graph(2)), {"blue"});
  CHECK(cdot.find("\"1\" -- \"2\" [color=blue];") != std::string::npos);
}
