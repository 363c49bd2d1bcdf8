#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ordo/graph.hpp"

// Text formats use 1-based vertex labels; everything in memory is 0-based.
//
//   graph:    "n <count>"            then "u v" per edge
//   digraph:  "digraph n <count>"    then "u -> v" per arc
//   coloring: "n <count> c <colors>" then "u v color" per pair, colour 0-based
//
// Blank lines and lines starting with '#' are ignored.
namespace ordo::io {

SimpleGraph parse_graph(std::string_view text);
std::string write_graph(const SimpleGraph& g);

Digraph parse_digraph(std::string_view text);
std::string write_digraph(const Digraph& g);

/// Every pair must appear exactly once.
EdgeColoring parse_coloring(std::string_view text);
std::string write_coloring(const EdgeColoring& coloring);

struct DotOptions {
  std::string name = "G";
  /// Defaults to the 1-based vertex number.
  std::function<std::string(Vertex)> label;
  /// Drawn red and bold.
  std::vector<Edge> highlighted_edges;
  std::vector<Arc> highlighted_arcs;
};

std::string to_dot(const SimpleGraph& g, const DotOptions& options = {});
std::string to_dot(const Digraph& g, const DotOptions& options = {});
/// Edge colour names are taken from `palette`, indexed by colour.
std::string to_dot(const EdgeColoring& coloring, const std::vector<std::string>& palette,
                   const DotOptions& options = {});

std::string read_file(const std::string& path);

}  // namespace ordo::io
