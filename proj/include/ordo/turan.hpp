#pragma once

#include <cstdint>
#include <vector>

#include "ordo/graph.hpp"

namespace ordo::turan {

/// n = h*k + r with 0 <= r < k.
struct TuranParams {
  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t h = 0;
  std::size_t r = 0;

  /// Requires 1 <= k <= n.
  static TuranParams make(std::size_t n, std::size_t k);
};

/// Most edges an n-vertex simple graph can have without a K_{k+1}:
/// (n^2 - r^2)(k-1) / (2k) + r(r-1)/2, evaluated exactly.
std::uint64_t max_edges(std::size_t n, std::size_t k);

/// Part sizes of the extremal graph: r parts of h+1, then k-r parts of h.
std::vector<std::size_t> extremal_part_sizes(std::size_t n, std::size_t k);

/// Complete multipartite graph on extremal_part_sizes(n, k).
SimpleGraph extremal_graph(std::size_t n, std::size_t k);

}  // namespace ordo::turan
