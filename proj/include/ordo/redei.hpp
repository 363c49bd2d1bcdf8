#pragma once

#include <cstdint>
#include <vector>

#include "ordo/graph.hpp"

namespace ordo::redei {

/// Vertices in path order; consecutive vertices are joined by an arc.
using DirectedPath = std::vector<Vertex>;

/// Directed Hamiltonian path of a tournament, built by inserting vertices
/// 0, 1, ... in turn. A vertex goes in front when it beats the current
/// head, otherwise at the first position p where path[p] -> r -> path[p+1],
/// otherwise at the end (the tail must beat it).
DirectedPath hamiltonian_path(const Tournament& t);

/// Same as above; `arc_queries` accumulates the number of beats() lookups.
DirectedPath hamiltonian_path(const Tournament& t, std::uint64_t& arc_queries);

/// True when `path` visits every vertex of `t` once along arcs of `t`.
bool is_hamiltonian_path(const Tournament& t, const DirectedPath& path);

/// Number of directed Hamiltonian paths, by enumerating all vertex
/// permutations. At most 8 vertices.
std::uint64_t count_hamiltonian_paths_oracle(const Tournament& t);

inline constexpr std::size_t kPathOracleMaxVertices = 8;

}  // namespace ordo::redei
