#include "ordo/redei.hpp"

#include <algorithm>
#include <numeric>

namespace ordo::redei {

DirectedPath hamiltonian_path(const Tournament& t) {
  std::uint64_t ignored = 0;
  return hamiltonian_path(t, ignored);
}

DirectedPath hamiltonian_path(const Tournament& t, std::uint64_t& arc_queries) {
  auto beats = [&](Vertex u, Vertex v) {
    ++arc_queries;
    return t.beats(u, v);
  };

  DirectedPath path;
  path.reserve(t.vertex_count());
  for (Vertex r = 0; r < t.vertex_count(); ++r) {
    if (path.empty() || beats(r, path.front())) {
      path.insert(path.begin(), r);
      continue;
    }
    // path.front() -> r holds here. Walk while the current vertex beats r;
    // the first vertex that r beats is the insertion point. If none, the
    // tail beats r and r is appended.
    std::size_t pos = 1;
    while (pos < path.size() && !beats(r, path[pos])) ++pos;
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(pos), r);
  }
  return path;
}

bool is_hamiltonian_path(const Tournament& t, const DirectedPath& path) {
  const std::size_t n = t.vertex_count();
  if (path.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : path) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!t.beats(path[i], path[i + 1])) return false;
  }
  return true;
}

std::uint64_t count_hamiltonian_paths_oracle(const Tournament& t) {
  const std::size_t n = t.vertex_count();
  if (n > kPathOracleMaxVertices) {
    throw Error(ErrorCode::OracleLimit, "oracle limit: at most 8 vertices");
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = t.beats(perm[i], perm[i + 1]);
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace ordo::redei
