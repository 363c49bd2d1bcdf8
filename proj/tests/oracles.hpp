#pragma once

// Brute-force reference implementations used only by the tests. None of
// them call into the search code they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ordo/graph.hpp"

namespace oracle {

using ordo::SimpleGraph;
using ordo::Vertex;

// Calls `visit` with every `size`-subset of 0..n-1 (ascending).
inline void for_each_subset(std::size_t n, std::size_t size, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (size > n) return;
  std::vector<Vertex> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    if (!visit(pick)) return;
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline bool pairwise(const std::vector<Vertex>& vs, const std::function<bool(Vertex, Vertex)>& rel) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!rel(vs[i], vs[j])) return false;
  return true;
}

inline bool has_clique(const SimpleGraph& g, std::size_t size) {
  bool found = false;
  for_each_subset(g.vertex_count(), size, [&](const std::vector<Vertex>& vs) {
    found = pairwise(vs, [&](Vertex a, Vertex b) { return g.adjacent(a, b); });
    return !found;
  });
  return found;
}

inline bool has_independent_set(const SimpleGraph& g, std::size_t size) {
  bool found = false;
  for_each_subset(g.vertex_count(), size, [&](const std::vector<Vertex>& vs) {
    found = pairwise(vs, [&](Vertex a, Vertex b) { return !g.adjacent(a, b); });
    return !found;
  });
  return found;
}

inline SimpleGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<ordo::Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

// Greedy prefer-largest De Bruijn string over "0..n-1", straight from the
// rule: append the largest letter whose trailing m-window is new.
inline std::string greedy_prefer_largest(std::size_t n, std::size_t m) {
  std::string s(m, '0');
  std::set<std::string> seen{s};
  while (true) {
    bool extended = false;
    for (std::size_t d = n; d-- > 0;) {
      const std::string window = s.substr(s.size() - m + 1) + static_cast<char>('0' + d);
      if (!seen.contains(window)) {
        seen.insert(window);
        s += static_cast<char>('0' + d);
        extended = true;
        break;
      }
    }
    if (!extended) return s;
  }
}

// All De Bruijn strings of B(n, m) in linear form starting with m zeros,
// found by growing strings letter by letter and checking windows directly.
inline std::set<std::string> de_bruijn_strings(std::size_t n, std::size_t m) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  std::set<std::string> out;
  std::set<std::string> seen;
  std::string s(m, '0');
  seen.insert(s);
  std::function<void()> grow = [&] {
    if (seen.size() == total) {
      // closes into a cycle iff it ends where it started
      if (s.substr(s.size() - (m - 1)) == s.substr(0, m - 1)) out.insert(s);
      return;
    }
    for (std::size_t d = 0; d < n; ++d) {
      const std::string window = s.substr(s.size() - m + 1) + static_cast<char>('0' + d);
      if (seen.contains(window)) continue;
      seen.insert(window);
      s += static_cast<char>('0' + d);
      grow();
      s.pop_back();
      seen.erase(window);
    }
  };
  grow();
  return out;
}

// (m+1)-letter windows of a linear De Bruijn string, i.e. its arcs.
inline std::set<std::string> arc_windows(const std::string& linear, std::size_t m) {
  std::set<std::string> arcs;
  const std::string core = linear.substr(0, linear.size() - (m - 1));
  const std::string wrapped = core + core.substr(0, m);
  for (std::size_t i = 0; i < core.size(); ++i) arcs.insert(wrapped.substr(i, m + 1));
  return arcs;
}

}  // namespace oracle
