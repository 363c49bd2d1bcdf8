#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordo/graph.hpp"

namespace ordo::ramsey {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundSource { Exact, Recurrence, ErdosSzekeres, Table, Witness };

const char* to_string(BoundSource source);

/// One known fact about R(m, k); an absent side is unknown.
struct RamseyBound {
  std::size_t m = 0;
  std::size_t k = 0;
  std::optional<BigInt> lower;
  std::optional<BigInt> upper;
  BoundSource source = BoundSource::Exact;
};

/// Clique size demanded in each colour, colour i <-> entry i.
class MulticolorSpec {
 public:
  explicit MulticolorSpec(std::vector<std::size_t> clique_sizes);

  std::size_t color_count() const { return sizes_.size(); }
  std::size_t operator[](std::size_t color) const { return sizes_[color]; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

 private:
  std::vector<std::size_t> sizes_;
};

struct MonochromaticClique {
  std::size_t color = 0;
  std::vector<Vertex> vertices;  // ascending

  friend bool operator==(const MonochromaticClique&, const MonochromaticClique&) = default;
};

/// Good colourings yield nullopt; otherwise the clique in the lowest colour,
/// lexicographically smallest within that colour.
std::optional<MonochromaticClique> verify_coloring(const EdgeColoring& coloring,
                                                   const MulticolorSpec& spec);

struct RamseyCheckResult {
  /// Every colouring of K_n contains a forbidden clique.
  bool holds = false;
  /// Set when `holds` is false: a colouring avoiding every forbidden clique.
  std::optional<EdgeColoring> counterexample;
  std::uint64_t nodes = 0;
};

/// Backtracking over the edges of K_n in lexicographic order, pruning a
/// branch as soon as the edge just coloured closes a forbidden clique.
/// Requires C(n, 2) <= 36.
RamseyCheckResult exhaustive_ramsey_check(const MulticolorSpec& spec, std::size_t n);
/// Two colours: red (colour 0) must avoid K_m, blue (colour 1) K_k.
RamseyCheckResult exhaustive_ramsey_check(std::size_t m, std::size_t k, std::size_t n);

inline constexpr std::size_t kSearchMaxPairs = 36;

/// Tightest integer upper bound from R(m,k) <= R(m-1,k) + R(m,k-1), lowered
/// by one when both terms are even, with R(1,k) = 1 and R(2,k) = k.
BigInt recurrence_upper_bound(std::size_t m, std::size_t k);

/// binom(m+k-2, m-1).
BigInt erdos_szekeres_bound(std::size_t m, std::size_t k);

/// 2^(k/2), a strict lower bound on R(k,k).
double diagonal_lower_bound(std::size_t k);

/// (sum k_i)! / prod k_i! for a spec holding the entries k_i + 1.
BigInt multicolor_multinomial_bound(const MulticolorSpec& spec);

/// sum_{j=0}^{r} r!/j! + 1, an upper bound on R(3,...,3) with r colours.
BigInt erdos_triangle_multicolor_bound(std::size_t r);

/// Circulant graph on 3k-1 vertices joining vertices whose cyclic distance
/// lies in {k, ..., 2k-1}. Triangle-free with independence number k.
SimpleGraph andrasfai_graph(std::size_t k);

/// K_17 on labels 1..17 (vertex v is label v+1), edge {i, j} coloured
/// (i + j) mod 3.
EdgeColoring k17_mod3_coloring();

inline constexpr std::size_t kK17Blue = 0;
inline constexpr std::size_t kK17Red = 1;
inline constexpr std::size_t kK17Green = 2;

/// Published range of R(m, k); lo == hi when exact.
struct KnownRange {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  bool exact() const { return lo == hi; }
  friend bool operator==(const KnownRange&, const KnownRange&) = default;
};

/// Table lookup for 3 <= min(m,k), max(m,k) <= 10, symmetric in (m, k).
KnownRange known_value(std::size_t m, std::size_t k);

/// Every bound this module can state for R(m, k).
std::vector<RamseyBound> bounds(std::size_t m, std::size_t k);

}  // namespace ordo::ramsey
