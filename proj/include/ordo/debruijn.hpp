#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordo/graph.hpp"

namespace ordo::debruijn {

using BigInt = boost::multiprecision::cpp_int;
using Symbol = std::uint8_t;

/// B(n, m): alphabet 0..n-1, words of length m. Vertices are indexed by the
/// base-n value of their word (first letter most significant).
struct DBParams {
  std::size_t n = 2;
  std::size_t m = 1;

  /// Validates 2 <= n <= 36 and m >= 1, and that n^(m+1) fits comfortably.
  static DBParams make(std::size_t n, std::size_t m);

  /// n^m, the number of vertices and the length of a cyclic word.
  std::size_t order() const;
  /// n^(m-1).
  std::size_t suffix_space() const;

  Vertex successor(Vertex v, Symbol s) const { return (v % suffix_space()) * n + s; }

  friend bool operator==(const DBParams&, const DBParams&) = default;
};

char symbol_char(Symbol s);
/// Inverse of symbol_char; returns 255 for characters outside 0-9a-z.
Symbol symbol_value(char c);

/// m-letter label of a vertex, e.g. "12".
std::string vertex_label(const DBParams& p, Vertex v);

/// A directed Hamiltonian cycle of B(n, m) as a cyclic word of length n^m,
/// rotated so it begins with m zeros.
class DeBruijnWord {
 public:
  /// Validates and canonicalises a cyclic word. Throws BadLength,
  /// BadAlphabet or RepeatedWindow.
  static DeBruijnWord from_cyclic(const DBParams& params, std::vector<Symbol> letters);

  const DBParams& params() const { return params_; }
  const std::vector<Symbol>& letters() const { return letters_; }
  /// Vertex visited at each cyclic position; starts at vertex 0.
  std::vector<Vertex> vertices() const;
  /// Linear form of length n^m + m - 1 (the cycle followed by its first m-1 letters).
  std::string linear() const;

  friend bool operator==(const DeBruijnWord& a, const DeBruijnWord& b) {
    return a.params_ == b.params_ && a.letters_ == b.letters_;
  }
  friend bool operator<(const DeBruijnWord& a, const DeBruijnWord& b) {
    return a.letters_ < b.letters_;
  }

 private:
  DeBruijnWord(DBParams params, std::vector<Symbol> letters)
      : params_(params), letters_(std::move(letters)) {}

  DBParams params_;
  std::vector<Symbol> letters_;
};

/// Parses a linear word for the given parameters. Throws BadLength,
/// BadAlphabet, WrapMismatch or RepeatedWindow.
DeBruijnWord word_decode(std::string_view text, const DBParams& params);
/// Infers n from the largest letter and m from the length.
DeBruijnWord word_decode(std::string_view text);
std::string word_encode(const DeBruijnWord& word);

/// Arc u -> v iff the last m-1 letters of u are the first m-1 of v.
Digraph de_bruijn_graph(const DBParams& params);

/// Arcs of a cycle, sorted; one per cyclic position.
std::vector<Arc> arcs_of(const DeBruijnWord& word);
/// Index of an arc in [0, n^(m+1)): the base-n value of its (m+1)-letter word.
std::size_t arc_index(const DBParams& params, const Arc& arc);
/// "12->22".
std::string arc_label(const DBParams& params, const Arc& arc);

/// Martin's greedy construction: start from m zeros and keep appending the
/// largest symbol whose new length-m window has not occurred yet.
DeBruijnWord martin(const DBParams& params);

/// Every directed Hamiltonian cycle of B(n, m), canonical, in lexicographic
/// order. Requires n^m <= 27 and at most 10^6 cycles.
std::vector<DeBruijnWord> enumerate_hamiltonian_cycles(const DBParams& params);

inline constexpr std::size_t kEnumerationMaxOrder = 27;
inline constexpr std::uint64_t kEnumerationMaxCycles = 1'000'000;

/// (n!)^(n^(m-1)) / n^m.
BigInt count_hamiltonian_cycles(const DBParams& params);

/// Fixes 0, maps i -> i+1 for 1 <= i <= n-2 and n-1 -> 1.
Symbol sigma_symbol(std::size_t n, Symbol s);
/// Letterwise sigma, re-canonicalised.
DeBruijnWord sigma(const DeBruijnWord& word);
/// seed, sigma(seed), ..., sigma^(n-2)(seed).
std::vector<DeBruijnWord> rotation_family(const DeBruijnWord& seed);
/// True when words[i+1] == sigma(words[i]) for every i.
bool is_sigma_generated(std::span<const DeBruijnWord> words);
/// Smallest member of the sigma-orbit of `word`.
DeBruijnWord orbit_representative(const DeBruijnWord& word);

struct DisjointnessReport {
  bool disjoint = true;
  /// First conflicting pair (first < second) when not disjoint.
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<Arc> shared;
};

/// All words must share parameters.
DisjointnessReport pairwise_arc_disjoint(std::span<const DeBruijnWord> words);

/// n - 1: each vertex a^m has only n - 1 usable out-arcs.
std::size_t max_disjoint_upper_bound(std::size_t n);

struct MaxDisjointResult {
  std::size_t size = 0;
  std::vector<DeBruijnWord> witness;
};

/// Largest pairwise arc-disjoint set of Hamiltonian cycles, by maximum clique
/// over the enumerated cycles. Same limits as enumerate_hamiltonian_cycles.
MaxDisjointResult max_disjoint_exact(const DBParams& params);

/// Underlying simple graph of B(n, m): loops dropped, orientation forgotten.
SimpleGraph flower_graph(const DBParams& params);
/// flower_graph as DOT, vertices labelled by their words.
std::string export_flower(const DBParams& params);

}  // namespace ordo::debruijn
