#include "ordo/ramsey.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>

namespace ordo::ramsey {

const char* to_string(BoundSource source) {
  switch (source) {
    case BoundSource::Exact: return "exact";
    case BoundSource::Recurrence: return "recurrence";
    case BoundSource::ErdosSzekeres: return "erdos_szekeres";
    case BoundSource::Table: return "table";
    case BoundSource::Witness: return "witness";
  }
  return "unknown";
}

MulticolorSpec::MulticolorSpec(std::vector<std::size_t> clique_sizes) : sizes_(std::move(clique_sizes)) {
  if (sizes_.empty()) throw Error(ErrorCode::InvalidArgument, "spec needs at least one colour");
  if (std::find(sizes_.begin(), sizes_.end(), 0) != sizes_.end()) {
    throw Error(ErrorCode::InvalidArgument, "clique sizes must be positive");
  }
}

std::optional<MonochromaticClique> verify_coloring(const EdgeColoring& coloring,
                                                   const MulticolorSpec& spec) {
  if (coloring.color_count() != spec.color_count()) {
    throw Error(ErrorCode::ArityMismatch,
                "colouring has " + std::to_string(coloring.color_count()) + " colours, spec has " +
                    std::to_string(spec.color_count()));
  }
  for (std::size_t c = 0; c < spec.color_count(); ++c) {
    if (auto clique = find_clique(coloring.color_class(c), spec[c])) {
      return MonochromaticClique{c, std::move(*clique)};
    }
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kMaxSearchVertices = 9;
using Mask = std::uint16_t;

class ColoringSearch {
 public:
  ColoringSearch(const MulticolorSpec& spec, std::size_t n) : spec_(spec), n_(n) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
    colors_.resize(pairs_.size());
    for (auto& rows : nbr_) rows.fill(0);
  }

  bool run() { return extend(0); }

  EdgeColoring coloring() const { return EdgeColoring(n_, spec_.color_count(), colors_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // True when colour c holds a clique of `size` vertices inside `mask`.
  bool clique_in(std::size_t c, Mask mask, std::size_t size) const {
    if (size == 0) return true;
    if (static_cast<std::size_t>(std::popcount(mask)) < size) return false;
    while (mask != 0) {
      const int v = std::countr_zero(mask);
      mask = static_cast<Mask>(mask & (mask - 1));
      if (clique_in(c, static_cast<Mask>(mask & nbr_[c][v]), size - 1)) return true;
    }
    return false;
  }

  bool closes_clique(std::size_t c, const Edge& e) const {
    const std::size_t k = spec_[c];
    if (k <= 2) return true;  // a single edge already is a K_2
    return clique_in(c, static_cast<Mask>(nbr_[c][e.u] & nbr_[c][e.v]), k - 2);
  }

  // Returns true when a complete colouring avoiding every forbidden clique
  // exists below this node; colors_ then holds it.
  bool extend(std::size_t index) {
    if (index == pairs_.size()) return true;
    const Edge& e = pairs_[index];
    for (std::size_t c = 0; c < spec_.color_count(); ++c) {
      if (closes_clique(c, e)) continue;
      ++nodes_;
      colors_[index] = static_cast<std::uint8_t>(c);
      nbr_[c][e.u] = static_cast<Mask>(nbr_[c][e.u] | (1U << e.v));
      nbr_[c][e.v] = static_cast<Mask>(nbr_[c][e.v] | (1U << e.u));
      if (extend(index + 1)) return true;
      nbr_[c][e.u] = static_cast<Mask>(nbr_[c][e.u] & ~(1U << e.v));
      nbr_[c][e.v] = static_cast<Mask>(nbr_[c][e.v] & ~(1U << e.u));
    }
    return false;
  }

  const MulticolorSpec& spec_;
  std::size_t n_;
  std::vector<Edge> pairs_;
  std::vector<std::uint8_t> colors_;
  std::array<std::array<Mask, kMaxSearchVertices>, 8> nbr_{};
  std::uint64_t nodes_ = 0;
};

}  // namespace

RamseyCheckResult exhaustive_ramsey_check(const MulticolorSpec& spec, std::size_t n) {
  if (choose2(n) > kSearchMaxPairs) {
    throw Error(ErrorCode::SearchLimit, "search limit: C(n,2) must be at most 36");
  }
  if (spec.color_count() > 8) {
    throw Error(ErrorCode::SearchLimit, "search limit: at most 8 colours");
  }
  RamseyCheckResult result;
  const auto& sizes = spec.sizes();
  // A lone vertex is a K_1 in every colour.
  if (n >= 1 && std::find(sizes.begin(), sizes.end(), 1) != sizes.end()) {
    result.holds = true;
    return result;
  }
  ColoringSearch search(spec, n);
  const bool found = search.run();
  result.nodes = search.nodes();
  result.holds = !found;
  if (found) result.counterexample = search.coloring();
  return result;
}

RamseyCheckResult exhaustive_ramsey_check(std::size_t m, std::size_t k, std::size_t n) {
  return exhaustive_ramsey_check(MulticolorSpec({m, k}), n);
}

namespace {

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt value = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    value *= n - r + i;
    value /= i;
  }
  return value;
}

BigInt factorial(std::size_t n) {
  BigInt value = 1;
  for (std::size_t i = 2; i <= n; ++i) value *= i;
  return value;
}

BigInt recurrence_memo(std::size_t m, std::size_t k, std::map<std::pair<std::size_t, std::size_t>, BigInt>& memo) {
  if (m > k) std::swap(m, k);
  if (m == 1) return 1;
  if (m == 2) return k;
  const auto key = std::make_pair(m, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const BigInt a = recurrence_memo(m - 1, k, memo);
  const BigInt b = recurrence_memo(m, k - 1, memo);
  BigInt value = a + b;
  if (a % 2 == 0 && b % 2 == 0) value -= 1;
  memo.emplace(key, value);
  return value;
}

}  // namespace

BigInt recurrence_upper_bound(std::size_t m, std::size_t k) {
  if (m == 0 || k == 0) throw Error(ErrorCode::InvalidArgument, "m and k must be positive");
  std::map<std::pair<std::size_t, std::size_t>, BigInt> memo;
  return recurrence_memo(m, k, memo);
}

BigInt erdos_szekeres_bound(std::size_t m, std::size_t k) {
  if (m == 0 || k == 0) throw Error(ErrorCode::InvalidArgument, "m and k must be positive");
  return binomial(m + k - 2, m - 1);
}

double diagonal_lower_bound(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  return std::exp2(static_cast<double>(k) / 2.0);
}

BigInt multicolor_multinomial_bound(const MulticolorSpec& spec) {
  std::size_t total = 0;
  BigInt denominator = 1;
  for (std::size_t entry : spec.sizes()) {
    total += entry - 1;
    denominator *= factorial(entry - 1);
  }
  return factorial(total) / denominator;
}

BigInt erdos_triangle_multicolor_bound(std::size_t r) {
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  // r!/j! for j = r down to 0 is 1, r, r(r-1), ...
  BigInt sum = 0;
  BigInt term = 1;
  for (std::size_t j = r + 1; j-- > 0;) {
    sum += term;
    term *= j;
  }
  return sum + 1;
}

SimpleGraph andrasfai_graph(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const std::size_t n = 3 * k - 1;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const std::size_t d = j - i;
      if (d >= k && d <= 2 * k - 1) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph(n, edges);
}

EdgeColoring k17_mod3_coloring() {
  return EdgeColoring(17, 3, [](Vertex u, Vertex v) -> std::size_t { return ((u + 1) + (v + 1)) % 3; });
}

namespace {

// Rows m = 3..10, columns k = m..10.
constexpr std::array<std::array<KnownRange, 8>, 8> kKnownTable{{
    {{{6, 6}, {9, 9}, {14, 14}, {18, 18}, {23, 23}, {28, 28}, {36, 36}, {40, 43}}},
    {{{}, {18, 18}, {25, 25}, {35, 41}, {49, 61}, {56, 84}, {73, 115}, {92, 149}}},
    {{{}, {}, {43, 49}, {58, 87}, {80, 143}, {101, 216}, {125, 316}, {143, 442}}},
    {{{}, {}, {}, {102, 165}, {113, 298}, {127, 495}, {169, 780}, {179, 1171}}},
    {{{}, {}, {}, {}, {205, 540}, {216, 1031}, {233, 1713}, {232, 2826}}},
    {{{}, {}, {}, {}, {}, {282, 1870}, {317, 3583}, {377, 6090}}},
    {{{}, {}, {}, {}, {}, {}, {565, 6588}, {580, 12677}}},
    {{{}, {}, {}, {}, {}, {}, {}, {798, 23556}}},
}};

}  // namespace

KnownRange known_value(std::size_t m, std::size_t k) {
  if (m > k) std::swap(m, k);
  if (m < 3 || k > 10) {
    throw Error(ErrorCode::InvalidArgument, "table covers 3 <= m, k <= 10");
  }
  return kKnownTable[m - 3][k - 3];
}

std::vector<RamseyBound> bounds(std::size_t m, std::size_t k) {
  if (m == 0 || k == 0) throw Error(ErrorCode::InvalidArgument, "m and k must be positive");
  std::vector<RamseyBound> out;
  const std::size_t lo = std::min(m, k);
  const std::size_t hi = std::max(m, k);
  if (lo <= 2) {
    const BigInt v = lo == 1 ? 1 : hi;
    out.push_back({m, k, v, v, BoundSource::Exact});
  }
  out.push_back({m, k, std::nullopt, recurrence_upper_bound(m, k), BoundSource::Recurrence});
  out.push_back({m, k, std::nullopt, erdos_szekeres_bound(m, k), BoundSource::ErdosSzekeres});
  if (lo >= 3 && hi <= 10) {
    const KnownRange r = known_value(m, k);
    out.push_back({m, k, BigInt(r.lo), BigInt(r.hi), BoundSource::Table});
  }
  if (lo == 3) {
    // The Andrasfai graph on 3(hi-1)-1 vertices has no triangle and no
    // independent set of size hi.
    out.push_back({m, k, BigInt(3 * (hi - 1)), std::nullopt, BoundSource::Witness});
  }
  return out;
}

}  // namespace ordo::ramsey
