#include "ordo/turan.hpp"

#include <string>

namespace ordo::turan {

TuranParams TuranParams::make(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::InvalidArgument,
                "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return {n, k, n / k, n % k};
}

std::uint64_t max_edges(std::size_t n, std::size_t k) {
  const TuranParams p = TuranParams::make(n, k);
  const std::uint64_t numerator = (std::uint64_t{p.n} * p.n - std::uint64_t{p.r} * p.r) * (p.k - 1);
  const std::uint64_t denominator = 2 * std::uint64_t{p.k};
  if (numerator % denominator != 0) {
    throw Error(ErrorCode::InvalidArgument, "Turan bound is not integral for n=" +
                                                std::to_string(n) + " k=" + std::to_string(k));
  }
  return numerator / denominator + std::uint64_t{p.r} * (p.r == 0 ? 0 : p.r - 1) / 2;
}

std::vector<std::size_t> extremal_part_sizes(std::size_t n, std::size_t k) {
  const TuranParams p = TuranParams::make(n, k);
  std::vector<std::size_t> parts(p.r, p.h + 1);
  parts.insert(parts.end(), p.k - p.r, p.h);
  return parts;
}

SimpleGraph extremal_graph(std::size_t n, std::size_t k) {
  return complete_multipartite(extremal_part_sizes(n, k));
}

}  // namespace ordo::turan
