#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordo/debruijn.hpp"

namespace ordo::debruijn {

struct SeedSearchOptions {
  /// Keep going after the first family.
  bool find_all = false;
  /// Extensions to try before giving up; 0 means unlimited.
  std::uint64_t node_budget = 0;
  std::optional<std::chrono::milliseconds> time_budget;
  /// Linear prefix; every cycle lexicographically before it is skipped.
  std::string resume_from;
  /// Called once per reported seed, in lexicographic order. Returning false
  /// stops the search.
  std::function<bool(const DeBruijnWord& seed, std::uint64_t nodes)> on_seed;
  /// Called every `progress_interval` nodes.
  std::function<void(std::uint64_t nodes)> on_progress;
  std::uint64_t progress_interval = std::uint64_t{1} << 24;
};

struct SeedSearchResult {
  /// One seed per family: the smallest member of its sigma-orbit, ascending.
  std::vector<DeBruijnWord> seeds;
  std::uint64_t nodes = 0;
  /// The whole search space was explored.
  bool exhausted = false;
  /// Stopped by the node or time budget.
  bool budget_exhausted = false;
  /// Linear prefix of the node being entered when the budget ran out; pass
  /// it as resume_from to continue.
  std::string frontier;
};

/// Depth-first search for seeds H_1 whose rotation family
/// {H_1, sigma(H_1), ..., sigma^(n-2)(H_1)} is pairwise arc-disjoint.
/// The cycle is grown from 0^m trying symbols in increasing order; every new
/// arc commits its n-1 sigma-images at once and is rejected if any image is
/// already taken, so each completed cycle is a valid seed.
SeedSearchResult rotation_seed_search(const DBParams& params, const SeedSearchOptions& options = {});

/// True when some reported seed shares its sigma-orbit with `word`.
bool contains_family_of(const std::vector<DeBruijnWord>& seeds, const DeBruijnWord& word);

/// One line of the JSON-lines search cache. Seed lines carry `seed`;
/// budget stops write a line carrying `checkpoint` instead.
struct CacheRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string seed;
  std::string checkpoint;
  std::string timestamp;
  std::uint64_t nodes_explored = 0;
};

std::string to_json_line(const CacheRecord& record);
CacheRecord parse_cache_line(const std::string& line);
void append_cache_record(const std::string& path, const CacheRecord& record);
/// Records for B(n, m) only; a missing file yields nothing.
std::vector<CacheRecord> load_cache(const std::string& path, const DBParams& params);
/// Lexicographically largest seed or checkpoint in `records`.
std::string resume_point(const std::vector<CacheRecord>& records);

std::string utc_timestamp();

}  // namespace ordo::debruijn
