#include "ordo/seed_search.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>

#include "json.hpp"

namespace ordo::debruijn {

namespace {

class SeedSearch {
 public:
  SeedSearch(const DBParams& params, const SeedSearchOptions& options)
      : p_(params),
        options_(options),
        len_(params.order()),
        images_(params.n - 1),
        visited_(len_, 0),
        used_(len_ * params.n, 0),
        alive_(len_ * params.n, 0),
        in_alive_(len_, 0),
        out_alive_(len_, 0),
        letters_(len_ + params.m - 1, 0),
        start_(std::chrono::steady_clock::now()) {
    build_orbit_table();
    for (char c : options.resume_from) resume_.push_back(symbol_value(c));
  }

  SeedSearchResult run() {
    if (!std::all_of(resume_.begin(), resume_.begin() + static_cast<std::ptrdiff_t>(std::min(resume_.size(), p_.m)),
                     [](Symbol s) { return s == 0; })) {
      throw Error(ErrorCode::InvalidArgument, "resume prefix must start with m zeros");
    }
    if (std::any_of(resume_.begin(), resume_.end(), [&](Symbol s) { return s >= p_.n; })) {
      throw Error(ErrorCode::BadAlphabet, "resume prefix uses letters outside the alphabet");
    }
    // Every non-loop arc starts alive; vertex 0 is the path's first vertex.
    for (Vertex v = 0; v < len_; ++v) {
      for (Symbol s = 0; s < p_.n; ++s) {
        const Vertex w = p_.successor(v, s);
        if (w == v) continue;
        alive_[v * p_.n + s] = 1;
        ++out_alive_[v];
        ++in_alive_[w];
      }
    }
    visited_[0] = 1;
    const bool finished = extend(0, 1, !resume_.empty());
    result_.exhausted = finished && !stopped_;
    return std::move(result_);
  }

 private:
  void build_orbit_table() {
    const std::size_t arcs = len_ * p_.n;
    orbit_.resize(arcs * images_);
    std::vector<Symbol> digits(p_.m + 1);
    for (std::size_t a = 0; a < arcs; ++a) {
      std::size_t rest = a;
      for (std::size_t i = p_.m + 1; i-- > 0;) {
        digits[i] = static_cast<Symbol>(rest % p_.n);
        rest /= p_.n;
      }
      for (std::size_t j = 0; j < images_; ++j) {
        std::size_t idx = 0;
        for (Symbol d : digits) idx = idx * p_.n + d;
        orbit_[a * images_ + j] = idx;
        for (Symbol& d : digits) d = sigma_symbol(p_.n, d);
      }
    }
  }

  Vertex arc_target(std::size_t arc) const { return p_.successor(arc / p_.n, static_cast<Symbol>(arc % p_.n)); }

  // Marks the arc and all its sigma-images, or nothing if any is taken.
  bool commit(std::size_t arc) {
    const std::size_t* img = &orbit_[arc * images_];
    for (std::size_t j = 0; j < images_; ++j) {
      if (used_[img[j]]) {
        for (std::size_t i = 0; i < j; ++i) used_[img[i]] = 0;
        return false;
      }
      used_[img[j]] = 1;
    }
    return true;
  }

  void release(std::size_t arc) {
    const std::size_t* img = &orbit_[arc * images_];
    for (std::size_t j = 0; j < images_; ++j) used_[img[j]] = 0;
  }

  // An arc is alive while H_1 could still use it: its orbit is free, its tail
  // is unvisited or the path's end, its head unvisited or the start vertex.
  // Killing an arc may leave some vertex without a way in or out.
  bool kill(std::size_t arc, Vertex end) {
    if (!alive_[arc]) return true;
    alive_[arc] = 0;
    trail_.push_back(arc);
    const Vertex from = arc / p_.n;
    const Vertex to = arc_target(arc);
    bool ok = true;
    if (--out_alive_[from] == 0 && (!visited_[from] || from == end)) ok = false;
    if (--in_alive_[to] == 0 && (!visited_[to] || to == 0)) ok = false;
    return ok;
  }

  void revive_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t arc = trail_.back();
      trail_.pop_back();
      alive_[arc] = 1;
      ++out_alive_[arc / p_.n];
      ++in_alive_[arc_target(arc)];
    }
  }

  // Applies the step end -> w (w already marked visited, orbit committed).
  bool propagate(Vertex end, Vertex w, std::size_t arc) {
    bool ok = true;
    const std::size_t* img = &orbit_[arc * images_];
    for (std::size_t j = 0; j < images_; ++j) ok &= kill(img[j], w);
    for (Symbol s = 0; s < p_.n; ++s) ok &= kill(end * p_.n + s, w);
    const Vertex base = w / p_.n;
    const Symbol last = static_cast<Symbol>(w % p_.n);
    for (std::size_t t = 0; t < p_.n; ++t) {
      const Vertex pred = t * p_.suffix_space() + base;
      ok &= kill(pred * p_.n + last, w);
    }
    return ok;
  }

  bool out_of_budget(std::size_t depth) {
    if (options_.node_budget != 0 && result_.nodes >= options_.node_budget) {
      stop_at(depth);
      return true;
    }
    if (options_.time_budget && (result_.nodes & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() - start_ >= *options_.time_budget) {
      stop_at(depth);
      return true;
    }
    return false;
  }

  void stop_at(std::size_t depth) {
    stopped_ = true;
    result_.budget_exhausted = true;
    result_.frontier.clear();
    for (std::size_t i = 0; i < p_.m - 1 + depth; ++i) result_.frontier.push_back(symbol_char(letters_[i]));
  }

  void report() {
    std::vector<Symbol> cyclic(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(len_));
    DeBruijnWord seed = DeBruijnWord::from_cyclic(p_, std::move(cyclic));
    // Every member of a family is itself a seed of the same family, and the
    // search meets them in lexicographic order, so only the smallest one is new.
    if (!(orbit_representative(seed) == seed)) return;
    bool keep_going = options_.find_all;
    if (options_.on_seed) keep_going = options_.on_seed(seed, result_.nodes) && keep_going;
    result_.seeds.push_back(std::move(seed));
    if (!keep_going) done_ = true;
  }

  // Returns false when the search must unwind (budget or stop request).
  bool extend(Vertex v, std::size_t depth, bool on_resume_path) {
    ++result_.nodes;
    if (options_.on_progress && result_.nodes % options_.progress_interval == 0) {
      options_.on_progress(result_.nodes);
    }
    if (out_of_budget(depth)) return false;

    const std::size_t index = p_.m - 1 + depth;  // letter chosen at this depth
    if (depth == len_) {
      // closing arc v -> 0^m exists iff v ends in m-1 zeros
      if (v % p_.suffix_space() != 0) return true;
      const std::size_t arc = v * p_.n;
      if (commit(arc)) {
        report();
        release(arc);
      }
      return !done_;
    }

    Symbol first = 0;
    if (on_resume_path && index < resume_.size()) first = resume_[index];
    for (Symbol s = first; s < p_.n; ++s) {
      const std::size_t arc = v * p_.n + s;
      if (!alive_[arc]) continue;
      const Vertex w = p_.successor(v, s);
      if (visited_[w]) continue;
      if (!commit(arc)) continue;
      visited_[w] = 1;
      letters_[index] = s;
      const std::size_t mark = trail_.size();
      bool keep_going = true;
      if (propagate(v, w, arc)) {
        keep_going = extend(w, depth + 1, on_resume_path && index < resume_.size() && s == first);
      }
      revive_to(mark);
      visited_[w] = 0;
      release(arc);
      if (!keep_going) return false;
    }
    return true;
  }

  DBParams p_;
  const SeedSearchOptions& options_;
  std::size_t len_;
  std::size_t images_;
  std::vector<std::size_t> orbit_;
  std::vector<char> visited_;
  std::vector<char> used_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> in_alive_;
  std::vector<std::uint32_t> out_alive_;
  std::vector<std::size_t> trail_;
  std::vector<Symbol> letters_;
  std::vector<Symbol> resume_;
  std::chrono::steady_clock::time_point start_;
  SeedSearchResult result_;
  bool stopped_ = false;
  bool done_ = false;
};

}  // namespace

SeedSearchResult rotation_seed_search(const DBParams& params, const SeedSearchOptions& options) {
  return SeedSearch(params, options).run();
}

bool contains_family_of(const std::vector<DeBruijnWord>& seeds, const DeBruijnWord& word) {
  const DeBruijnWord rep = orbit_representative(word);
  return std::find(seeds.begin(), seeds.end(), rep) != seeds.end();
}

std::string to_json_line(const CacheRecord& record) {
  nlohmann::ordered_json j;
  j["n"] = record.n;
  j["m"] = record.m;
  if (!record.seed.empty()) j["seed"] = record.seed;
  if (!record.checkpoint.empty()) j["checkpoint"] = record.checkpoint;
  j["timestamp"] = record.timestamp;
  j["nodes_explored"] = record.nodes_explored;
  return j.dump();
}

CacheRecord parse_cache_line(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    CacheRecord r;
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.seed = j.value("seed", std::string{});
    r.checkpoint = j.value("checkpoint", std::string{});
    r.timestamp = j.value("timestamp", std::string{});
    r.nodes_explored = j.value("nodes_explored", std::uint64_t{0});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad cache line: ") + e.what());
  }
}

void append_cache_record(const std::string& path, const CacheRecord& record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cache " + path);
  out << to_json_line(record) << '\n';
}

std::vector<CacheRecord> load_cache(const std::string& path, const DBParams& params) {
  std::vector<CacheRecord> records;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CacheRecord r = parse_cache_line(line);
    if (r.n == params.n && r.m == params.m) records.push_back(std::move(r));
  }
  return records;
}

std::string resume_point(const std::vector<CacheRecord>& records) {
  std::string best;
  for (const auto& r : records) {
    best = std::max({best, r.seed, r.checkpoint});
  }
  return best;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ordo::debruijn
