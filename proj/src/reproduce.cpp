#include "ordo/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ordo/debruijn.hpp"
#include "ordo/ramsey.hpp"
#include "ordo/redei.hpp"
#include "ordo/seed_search.hpp"
#include "ordo/turan.hpp"

namespace ordo::reproduce {

namespace {

using Clock = std::chrono::steady_clock;
namespace db = ordo::debruijn;

struct OutOfTime {};

class Deadline {
 public:
  Deadline(Clock::time_point start, std::optional<std::chrono::milliseconds> budget) {
    if (budget) at_ = start + *budget;
  }
  bool passed() const { return at_ && Clock::now() >= *at_; }
  std::optional<std::chrono::milliseconds> remaining() const {
    if (!at_) return std::nullopt;
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*at_ - Clock::now());
    return std::max(left, std::chrono::milliseconds{0});
  }

 private:
  std::optional<Clock::time_point> at_;
};

struct Check {
  std::string claim;
  std::string expected;
  std::function<std::string(const Deadline&)> compute;
  bool slow = false;     // left out by --quick
  bool flagged = false;  // published value known to be inconsistent
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string labels(const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(std::to_string(v + 1));
  return "{" + join(out, ",") + "}";
}

std::string parts(const std::vector<std::size_t>& sizes) {
  std::vector<std::string> out;
  for (std::size_t s : sizes) out.push_back(std::to_string(s));
  return "K_{" + join(out, ",") + "}";
}

std::string sorted_words(std::vector<std::string> words) {
  std::sort(words.begin(), words.end());
  return join(words);
}

std::string linear_words(const std::vector<db::DeBruijnWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.linear());
  return sorted_words(std::move(out));
}

std::string digraph_census(const Digraph& g) {
  return std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.arc_count()) + " arcs, " +
         std::to_string(g.loop_count()) + " loops";
}

std::string shared_arcs(const std::vector<std::string>& words) {
  std::vector<db::DeBruijnWord> decoded;
  for (const auto& w : words) decoded.push_back(db::word_decode(w));
  const auto report = db::pairwise_arc_disjoint(decoded);
  if (report.disjoint) return "disjoint";
  std::vector<std::string> arcs;
  for (const Arc& a : report.shared) arcs.push_back(db::arc_label(decoded.front().params(), a));
  return "{" + join(arcs, ", ") + "}";
}

std::string family_status(const db::DeBruijnWord& seed) {
  const auto family = db::rotation_family(seed);
  return db::pairwise_arc_disjoint(family).disjoint ? "disjoint" : "not disjoint";
}

// Searches B(n, m) until every target family has been seen; reports the
// targets whose family was found, in the given order.
std::string seed_search(std::size_t n, std::size_t m, const std::vector<std::string>& targets,
                        const Deadline& deadline) {
  const auto params = db::DBParams::make(n, m);
  std::set<std::string> wanted;
  for (const auto& t : targets) wanted.insert(db::orbit_representative(db::word_decode(t, params)).linear());
  std::set<std::string> seen;
  db::SeedSearchOptions options;
  options.find_all = true;
  options.time_budget = deadline.remaining();
  options.on_seed = [&](const db::DeBruijnWord& seed, std::uint64_t) {
    if (wanted.contains(seed.linear())) seen.insert(seed.linear());
    return seen.size() < wanted.size();
  };
  const auto result = db::rotation_seed_search(params, options);
  if (result.budget_exhausted) throw OutOfTime{};
  std::vector<std::string> found;
  for (const auto& t : targets) {
    if (db::contains_family_of(result.seeds, db::word_decode(t, params))) found.push_back(t);
  }
  return found.empty() ? "none" : join(found);
}

std::vector<Check> checks() {
  std::vector<Check> c;
  const auto add = [&](std::string claim, std::string expected, std::function<std::string(const Deadline&)> f,
                       bool slow = false, bool flagged = false) {
    c.push_back({std::move(claim), std::move(expected), std::move(f), slow, flagged});
  };

  // graph basics
  add("K_2 edge count", "1", [](auto&) { return std::to_string(complete_graph(2).edge_count()); });
  add("C5 has no triangle", "false", [](auto&) { return yes_no(has_clique(cycle_graph(5), 3)); });
  add("K_{3,2,2} has no K_4", "false", [](auto&) {
    const std::vector<std::size_t> sizes{3, 2, 2};
    return yes_no(has_clique(complete_multipartite(sizes), 4));
  });

  // tournaments
  add("every tournament on <= 5 vertices has a Hamiltonian path", "true", [](auto&) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << choose2(n)); ++mask) {
        const auto t = Tournament::from_orientation(n, mask);
        if (!redei::is_hamiltonian_path(t, redei::hamiltonian_path(t))) return yes_no(false);
        if (redei::count_hamiltonian_paths_oracle(t) == 0) return yes_no(false);
      }
    }
    return yes_no(true);
  });

  // Ramsey
  add("C5 colouring of K_5 has no monochromatic triangle", "good", [](auto&) {
    const auto w = ramsey::verify_coloring(EdgeColoring::from_graph(cycle_graph(5)), ramsey::MulticolorSpec({3, 3}));
    return std::string(w ? "witness" : "good");
  });
  add("every 2-colouring of K_5 has a monochromatic triangle", "false",
      [](auto&) { return yes_no(ramsey::exhaustive_ramsey_check(3, 3, 5).holds); });
  add("R(3,3) = 6: every 2-colouring of K_6 has a monochromatic triangle", "true",
      [](auto&) { return yes_no(ramsey::exhaustive_ramsey_check(3, 3, 6).holds); });
  add("R(3,4) = 9: every 2-colouring of K_9 has red K_3 or blue K_4", "true",
      [](auto&) { return yes_no(ramsey::exhaustive_ramsey_check(3, 4, 9).holds); });
  add("recurrence bound R(3,4) <= 9", "9", [](auto&) { return ramsey::recurrence_upper_bound(3, 4).str(); });
  add("R(3,3,3) multicolour bound for 2 colours", "6",
      [](auto&) { return ramsey::erdos_triangle_multicolor_bound(2).str(); });
  add("R(3,3,3) multicolour bound for 3 colours", "17",
      [](auto&) { return ramsey::erdos_triangle_multicolor_bound(3).str(); });
  for (const auto& [m, k, text] : std::vector<std::tuple<std::size_t, std::size_t, std::string>>{
           {3, 3, "6"}, {3, 9, "36"}, {4, 4, "18"}, {5, 5, "43..49"}}) {
    add("table R(" + std::to_string(m) + "," + std::to_string(k) + ")", text, [m, k](auto&) {
      const auto r = ramsey::known_value(m, k);
      return r.exact() ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
    });
  }
  add("H_8: vertices, edges, triangle-free, independence number", "8 12 false 3", [](auto&) {
    const auto h = ramsey::andrasfai_graph(3);
    return std::to_string(h.vertex_count()) + " " + std::to_string(h.edge_count()) + " " +
           yes_no(has_clique(h, 3)) + " " + std::to_string(clique_number(complement(h)));
  });
  const std::vector<std::string> k17_names{"blue", "red", "green"};
  for (const auto& [color, triangle] : std::vector<std::pair<std::size_t, std::vector<Vertex>>>{
           {ramsey::kK17Blue, {2, 8, 14}}, {ramsey::kK17Red, {4, 10, 16}}, {ramsey::kK17Green, {3, 9, 15}}}) {
    add("K17 triangle " + labels(triangle) + " colour", k17_names[color], [triangle, k17_names](auto&) {
      const auto k17 = ramsey::k17_mod3_coloring();
      const std::size_t c = k17.color(triangle[0], triangle[1]);
      const bool mono = k17.color(triangle[0], triangle[2]) == c && k17.color(triangle[1], triangle[2]) == c;
      return mono ? k17_names[c] : std::string("mixed");
    });
  }

  // Turan
  for (const auto& [n, k, edges, shape] : std::vector<std::tuple<std::size_t, std::size_t, std::string, std::string>>{
           {5, 2, "6", "K_{3,2}"}, {7, 3, "16", "K_{3,2,2}"}, {13, 4, "63", "K_{4,3,3,3}"}}) {
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    add("Turan bound " + tag, edges, [n, k](auto&) { return std::to_string(turan::max_edges(n, k)); });
    add("Turan extremal graph " + tag, shape, [n, k](auto&) { return parts(turan::extremal_part_sizes(n, k)); });
  }
  add("triangle-free graphs on 5 vertices have at most 6 edges", "6",
      [](auto&) { return std::to_string(max_edges_without_clique_oracle(5, 2)); });

  // De Bruijn graphs and words
  add("B(2,3) census", "8 vertices, 16 arcs, 2 loops",
      [](auto&) { return digraph_census(db::de_bruijn_graph(db::DBParams::make(2, 3))); });
  add("B(3,2) census", "9 vertices, 27 arcs, 3 loops",
      [](auto&) { return digraph_census(db::de_bruijn_graph(db::DBParams::make(3, 2))); });
  add("Martin B(3,2)", "0022112010",
      [](auto&) { return db::martin(db::DBParams::make(3, 2)).linear(); }, false, true);
  add("Martin B(2,3)", "0001110100", [](auto&) { return db::martin(db::DBParams::make(2, 3)).linear(); });
  add("Hamiltonian cycles of B(2,3)", sorted_words({"0001110100", "0001011100"}),
      [](auto&) { return linear_words(db::enumerate_hamiltonian_cycles(db::DBParams::make(2, 3))); });
  add("Hamiltonian cycles of B(3,2)",
      sorted_words({"0010211220", "0020122110", "0010221120", "0020112210", "0011021220", "0022012110",
                    "0011022120", "0022011210", "0011202210", "0022101120", "0011210220", "0022120110",
                    "0011220210", "0022110120", "0011221020", "0022112010", "0012022110", "0021011220",
                    "0012110220", "0021220110", "0012202110", "0021101220", "0012211020", "0021122010"}),
      [](auto&) { return linear_words(db::enumerate_hamiltonian_cycles(db::DBParams::make(3, 2))); });
  for (const auto& [n, m, count] : std::vector<std::tuple<std::size_t, std::size_t, std::string>>{
           {2, 3, "2"}, {3, 2, "24"}, {3, 3, "373248"}}) {
    add("cycle count formula B(" + std::to_string(n) + "," + std::to_string(m) + ")", count,
        [n, m](auto&) { return db::count_hamiltonian_cycles(db::DBParams::make(n, m)).str(); });
  }
  add("enumerated cycles of B(3,3)", "373248", [](auto&) {
    return std::to_string(db::enumerate_hamiltonian_cycles(db::DBParams::make(3, 3)).size());
  }, true);
  {
    const db::BigInt table = db::BigInt(13824) * db::BigInt(10077696) * db::BigInt(10077696) * db::BigInt(10077696);
    add("cycle count B(3,4)", "13824*10077696^3 = " + table.str(),
        [](auto&) { return db::count_hamiltonian_cycles(db::DBParams::make(3, 4)).str(); }, false, true);
  }
  add("shared arcs of 0010211220 and 0020122110", "{12->22, 21->11}",
      [](auto&) { return shared_arcs({"0010211220", "0020122110"}); });
  add("sigma of the B(5,2) seed", "00203223012133140443424110",
      [](auto&) { return db::sigma(db::word_decode("00102112041422430332313440")).linear(); });
  add("rotation family of 0011220210", "disjoint",
      [](auto&) { return family_status(db::word_decode("0011220210")); });
  add("B(5,2) block: sigma-generated, arc-disjoint", "true disjoint", [](auto&) {
    std::vector<db::DeBruijnWord> block;
    for (const char* w : {"00102112041422430332313440", "00203223012133140443424110", "00304334023244210114131220",
                          "00401441034311320221242330"}) {
      block.push_back(db::word_decode(w));
    }
    return yes_no(db::is_sigma_generated(block)) + " " +
           (db::pairwise_arc_disjoint(block).disjoint ? "disjoint" : "not disjoint");
  });
  for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {3, 3}, {4, 2}}) {
    add("Martin B(" + std::to_string(n) + "," + std::to_string(m) + ") is not a rotation seed", "not disjoint",
        [n, m](auto&) { return family_status(db::martin(db::DBParams::make(n, m))); });
  }
  add("arc-disjoint Hamiltonian cycles in B(3,2): bound", "2",
      [](auto&) { return std::to_string(db::max_disjoint_upper_bound(3)); });
  add("arc-disjoint Hamiltonian cycles in B(3,2): maximum", "2",
      [](auto&) { return std::to_string(db::max_disjoint_exact(db::DBParams::make(3, 2)).size); });

  // rotation seeds
  const std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::string>>> seeds{
      {3, 2, {"0011220210", "0021011220"}},
      {4, 2, {"00102113230331220", "00102313033211220"}},
      {5, 2, {"00102112041422430332313440"}},
      {3, 3, {"00010021011022202012111221200"}},
      {4, 3,
       {"000100210110201202310301311121130221232031323003332133122330322200",
        "000100210110201202310301311121130223323003132123203330322213312200"}},
      {6, 2, {"0010211204131403325235505154534422430"}},
      {7, 2, {"00102112041306140315055162252353436442463326545660"}},
  };
  for (const auto& [n, m, targets] : seeds) {
    const bool slow = !(m == 2 && n <= 4);
    add("rotation seeds B(" + std::to_string(n) + "," + std::to_string(m) + ")", join(targets),
        [n, m, targets](const Deadline& d) { return seed_search(n, m, targets, d); }, slow);
  }
  return c;
}

ReportEntry run(const Check& check, const Deadline& deadline) {
  ReportEntry e{check.claim, check.expected, "", Status::Skipped, 0.0};
  if (deadline.passed()) return e;
  const auto t0 = Clock::now();
  try {
    e.computed = check.compute(deadline);
    if (check.flagged) {
      e.status = Status::FlaggedDiscrepancy;
    } else {
      e.status = e.computed == e.expected ? Status::Match : Status::Mismatch;
    }
  } catch (const OutOfTime&) {
    e.status = Status::Skipped;
  } catch (const std::exception& ex) {
    e.computed = std::string("error: ") + ex.what();
    e.status = Status::Mismatch;
  }
  e.runtime_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return e;
}

std::string clip(const std::string& s, std::size_t width) {
  return s.size() <= width ? s : s.substr(0, width - 3) + "...";
}

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::FlaggedDiscrepancy: return "flagged-discrepancy";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::size_t Report::count(Status status) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const ReportEntry& e) { return e.status == status; }));
}

int Report::exit_code() const {
  if (count(Status::Mismatch) > 0) return 1;
  if (count(Status::Skipped) > 0) return 3;
  return 0;
}

Report reproduce_all(const ReproduceOptions& options) {
  Report report;
  report.timestamp = debruijn::utc_timestamp();
  report.quick = options.quick;
  const Deadline deadline(Clock::now(), options.budget);
  std::vector<Check> selected;
  for (auto& check : checks()) {
    if (!(options.quick && check.slow)) selected.push_back(std::move(check));
  }
  if (options.parallel) {
    std::vector<std::future<ReportEntry>> futures;
    for (const auto& check : selected) {
      futures.push_back(std::async(std::launch::async, [&check, &deadline] { return run(check, deadline); }));
    }
    for (auto& f : futures) report.entries.push_back(f.get());
  } else {
    for (const auto& check : selected) report.entries.push_back(run(check, deadline));
  }
  return report;
}

std::string format_table(const Report& report) {
  std::ostringstream out;
  out << std::left << std::setw(20) << "status" << std::setw(58) << "claim" << std::setw(34) << "expected"
      << std::setw(34) << "computed" << "seconds\n";
  for (const auto& e : report.entries) {
    out << std::setw(20) << to_string(e.status) << std::setw(58) << clip(e.claim, 56) << std::setw(34)
        << clip(e.expected, 32) << std::setw(34) << clip(e.computed, 32) << std::fixed << std::setprecision(3)
        << e.runtime_seconds << '\n';
    if (e.status == Status::FlaggedDiscrepancy) {
      out << "    expected: " << e.expected << "\n    computed: " << e.computed << '\n';
    }
  }
  out << report.count(Status::Match) << " match, " << report.count(Status::Mismatch) << " mismatch, "
      << report.count(Status::FlaggedDiscrepancy) << " flagged, " << report.count(Status::Skipped) << " skipped\n";
  return out.str();
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["timestamp"] = report.timestamp;
  j["quick"] = report.quick;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json row;
    row["claim"] = e.claim;
    row["expected"] = e.expected;
    row["computed"] = e.computed;
    row["status"] = to_string(e.status);
    row["runtime_seconds"] = e.runtime_seconds;
    j["entries"].push_back(std::move(row));
  }
  j["summary"] = {{"match", report.count(Status::Match)},
                  {"mismatch", report.count(Status::Mismatch)},
                  {"flagged-discrepancy", report.count(Status::FlaggedDiscrepancy)},
                  {"skipped", report.count(Status::Skipped)}};
  j["exit_code"] = report.exit_code();
  return j.dump(2) + "\n";
}

}  // namespace ordo::reproduce
