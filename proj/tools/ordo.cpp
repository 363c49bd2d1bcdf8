// ordo: command-line front end.
//
// Exit codes: 0 success (or all reproduced values match), 1 mismatch or
// failed check, 2 usage error, 3 stopped by a budget.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ordo/debruijn.hpp"
#include "ordo/io.hpp"
#include "ordo/ramsey.hpp"
#include "ordo/redei.hpp"
#include "ordo/reproduce.hpp"
#include "ordo/seed_search.hpp"
#include "ordo/turan.hpp"

namespace {

using namespace ordo;
namespace db = ordo::debruijn;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i] + 1;
  return out.str();
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t pos = 0;
    const auto v = std::stoul(tok, &pos);
    if (pos != tok.size()) throw CLI::ValidationError("--spec", "expected a list like 3,3");
    sizes.push_back(v);
  }
  return sizes;
}

std::string cache_path(const db::DBParams& p) {
  const char* dir = std::getenv("ORDO_CACHE_DIR");
  std::filesystem::path base = dir && *dir ? dir : ".";
  std::filesystem::create_directories(base);
  return (base / ("seeds_" + std::to_string(p.n) + "_" + std::to_string(p.m) + ".jsonl")).string();
}

const std::vector<std::string> kPalette{"blue", "red", "green", "orange", "purple", "brown", "gray", "cyan"};

// ---- redei ----

int run_redei(const std::string& file, std::size_t random_n, std::uint64_t seed, bool dot) {
  Tournament t;
  if (!file.empty()) {
    t = Tournament(io::parse_digraph(io::read_file(file)));
  } else {
    std::mt19937_64 rng(seed);
    t = Tournament::from_coin_flips(random_n, [&] { return (rng() & 1) != 0; });
  }
  const auto path = redei::hamiltonian_path(t);
  if (!dot) {
    std::cout << vertex_list(path) << '\n';
    return 0;
  }
  io::DotOptions options;
  options.name = "tournament";
  for (std::size_t i = 0; i + 1 < path.size(); ++i) options.highlighted_arcs.push_back({path[i], path[i + 1]});
  std::cout << io::to_dot(t.digraph(), options);
  return 0;
}

// ---- ramsey ----

int run_ramsey_verify(const std::string& file, const std::string& spec_text) {
  const auto coloring = io::parse_coloring(io::read_file(file));
  const auto witness = ramsey::verify_coloring(coloring, ramsey::MulticolorSpec(parse_sizes(spec_text)));
  if (!witness) {
    std::cout << "good\n";
    return 0;
  }
  std::cout << "colour " << witness->color << ": " << vertex_list(witness->vertices) << '\n';
  return kExitFailure;
}

int run_ramsey_search(std::size_t m, std::size_t k, std::size_t n) {
  const auto result = ramsey::exhaustive_ramsey_check(m, k, n);
  std::cout << "every 2-colouring of K_" << n << " has red K_" << m << " or blue K_" << k << ": "
            << (result.holds ? "true" : "false") << "\nnodes " << result.nodes << '\n';
  if (result.counterexample) std::cout << io::write_coloring(*result.counterexample);
  return 0;
}

int run_ramsey_bounds(std::size_t m, std::size_t k) {
  for (const auto& b : ramsey::bounds(m, k)) {
    std::cout << std::left << std::setw(16) << ramsey::to_string(b.source) << (b.lower ? b.lower->str() : "?")
              << " <= R(" << m << "," << k << ") <= " << (b.upper ? b.upper->str() : "?") << '\n';
  }
  if (m == k) std::cout << std::setw(16) << "diagonal" << "R(" << m << "," << k << ") > " << ramsey::diagonal_lower_bound(k) << '\n';
  return 0;
}

int run_andrasfai(std::size_t k, bool dot) {
  const auto g = ramsey::andrasfai_graph(k);
  if (dot) {
    io::DotOptions options;
    options.name = "H_" + std::to_string(g.vertex_count());
    std::cout << io::to_dot(g, options);
    return 0;
  }
  std::cout << io::write_graph(g);
  std::cerr << "triangle-free: " << (has_clique(g, 3) ? "no" : "yes")
            << ", independence number: " << clique_number(complement(g)) << '\n';
  return 0;
}

int run_k17(bool dot) {
  const auto c = ramsey::k17_mod3_coloring();
  if (dot) {
    io::DotOptions options;
    options.name = "K17";
    std::cout << io::to_dot(c, kPalette, options);
    return 0;
  }
  std::cout << io::write_coloring(c);
  for (std::size_t color = 0; color < 3; ++color) {
    const auto tri = find_clique(c.color_class(color), 3);
    std::cerr << kPalette[color] << " triangle: " << (tri ? vertex_list(*tri) : "none") << '\n';
  }
  return 0;
}

// ---- turan ----

int run_turan_graph(std::size_t n, std::size_t k, bool dot) {
  const auto g = turan::extremal_graph(n, k);
  if (dot) {
    io::DotOptions options;
    options.name = "T_" + std::to_string(n) + "_" + std::to_string(k);
    std::cout << io::to_dot(g, options);
  } else {
    std::cout << io::write_graph(g);
  }
  return 0;
}

int run_turan_verify(std::size_t n, std::size_t k) {
  const auto bound = turan::max_edges(n, k);
  const auto g = turan::extremal_graph(n, k);
  bool ok = g.edge_count() == bound && !has_clique(g, k + 1);
  std::cout << "bound " << bound << ", extremal graph edges " << g.edge_count() << ", K_" << k + 1 << "-free "
            << (has_clique(g, k + 1) ? "no" : "yes") << '\n';
  if (n <= kCliqueOracleMaxVertices) {
    const auto oracle = max_edges_without_clique_oracle(n, k);
    std::cout << "oracle " << oracle << '\n';
    ok = ok && oracle == bound;
  }
  std::cout << (ok ? "ok" : "FAILED") << '\n';
  return ok ? 0 : kExitFailure;
}

// ---- debruijn ----

std::vector<db::DeBruijnWord> decode_all(const std::vector<std::string>& texts) {
  std::vector<db::DeBruijnWord> words;
  for (const auto& t : texts) words.push_back(db::word_decode(t));
  return words;
}

int run_db_graph(std::size_t n, std::size_t m, bool dot, bool flower) {
  const auto p = db::DBParams::make(n, m);
  if (flower) {
    std::cout << db::export_flower(p);
    return 0;
  }
  const auto g = db::de_bruijn_graph(p);
  if (dot) {
    io::DotOptions options;
    options.name = "B_" + std::to_string(n) + "_" + std::to_string(m);
    options.label = [p](Vertex v) { return db::vertex_label(p, v); };
    std::cout << io::to_dot(g, options);
    return 0;
  }
  for (const Arc& a : g.arcs()) std::cout << db::arc_label(p, a) << '\n';
  return 0;
}

int run_db_disjoint(const std::vector<std::string>& texts) {
  const auto words = decode_all(texts);
  const auto report = db::pairwise_arc_disjoint(words);
  if (report.disjoint) {
    std::cout << "disjoint\n";
    return 0;
  }
  std::cout << "words " << report.first + 1 << " and " << report.second + 1 << " share";
  for (const Arc& a : report.shared) std::cout << ' ' << db::arc_label(words.front().params(), a);
  std::cout << '\n';
  return kExitFailure;
}

struct SeedSearchArgs {
  std::size_t n = 0;
  std::size_t m = 0;
  bool all = false;
  std::uint64_t node_budget = 0;
  double seconds = 0;
  std::string resume;
  std::string cache;
  bool quiet = false;
};

int run_seed_search(const SeedSearchArgs& args) {
  const auto p = db::DBParams::make(args.n, args.m);
  const std::string cache = !args.cache.empty() ? args.cache : !args.resume.empty() ? args.resume : cache_path(p);
  db::SeedSearchOptions options;
  options.find_all = args.all;
  options.node_budget = args.node_budget;
  if (args.seconds > 0) {
    options.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(args.seconds * 1000));
  }
  std::string already_reported;
  if (!args.resume.empty()) {
    const auto records = db::load_cache(args.resume, p);
    options.resume_from = db::resume_point(records);
    for (const auto& r : records) {
      if (r.seed == options.resume_from) already_reported = r.seed;
    }
    std::cerr << "resuming from " << (options.resume_from.empty() ? "the start" : options.resume_from) << '\n';
  }
  options.on_seed = [&](const db::DeBruijnWord& seed, std::uint64_t nodes) {
    const std::string text = seed.linear();
    if (text == already_reported) return true;
    std::cout << text << std::endl;
    db::append_cache_record(cache, {p.n, p.m, text, "", db::utc_timestamp(), nodes});
    return true;
  };
  if (!args.quiet) {
    options.on_progress = [](std::uint64_t nodes) { std::cerr << "nodes " << nodes << '\n'; };
  }
  const auto result = db::rotation_seed_search(p, options);
  std::cerr << "nodes " << result.nodes << ", families " << result.seeds.size()
            << (result.exhausted ? ", search space exhausted" : "") << '\n';
  if (result.budget_exhausted) {
    db::append_cache_record(cache, {p.n, p.m, "", result.frontier, db::utc_timestamp(), result.nodes});
    std::cerr << "budget reached at " << result.frontier << "; resume with --resume " << cache << '\n';
    return kExitBudget;
  }
  return 0;
}

// ---- reproduce ----

int run_reproduce(bool quick, double seconds, bool json, bool parallel) {
  reproduce::ReproduceOptions options;
  options.quick = quick;
  options.parallel = parallel;
  if (seconds > 0) options.budget = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000));
  const auto report = reproduce::reproduce_all(options);
  std::cout << (json ? reproduce::to_json(report) : reproduce::format_table(report));
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordo: tournaments, Ramsey and Turan numbers, De Bruijn graphs"};
  app.require_subcommand(1);
  int status = 0;

  // redei
  auto* redei_cmd = app.add_subcommand("redei", "Hamiltonian path of a tournament");
  std::string redei_file;
  std::size_t redei_random = 0;
  std::uint64_t redei_seed = 0;
  bool redei_dot = false;
  redei_cmd->add_option("file", redei_file, "tournament in digraph format");
  redei_cmd->add_option("--random", redei_random, "use a random tournament on this many vertices");
  redei_cmd->add_option("--seed", redei_seed, "random seed")->capture_default_str();
  redei_cmd->add_flag("--dot", redei_dot, "emit DOT with the path highlighted");
  redei_cmd->callback([&] {
    if (redei_file.empty() == (redei_random == 0)) throw CLI::ValidationError("redei", "give a file or --random N");
    status = run_redei(redei_file, redei_random, redei_seed, redei_dot);
  });

  // ramsey
  auto* ramsey_cmd = app.add_subcommand("ramsey", "Ramsey colourings, searches and bounds");
  ramsey_cmd->require_subcommand(1);
  std::size_t rm = 0, rk = 0, rn = 0;
  std::string coloring_file, spec_text;
  bool ramsey_dot = false;
  auto* verify_cmd = ramsey_cmd->add_subcommand("verify", "look for a forbidden monochromatic clique");
  verify_cmd->add_option("file", coloring_file)->required();
  verify_cmd->add_option("--spec", spec_text, "clique size per colour, e.g. 3,3")->required();
  verify_cmd->callback([&] { status = run_ramsey_verify(coloring_file, spec_text); });
  auto* search_cmd = ramsey_cmd->add_subcommand("search", "decide whether every colouring of K_n is forced");
  search_cmd->add_option("m", rm)->required();
  search_cmd->add_option("k", rk)->required();
  search_cmd->add_option("n", rn)->required();
  search_cmd->callback([&] { status = run_ramsey_search(rm, rk, rn); });
  auto* bounds_cmd = ramsey_cmd->add_subcommand("bounds", "known bounds on R(m,k)");
  bounds_cmd->add_option("m", rm)->required();
  bounds_cmd->add_option("k", rk)->required();
  bounds_cmd->callback([&] { status = run_ramsey_bounds(rm, rk); });
  auto* andrasfai_cmd = ramsey_cmd->add_subcommand("andrasfai", "triangle-free graph H_{3k-1}");
  andrasfai_cmd->add_option("k", rk)->required();
  andrasfai_cmd->add_flag("--dot", ramsey_dot);
  andrasfai_cmd->callback([&] { status = run_andrasfai(rk, ramsey_dot); });
  auto* k17_cmd = ramsey_cmd->add_subcommand("k17", "3-colouring of K_17 by (i + j) mod 3");
  k17_cmd->add_flag("--dot", ramsey_dot);
  k17_cmd->callback([&] { status = run_k17(ramsey_dot); });

  // turan
  auto* turan_cmd = app.add_subcommand("turan", "Turan bound and extremal graph");
  turan_cmd->require_subcommand(1);
  std::size_t tn = 0, tk = 0;
  bool turan_dot = false;
  auto* tbound = turan_cmd->add_subcommand("bound", "most edges without K_{k+1}");
  auto* tgraph = turan_cmd->add_subcommand("graph", "extremal complete multipartite graph");
  auto* tverify = turan_cmd->add_subcommand("verify", "check bound, graph and (n <= 7) brute force");
  for (auto* cmd : {tbound, tgraph, tverify}) {
    cmd->add_option("n", tn)->required();
    cmd->add_option("k", tk)->required();
  }
  tgraph->add_flag("--dot", turan_dot);
  tbound->callback([&] { std::cout << turan::max_edges(tn, tk) << '\n'; });
  tgraph->callback([&] { status = run_turan_graph(tn, tk, turan_dot); });
  tverify->callback([&] { status = run_turan_verify(tn, tk); });

  // debruijn
  auto* db_cmd = app.add_subcommand("debruijn", "De Bruijn graphs and Hamiltonian cycles");
  db_cmd->require_subcommand(1);
  std::size_t dn = 0, dm = 0;
  bool db_dot = false, db_flower = false;
  std::string word;
  std::vector<std::string> words;
  auto* dgraph = db_cmd->add_subcommand("graph", "arcs of B(n,m)");
  auto* dmartin = db_cmd->add_subcommand("martin", "greedy prefer-largest De Bruijn word");
  auto* denum = db_cmd->add_subcommand("enumerate", "every Hamiltonian cycle");
  auto* dcount = db_cmd->add_subcommand("count", "number of Hamiltonian cycles");
  for (auto* cmd : {dgraph, dmartin, denum, dcount}) {
    cmd->add_option("n", dn)->required();
    cmd->add_option("m", dm)->required();
  }
  auto* dot_flag = dgraph->add_flag("--dot", db_dot);
  dgraph->add_flag("--flower", db_flower, "underlying undirected graph as DOT")->excludes(dot_flag);
  dgraph->callback([&] { status = run_db_graph(dn, dm, db_dot, db_flower); });
  dmartin->callback([&] { std::cout << db::martin(db::DBParams::make(dn, dm)).linear() << '\n'; });
  denum->callback([&] {
    for (const auto& w : db::enumerate_hamiltonian_cycles(db::DBParams::make(dn, dm))) std::cout << w.linear() << '\n';
  });
  dcount->callback([&] { std::cout << db::count_hamiltonian_cycles(db::DBParams::make(dn, dm)) << '\n'; });
  auto* dsigma = db_cmd->add_subcommand("sigma", "apply the rotation map to a word");
  dsigma->add_option("word", word)->required();
  dsigma->callback([&] { std::cout << db::sigma(db::word_decode(word)).linear() << '\n'; });
  auto* dfamily = db_cmd->add_subcommand("family", "rotation family of a seed and its disjointness");
  dfamily->add_option("seed", word)->required();
  dfamily->callback([&] {
    const auto family = db::rotation_family(db::word_decode(word));
    std::vector<std::string> texts;
    for (const auto& w : family) {
      std::cout << w.linear() << '\n';
      texts.push_back(w.linear());
    }
    status = run_db_disjoint(texts);
  });
  auto* ddisjoint = db_cmd->add_subcommand("disjoint", "check words for shared arcs");
  ddisjoint->add_option("words", words)->required();
  ddisjoint->callback([&] { status = run_db_disjoint(words); });
  SeedSearchArgs seed_args;
  auto* dseed = db_cmd->add_subcommand("seed-search", "search for seeds of arc-disjoint rotation families");
  dseed->add_option("n", seed_args.n)->required();
  dseed->add_option("m", seed_args.m)->required();
  dseed->add_flag("--all", seed_args.all, "report every family, not just the first");
  dseed->add_option("--budget", seed_args.node_budget, "node budget (0 = unlimited)");
  dseed->add_option("--time", seed_args.seconds, "time budget in seconds");
  dseed->add_option("--resume", seed_args.resume, "cache file to resume from and append to");
  dseed->add_option("--cache", seed_args.cache, "cache file (default $ORDO_CACHE_DIR/seeds_<n>_<m>.jsonl)");
  dseed->add_flag("--quiet", seed_args.quiet, "no progress lines");
  dseed->callback([&] { status = run_seed_search(seed_args); });

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "recompute every published value and compare");
  bool quick = false, json = false, parallel = false;
  double budget = 0;
  rep->add_flag("--quick", quick, "skip the slow entries");
  rep->add_option("--budget", budget, "time budget in seconds");
  rep->add_flag("--json", json, "JSON report");
  rep->add_flag("--parallel", parallel, "run entries concurrently");
  rep->callback([&] { status = run_reproduce(quick, budget, json, parallel); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const ordo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::OracleLimit:
      case ErrorCode::SearchLimit:
      case ErrorCode::EnumerationLimit:
        return kExitFailure;
      default:
        return kExitUsage;  // the input itself was rejected
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return status;
}
