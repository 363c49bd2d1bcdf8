#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ordo/debruijn.hpp"

using namespace ordo;
using namespace ordo::debruijn;

namespace {

const std::vector<std::string> kB32Cycles{
    "0010211220", "0020122110", "0010221120", "0020112210", "0011021220", "0022012110",
    "0011022120", "0022011210", "0011202210", "0022101120", "0011210220", "0022120110",
    "0011220210", "0022110120", "0011221020", "0022112010", "0012022110", "0021011220",
    "0012110220", "0021220110", "0012202110", "0021101220", "0012211020", "0021122010"};

const std::vector<std::string> kB52Block{"00102112041422430332313440", "00203223012133140443424110",
                                         "00304334023244210114131220", "00401441034311320221242330"};

ErrorCode decode_error(std::string_view text, const DBParams& p) {
  try {
    word_decode(text, p);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a decode error for " << text);
  return ErrorCode::Parse;
}

std::set<std::string> linear_set(const std::vector<DeBruijnWord>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(w.linear());
  return out;
}

std::vector<DeBruijnWord> decode_all(const std::vector<std::string>& texts) {
  std::vector<DeBruijnWord> out;
  for (const auto& t : texts) out.push_back(word_decode(t));
  return out;
}

}  // namespace

TEST_CASE("parameters") {
  const auto p = DBParams::make(3, 2);
  CHECK(p.order() == 9);
  CHECK(p.suffix_space() == 3);
  CHECK(p.successor(5, 2) == 8);  // 12 -> 22
  CHECK(vertex_label(p, 5) == "12");
  CHECK_THROWS_AS(DBParams::make(1, 2), Error);
  CHECK_THROWS_AS(DBParams::make(37, 1), Error);
  CHECK_THROWS_AS(DBParams::make(2, 0), Error);
  CHECK_THROWS_AS(DBParams::make(2, 40), Error);
  CHECK(symbol_char(35) == 'z');
  CHECK(symbol_value('a') == 10);
  CHECK(symbol_value('A') == 255);
}

TEST_CASE("graph census") {
  const auto b23 = de_bruijn_graph(DBParams::make(2, 3));
  CHECK(b23.vertex_count() == 8);
  CHECK(b23.arc_count() == 16);
  CHECK(b23.loop_count() == 2);

  const auto b32 = de_bruijn_graph(DBParams::make(3, 2));
  CHECK(b32.vertex_count() == 9);
  CHECK(b32.arc_count() == 27);
  CHECK(b32.loop_count() == 3);
  CHECK(b32.has_arc(5, 8));
  CHECK_FALSE(b32.has_arc(8, 5));

  for (std::size_t n = 2; n <= 5; ++n) {
    const auto b = de_bruijn_graph(DBParams::make(n, 1));
    CHECK(b.arc_count() == n * n);
    CHECK(b.loop_count() == n);
  }
  const auto p = DBParams::make(3, 3);
  const auto g = de_bruijn_graph(p);
  for (Vertex v = 0; v < p.order(); ++v) {
    CHECK(g.out_degree(v) == 3);
    CHECK(g.in_degree(v) == 3);
  }
  // overlap rule, checked on the labels
  for (const Arc& a : g.arcs()) CHECK(vertex_label(p, a.from).substr(1) == vertex_label(p, a.to).substr(0, 2));
}

TEST_CASE("decoding") {
  const auto b23 = DBParams::make(2, 3);
  const auto b32 = DBParams::make(3, 2);
  CHECK(word_encode(word_decode("0001110100", b23)) == "0001110100");
  CHECK(word_encode(word_decode("0022112010", b32)) == "0022112010");
  CHECK(word_encode(word_decode("0001011100", b23)) == "0001011100");
  CHECK(word_decode("0001110100").params() == b23);
  CHECK(word_decode("01").params() == DBParams::make(2, 1));

  // rotation to the zero block
  CHECK(word_decode("1110100011", b23).linear() == "0001110100");

  CHECK(decode_error("000111010", b23) == ErrorCode::BadLength);
  CHECK(decode_error("0001112100", b23) == ErrorCode::BadAlphabet);
  CHECK(decode_error("0001110101", b23) == ErrorCode::WrapMismatch);
  CHECK(decode_error("0000110100", b23) == ErrorCode::RepeatedWindow);
  CHECK_THROWS_AS(word_decode("0x"), Error);
  CHECK_THROWS_AS(word_decode("0012"), Error);
}

TEST_CASE("codec round trip over every cycle") {
  for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 2}, {2, 4}, {4, 2}}) {
    const auto p = DBParams::make(n, m);
    for (const auto& w : enumerate_hamiltonian_cycles(p)) {
      CHECK(word_decode(word_encode(w), p) == w);
      CHECK(word_encode(w).starts_with(std::string(m, '0')));
    }
  }
}

TEST_CASE("arcs of a word") {
  const auto p = DBParams::make(3, 2);
  const auto w = word_decode("0010211220");
  const auto arcs = arcs_of(w);
  CHECK(arcs.size() == 9);
  std::set<std::string> labels;
  for (const Arc& a : arcs) {
    labels.insert(arc_label(p, a));
    CHECK(a.from != a.to);
    CHECK(arc_index(p, a) < 27);
  }
  CHECK(labels.contains("12->22"));
  CHECK(labels.contains("21->11"));

  std::set<std::string> windows;
  for (const Arc& a : arcs) {
    windows.insert(vertex_label(p, a.from) + vertex_label(p, a.to).substr(1));
  }
  CHECK(windows == oracle::arc_windows("0010211220", 2));
}

TEST_CASE("Martin") {
  CHECK(martin(DBParams::make(2, 3)).linear() == "0001110100");
  CHECK(martin(DBParams::make(2, 1)).linear() == "01");
  for (const auto& [n, m] :
       std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {5, 3}, {2, 8}}) {
    CHECK(martin(DBParams::make(n, m)).linear() == oracle::greedy_prefer_largest(n, m));
  }
}

TEST_CASE("enumeration") {
  CHECK(linear_set(enumerate_hamiltonian_cycles(DBParams::make(2, 3))) ==
        std::set<std::string>{"0001110100", "0001011100"});
  const auto b32 = enumerate_hamiltonian_cycles(DBParams::make(3, 2));
  CHECK(linear_set(b32) == std::set<std::string>(kB32Cycles.begin(), kB32Cycles.end()));
  CHECK(std::is_sorted(b32.begin(), b32.end()));

  for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    CHECK(linear_set(enumerate_hamiltonian_cycles(DBParams::make(n, m))) == oracle::de_bruijn_strings(n, m));
  }

  try {
    enumerate_hamiltonian_cycles(DBParams::make(2, 5));
    FAIL("guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationLimit);
  }
}

TEST_CASE("count formula matches enumeration") {
  for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
    const auto p = DBParams::make(n, m);
    CHECK(count_hamiltonian_cycles(p) == enumerate_hamiltonian_cycles(p).size());
  }
  CHECK(count_hamiltonian_cycles(DBParams::make(3, 3)) == 373248);
  // 6^27 / 3^4
  CHECK(count_hamiltonian_cycles(DBParams::make(3, 4)) == BigInt("12635683568857645056"));
  CHECK(count_hamiltonian_cycles(DBParams::make(2, 5)) == 2048);
}

TEST_CASE("sigma") {
  const auto w = word_decode("0001110100");
  CHECK(sigma(w) == w);
  CHECK(sigma(word_decode("0011220210")).linear() == "0022110120");
  CHECK(sigma(word_decode(kB52Block[0])).linear() == kB52Block[1]);
  CHECK(sigma_symbol(5, 0) == 0);
  CHECK(sigma_symbol(5, 3) == 4);
  CHECK(sigma_symbol(5, 4) == 1);

  const auto all = enumerate_hamiltonian_cycles(DBParams::make(3, 2));
  for (const auto& c : all) {
    CHECK(std::binary_search(all.begin(), all.end(), sigma(c)));
    CHECK(sigma(sigma(c)) == c);
  }
  for (const auto& text : kB52Block) {
    auto c = word_decode(text);
    const auto start = c;
    for (int i = 0; i < 4; ++i) c = sigma(c);
    CHECK(c == start);
  }
}

TEST_CASE("rotation families and disjointness") {
  CHECK(rotation_family(word_decode("0001110100")).size() == 1);
  CHECK(linear_set(rotation_family(word_decode("0011220210"))) == std::set<std::string>{"0011220210", "0022110120"});
  const auto five = rotation_family(word_decode(kB52Block[0]));
  REQUIRE(five.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(five[i].linear() == kB52Block[i]);

  const auto block = decode_all(kB52Block);
  CHECK(is_sigma_generated(block));
  CHECK(pairwise_arc_disjoint(block).disjoint);
  CHECK_FALSE(is_sigma_generated(decode_all({kB52Block[0], kB52Block[2]})));

  CHECK(pairwise_arc_disjoint(rotation_family(word_decode("0011220210"))).disjoint);
  CHECK(pairwise_arc_disjoint(decode_all({"0010211220"})).disjoint);

  const auto clash = pairwise_arc_disjoint(decode_all({"0012022110", "0010211220", "0020122110"}));
  CHECK_FALSE(clash.disjoint);
  CHECK(clash.first == 0);
  CHECK(clash.second == 1);
  const auto pair = pairwise_arc_disjoint(decode_all({"0010211220", "0020122110"}));
  CHECK_FALSE(pair.disjoint);
  const auto p = DBParams::make(3, 2);
  std::vector<std::string> shared;
  for (const Arc& a : pair.shared) shared.push_back(arc_label(p, a));
  CHECK(shared == std::vector<std::string>{"12->22", "21->11"});

  // brute-force intersection of the two window sets
  const auto a = oracle::arc_windows("0010211220", 2);
  const auto b = oracle::arc_windows("0020122110", 2);
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  CHECK(common == std::vector<std::string>{"122", "211"});

  CHECK_THROWS_AS(pairwise_arc_disjoint(decode_all({"0011220210", "0001110100"})), Error);
}

TEST_CASE("Martin output never seeds a disjoint family") {
  for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {3, 3}, {4, 2}}) {
    CHECK_FALSE(pairwise_arc_disjoint(rotation_family(martin(DBParams::make(n, m)))).disjoint);
  }
}

TEST_CASE("maximum arc-disjoint sets") {
  CHECK(max_disjoint_upper_bound(2) == 1);
  CHECK(max_disjoint_upper_bound(3) == 2);
  CHECK(max_disjoint_upper_bound(5) == 4);

  const auto b32 = max_disjoint_exact(DBParams::make(3, 2));
  CHECK(b32.size == 2);
  CHECK(b32.witness.size() == 2);
  CHECK(pairwise_arc_disjoint(b32.witness).disjoint);

  const auto b23 = max_disjoint_exact(DBParams::make(2, 3));
  CHECK(b23.size == 1);
  // both cycles of B(2,3) leave 000 through 001
  CHECK(oracle::arc_windows("0001110100", 3).contains("0001"));
  CHECK(oracle::arc_windows("0001011100", 3).contains("0001"));

  for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    const auto r = max_disjoint_exact(DBParams::make(n, m));
    CHECK(r.size >= n / 2);
    CHECK(r.size <= max_disjoint_upper_bound(n));
  }
}

TEST_CASE("flower graph") {
  const auto p = DBParams::make(3, 2);
  const auto f = flower_graph(p);
  CHECK(f.vertex_count() == 9);
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const Arc& a : de_bruijn_graph(p).arcs()) {
    if (a.from != a.to) pairs.insert({std::min(a.from, a.to), std::max(a.from, a.to)});
  }
  CHECK(f.edge_count() == pairs.size());
  CHECK(f.edge_count() == 21);

  CHECK(flower_graph(DBParams::make(2, 1)) == complete_graph(2));
  CHECK(flower_graph(DBParams::make(2, 3)).vertex_count() == 8);

  const auto dot = export_flower(p);
  CHECK(dot.starts_with("graph \"B_3_2\""));
  CHECK(dot.find("\"00\" -- \"01\"") != std::string::npos);
  CHECK(dot.find("\"00\" -- \"00\"") == std::string::npos);
}
