#include "ordo/debruijn.hpp"

#include <algorithm>
#include <functional>

#include "ordo/io.hpp"

namespace ordo::debruijn {

namespace {

constexpr std::size_t kMaxArcSpace = std::size_t{1} << 28;

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exp; ++i) value *= base;
  return value;
}

}  // namespace

DBParams DBParams::make(std::size_t n, std::size_t m) {
  if (n < 2 || n > 36) throw Error(ErrorCode::InvalidArgument, "alphabet size must be in [2, 36]");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "word length must be at least 1");
  std::size_t arcs = 1;
  for (std::size_t i = 0; i <= m; ++i) {
    arcs *= n;
    if (arcs > kMaxArcSpace) {
      throw Error(ErrorCode::InvalidArgument, "B(" + std::to_string(n) + "," +
                                                  std::to_string(m) + ") is too large");
    }
  }
  return {n, m};
}

std::size_t DBParams::order() const { return ipow(n, m); }
std::size_t DBParams::suffix_space() const { return ipow(n, m - 1); }

char symbol_char(Symbol s) {
  return static_cast<char>(s < 10 ? '0' + s : 'a' + (s - 10));
}

Symbol symbol_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(10 + (c - 'a'));
  return 255;
}

std::string vertex_label(const DBParams& p, Vertex v) {
  std::string label(p.m, '0');
  for (std::size_t i = p.m; i-- > 0;) {
    label[i] = symbol_char(static_cast<Symbol>(v % p.n));
    v /= p.n;
  }
  return label;
}

DeBruijnWord DeBruijnWord::from_cyclic(const DBParams& params, std::vector<Symbol> letters) {
  const std::size_t len = params.order();
  if (letters.size() != len) {
    throw Error(ErrorCode::BadLength, "cyclic word must have length " + std::to_string(len) +
                                          ", got " + std::to_string(letters.size()));
  }
  for (Symbol s : letters) {
    if (s >= params.n) {
      throw Error(ErrorCode::BadAlphabet, std::string("letter '") + symbol_char(s) +
                                              "' outside alphabet of size " + std::to_string(params.n));
    }
  }
  const std::size_t suffix = params.suffix_space();
  std::vector<bool> seen(len, false);
  Vertex window = 0;
  for (std::size_t i = 0; i < params.m; ++i) window = window * params.n + letters[i % len];
  std::size_t zero_at = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (seen[window]) {
      throw Error(ErrorCode::RepeatedWindow,
                  "window " + vertex_label(params, window) + " occurs twice");
    }
    seen[window] = true;
    if (window == 0) zero_at = i;
    window = (window % suffix) * params.n + letters[(i + params.m) % len];
  }
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(zero_at), letters.end());
  return DeBruijnWord(params, std::move(letters));
}

std::vector<Vertex> DeBruijnWord::vertices() const {
  const std::size_t len = letters_.size();
  std::vector<Vertex> out;
  out.reserve(len);
  Vertex window = 0;
  for (std::size_t i = 0; i < params_.m; ++i) window = window * params_.n + letters_[i % len];
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(window);
    window = params_.successor(window, letters_[(i + params_.m) % len]);
  }
  return out;
}

std::string DeBruijnWord::linear() const {
  std::string out;
  out.reserve(letters_.size() + params_.m - 1);
  for (Symbol s : letters_) out.push_back(symbol_char(s));
  for (std::size_t i = 0; i + 1 < params_.m; ++i) out.push_back(symbol_char(letters_[i % letters_.size()]));
  return out;
}

DeBruijnWord word_decode(std::string_view text, const DBParams& params) {
  const std::size_t len = params.order();
  const std::size_t expected = len + params.m - 1;
  if (text.size() != expected) {
    throw Error(ErrorCode::BadLength, "linear word for B(" + std::to_string(params.n) + "," +
                                          std::to_string(params.m) + ") must have length " +
                                          std::to_string(expected) + ", got " +
                                          std::to_string(text.size()));
  }
  std::vector<Symbol> letters;
  letters.reserve(text.size());
  for (char c : text) {
    const Symbol s = symbol_value(c);
    if (s >= params.n) {
      throw Error(ErrorCode::BadAlphabet, std::string("letter '") + c + "' outside alphabet of size " +
                                              std::to_string(params.n));
    }
    letters.push_back(s);
  }
  for (std::size_t i = 0; i + 1 < params.m; ++i) {
    if (letters[len + i] != letters[i]) {
      throw Error(ErrorCode::WrapMismatch, "last m-1 letters must repeat the first m-1");
    }
  }
  letters.resize(len);
  return DeBruijnWord::from_cyclic(params, std::move(letters));
}

DeBruijnWord word_decode(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::BadLength, "empty word");
  Symbol top = 0;
  for (char c : text) {
    const Symbol s = symbol_value(c);
    if (s == 255) throw Error(ErrorCode::BadAlphabet, std::string("letter '") + c + "' is not a symbol");
    top = std::max(top, s);
  }
  const std::size_t n = std::max<std::size_t>(2, std::size_t{top} + 1);
  std::size_t power = n;
  for (std::size_t m = 1; power + m - 1 <= text.size(); ++m, power *= n) {
    if (power + m - 1 == text.size()) return word_decode(text, DBParams::make(n, m));
  }
  throw Error(ErrorCode::BadLength, "no word length m gives n^m + m - 1 = " +
                                        std::to_string(text.size()) + " for n = " + std::to_string(n));
}

std::string word_encode(const DeBruijnWord& word) { return word.linear(); }

Digraph de_bruijn_graph(const DBParams& params) {
  std::vector<Arc> arcs;
  const std::size_t len = params.order();
  arcs.reserve(len * params.n);
  for (Vertex v = 0; v < len; ++v) {
    for (Symbol s = 0; s < params.n; ++s) arcs.push_back({v, params.successor(v, s)});
  }
  return Digraph(len, arcs);
}

std::size_t arc_index(const DBParams& params, const Arc& arc) {
  return arc.from * params.n + arc.to % params.n;
}

std::string arc_label(const DBParams& params, const Arc& arc) {
  return vertex_label(params, arc.from) + "->" + vertex_label(params, arc.to);
}

std::vector<Arc> arcs_of(const DeBruijnWord& word) {
  const auto vertices = word.vertices();
  std::vector<Arc> arcs;
  arcs.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    arcs.push_back({vertices[i], vertices[(i + 1) % vertices.size()]});
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

DeBruijnWord martin(const DBParams& params) {
  const std::size_t len = params.order();
  std::vector<bool> seen(len, false);
  std::vector<Symbol> letters(params.m, 0);
  Vertex window = 0;
  seen[window] = true;
  for (;;) {
    bool extended = false;
    for (std::size_t s = params.n; s-- > 0;) {
      const Vertex next = params.successor(window, static_cast<Symbol>(s));
      if (!seen[next]) {
        seen[next] = true;
        window = next;
        letters.push_back(static_cast<Symbol>(s));
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  // The greedy run always covers every window, ending on m-1 zeros.
  std::string text;
  for (Symbol s : letters) text.push_back(symbol_char(s));
  return word_decode(text, params);
}

BigInt count_hamiltonian_cycles(const DBParams& params) {
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= params.n; ++i) factorial *= i;
  BigInt numerator = 1;
  for (std::size_t i = 0; i < params.suffix_space(); ++i) numerator *= factorial;
  return numerator / BigInt(params.order());
}

namespace {

class CycleEnumerator {
 public:
  explicit CycleEnumerator(const DBParams& params)
      : p_(params), len_(params.order()), visited_(len_, 0), letters_(len_ + params.m - 1, 0) {}

  std::vector<DeBruijnWord> run() {
    visited_[0] = 1;
    extend(0, 1);
    return std::move(found_);
  }

 private:
  void extend(Vertex v, std::size_t depth) {
    if (depth == len_) {
      if (v % p_.suffix_space() == 0) {
        found_.push_back(DeBruijnWord::from_cyclic(
            p_, std::vector<Symbol>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(len_))));
      }
      return;
    }
    for (Symbol s = 0; s < p_.n; ++s) {
      const Vertex w = p_.successor(v, s);
      if (visited_[w]) continue;
      visited_[w] = 1;
      letters_[p_.m - 1 + depth] = s;
      extend(w, depth + 1);
      visited_[w] = 0;
    }
  }

  DBParams p_;
  std::size_t len_;
  std::vector<char> visited_;
  std::vector<Symbol> letters_;
  std::vector<DeBruijnWord> found_;
};

}  // namespace

std::vector<DeBruijnWord> enumerate_hamiltonian_cycles(const DBParams& params) {
  if (params.order() > kEnumerationMaxOrder ||
      count_hamiltonian_cycles(params) > kEnumerationMaxCycles) {
    throw Error(ErrorCode::EnumerationLimit,
                "enumeration limit: B(" + std::to_string(params.n) + "," + std::to_string(params.m) +
                    ") needs n^m <= 27 and at most 10^6 cycles");
  }
  return CycleEnumerator(params).run();
}

Symbol sigma_symbol(std::size_t n, Symbol s) {
  if (s == 0) return 0;
  return static_cast<Symbol>(s == n - 1 ? 1 : s + 1);
}

DeBruijnWord sigma(const DeBruijnWord& word) {
  std::vector<Symbol> letters = word.letters();
  for (Symbol& s : letters) s = sigma_symbol(word.params().n, s);
  return DeBruijnWord::from_cyclic(word.params(), std::move(letters));
}

std::vector<DeBruijnWord> rotation_family(const DeBruijnWord& seed) {
  std::vector<DeBruijnWord> family{seed};
  for (std::size_t i = 1; i + 1 < seed.params().n; ++i) family.push_back(sigma(family.back()));
  return family;
}

bool is_sigma_generated(std::span<const DeBruijnWord> words) {
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (!(sigma(words[i]) == words[i + 1])) return false;
  }
  return true;
}

DeBruijnWord orbit_representative(const DeBruijnWord& word) {
  const auto family = rotation_family(word);
  return *std::min_element(family.begin(), family.end());
}

DisjointnessReport pairwise_arc_disjoint(std::span<const DeBruijnWord> words) {
  for (const auto& w : words) {
    if (!(w.params() == words.front().params())) {
      throw Error(ErrorCode::InvalidArgument, "all words must belong to the same De Bruijn graph");
    }
  }
  std::vector<std::vector<Arc>> arcs;
  arcs.reserve(words.size());
  for (const auto& w : words) arcs.push_back(arcs_of(w));
  DisjointnessReport report;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      std::vector<Arc> shared;
      std::set_intersection(arcs[i].begin(), arcs[i].end(), arcs[j].begin(), arcs[j].end(),
                            std::back_inserter(shared));
      if (!shared.empty()) {
        report.disjoint = false;
        report.first = i;
        report.second = j;
        report.shared = std::move(shared);
        return report;
      }
    }
  }
  return report;
}

std::size_t max_disjoint_upper_bound(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "alphabet size must be at least 2");
  return n - 1;
}

MaxDisjointResult max_disjoint_exact(const DBParams& params) {
  const auto cycles = enumerate_hamiltonian_cycles(params);
  const std::size_t words = (params.order() * params.n + 63) / 64;
  std::vector<std::uint64_t> masks(cycles.size() * words, 0);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (const Arc& a : arcs_of(cycles[c])) {
      const std::size_t idx = arc_index(params, a);
      masks[c * words + idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
  }
  auto disjoint = [&](std::size_t a, std::size_t b) {
    for (std::size_t w = 0; w < words; ++w) {
      if (masks[a * words + w] & masks[b * words + w]) return false;
    }
    return true;
  };

  const std::size_t ceiling = max_disjoint_upper_bound(params.n);
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  // Branch and bound over candidates still disjoint from everything chosen.
  std::function<void(const std::vector<std::size_t>&)> grow = [&](const std::vector<std::size_t>& candidates) {
    if (current.size() > best.size()) best = current;
    if (best.size() >= ceiling) return;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current.size() + (candidates.size() - i) <= best.size()) return;
      current.push_back(candidates[i]);
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (disjoint(candidates[i], candidates[j])) next.push_back(candidates[j]);
      }
      grow(next);
      current.pop_back();
      if (best.size() >= ceiling) return;
    }
  };
  std::vector<std::size_t> all(cycles.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  grow(all);

  MaxDisjointResult result;
  result.size = best.size();
  for (std::size_t idx : best) result.witness.push_back(cycles[idx]);
  return result;
}

SimpleGraph flower_graph(const DBParams& params) {
  std::vector<Edge> edges;
  const std::size_t len = params.order();
  for (Vertex v = 0; v < len; ++v) {
    for (Symbol s = 0; s < params.n; ++s) {
      const Vertex w = params.successor(v, s);
      if (w != v) edges.emplace_back(v, w);
    }
  }
  return SimpleGraph(len, edges);
}

std::string export_flower(const DBParams& params) {
  io::DotOptions options;
  options.name = "B_" + std::to_string(params.n) + "_" + std::to_string(params.m);
  options.label = [&](Vertex v) { return vertex_label(params, v); };
  return io::to_dot(flower_graph(params), options);
}

}  // namespace ordo::debruijn
