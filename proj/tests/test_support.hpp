#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag::testing {

inline std::string data_path(const std::string& file) { return std::string(RAAG_TEST_DATA) + "/data/" + file; }

inline GraphPtr load(const std::string& file) { return share(SimplicialGraph::load(data_path(file))); }

inline GraphPtr p4() { return load("p4.graph"); }
inline GraphPtr p3() { return load("p3.graph"); }
inline GraphPtr k3() { return load("k3.graph"); }
inline GraphPtr edgeless3() { return load("edgeless3.graph"); }
inline GraphPtr star3() { return load("star3.graph"); }
inline GraphPtr star3_pendant() { return load("star3_pendant.graph"); }

inline std::vector<GraphPtr> all_graphs() { return {p4(), p3(), k3(), edgeless3(), star3(), star3_pendant()}; }

inline VertexId v(const GraphPtr& g, const char* name) { return g->find(name); }

inline Word w(const GraphPtr& g, const char* text) { return parse_word(*g, text); }

inline RaagElement el(const GraphPtr& g, const char* text) { return reduce(g, parse_word(*g, text)); }

inline std::string nf(const RaagElement& x) { return format_word(*x.graph(), x.word()); }

inline std::vector<Letter> signed_letters(const SimplicialGraph& g) {
  std::vector<Letter> out;
  for (VertexId u : g.vertices()) {
    out.push_back({u, 1});
    out.push_back({u, -1});
  }
  return out;
}

/// Every word of length exactly `len` over the signed letters.
inline std::vector<Word> all_words(const SimplicialGraph& g, std::size_t len) {
  const auto letters = signed_letters(g);
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& prefix : out) {
      for (Letter x : letters) {
        Word extended = prefix;
        extended.push_back(x);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Word random_word(const SimplicialGraph& g, std::mt19937_64& rng, std::size_t max_len) {
  const auto letters = signed_letters(g);
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word out(len_dist(rng));
  for (auto& x : out) x = letters[pick(rng)];
  return out;
}

/// Distinct elements whose normal form has length <= max_len.
inline std::vector<RaagElement> elements_up_to(const GraphPtr& g, std::size_t max_len) {
  std::vector<RaagElement> out;
  std::set<std::vector<std::pair<std::uint32_t, int>>> seen;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const auto& word : all_words(*g, len)) {
      RaagElement x = reduce(g, word);
      if (x.length() > max_len) continue;
      std::vector<std::pair<std::uint32_t, int>> key;
      for (Letter l : x.word()) key.emplace_back(l.vertex.index, l.sign);
      if (seen.insert(key).second) out.push_back(std::move(x));
    }
  }
  return out;
}

/// Graph queries recomputed from a raw edge list, independent of SimplicialGraph.
struct EdgeListOracle {
  std::size_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  explicit EdgeListOracle(const SimplicialGraph& g) : n(g.size()) {
    for (VertexId u : g.vertices()) {
      for (VertexId x : g.vertices()) {
        if (u < x && g.adjacent(u, x)) edges.emplace_back(u.index, x.index);
      }
    }
  }

  bool adj(std::uint32_t u, std::uint32_t x) const {
    return std::any_of(edges.begin(), edges.end(), [&](auto e) {
      return (e.first == u && e.second == x) || (e.first == x && e.second == u);
    });
  }
  std::set<std::uint32_t> link(std::uint32_t u) const {
    std::set<std::uint32_t> out;
    for (auto [p, q] : edges) {
      if (p == u) out.insert(q);
      if (q == u) out.insert(p);
    }
    return out;
  }
  std::set<std::uint32_t> star(std::uint32_t u) const {
    auto s = link(u);
    s.insert(u);
    return s;
  }
  bool dominated(std::uint32_t u, std::uint32_t x) const {
    auto l = link(u);
    auto s = star(x);
    return std::includes(s.begin(), s.end(), l.begin(), l.end());
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> transvection_pairs() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t x = 0; x < n; ++x) {
        if (u != x && adj(u, x) && dominated(u, x)) out.emplace_back(u, x);
      }
    }
    return out;
  }
};

}  // namespace raag::testing
