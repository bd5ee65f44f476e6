#include "raag/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "raag/errors.hpp"

namespace raag {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// Splits "key: rest" and returns {key, rest}; key is empty if no colon.
std::pair<std::string, std::string_view> split_directive(std::string_view line) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) return {"", line};
  auto key = split_tokens(line.substr(0, colon));
  if (key.size() != 1) return {"", line};
  return {key.front(), line.substr(colon + 1)};
}

}  // namespace

bool is_valid_vertex_name(std::string_view name) {
  if (name.empty() || name.front() == '-') return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isspace(c) || c == '^' || c == '#';
  });
}

SimplicialGraph::SimplicialGraph(std::vector<std::string> names, const std::vector<VertexPair>& edges)
    : names_(std::move(names)), adjacency_(names_.size(), std::vector<bool>(names_.size(), false)) {
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_vertex_name(names_[i])) throw ParseError(0, "invalid vertex name '" + names_[i] + "'");
    if (!seen.emplace(names_[i], i).second) throw ParseError(0, "duplicate vertex name '" + names_[i] + "'");
  }
  for (const auto& [u, v] : edges) {
    if (!contains(u) || !contains(v)) throw ParseError(0, "edge endpoint out of range");
    if (u == v) throw ParseError(0, "self-loop on '" + names_[u.index] + "'");
    adjacency_[u.index][v.index] = true;
    adjacency_[v.index][u.index] = true;
  }
  non_commuting_.resize(names_.size());
  for (std::uint32_t v = 0; v < names_.size(); ++v) {
    for (std::uint32_t u = 0; u < names_.size(); ++u) {
      if (u != v && !adjacency_[v][u]) non_commuting_[v].push_back(u);
    }
  }
}

SimplicialGraph SimplicialGraph::parse(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  std::vector<VertexPair> edges;
  bool have_vertices = false;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip_comment(raw);
    if (is_blank(line)) continue;

    auto [key, rest] = split_directive(line);
    auto tokens = split_tokens(rest);
    if (key == "vertices") {
      if (have_vertices) throw ParseError(lineno, "duplicate 'vertices:' line");
      if (tokens.empty()) throw ParseError(lineno, "'vertices:' line lists no vertices");
      for (auto& t : tokens) {
        if (!is_valid_vertex_name(t)) throw ParseError(lineno, "invalid vertex name '" + t + "'");
        VertexId id{static_cast<std::uint32_t>(names.size())};
        if (!index.emplace(t, id).second) throw ParseError(lineno, "duplicate vertex name '" + t + "'");
        names.push_back(t);
      }
      have_vertices = true;
    } else if (key == "edge") {
      if (!have_vertices) throw ParseError(lineno, "'vertices:' must be the first line");
      if (tokens.size() != 2) {
        throw ParseError(lineno, "edge needs exactly two vertex names, got " + std::to_string(tokens.size()));
      }
      VertexId ends[2];
      for (int k = 0; k < 2; ++k) {
        auto it = index.find(tokens[k]);
        if (it == index.end()) throw ParseError(lineno, "edge names unknown vertex '" + tokens[k] + "'");
        ends[k] = it->second;
      }
      if (ends[0] == ends[1]) throw ParseError(lineno, "self-loop on '" + tokens[0] + "'");
      edges.push_back({ends[0], ends[1]});
    } else {
      if (!have_vertices) throw ParseError(lineno, "'vertices:' must be the first line");
      throw ParseError(lineno, "unrecognized line '" + std::string(line) + "'");
    }
  }
  if (!have_vertices) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'vertices:' line");
  return SimplicialGraph(std::move(names), edges);
}

SimplicialGraph SimplicialGraph::parse_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

SimplicialGraph SimplicialGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open graph file '" + path + "'");
  return parse(in);
}

std::vector<VertexId> SimplicialGraph::vertices() const {
  std::vector<VertexId> out(names_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = VertexId{static_cast<std::uint32_t>(i)};
  return out;
}

void SimplicialGraph::check(VertexId v) const {
  if (!contains(v)) throw LookupError("unknown vertex index " + std::to_string(v.index));
}

const std::string& SimplicialGraph::name(VertexId v) const {
  check(v);
  return names_[v.index];
}

std::optional<VertexId> SimplicialGraph::lookup(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return VertexId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

VertexId SimplicialGraph::find(std::string_view name) const {
  if (auto v = lookup(name)) return *v;
  throw LookupError("unknown vertex '" + std::string(name) + "'");
}

bool SimplicialGraph::adjacent(VertexId u, VertexId v) const {
  check(u);
  check(v);
  return adjacency_[u.index][v.index];
}

std::vector<VertexId> SimplicialGraph::link(VertexId v) const {
  check(v);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (adjacency_[v.index][i]) out.push_back(VertexId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::vector<VertexId> SimplicialGraph::star(VertexId v) const {
  auto out = link(v);
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

std::size_t SimplicialGraph::degree(VertexId v) const {
  check(v);
  return static_cast<std::size_t>(std::count(adjacency_[v.index].begin(), adjacency_[v.index].end(), true));
}

const std::vector<std::uint32_t>& SimplicialGraph::non_commuting(VertexId v) const {
  check(v);
  return non_commuting_[v.index];
}

std::optional<VertexId> SimplicialGraph::domination_obstruction(VertexId v, VertexId w) const {
  check(v);
  check(w);
  for (VertexId u : link(v)) {
    if (u != w && !adjacency_[w.index][u.index]) return u;
  }
  return std::nullopt;
}

bool SimplicialGraph::dominated_by(VertexId v, VertexId w) const {
  return !domination_obstruction(v, w).has_value();
}

bool SimplicialGraph::is_central_vertex(VertexId v) const {
  return degree(v) + 1 == names_.size();
}

std::vector<VertexId> SimplicialGraph::central_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : vertices()) {
    if (is_central_vertex(v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexPair> SimplicialGraph::adjacent_transvection_pairs() const {
  std::vector<VertexPair> out;
  for (VertexId v : vertices()) {
    for (VertexId w : vertices()) {
      if (v != w && adjacency_[v.index][w.index] && dominated_by(v, w)) out.push_back({v, w});
    }
  }
  return out;
}

std::vector<VertexPair> SimplicialGraph::theorem_witnesses() const {
  std::vector<VertexPair> out;
  for (const auto& pair : adjacent_transvection_pairs()) {
    if (!is_central_vertex(pair.second)) out.push_back(pair);
  }
  return out;
}

std::string format_vertex_set(const SimplicialGraph& g, const std::vector<VertexId>& vs) {
  if (vs.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += g.name(vs[i]);
  }
  return out;
}

std::string format_pairs(const SimplicialGraph& g, const std::vector<VertexPair>& pairs) {
  if (pairs.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ' ';
    out += "(" + g.name(pairs[i].first) + "," + g.name(pairs[i].second) + ")";
  }
  return out;
}

}  // namespace raag
