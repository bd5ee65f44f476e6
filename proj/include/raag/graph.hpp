#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

/// Dense vertex index into a SimplicialGraph (0..|V|-1, file order).
struct VertexId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct VertexPair {
  VertexId first;
  VertexId second;

  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Finite loop-free undirected graph defining a right-angled Artin group.
///
/// Immutable once built. Vertex order is the order of the names passed in
/// (for parsed graphs, order of appearance on the `vertices:` line) and is
/// the order every canonical form downstream is built from.
class SimplicialGraph {
 public:
  /// Throws ParseError (line 0) on empty/duplicate/invalid names, self-loops
  /// or out-of-range endpoints. Duplicate edges are accepted.
  SimplicialGraph(std::vector<std::string> names, const std::vector<VertexPair>& edges);

  /// Reads the line-based graph format. Throws ParseError with line numbers.
  static SimplicialGraph parse(std::istream& in);
  static SimplicialGraph parse_string(std::string_view text);
  static SimplicialGraph load(const std::string& path);

  std::size_t size() const noexcept { return names_.size(); }
  std::vector<VertexId> vertices() const;

  const std::string& name(VertexId v) const;
  /// Throws LookupError for unknown names.
  VertexId find(std::string_view name) const;
  std::optional<VertexId> lookup(std::string_view name) const;

  bool contains(VertexId v) const noexcept { return v.index < names_.size(); }
  bool adjacent(VertexId u, VertexId v) const;
  /// Distinct and adjacent.
  bool commute(VertexId u, VertexId v) const { return adjacent(u, v); }

  std::vector<VertexId> link(VertexId v) const;
  std::vector<VertexId> star(VertexId v) const;
  std::size_t degree(VertexId v) const;
  /// Indices of the vertices other than v that are not adjacent to v.
  const std::vector<std::uint32_t>& non_commuting(VertexId v) const;

  /// v <= w in the domination order: lk(v) is a subset of st(w).
  bool dominated_by(VertexId v, VertexId w) const;
  /// First vertex (in file order) of lk(v) outside st(w), if any.
  std::optional<VertexId> domination_obstruction(VertexId v, VertexId w) const;

  /// Vertices adjacent to every other vertex.
  std::vector<VertexId> central_vertices() const;
  bool is_central_vertex(VertexId v) const;

  /// Ordered pairs (v, w), v != w, adjacent, with v <= w.
  std::vector<VertexPair> adjacent_transvection_pairs() const;
  /// Adjacent transvection pairs (a, b) whose b is not adjacent to all vertices.
  std::vector<VertexPair> theorem_witnesses() const;

 private:
  void check(VertexId v) const;

  std::vector<std::string> names_;
  std::vector<std::vector<bool>> adjacency_;
  std::vector<std::vector<std::uint32_t>> non_commuting_;
};

using GraphPtr = std::shared_ptr<const SimplicialGraph>;

inline GraphPtr share(SimplicialGraph g) {
  return std::make_shared<const SimplicialGraph>(std::move(g));
}

/// Valid vertex token: nonempty, no whitespace, no '^', not starting with '-'.
bool is_valid_vertex_name(std::string_view name);

std::string format_vertex_set(const SimplicialGraph& g, const std::vector<VertexId>& vs);
std::string format_pairs(const SimplicialGraph& g, const std::vector<VertexPair>& pairs);

}  // namespace raag
