#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mqm {

/// Bit mask over generator indices. Bit i stands for the i-th declared vertex.
using GeneratorSet = std::uint64_t;

/// Finite simplicial graph defining a right-angled Artin group.
///
/// Vertices are kept in declaration order; that order is the generator order
/// used for every lexicographic tie-break downstream. Immutable after
/// construction.
class DefiningGraph {
public:
  static constexpr std::size_t max_vertices = 64;

  DefiningGraph() = default;

  /// Builds a graph from names and index pairs. Throws ParseError on
  /// duplicate names, self-loops, or out-of-range endpoints.
  DefiningGraph(std::vector<std::string> names,
                const std::vector<std::pair<int, int>>& edges);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a vertex name, or -1.
  int find(std::string_view name) const;
  /// Index of a vertex name; throws DomainError when unknown.
  int index(std::string_view name) const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  /// Distinct generators commute iff they span an edge.
  bool commute(int u, int v) const { return u != v && adjacent(u, v); }

  GeneratorSet link_mask(int v) const { return adj_.at(v); }
  GeneratorSet all() const;

  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const DefiningGraph& other) const = default;

private:
  std::vector<std::string> names_;
  std::vector<GeneratorSet> adj_;
};

/// Parses the JSON graph document
/// `{"vertices": ["a", ...], "edges": [["a","b"], ...]}`.
DefiningGraph parse_graph(std::string_view document);

/// Neighbours of `v`, in declaration order. Throws DomainError for an
/// unknown vertex.
std::vector<std::string> link(const DefiningGraph& g, std::string_view v);

/// Size of a largest clique (exhaustive search). Throws DomainError on an
/// empty graph.
int max_clique_size(const DefiningGraph& g);

/// True iff no edge joins two members of `f`.
bool is_independent(const DefiningGraph& g, GeneratorSet f);

/// Mask of named vertices; throws DomainError on unknown names.
GeneratorSet generator_set(const DefiningGraph& g,
                           const std::vector<std::string>& names);

// Stock graphs used throughout tests and reports.
DefiningGraph free_group_graph(int rank);
DefiningGraph path_graph(int n);
DefiningGraph cycle_graph(int n);

} // namespace mqm
