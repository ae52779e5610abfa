#include "mqm/defining_graph.hpp"

#include "mqm/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cctype>

namespace mqm {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty())
    return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

} // namespace

DefiningGraph::DefiningGraph(std::vector<std::string> names,
                             const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)), adj_(names_.size(), 0) {
  if (names_.size() > max_vertices)
    throw ParseError("graph: more than 64 vertices");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      throw ParseError("graph: vertices[" + std::to_string(i) +
                       "]: invalid generator name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw ParseError("graph: vertices[" + std::to_string(i) +
                         "]: duplicate name '" + names_[i] + "'");
  }
  const int n = static_cast<int>(names_.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("graph: edges[" + std::to_string(e) +
                       "]: endpoint out of range");
    if (u == v)
      throw ParseError("graph: edges[" + std::to_string(e) + "]: self-loop at '" +
                       names_[u] + "'");
    // Repeated edges collapse; the graph is simple by construction.
    adj_[u] |= GeneratorSet{1} << v;
    adj_[v] |= GeneratorSet{1} << u;
  }
}

int DefiningGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return static_cast<int>(i);
  return -1;
}

int DefiningGraph::index(std::string_view name) const {
  int i = find(name);
  if (i < 0)
    throw DomainError("unknown vertex '" + std::string(name) + "'");
  return i;
}

GeneratorSet DefiningGraph::all() const {
  return names_.size() == 64 ? ~GeneratorSet{0}
                             : (GeneratorSet{1} << names_.size()) - 1;
}

std::size_t DefiningGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto m : adj_)
    twice += std::popcount(m);
  return twice / 2;
}

std::vector<std::pair<int, int>> DefiningGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(size()); ++u)
    for (int v = u + 1; v < static_cast<int>(size()); ++v)
      if (adjacent(u, v))
        out.emplace_back(u, v);
  return out;
}

DefiningGraph parse_graph(std::string_view document) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph: malformed JSON at byte ") +
                     std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object())
    throw ParseError("graph: top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("graph: missing array 'vertices'");

  std::vector<std::string> names;
  const auto& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string())
      throw ParseError("graph: vertices[" + std::to_string(i) +
                       "]: expected a string");
    names.push_back(vs[i].get<std::string>());
  }

  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    if (!es.is_array())
      throw ParseError("graph: 'edges' must be an array");
    auto lookup = [&](const json& v, std::size_t e) {
      if (!v.is_string())
        throw ParseError("graph: edges[" + std::to_string(e) +
                         "]: endpoints must be strings");
      auto s = v.get<std::string>();
      auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end())
        throw ParseError("graph: edges[" + std::to_string(e) +
                         "]: unknown endpoint '" + s + "'");
      return static_cast<int>(it - names.begin());
    };
    for (std::size_t e = 0; e < es.size(); ++e) {
      if (!es[e].is_array() || es[e].size() != 2)
        throw ParseError("graph: edges[" + std::to_string(e) +
                         "]: expected a pair");
      edges.emplace_back(lookup(es[e][0], e), lookup(es[e][1], e));
    }
  }
  return DefiningGraph(std::move(names), edges);
}

std::vector<std::string> link(const DefiningGraph& g, std::string_view v) {
  int i = g.index(v);
  std::vector<std::string> out;
  for (int u = 0; u < static_cast<int>(g.size()); ++u)
    if (g.adjacent(i, u))
      out.push_back(g.name(u));
  return out;
}

namespace {

// Bron-Kerbosch without pivoting; graphs here are tiny.
int clique_search(const DefiningGraph& g, int r, GeneratorSet p) {
  if (p == 0)
    return r;
  int best = r;
  while (p) {
    int v = std::countr_zero(p);
    p &= p - 1;
    best = std::max(best, clique_search(g, r + 1, p & g.link_mask(v)));
  }
  return best;
}

} // namespace

int max_clique_size(const DefiningGraph& g) {
  if (g.empty())
    throw DomainError("max_clique_size: empty graph");
  return clique_search(g, 0, g.all());
}

bool is_independent(const DefiningGraph& g, GeneratorSet f) {
  for (GeneratorSet rest = f; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    if (g.link_mask(v) & f)
      return false;
  }
  return true;
}

GeneratorSet generator_set(const DefiningGraph& g,
                           const std::vector<std::string>& names) {
  GeneratorSet f = 0;
  for (const auto& n : names)
    f |= GeneratorSet{1} << g.index(n);
  return f;
}

namespace {

std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

} // namespace

DefiningGraph free_group_graph(int rank) { return DefiningGraph(letters(rank), {}); }

DefiningGraph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return DefiningGraph(letters(n), e);
}

DefiningGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return DefiningGraph(letters(n), e);
}

} // namespace mqm
