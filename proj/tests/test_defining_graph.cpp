#include "mqm/defining_graph.hpp"
#include "mqm/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>

using namespace mqm;

namespace {

const char* kCycle =
    R"({"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]]})";

std::vector<std::string> names(std::initializer_list<const char*> l) {
  return {l.begin(), l.end()};
}

} // namespace

TEST_CASE("parse_graph reads the documented format") {
  auto f2 = parse_graph(R"({"vertices":["a","b"],"edges":[]})");
  CHECK(f2.size() == 2);
  CHECK(f2.edge_count() == 0);
  CHECK(f2 == free_group_graph(2));

  auto c4 = parse_graph(kCycle);
  CHECK(c4.edge_count() == 4);
  CHECK(c4 == cycle_graph(4));
  CHECK(c4.adjacent(0, 1));
  CHECK_FALSE(c4.adjacent(0, 2));

  // Missing edges key is an edgeless graph; repeated edges collapse.
  CHECK(parse_graph(R"({"vertices":["x"]})").edge_count() == 0);
  CHECK(parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})").edge_count() == 1);
}

TEST_CASE("parse_graph errors carry a location") {
  CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"),
                       doctest::Contains("edges[0]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"),
                       doctest::Contains("self-loop"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"],["a","z"]]})"),
                       doctest::Contains("edges[1]"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","a"]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["1x"]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],)"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"([1,2])"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a", 3]})"),
                       doctest::Contains("vertices[1]"), ParseError);
}

TEST_CASE("link") {
  CHECK(link(free_group_graph(2), "a").empty());
  CHECK(link(cycle_graph(4), "a") == names({"b", "d"}));
  CHECK(link(path_graph(2), "b") == names({"a"}));
  CHECK_THROWS_AS(link(cycle_graph(4), "z"), DomainError);
}

TEST_CASE("max_clique_size") {
  CHECK(max_clique_size(free_group_graph(2)) == 1);
  CHECK(max_clique_size(path_graph(2)) == 2);
  CHECK(max_clique_size(cycle_graph(4)) == 2);
  CHECK(max_clique_size(cycle_graph(3)) == 3);
  CHECK_THROWS_AS(max_clique_size(DefiningGraph{}), DomainError);
}

TEST_CASE("max_clique_size agrees with subset enumeration") {
  // Every graph on 5 vertices given by a 10-bit edge mask.
  const std::vector<std::pair<int, int>> all = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                               {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (int mask = 0; mask < (1 << 10); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 10; ++i)
      if ((mask >> i) & 1)
        e.push_back(all[static_cast<std::size_t>(i)]);
    DefiningGraph g(names({"a", "b", "c", "d", "e"}), e);
    int best = 0;
    for (unsigned s = 1; s < 32; ++s) {
      bool clique = true;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (((s >> i) & 1) && ((s >> j) & 1) && !g.adjacent(i, j))
            clique = false;
      if (clique)
        best = std::max(best, std::popcount(s));
    }
    REQUIRE(max_clique_size(g) == best);
    CHECK((best == 1) == (g.edge_count() == 0));
  }
}

TEST_CASE("is_independent") {
  auto c4 = cycle_graph(4);
  CHECK(is_independent(c4, generator_set(c4, names({"a", "c"}))));
  CHECK_FALSE(is_independent(path_graph(2), generator_set(path_graph(2), names({"a", "b"}))));
  CHECK(is_independent(c4, 0));
  CHECK_THROWS_AS(generator_set(c4, names({"q"})), DomainError);

  // Monotone under subsets.
  for (GeneratorSet f = 0; f < 16; ++f)
    if (is_independent(c4, f))
      for (GeneratorSet sub = f; sub; sub = (sub - 1) & f)
        CHECK(is_independent(c4, sub));
}

TEST_CASE("link never contains the vertex itself") {
  for (const auto& g : {cycle_graph(4), cycle_graph(5), path_graph(4), free_group_graph(3)})
    for (const auto& v : g.names()) {
      auto l = link(g, v);
      CHECK(std::find(l.begin(), l.end(), v) == l.end());
    }
}
