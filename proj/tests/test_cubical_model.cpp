#include "mqm/algorithms.hpp"
#include "mqm/error.hpp"
#include "mqm/raag_model.hpp"
#include "mqm/staircase_model.hpp"
#include "mqm/wedge_model.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace mqm;

namespace {

Trace T(const DefiningGraph& g, const char* w) { return parse_trace(g, w); }

// Quadrant emptiness read off a finite witness set.
template <class M, class V>
Relation quadrant_relation(const M& m, const typename M::Halfspace& h,
                           const typename M::Halfspace& k, const std::vector<V>& pts) {
  bool hk = false, hK = false, Hk = false, HK = false;
  for (const auto& p : pts) {
    bool a = m.contains(h, p), b = m.contains(k, p);
    hk |= a && b;
    hK |= a && !b;
    Hk |= !a && b;
    HK |= !a && !b;
  }
  if (!hK && !Hk)
    return Relation::Equal;
  if (!hk && !HK)
    return Relation::Complement;
  if (!hK)
    return Relation::HInK;
  if (!Hk)
    return Relation::KInH;
  if (!hk)
    return Relation::Disjoint;
  if (!HK)
    return Relation::Covering;
  return Relation::Transverse;
}

std::vector<StairVertex> stair_box(long r) {
  std::vector<StairVertex> out;
  for (long x = -r; x <= r; ++x)
    for (long y = x; y <= r; ++y)
      out.push_back({x, y});
  return out;
}

} // namespace

TEST_CASE("raag membership and interval halfspaces") {
  auto g = path_graph(2); // Z^2
  RaagModel m(g);
  auto ha = m.edge_halfspace(m.identity(), {0, 1});
  CHECK(ha.label() == Letter{0, 1});
  CHECK(m.contains(ha, T(g, "a")));
  CHECK(m.contains(ha, T(g, "a,b,b,b")));
  CHECK_FALSE(m.contains(ha, T(g, "b")));
  CHECK_FALSE(m.contains(ha, T(g, "a^-1")));
  // The edge (b, ba) is dual to the same hyperplane as (1, a).
  CHECK(m.edge_halfspace(T(g, "b"), {0, 1}) == ha);
  CHECK(m.complement(ha) == m.edge_halfspace(T(g, "a"), {0, -1}));

  auto iv = m.interval(m.identity(), T(g, "a,a,b"));
  CHECK(iv.size() == 3);
  for (const auto& h : m.interval_halfspaces(iv)) {
    CHECK(m.contains(h, T(g, "a,a,b")));
    CHECK_FALSE(m.contains(h, m.identity()));
  }
}

TEST_CASE("relation agrees with quadrant emptiness") {
  for (auto g : {free_group_graph(2), path_graph(2), cycle_graph(4), path_graph(3)}) {
    RaagModel m(g);
    auto hs = region_halfspaces(m, m.ball(m.identity(), 2));
    auto witness = m.ball(m.identity(), 5);
    for (const auto& h : hs)
      for (const auto& k : hs)
        CHECK(m.relation(h, k) == quadrant_relation(m, h, k, witness));
  }
  StaircaseModel st;
  auto pts = stair_box(10);
  std::vector<StairHalfspace> shs;
  for (int axis : {0, 1})
    for (long l = -3; l <= 3; ++l)
      for (bool up : {true, false})
        shs.push_back({axis, l, up});
  for (const auto& h : shs)
    for (const auto& k : shs)
      CHECK(st.relation(h, k) == quadrant_relation(st, h, k, pts));
  for (int n = 1; n <= 4; ++n) {
    WedgeModel w(n);
    for (const auto& h : w.halfspaces())
      for (const auto& k : w.halfspaces())
        CHECK(w.relation(h, k) == quadrant_relation(w, h, k, w.vertices()));
  }
}

TEST_CASE("interval halfspaces do not depend on the linearization") {
  for (auto g : {path_graph(2), cycle_graph(4), path_graph(4)}) {
    RaagModel m(g);
    for (const auto& y : m.ball(m.identity(), 4)) {
      auto iv = m.interval(m.identity(), y);
      auto ref = m.interval_halfspaces(iv);
      std::set<std::tuple<int, std::vector<int>, bool>> want;
      for (const auto& h : ref)
        want.insert({h.v, oracle::keys(h.anchor.word()), h.toward});
      for (const auto& ext : iv.order.linear_extensions()) {
        std::set<std::tuple<int, std::vector<int>, bool>> got;
        Trace p = m.identity();
        for (auto i : ext) {
          auto h = m.edge_halfspace(p, iv.word[i]);
          got.insert({h.v, oracle::keys(h.anchor.word()), h.toward});
          p = multiply(p, Trace::from_canonical(g, Word{iv.word[i]}));
        }
        CHECK(got == want);
        CHECK(p == y);
      }
    }
  }
}

TEST_CASE("left action is an automorphism") {
  auto g = cycle_graph(4);
  RaagModel m(g);
  auto ball = m.ball(m.identity(), 2);
  auto hs = region_halfspaces(m, ball);
  for (const char* gw : {"a", "b,c^-1", "a,b,a^-1", "d,d"}) {
    Trace t = T(g, gw);
    for (const auto& h : hs) {
      for (const auto& z : ball)
        CHECK(m.contains(m.act(t, h), m.act(t, z)) == m.contains(h, z));
      for (const auto& k : hs)
        CHECK(m.relation(m.act(t, h), m.act(t, k)) == m.relation(h, k));
    }
    for (const auto& y : ball) {
      auto a = m.interval_halfspaces(m.interval(m.identity(), y));
      auto b = m.interval_halfspaces(m.interval(t, m.act(t, y)));
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(m.act(t, a[i]) == b[i]);
    }
  }
}

TEST_CASE("transverse and tightly nested pairs carry matching labels") {
  for (auto g : {cycle_graph(4), path_graph(4), cycle_graph(5)}) {
    RaagModel m(g);
    auto hs = region_halfspaces(m, m.ball(m.identity(), 2));
    for (const auto& h : hs)
      for (const auto& k : hs) {
        if (m.relation(h, k) == Relation::Transverse)
          CHECK(g.adjacent(h.v, k.v));
        if (m.tightly_nested(h, k))
          CHECK_FALSE(g.adjacent(h.v, k.v));
      }
  }
}

TEST_CASE("covering chains are tightly nested") {
  for (auto g : {cycle_graph(4), path_graph(3), free_group_graph(2)}) {
    RaagModel m(g);
    for (const auto& y : m.ball(m.identity(), 4)) {
      auto iv = m.interval(m.identity(), y);
      auto hs = m.interval_halfspaces(iv);
      for (std::size_t l : {2U, 3U})
        for (const auto& c : covering_chains(iv.order, l)) {
          CHECK(is_realizable(c, iv.order));
          for (std::size_t i = 0; i + 1 < c.size(); ++i)
            CHECK(m.tightly_nested(hs[c[i]], hs[c[i + 1]]));
        }
    }
  }
}

TEST_CASE("realizability needs nothing outside the chain in between") {
  Poset p(4);
  p.add_relation(0, 1);
  p.add_relation(0, 2);
  p.add_relation(1, 3);
  p.add_relation(2, 3);
  p.close();
  CHECK_FALSE(is_realizable({0, 1, 3}, p));
  CHECK(is_realizable({0, 1}, p));
  CHECK(is_realizable({2, 3}, p));
}

TEST_CASE("signed labels, action and median") {
  auto g = cycle_graph(4);
  RaagModel m(g);
  auto y = T(g, "a,c^-1,b");
  auto iv = m.interval(m.identity(), y);
  Word all = lambda_pm(m.interval_halfspaces(iv));
  OccurrenceChain every(iv.size());
  std::iota(every.begin(), every.end(), 0U);
  CHECK(all == lambda_pm(iv, every));
  CHECK(all == y.word());
  CHECK(m.act(T(g, "b"), T(g, "a")) == T(g, "b,a"));

  oracle::Product prod({0, 1, 0, 1});
  auto ball = m.ball(m.identity(), 2);
  for (const auto& a : ball)
    for (const auto& b : ball) {
      auto got = m.median(m.identity(), a, b);
      auto want = prod.median(prod.identity(), prod.from_word(a.word()), prod.from_word(b.word()));
      CHECK(prod.key(prod.from_word(got.word())) == prod.key(want));
    }
}

TEST_CASE("heads and tails") {
  auto g = path_graph(2);
  RaagModel m(g);
  auto h = m.edge_halfspace(m.identity(), {0, 1});
  auto heads = m.heads(h, 2);
  std::set<std::vector<int>> got, want;
  for (const auto& p : heads)
    got.insert(oracle::keys(p.word()));
  for (const char* w : {"", "b", "b^-1", "b,b", "b^-1,b^-1"})
    want.insert(oracle::keys(T(g, w).word()));
  CHECK(got == want);
  for (const auto& p : heads)
    CHECK_FALSE(m.contains(h, p));
  for (const auto& p : m.tails(h, 2))
    CHECK(m.contains(h, p));
  CHECK(m.heads(h, 0).size() == 1);

  StaircaseModel st;
  for (const auto& p : st.heads(st.hx(), 3)) {
    CHECK(st.valid(p));
    CHECK_FALSE(st.contains(st.hx(), p));
  }
  for (const auto& p : st.tails(st.hy(), 3)) {
    CHECK(st.valid(p));
    CHECK(st.contains(st.hy(), p));
  }
}

TEST_CASE("staircase search") {
  auto f2g = free_group_graph(2);
  RaagModel tree(f2g);
  auto r = staircase_search(tree, region_halfspaces(tree, tree.ball(tree.identity(), 3)), 8);
  CHECK(r.length == 1);
  auto z2g = path_graph(2);
  RaagModel z2(z2g);
  CHECK(staircase_search(z2, region_halfspaces(z2, z2.ball(z2.identity(), 4)), 8).length == 1);
  StaircaseModel st;
  for (long n : {2L, 3L, 4L}) {
    auto s = staircase_search(st, st.box_halfspaces(n + 1), 10);
    CHECK(s.length == n);
    for (std::size_t i = 0; i < s.h_chain.size(); ++i) {
      CHECK(st.relation(s.h_chain[i], s.k_chain[i]) == Relation::KInH);
      for (std::size_t j = 0; j < i; ++j)
        CHECK(st.relation(s.h_chain[i], s.k_chain[j]) == Relation::Transverse);
    }
  }
}

TEST_CASE("ball sizes") {
  auto f2g = free_group_graph(2);
  RaagModel f2(f2g);
  CHECK(f2.ball(f2.identity(), 0).size() == 1);
  CHECK(f2.ball(f2.identity(), 1).size() == 5);
  auto e = path_graph(2);
  RaagModel z2(e);
  CHECK(z2.ball(z2.identity(), 2).size() == 13);
  auto c4 = cycle_graph(4);
  RaagModel m(c4);
  auto dist = oracle::Product({0, 1, 0, 1}).bfs(3);
  CHECK(m.ball(m.identity(), 3).size() == dist.size());
}

TEST_CASE("staircase model geometry") {
  StaircaseModel st;
  auto pts = stair_box(4);
  for (const auto& a : pts)
    for (const auto& b : pts) {
      auto iv = st.interval(a, b);
      CHECK(iv.size() == st.distance(a, b));
      for (const auto& h : st.interval_halfspaces(iv)) {
        CHECK(st.contains(h, b));
        CHECK_FALSE(st.contains(h, a));
      }
    }
  CHECK(st.act(3, StairVertex{0, 1}) == StairVertex{3, 4});
  CHECK(st.act(3, st.hx()) == StairHalfspace{1, 3, true});
}

TEST_CASE("wedge translates of the standard segment") {
  for (int n = 1; n <= 4; ++n) {
    WedgeModel w(n);
    const auto lo = w.corner(-1), hi = w.corner(1);
    // Images under every pair of coordinate permutations, enumerated here.
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::set<std::pair<int, int>> images;
    do {
      std::vector<int> tau(sigma.size());
      std::iota(tau.begin(), tau.end(), 0);
      do {
        images.insert({sigma[0], tau[0]});
      } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    CHECK(images.size() == static_cast<std::size_t>(n * n));

    long inside = 0;
    for (auto [i, j] : images) {
      WedgeHalfspace hm{i, -1, false}, hp{j, 1, true};
      bool sep = w.contains(hm, hi) && !w.contains(hm, lo) && w.contains(hp, hi) &&
                 !w.contains(hp, lo);
      if (sep && w.tightly_nested(hm, hp))
        ++inside;
    }
    CHECK(inside == n * n);

    auto s = w.standard_segment();
    CHECK(f_s(w, s, lo, hi) == n * n);
    CHECK(f_s(w, s, lo, w.origin()) == 0);
    CHECK(f_s(w, s, w.origin(), hi) == 0);
    CHECK(delta_f_s(w, s, lo, w.origin(), hi) == -n * n);
    const std::size_t fact[] = {1, 1, 2, 6, 24};
    CHECK(w.group().size() == fact[n] * fact[n]);
  }
}
