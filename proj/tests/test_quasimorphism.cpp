#include "mqm/algorithms.hpp"
#include "mqm/error.hpp"
#include "mqm/quasimorphism.hpp"
#include "mqm/staircase_model.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mqm;

namespace {

Word W(const DefiningGraph& g, const char* w) { return parse_word(g, w); }
Trace T(const DefiningGraph& g, const char* w) { return parse_trace(g, w); }

std::size_t naive_overlapping(const Word& w, const Word& g) {
  std::size_t c = 0;
  for (std::size_t i = 0; i + w.size() <= g.size(); ++i)
    c += std::equal(w.begin(), w.end(), g.begin() + static_cast<std::ptrdiff_t>(i)) ? 1 : 0;
  return c;
}

Word free_power(const Word& w, long n) {
  Word out;
  for (long i = 0; i < n; ++i)
    for (auto l : w)
      oracle::push_free(out, l);
  return out;
}

} // namespace

TEST_CASE("occurrence counts") {
  const auto words = reduced_words(2, 3);
  const auto hosts = reduced_words(2, 6);
  CHECK(words.size() == 4 + 12 + 36);
  for (const auto& w : words)
    for (const auto& g : hosts) {
      REQUIRE(count_overlapping(w, g) == naive_overlapping(w, g));
      REQUIRE(count_nonoverlapping(w, g) == oracle::disjoint_occurrences(w, g));
      REQUIRE(brooks_big(w, g) == static_cast<long>(naive_overlapping(w, g)) -
                                      static_cast<long>(naive_overlapping(inverse(w), g)));
    }
}

TEST_CASE("Brooks examples") {
  auto g = free_group_graph(2);
  CHECK(count_overlapping(W(g, "a,a"), W(g, "a,a,a")) == 2);
  CHECK(count_nonoverlapping(W(g, "a,a"), W(g, "a,a,a")) == 1);
  CHECK(brooks_big(W(g, "a,b"), W(g, "a,b,a,b")) == 2);
  CHECK(brooks_big(W(g, "a,b"), W(g, "b^-1,a^-1")) == -1);
  CHECK(brooks_small(W(g, "a,b,a"), W(g, "a,b,a,b,a")) == 1);
  CHECK(brooks_big(W(g, "a,b,a"), W(g, "a,b,a,b,a")) == 2);
  CHECK(is_self_overlapping(W(g, "a,b,a")));
  CHECK(is_self_overlapping(W(g, "a,a")));
  CHECK_FALSE(is_self_overlapping(W(g, "a,b")));
  CHECK(is_subword(W(g, "b,a"), W(g, "a,b,a")));
  CHECK_THROWS_AS(count_overlapping(W(g, "a,a^-1"), W(g, "a")), DomainError);
  CHECK(free_reduce(W(g, "a,b,b^-1,a^-1,a")) == W(g, "a"));
  for (long n = 1; n <= 6; ++n)
    for (long k = -8; k <= 8; ++k) {
      Word an(static_cast<std::size_t>(n), Letter{0, 1});
      Word ak(static_cast<std::size_t>(std::labs(k)), Letter{0, static_cast<std::int8_t>(k < 0 ? -1 : 1)});
      long want = std::max(0L, std::labs(k) - n + 1) * (k < 0 ? -1 : 1);
      CHECK(brooks_big(an, ak) == want);
    }
}

TEST_CASE("tree counting function matches Brooks") {
  auto g = free_group_graph(2);
  RaagModel m(g);
  const auto ball = m.ball(m.identity(), 4);
  for (const auto& w : reduced_words(2, 2)) {
    const auto s = make_segment(g, w);
    for (const auto& y : ball)
      CHECK(f_s(m, s, m.identity(), y) == brooks_big(w, y.word()));
  }
}

TEST_CASE("counting function against exhaustive nested sequences") {
  for (auto g : {cycle_graph(4), path_graph(3), path_graph(4), free_group_graph(2)}) {
    RaagModel m(g);
    const auto ball = m.ball(m.identity(), 3);
    std::vector<Word> segs;
    for (const auto& w : reduced_words(static_cast<int>(g.size()), 3))
      if (w.size() >= 2 && is_reduced(g, w) && is_rigid(g, w))
        segs.push_back(w);
    for (std::size_t i = 0; i < segs.size(); i += 7) {
      const auto s = make_segment(g, segs[i]);
      for (const auto& x : m.ball(m.identity(), 1))
        for (std::size_t j = 0; j < ball.size(); j += 3)
          CHECK_MESSAGE(f_s(m, s, x, ball[j]) == oracle::f_s_brute(m, segs[i], x, ball[j]),
                        format_word(g, segs[i]) << " " << x.str() << " -> " << ball[j].str());
    }
  }
}

TEST_CASE("counting function is antisymmetric and equivariant") {
  auto g = cycle_graph(4);
  RaagModel m(g);
  const auto s = parse_segment(g, "a,c,a");
  const auto ball = m.ball(m.identity(), 2);
  const Trace t = T(g, "b,a^-1");
  for (const auto& x : ball)
    for (const auto& y : ball) {
      CHECK(f_s(m, s, x, y) == -f_s(m, s, y, x));
      CHECK(f_s(m, s, m.act(t, x), m.act(t, y)) == f_s(m, s, x, y));
    }
}

TEST_CASE("segments through a vertex") {
  auto g = free_group_graph(2);
  RaagModel m(g);
  const auto y = T(g, "a,b,a,b");
  CHECK(segments_through(m, 2, m.identity(), y, T(g, "a,b")) == 1);
  CHECK(segments_through(m, 3, m.identity(), y, T(g, "a,b")) == 2);
  CHECK(segments_through(m, 2, m.identity(), y, m.identity()) == 0);
  CHECK_THROWS_AS(segments_through(m, 2, m.identity(), y, T(g, "b")), DomainError);

  auto c4 = cycle_graph(4);
  RaagModel q(c4);
  // [1, ab] is a square; its two halfspaces are transverse.
  CHECK(segments_through(q, 2, q.identity(), T(c4, "a,b"), T(c4, "a")) == 0);
  CHECK(segments_through(q, 2, q.identity(), T(c4, "a,c"), T(c4, "a")) == 1);
}

TEST_CASE("coboundary scans agree") {
  auto g = free_group_graph(2);
  RaagModel m(g);
  const auto s = parse_segment(g, "a,b");
  const auto ball = m.ball(m.identity(), 2);
  std::vector<std::array<Trace, 3>> triples;
  for (const auto& a : ball)
    for (const auto& b : ball)
      for (const auto& c : ball)
        triples.push_back({a, b, c});
  const auto direct = coboundary_scan(m, s, triples);
  const auto table = coboundary_scan_region(m, s, ball, 2);
  CHECK(direct.max_abs == table.max_abs);
  CHECK(direct.triples == table.triples);
  CHECK(delta_f_s(m, s, table.argmax[0], table.argmax[1], table.argmax[2]) == table.value);
  REQUIRE(direct.bound);
  CHECK(*direct.bound == 3);
  CHECK(direct.bound_respected);
  CHECK(direct.max_abs <= 2);
  CHECK_FALSE(defect_bound(StaircaseModel{}, 2));
}

TEST_CASE("homogenization") {
  auto g = free_group_graph(2);
  const Word w = W(g, "a,b");
  auto f = [&](const Trace& x) { return brooks_big(w, x.word()); };
  const auto e = homogenize(f, T(g, "a,b"), 10, 2);
  CHECK(e.value == 10);
  CHECK(e.estimate == Rational(1));
  CHECK(*e.lower == Rational(4, 5));
  CHECK(*e.upper == Rational(6, 5));
  CHECK(homogenize(f, T(g, "a,b,a"), 6).estimate == Rational(1));
  CHECK_THROWS_AS(homogenize(f, T(g, "a"), 0), DomainError);
}

TEST_CASE("segment along a path") {
  auto g = cycle_graph(4);
  RaagModel m(g);
  const Word w = W(g, "a,c,c,a^-1");
  for (const auto& x : m.ball(m.identity(), 2)) {
    const auto hs = segment_along(m, x, w);
    CHECK(lambda_pm(hs) == w);
    CHECK_FALSE(m.contains(hs.front(), x));
    for (std::size_t i = 0; i + 1 < hs.size(); ++i)
      CHECK(m.tightly_nested(hs[i], hs[i + 1]));
  }
}

TEST_CASE("separating witness") {
  auto p4 = path_graph(4); // a - b - c - d
  const GeneratorSet f = generator_set(p4, {"a", "c"});
  const auto sw = separating_witness(p4, f, W(p4, "a,c"));
  CHECK(p4.name(sw.v) == "a");
  CHECK(p4.name(sw.v_prime) == "d");
  CHECK(sw.k == 1);
  CHECK_FALSE(sw.flipped);
  CHECK(sw.w_prime == W(p4, "a^-1,d,a,a,a,d,a^-1,c"));
  CHECK(retract(sw.w_prime, f) == W(p4, "a,c"));

  RaagModel m(p4);
  const auto s = parse_segment(p4, "a,c");
  const Trace wp = reduce(p4, sw.w_prime);
  for (long n = 1; n <= 4; ++n) {
    const Trace p = power(wp, n);
    CHECK(f_s_x(m, s, m.identity(), p) == 0);
    CHECK(brooks_big(W(p4, "a,c"), retract(p.word(), f)) == n);
  }

  // k follows the length of the v-block.
  const auto sw2 = separating_witness(p4, f, W(p4, "c,a,a"));
  CHECK(sw2.k == 2);
  CHECK(sw2.w_prime == W(p4, "a^-1,a^-1,d,a,a,a,a,a,a,d,a^-1,a^-1,c"));

  auto p3 = path_graph(3);
  CHECK_THROWS_AS(separating_witness(p3, generator_set(p3, {"a", "c"}), W(p3, "a,c")),
                  HypothesisFailure);
  CHECK_THROWS_AS(separating_witness(p4, generator_set(p4, {"a", "b"}), W(p4, "a,b")),
                  DomainError);
  CHECK_THROWS_AS(separating_witness(p4, f, W(p4, "a,c,a^-1")), DomainError);
}

TEST_CASE("distance witness") {
  auto g = free_group_graph(2);
  const Word ab = W(g, "a,b"), ba = W(g, "b,a");
  const auto bw = brooks_distance_witness(2, ab, ba);
  CHECK(bw.a == Letter{1, -1});
  CHECK(bw.b == Letter{0, -1});
  CHECK(bw.k == 3);
  CHECK(bw.witness == W(g, "b^-1,b^-1,b^-1,a,b,a^-1,a^-1,a^-1"));
  for (long n = 1; n <= 6; ++n) {
    const Word p = free_power(bw.witness, n);
    CHECK(brooks_big(ab, p) == n);
    CHECK(brooks_big(ba, p) == -(n - 1));
  }
  CHECK_THROWS_AS(brooks_distance_witness(2, ab, ab), DomainError);
  CHECK_THROWS_AS(brooks_distance_witness(1, W(g, "a"), W(g, "a,a")), HypothesisFailure);
}

TEST_CASE("gamma nested segments") {
  auto g = path_graph(4);
  RaagModel m(g);
  const auto gn = max_gamma_nested_segment(m, T(g, "a,c"), m.identity());
  CHECK(gn.labels == W(g, "a,c"));
  CHECK(gn.realizable);
  REQUIRE(gn.segment);
  for (long n = 1; n <= 5; ++n)
    CHECK(f_s(m, *gn.segment, m.identity(), power(T(g, "a,c"), n)) >= n);
  for (const char* gamma : {"a", "a,a,c"}) {
    const auto r = max_gamma_nested_segment(m, T(g, gamma), m.identity());
    REQUIRE(r.segment);
    for (long n = 1; n <= 5; ++n)
      CHECK(f_s(m, *r.segment, m.identity(), power(T(g, gamma), n)) >= n);
  }
  CHECK_THROWS_AS(max_gamma_nested_segment(m, m.identity(), m.identity()), HypothesisFailure);
}
