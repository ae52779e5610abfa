#pragma once

// Model-generic halfspace algorithms. A model M provides Vertex, Halfspace,
// Segment and Interval types plus interval(), epsilon(), chain_viable(),
// contains(), relation(), distance() and neighbors(); see RaagModel.

#include "mqm/error.hpp"
#include "mqm/halfspace.hpp"
#include "mqm/parallel.hpp"

#include <array>
#include <cstdlib>
#include <cstdint>
#include <optional>
#include <vector>

namespace mqm {

/// All chains o_1 < ... < o_l of the poset in which each step is a cover.
std::vector<OccurrenceChain> covering_chains(const Poset& order, std::size_t l);

template <class M>
std::vector<typename M::Halfspace>
chain_halfspaces(const M& m, const typename M::Interval& iv,
                 const OccurrenceChain& chain) {
  std::vector<typename M::Halfspace> out;
  for (auto i : chain)
    out.push_back(m.interval_halfspace(iv, i));
  return out;
}

/// Sum of epsilon_s over the covering l-chains of an interval.
template <class M>
long f_s_on(const M& m, const typename M::Segment& s,
            const typename M::Interval& iv) {
  long total = 0;
  iv.order.for_each_covering_chain(
      s.length(),
      [&](const OccurrenceChain& c) { total += m.epsilon(s, iv, c); },
      [&](const OccurrenceChain& p) { return m.chain_viable(s, iv, p); });
  return total;
}

/// Translates of s in [x,y] minus translates of the reverse of s.
template <class M>
long f_s(const M& m, const typename M::Segment& s, const typename M::Vertex& x,
         const typename M::Vertex& y) {
  if (x == y)
    return 0;
  return f_s_on(m, s, m.interval(x, y));
}

/// f_s(y,z) - f_s(x,z) + f_s(x,y).
template <class M>
long delta_f_s(const M& m, const typename M::Segment& s,
               const typename M::Vertex& x, const typename M::Vertex& y,
               const typename M::Vertex& z) {
  return f_s(m, s, y, z) - f_s(m, s, x, z) + f_s(m, s, x, y);
}

/// Covering l-chains of [x,y] whose first halfspace contains m and whose
/// last one does not. Throws DomainError unless m lies between x and y.
template <class M>
std::size_t segments_through(const M& m, std::size_t l,
                             const typename M::Vertex& x,
                             const typename M::Vertex& y,
                             const typename M::Vertex& mid) {
  if (m.distance(x, mid) + m.distance(mid, y) != m.distance(x, y))
    throw DomainError("segments_through: vertex is not between x and y");
  const auto iv = m.interval(x, y);
  std::vector<char> inside(iv.size());
  for (std::size_t i = 0; i < iv.size(); ++i)
    inside[i] = m.contains(m.interval_halfspace(iv, i), mid) ? 1 : 0;
  std::size_t count = 0;
  iv.order.for_each_covering_chain(l, [&](const OccurrenceChain& c) {
    if (inside[c.front()] && !inside[c.back()])
      ++count;
  });
  return count;
}

/// Halfspaces (both sides) of every hyperplane dual to an edge with both
/// endpoints in `region`.
template <class M>
std::vector<typename M::Halfspace>
region_halfspaces(const M& m, const std::vector<typename M::Vertex>& region) {
  std::vector<typename M::Halfspace> out;
  auto add = [&](const typename M::Halfspace& h) {
    for (const auto& o : out)
      if (o == h)
        return;
    out.push_back(h);
  };
  for (const auto& v : region)
    for (const auto& w : m.neighbors(v)) {
      bool in = false;
      for (const auto& r : region)
        if (r == w) {
          in = true;
          break;
        }
      if (!in)
        continue;
      auto iv = m.interval(v, w);
      auto h = m.interval_halfspace(iv, 0);
      add(h);
      add(m.complement(h));
    }
  return out;
}

template <class H> struct StaircaseResult {
  int length = 0;
  std::vector<H> h_chain;
  std::vector<H> k_chain;
  bool reached_bound = false;
  std::size_t halfspaces = 0;
};

/// Longest staircase (h_1 > ... > h_n, k_1 > ... > k_n) with h_i strictly
/// containing k_i and h_i transverse to k_j for j < i, among `hs`, capped
/// at `bound`. A lower bound for the staircase length of the complex.
template <class M>
StaircaseResult<typename M::Halfspace>
staircase_search(const M& m, const std::vector<typename M::Halfspace>& hs,
                 int bound) {
  using H = typename M::Halfspace;
  const std::size_t n = hs.size();
  const std::size_t W = (n + 63) / 64;
  std::vector<std::uint64_t> strict_in(n * W, 0), transverse(n * W, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      Relation r = m.relation(hs[i], hs[j]);
      if (r == Relation::KInH)
        strict_in[i * W + j / 64] |= std::uint64_t{1} << (j % 64);
      else if (r == Relation::Transverse)
        transverse[i * W + j / 64] |= std::uint64_t{1} << (j % 64);
    }

  StaircaseResult<H> best;
  best.halfspaces = n;
  std::vector<std::size_t> hc, kc;
  auto record = [&] {
    if (static_cast<int>(hc.size()) <= best.length)
      return;
    best.length = static_cast<int>(hc.size());
    best.h_chain.clear();
    best.k_chain.clear();
    for (auto i : hc)
      best.h_chain.push_back(hs[i]);
    for (auto i : kc)
      best.k_chain.push_back(hs[i]);
  };
  // allowed: candidates for the next h.
  auto rec = [&](auto&& self, const std::vector<std::uint64_t>& allowed) -> void {
    record();
    if (best.length >= bound)
      return;
    for (std::size_t w = 0; w < W; ++w)
      for (std::uint64_t bits = allowed[w]; bits; bits &= bits - 1) {
        std::size_t h = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        for (std::size_t w2 = 0; w2 < W; ++w2) {
          std::uint64_t kb = strict_in[h * W + w2];
          if (!kc.empty())
            kb &= strict_in[kc.back() * W + w2];
          for (; kb; kb &= kb - 1) {
            std::size_t k = w2 * 64 + static_cast<std::size_t>(__builtin_ctzll(kb));
            hc.push_back(h);
            kc.push_back(k);
            std::vector<std::uint64_t> next(W);
            for (std::size_t t = 0; t < W; ++t) {
              next[t] = strict_in[h * W + t];
              for (auto kk : kc)
                next[t] &= transverse[kk * W + t];
            }
            self(self, next);
            hc.pop_back();
            kc.pop_back();
            if (best.length >= bound)
              return;
          }
        }
      }
  };
  std::vector<std::uint64_t> all(W, 0);
  for (std::size_t i = 0; i < n; ++i)
    all[i / 64] |= std::uint64_t{1} << (i % 64);
  rec(rec, all);
  best.reached_bound = best.length >= bound;
  return best;
}

/// 3(l-1) sigma d^l, when the model certifies sigma.
template <class M> std::optional<long> defect_bound(const M& m, std::size_t l) {
  const auto sigma = m.staircase_bound();
  if (!sigma || l == 0)
    return std::nullopt;
  long b = 3 * static_cast<long>(l - 1) * *sigma;
  for (std::size_t i = 0; i < l; ++i)
    b *= m.dim();
  return b;
}

template <class V> struct DefectScan {
  long max_abs = 0;
  long value = 0;
  std::array<V, 3> argmax{};
  std::uint64_t triples = 0;
  std::optional<long> bound;
  bool bound_respected = true;
};

/// Exact max |delta f_s| over a list of triples; ties keep the first.
template <class M>
DefectScan<typename M::Vertex>
coboundary_scan(const M& m, const typename M::Segment& s,
                const std::vector<std::array<typename M::Vertex, 3>>& triples) {
  DefectScan<typename M::Vertex> out;
  bool first = true;
  for (const auto& t : triples) {
    long v = delta_f_s(m, s, t[0], t[1], t[2]);
    ++out.triples;
    if (first || std::labs(v) > out.max_abs) {
      out.max_abs = std::labs(v);
      out.value = v;
      out.argmax = t;
      first = false;
    }
  }
  out.bound = defect_bound(m, s.length());
  out.bound_respected = !out.bound || out.max_abs <= *out.bound;
  return out;
}

/// Largest |T[j][k] - T[i][k] + T[i][j]| over all index triples of an
/// antisymmetric n x n table. Ties keep the lexicographically least triple.
struct TripleMax {
  long max_abs = 0;
  long value = 0;
  std::array<std::size_t, 3> argmax{0, 0, 0};
  std::uint64_t triples = 0;
};
TripleMax scan_triples(const std::vector<long>& table, std::size_t n,
                       unsigned workers);

/// Every triple of `region`, via an f_s table and scan_triples.
template <class M>
DefectScan<typename M::Vertex>
coboundary_scan_region(const M& m, const typename M::Segment& s,
                       const std::vector<typename M::Vertex>& region,
                       unsigned workers) {
  const std::size_t n = region.size();
  std::vector<long> table(n * n, 0);
  parallel_chunks(n, workers, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t j = 0; j < n; ++j)
        table[i * n + j] = f_s(m, s, region[i], region[j]);
  });
  const TripleMax t = scan_triples(table, n, workers);
  DefectScan<typename M::Vertex> out;
  out.max_abs = t.max_abs;
  out.value = t.value;
  if (n > 0)
    out.argmax = {region[t.argmax[0]], region[t.argmax[1]], region[t.argmax[2]]};
  out.triples = t.triples;
  out.bound = defect_bound(m, s.length());
  out.bound_respected = !out.bound || out.max_abs <= *out.bound;
  return out;
}

} // namespace mqm
