#include "mqm/quasimorphism.hpp"

#include "mqm/algorithms.hpp"
#include "mqm/error.hpp"

#include <algorithm>
#include <bit>

namespace mqm {

bool freely_reduced(std::span<const Letter> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == w[i].inverse())
      return false;
  return true;
}

Word free_reduce(std::span<const Letter> w) {
  Word out;
  for (auto l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

namespace {

void require_reduced(std::span<const Letter> w, const char* what) {
  if (!freely_reduced(w))
    throw DomainError(std::string(what) + ": word is not reduced");
}

bool occurs_at(std::span<const Letter> w, std::span<const Letter> g,
               std::size_t i) {
  return std::equal(w.begin(), w.end(), g.begin() + static_cast<std::ptrdiff_t>(i));
}

} // namespace

std::size_t count_overlapping(std::span<const Letter> w, std::span<const Letter> g) {
  require_reduced(w, "count_overlapping");
  require_reduced(g, "count_overlapping");
  if (w.empty() || w.size() > g.size())
    return 0;
  std::size_t c = 0;
  for (std::size_t i = 0; i + w.size() <= g.size(); ++i)
    if (occurs_at(w, g, i))
      ++c;
  return c;
}

std::size_t count_nonoverlapping(std::span<const Letter> w,
                                 std::span<const Letter> g) {
  require_reduced(w, "count_nonoverlapping");
  require_reduced(g, "count_nonoverlapping");
  if (w.empty())
    return 0;
  // Earliest-finishing occurrence first is optimal for equal-length
  // intervals.
  std::size_t c = 0;
  for (std::size_t i = 0; i + w.size() <= g.size();) {
    if (occurs_at(w, g, i)) {
      ++c;
      i += w.size();
    } else {
      ++i;
    }
  }
  return c;
}

long brooks_big(std::span<const Letter> w, std::span<const Letter> g) {
  Word wi = inverse(w);
  return static_cast<long>(count_overlapping(w, g)) -
         static_cast<long>(count_overlapping(wi, g));
}

long brooks_small(std::span<const Letter> w, std::span<const Letter> g) {
  Word wi = inverse(w);
  return static_cast<long>(count_nonoverlapping(w, g)) -
         static_cast<long>(count_nonoverlapping(wi, g));
}

bool is_self_overlapping(std::span<const Letter> w) {
  for (std::size_t u = 1; u < w.size(); ++u)
    if (std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(u),
                   w.end() - static_cast<std::ptrdiff_t>(u)))
      return true;
  return false;
}

bool is_subword(std::span<const Letter> needle, std::span<const Letter> hay) {
  if (needle.size() > hay.size())
    return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i)
    if (occurs_at(needle, hay, i))
      return true;
  return false;
}

std::vector<Word> reduced_words(int rank, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int g = 0; g < rank; ++g)
        for (int s : {1, -1}) {
          Letter l{static_cast<std::uint8_t>(g), static_cast<std::int8_t>(s)};
          if (!w.empty() && w.back() == l.inverse())
            continue;
          Word x = w;
          x.push_back(l);
          next.push_back(std::move(x));
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

HomogenizeEstimate homogenize(const std::function<long(const Trace&)>& f,
                              const Trace& gamma, long N,
                              std::optional<long> defect) {
  if (N < 1)
    throw DomainError("homogenize: N must be positive");
  HomogenizeEstimate e;
  e.n = N;
  e.value = f(power(gamma, N));
  e.estimate = Rational(e.value, N);
  if (defect) {
    e.lower = e.estimate - Rational(*defect, N);
    e.upper = e.estimate + Rational(*defect, N);
  }
  return e;
}

std::vector<RaagHalfspace> segment_along(const RaagModel& m, const Trace& x,
                                         std::span<const Letter> w) {
  std::vector<RaagHalfspace> out;
  Trace g = x;
  for (auto l : w) {
    out.push_back(m.edge_halfspace(g, l));
    g = multiply(g, Trace::from_canonical(m.graph(), Word{l}));
  }
  return out;
}

long f_s_x(const RaagModel& m, const RaagSegment& s, const Trace& x,
           const Trace& gamma) {
  return f_s(m, s, x, multiply(gamma, x));
}

GammaNested max_gamma_nested_segment(const RaagModel& m, const Trace& gamma,
                                     const Trace& x) {
  if (gamma.is_identity())
    throw HypothesisFailure("max_gamma_nested_segment: gamma is trivial");
  const auto iv = m.interval(x, multiply(gamma, x));
  const auto hs = m.interval_halfspaces(iv);
  for (std::size_t l = iv.size(); l >= 1; --l) {
    std::optional<OccurrenceChain> found;
    iv.order.for_each_covering_chain(
        l,
        [&](const OccurrenceChain& c) {
          if (!found &&
              m.tightly_nested(hs[c.back()], m.act(gamma, hs[c.front()])))
            found = c;
        },
        [&](const OccurrenceChain&) { return !found.has_value(); });
    if (!found)
      continue;
    GammaNested out;
    out.chain = *found;
    for (auto i : out.chain) {
      out.halfspaces.push_back(hs[i]);
      out.labels.push_back(iv.word[i]);
    }
    out.realizable = is_realizable(out.chain, iv.order);
    if (out.realizable && is_rigid(m.graph(), out.labels))
      out.segment = make_segment(m.graph(), out.labels);
    return out;
  }
  throw HypothesisFailure("max_gamma_nested_segment: no gamma-nested chain in [x, gamma x]");
}

Word retract(std::span<const Letter> w, GeneratorSet f) {
  Word kept;
  for (auto l : w)
    if ((f >> l.gen) & 1U)
      kept.push_back(l);
  return free_reduce(kept);
}

SeparatingWitness separating_witness(const DefiningGraph& g, GeneratorSet f,
                                     std::span<const Letter> w) {
  if (!is_independent(g, f))
    throw DomainError("separating_witness: F is not independent");
  const int nf = std::popcount(f);
  if (nf < 2 || nf >= static_cast<int>(g.size()))
    throw DomainError("separating_witness: need 2 <= |F| < |V(G)|");
  if (w.empty() || !freely_reduced(w) || w.front() == w.back().inverse())
    throw DomainError("separating_witness: w must be cyclically reduced");
  GeneratorSet used = 0;
  for (auto l : w)
    used |= GeneratorSet{1} << l.gen;
  if (used != f)
    throw DomainError("separating_witness: the letters of w must be exactly F");

  SeparatingWitness out;
  for (int v = 0; v < static_cast<int>(g.size()) && out.v < 0; ++v) {
    if (!((f >> v) & 1U))
      continue;
    for (int u = 0; u < static_cast<int>(g.size()); ++u)
      if (!((f >> u) & 1U) && !g.adjacent(v, u)) {
        out.v = v;
        out.v_prime = u;
        break;
      }
  }
  if (out.v < 0)
    throw HypothesisFailure(
        "separating_witness: every vertex outside F is adjacent to every "
        "vertex of F, so <F> is a direct factor");
  const auto v = static_cast<std::uint8_t>(out.v);

  // Rotate the trailing v-block to the front.
  std::size_t tail = 0;
  while (tail < w.size() && w[w.size() - 1 - tail].gen == v)
    ++tail;
  Word wt(w.end() - static_cast<std::ptrdiff_t>(tail), w.end());
  wt.insert(wt.end(), w.begin(), w.end() - static_cast<std::ptrdiff_t>(tail));

  auto flip = [&](Word& x) {
    for (auto& l : x)
      if (l.gen == v)
        l = l.inverse();
  };
  auto first = std::find_if(wt.begin(), wt.end(), [&](Letter l) { return l.gen == v; });
  out.flipped = first->sign < 0;
  if (out.flipped)
    flip(wt);

  auto p = static_cast<std::size_t>(
      std::find_if(wt.begin(), wt.end(), [&](Letter l) { return l.gen == v; }) -
      wt.begin());
  std::size_t q = p;
  while (q < wt.size() && wt[q].gen == v)
    ++q;
  out.k = static_cast<int>(q - p);
  out.w1.assign(wt.begin(), wt.begin() + static_cast<std::ptrdiff_t>(p));
  out.w2.assign(wt.begin() + static_cast<std::ptrdiff_t>(q), wt.end());

  const Letter vp{v, 1}, vm{v, -1};
  const Letter other{static_cast<std::uint8_t>(out.v_prime), 1};
  Word wp = out.w1;
  wp.insert(wp.end(), static_cast<std::size_t>(out.k), vm);
  wp.push_back(other);
  wp.insert(wp.end(), static_cast<std::size_t>(3 * out.k), vp);
  wp.push_back(other);
  wp.insert(wp.end(), static_cast<std::size_t>(out.k), vm);
  wp.insert(wp.end(), out.w2.begin(), out.w2.end());

  if (out.flipped) {
    flip(wp);
    flip(wt);
    flip(out.w1);
    flip(out.w2);
  }
  out.w_tilde = std::move(wt);
  out.w_prime = std::move(wp);
  return out;
}

BrooksDistanceWitness brooks_distance_witness(int rank, std::span<const Letter> w,
                                              std::span<const Letter> w_prime) {
  if (rank < 2)
    throw HypothesisFailure("brooks_distance_witness: symmetrized basis has fewer than 4 letters");
  require_reduced(w, "brooks_distance_witness");
  require_reduced(w_prime, "brooks_distance_witness");
  if (w.empty() || w_prime.empty())
    throw DomainError("brooks_distance_witness: empty word");
  if (std::equal(w.begin(), w.end(), w_prime.begin(), w_prime.end()))
    throw DomainError("brooks_distance_witness: w = w' has nothing to separate");

  std::vector<Letter> basis;
  for (int g = 0; g < rank; ++g)
    for (int s : {1, -1})
      basis.push_back({static_cast<std::uint8_t>(g), static_cast<std::int8_t>(s)});

  std::optional<Letter> a, b;
  for (auto c : basis)
    if (w.front() != c.inverse() && w_prime.front() != c && w_prime.back() != c) {
      a = c;
      break;
    }
  if (!a)
    throw HypothesisFailure("brooks_distance_witness: no admissible first letter");
  for (auto c : basis)
    if (c != a->inverse() && w.back() != c.inverse() && w_prime.back() != c) {
      b = c;
      break;
    }
  if (!b)
    throw HypothesisFailure("brooks_distance_witness: no admissible last letter");

  BrooksDistanceWitness out{*a, *b, 0, {}};
  out.k = static_cast<int>(std::max(w.size(), w_prime.size())) + 1;
  out.witness.insert(out.witness.end(), static_cast<std::size_t>(out.k), *a);
  out.witness.insert(out.witness.end(), w.begin(), w.end());
  out.witness.insert(out.witness.end(), static_cast<std::size_t>(out.k), *b);
  return out;
}

} // namespace mqm
