#include "mqm/cup_lab.hpp"

#include "mqm/algorithms.hpp"
#include "mqm/parallel.hpp"

#include <cstdlib>
#include <unordered_map>

namespace mqm {

CupHypothesis cup_label_hypothesis(const DefiningGraph& g, const RaagSegment& s,
                                   const RaagSegment& r) {
  if (s.word.empty() || r.word.empty())
    throw DomainError("cup_label_hypothesis: empty segment");
  CupHypothesis h;
  for (Letter a : {s.word.front(), s.word.back()})
    for (Letter b : {r.word.front(), r.word.back()}) {
      bool adj = g.adjacent(a.gen, b.gen);
      h.pairs.push_back({a.gen, b.gen, adj});
      h.holds = h.holds && !adj;
    }
  return h;
}

CupTables build_cup_tables(const RaagModel& m, const RaagSegment& s,
                           const RaagSegment& r, const CupOptions& opt) {
  CupTables t;
  t.ball = m.ball(m.identity(), opt.radius);
  const std::size_t N = t.ball.size();
  const auto N2 = N * N, N3 = N2 * N;
  if (static_cast<double>(N3) * static_cast<double>(N) > static_cast<double>(opt.budget))
    throw BudgetExceeded("cup tables: ball of " + std::to_string(N) +
                         " vertices exceeds the tuple budget");
  const unsigned W = opt.workers;

  t.fs.assign(N2, 0);
  t.fr.assign(N2, 0);
  parallel_chunks(N, W, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        t.fs[i * N + j] = f_s(m, s, t.ball[i], t.ball[j]);
        t.fr[i * N + j] = f_s(m, r, t.ball[i], t.ball[j]);
      }
  });

  t.kappa.assign(N3, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        long v = t.fr[j * N + k] - t.fr[i * N + k] + t.fr[i * N + j];
        t.kappa[(i * N + j) * N + k] = v;
        t.kappa_sup_ball = std::max(t.kappa_sup_ball, std::labs(v));
      }
  t.kappa_sup_used = t.kappa_sup_ball;

  // f_r(p, ball[k]) for every head or tail p feeding kappa-tilde.
  std::unordered_map<Trace, std::vector<long>, TraceHash> from;
  auto row = [&](const Trace& p) -> const std::vector<long>& {
    auto it = from.find(p);
    if (it != from.end())
      return it->second;
    std::vector<long> v(N);
    for (std::size_t k = 0; k < N; ++k)
      v[k] = f_s(m, r, p, t.ball[k]);
    return from.emplace(p, std::move(v)).first->second;
  };

  t.eta2.assign(N3, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j)
        continue;
      const auto iv = m.interval(t.ball[i], t.ball[j]);
      iv.order.for_each_covering_chain(
          s.length(),
          [&](const OccurrenceChain& c) {
            const int eps = m.epsilon(s, iv, c);
            if (eps == 0)
              return;
            const auto heads = m.heads(m.interval_halfspace(iv, c.front()), opt.window);
            const auto tails = m.tails(m.interval_halfspace(iv, c.back()), opt.window);
            if (heads.empty() || tails.empty())
              throw Error("cup tables: no head or tail within the window");
            const auto& fa = row(heads.front());
            const auto& fw = row(tails.front());
            for (std::size_t k = 0; k < N; ++k) {
              const long base = t.fr[j * N + k];
              const long ka = base - fa[k] + fa[j];
              const long kw = base - fw[k] + fw[j];
              t.kappa_sup_used = std::max({t.kappa_sup_used, std::labs(ka), std::labs(kw)});
              t.eta2[(i * N + j) * N + k] += eps * (ka + kw);
            }
          },
          [&](const OccurrenceChain& p) { return m.chain_viable(s, iv, p); });
    }
  t.heads_used = from.size();

  t.beta2.assign(N3 * N, 0);
  parallel_chunks(N, W, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t a = b; a < e; ++a)
      for (std::size_t bb = 0; bb < N; ++bb)
        for (std::size_t c = 0; c < N; ++c)
          for (std::size_t d = 0; d < N; ++d) {
            const long v = 2 * t.fs[a * N + bb] * t.kappa[(bb * N + c) * N + d] +
                           t.eta2[(bb * N + c) * N + d] - t.eta2[(a * N + c) * N + d] +
                           t.eta2[(a * N + bb) * N + d] - t.eta2[(a * N + bb) * N + c];
            t.beta2[((a * N + bb) * N + c) * N + d] = v;
          }
  });
  return t;
}

CupReport cup_vanishing_report(const RaagModel& m, const RaagSegment& s,
                               const RaagSegment& r, const CupOptions& opt) {
  CupReport rep;
  rep.hypothesis = cup_label_hypothesis(m.graph(), s, r);
  rep.sigma = m.staircase_bound();
  rep.d = m.dim();
  rep.window = opt.window;
  if (!rep.hypothesis.holds && !opt.run_anyway)
    return rep;

  const CupTables t = build_cup_tables(m, s, r, opt);
  const std::size_t N = t.ball.size();
  rep.scanned = true;
  rep.ball_size = N;
  rep.kappa_sup = Rational(t.kappa_sup_used);

  long best = -1;
  for (std::size_t q = 0; q < t.beta2.size(); ++q)
    if (std::labs(t.beta2[q]) > best) {
      best = std::labs(t.beta2[q]);
      rep.beta_argmax = {q / (N * N * N), (q / (N * N)) % N, (q / N) % N, q % N};
    }
  rep.beta_tuples = t.beta2.size();
  rep.beta_sup = Rational(best, 2);

  struct Part {
    std::uint64_t tuples = 0, failures = 0;
    std::optional<std::array<std::size_t, 5>> first;
  };
  std::vector<Part> parts(std::max(1U, opt.workers));
  const auto B = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return t.beta2[((a * N + b) * N + c) * N + d];
  };
  parallel_chunks(N, opt.workers, [&](std::size_t lo, std::size_t hi, unsigned ch) {
    Part p;
    for (std::size_t a = lo; a < hi; ++a)
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t c = 0; c < N; ++c) {
          const long dfs = t.fs[b * N + c] - t.fs[a * N + c] + t.fs[a * N + b];
          for (std::size_t d = 0; d < N; ++d)
            for (std::size_t e = 0; e < N; ++e) {
              const long lhs = B(b, c, d, e) - B(a, c, d, e) + B(a, b, d, e) -
                               B(a, b, c, e) + B(a, b, c, d);
              const long rhs = 2 * dfs * t.kappa[(c * N + d) * N + e];
              ++p.tuples;
              if (lhs != rhs) {
                if (!p.first)
                  p.first = std::array<std::size_t, 5>{a, b, c, d, e};
                ++p.failures;
              }
            }
        }
    parts[ch] = p;
  });
  for (const auto& p : parts) {
    rep.tuples += p.tuples;
    rep.failures += p.failures;
    if (!rep.first_failure && p.first)
      rep.first_failure = p.first;
  }

  if (rep.sigma) {
    long mult = 3 * static_cast<long>(s.length() - 1) * *rep.sigma;
    for (std::size_t i = 0; i < s.length(); ++i)
      mult *= rep.d;
    rep.bound = Rational(mult) * rep.kappa_sup;
    rep.bound_respected = rep.beta_sup <= *rep.bound;
  }
  return rep;
}

HeadConstancyReport head_constancy(const RaagModel& m, const RaagSegment& s,
                                   const RaagSegment& r, std::size_t radius,
                                   std::size_t window) {
  HeadConstancyReport rep;
  rep.window = window;
  const auto ball = m.ball(m.identity(), radius);
  const auto translates = collect_translates(m, s, ball);
  rep.translates = translates.size();
  auto scan = [&](const std::vector<Trace>& pts, bool at_head) {
    for (const auto& x : ball) {
      const long ref = f_s(m, r, pts.front(), x);
      for (std::size_t i = 1; i < pts.size(); ++i) {
        const long v = f_s(m, r, pts[i], x);
        ++rep.checks;
        if (v != ref) {
          rep.counterexample = HeadConstancyWitness{at_head, pts.front(), pts[i], x, ref, v};
          return false;
        }
      }
    }
    return true;
  };
  for (const auto& t : translates)
    if (!scan(m.heads(t.first, window), true) || !scan(m.tails(t.last, window), false))
      break;
  return rep;
}

} // namespace mqm
