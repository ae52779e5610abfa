#pragma once

// Bounded cochains on vertex tuples with exact rational values, and the
// explicit primitive of a cup product with a median class.

#include "mqm/algorithms.hpp"
#include "mqm/error.hpp"
#include "mqm/rational.hpp"

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mqm {

template <class V> struct Cochain {
  int degree = 0;
  std::function<Rational(std::span<const V>)> eval;
  std::optional<Rational> claimed_sup;
  bool equivariant = false;
  // Identifies the model the cochain lives on; null for model-free cochains.
  const void* model = nullptr;

  Rational operator()(std::span<const V> t) const {
    if (t.size() != static_cast<std::size_t>(degree) + 1)
      throw DomainError("cochain of degree " + std::to_string(degree) +
                        " evaluated on " + std::to_string(t.size()) + " vertices");
    return eval(t);
  }
  Rational operator()(std::initializer_list<V> t) const {
    return (*this)(std::span<const V>(t.begin(), t.size()));
  }
};

template <class V> Cochain<V> constant_cochain(int degree, Rational value) {
  Cochain<V> c;
  c.degree = degree;
  c.eval = [value](std::span<const V>) { return value; };
  c.claimed_sup = abs(value);
  c.equivariant = true;
  return c;
}

template <class V> Cochain<V> zero_cochain(int degree) {
  return constant_cochain<V>(degree, Rational(0));
}

/// Alternating-sum coboundary.
template <class V> Cochain<V> delta(const Cochain<V>& c) {
  Cochain<V> d;
  d.degree = c.degree + 1;
  d.equivariant = c.equivariant;
  d.model = c.model;
  if (c.claimed_sup)
    d.claimed_sup = *c.claimed_sup * (c.degree + 2);
  d.eval = [c](std::span<const V> t) {
    std::vector<V> face(t.size() - 1);
    Rational sum(0);
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != i)
          face[k++] = t[j];
      Rational v = c.eval(face);
      sum += (i % 2 == 0) ? v : -v;
    }
    return sum;
  };
  return d;
}

/// Front-face / back-face product.
template <class V> Cochain<V> cup(const Cochain<V>& f, const Cochain<V>& g) {
  if (f.model && g.model && f.model != g.model)
    throw DomainError("cup: cochains live on different models");
  Cochain<V> c;
  c.degree = f.degree + g.degree;
  c.equivariant = f.equivariant && g.equivariant;
  c.model = f.model ? f.model : g.model;
  if (f.claimed_sup && g.claimed_sup)
    c.claimed_sup = *f.claimed_sup * *g.claimed_sup;
  const auto p = static_cast<std::size_t>(f.degree);
  c.eval = [f, g, p](std::span<const V> t) {
    return f.eval(t.subspan(0, p + 1)) * g.eval(t.subspan(p));
  };
  return c;
}

/// f_s as an equivariant 1-cochain. The model and segment must outlive it.
template <class M>
Cochain<typename M::Vertex> fs_cochain(const M& m, const typename M::Segment& s) {
  using V = typename M::Vertex;
  Cochain<V> c;
  c.degree = 1;
  c.equivariant = true;
  c.model = &m;
  c.eval = [&m, s](std::span<const V> t) { return Rational(f_s(m, s, t[0], t[1])); };
  return c;
}

/// (g_0, ..., g_n) -> c(g_0 x, ..., g_n x).
template <class M>
Cochain<typename M::Group> pullback_orbit(const M& m,
                                          const Cochain<typename M::Vertex>& c,
                                          const typename M::Vertex& x) {
  using G = typename M::Group;
  using V = typename M::Vertex;
  if (!c.equivariant)
    throw DomainError("pullback_orbit: cochain is not equivariant");
  Cochain<G> out;
  out.degree = c.degree;
  out.equivariant = true;
  out.claimed_sup = c.claimed_sup;
  out.eval = [&m, c, x](std::span<const G> t) {
    std::vector<V> pts;
    pts.reserve(t.size());
    for (const auto& g : t)
      pts.push_back(m.act(g, x));
    return c.eval(pts);
  };
  return out;
}

/// kappa-tilde, eta and beta for a segment s and a degree-n cochain kappa
/// assumed non-transverse to the orbit of s. Heads and tails are taken as
/// the first ones enumerated within `window`.
template <class M> class Primitive {
public:
  using V = typename M::Vertex;

  Primitive(const M& m, typename M::Segment s, Cochain<V> kappa,
            std::size_t window = 0)
      : m_(&m), s_(std::move(s)), kappa_(std::move(kappa)), window_(window) {}

  const typename M::Segment& segment() const { return s_; }
  const Cochain<V>& kappa() const { return kappa_; }
  int degree() const { return kappa_.degree; }

  /// rest = (x_1, ..., x_n).
  Rational kappa_tilde(const typename M::Interval& iv, const OccurrenceChain& t,
                       std::span<const V> rest) const {
    const int eps = m_->epsilon(s_, iv, t);
    if (eps == 0)
      return Rational(0);
    const auto first = m_->interval_halfspace(iv, t.front());
    const auto last = m_->interval_halfspace(iv, t.back());
    const auto heads = m_->heads(first, window_);
    const auto tails = m_->tails(last, window_);
    if (heads.empty() || tails.empty())
      throw Error("kappa_tilde: no head or tail within the enumeration window");
    std::vector<V> tuple(rest.size() + 1);
    std::copy(rest.begin(), rest.end(), tuple.begin() + 1);
    tuple[0] = heads.front();
    Rational a = kappa_(tuple);
    tuple[0] = tails.front();
    Rational w = kappa_(tuple);
    return Rational(eps, 2) * (a + w);
  }

  /// Sum of kappa-tilde(t, x_1, ..., x_n) over covering l-chains t of
  /// [x_0, x_1].
  Rational eta(std::span<const V> x) const {
    if (x.size() != static_cast<std::size_t>(degree()) + 1)
      throw DomainError("eta: wrong tuple length");
    if (x[0] == x[1])
      return Rational(0);
    const auto iv = m_->interval(x[0], x[1]);
    Rational sum(0);
    iv.order.for_each_covering_chain(
        s_.length(),
        [&](const OccurrenceChain& c) { sum += kappa_tilde(iv, c, x.subspan(1)); },
        [&](const OccurrenceChain& p) { return m_->chain_viable(s_, iv, p); });
    return sum;
  }

  /// (f_s cup kappa)(x) + (delta eta)(x).
  Rational beta(std::span<const V> x) const {
    if (x.size() != static_cast<std::size_t>(degree()) + 2)
      throw DomainError("beta: wrong tuple length");
    Rational out = Rational(f_s(*m_, s_, x[0], x[1])) * kappa_(x.subspan(1));
    std::vector<V> face(x.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (j != i)
          face[k++] = x[j];
      Rational e = eta(face);
      out += (i % 2 == 0) ? e : -e;
    }
    return out;
  }

private:
  const M* m_;
  typename M::Segment s_;
  Cochain<V> kappa_;
  std::size_t window_;
};

template <class M> struct PrimitiveBundle {
  typename M::Segment s;
  Cochain<typename M::Vertex> kappa;
  Cochain<typename M::Vertex> eta;
  Cochain<typename M::Vertex> beta;
};

/// The primitive must outlive the bundle.
template <class M>
PrimitiveBundle<M> make_bundle(const M& m, const Primitive<M>& p) {
  using V = typename M::Vertex;
  PrimitiveBundle<M> b{p.segment(), p.kappa(), {}, {}};
  b.eta.degree = p.degree();
  b.eta.equivariant = p.kappa().equivariant;
  b.eta.model = &m;
  b.eta.eval = [&p](std::span<const V> x) { return p.eta(x); };
  b.beta.degree = p.degree() + 1;
  b.beta.equivariant = p.kappa().equivariant;
  b.beta.model = &m;
  b.beta.eval = [&p](std::span<const V> x) { return p.beta(x); };
  return b;
}

/// First and last halfspace of a segment translate.
template <class H> struct TranslateEnds {
  H first;
  H last;
  int epsilon = 0;
};

/// Translates of s or its reverse among the covering l-chains of [x, y]
/// for x, y in `region`, without repetition.
template <class M>
std::vector<TranslateEnds<typename M::Halfspace>>
collect_translates(const M& m, const typename M::Segment& s,
                   const std::vector<typename M::Vertex>& region) {
  std::vector<TranslateEnds<typename M::Halfspace>> out;
  for (const auto& x : region)
    for (const auto& y : region) {
      if (x == y)
        continue;
      const auto iv = m.interval(x, y);
      iv.order.for_each_covering_chain(
          s.length(),
          [&](const OccurrenceChain& c) {
            int e = m.epsilon(s, iv, c);
            if (e == 0)
              return;
            TranslateEnds<typename M::Halfspace> t{
                m.interval_halfspace(iv, c.front()),
                m.interval_halfspace(iv, c.back()), e};
            for (const auto& o : out)
              if (o.first == t.first && o.last == t.last)
                return;
            out.push_back(std::move(t));
          },
          [&](const OccurrenceChain& p) { return m.chain_viable(s, iv, p); });
    }
  return out;
}

template <class V> struct TransversalityWitness {
  bool at_head = true; // heads of the first halfspace, else tails of the last
  V p, q;              // two heads (or tails) with different values
  std::vector<V> tuple;
  Rational value_p, value_q;
};

template <class V> struct NontransversalityResult {
  bool verified = true;
  std::size_t translates = 0;
  std::size_t evaluations = 0;
  std::optional<TransversalityWitness<V>> counterexample;
};

/// Checks that kappa(p, tuple) is constant over the heads (and tails)
/// within `window` of each translate, for each sampled tuple. Stops at the
/// first counterexample.
template <class M>
NontransversalityResult<typename M::Vertex>
nontransversality_check(const M& m, const Cochain<typename M::Vertex>& kappa,
                        const std::vector<TranslateEnds<typename M::Halfspace>>& translates,
                        const std::vector<std::vector<typename M::Vertex>>& tuples,
                        std::size_t window) {
  using V = typename M::Vertex;
  NontransversalityResult<V> res;
  std::vector<V> args(static_cast<std::size_t>(kappa.degree) + 1);
  auto scan = [&](const std::vector<V>& pts, bool at_head) {
    for (const auto& tup : tuples) {
      if (tup.size() + 1 != args.size())
        throw DomainError("nontransversality_check: wrong tuple length");
      std::copy(tup.begin(), tup.end(), args.begin() + 1);
      std::optional<Rational> ref;
      for (const auto& p : pts) {
        args[0] = p;
        Rational v = kappa(args);
        ++res.evaluations;
        if (!ref) {
          ref = v;
          continue;
        }
        if (v != *ref) {
          res.verified = false;
          res.counterexample = TransversalityWitness<V>{at_head, pts.front(), p, tup, *ref, v};
          return false;
        }
      }
    }
    return true;
  };
  for (const auto& t : translates) {
    ++res.translates;
    if (!scan(m.heads(t.first, window), true) || !scan(m.tails(t.last, window), false))
      return res;
  }
  return res;
}

} // namespace mqm
