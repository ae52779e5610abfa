#include "mqm/raag_model.hpp"

#include "mqm/error.hpp"

#include <algorithm>

namespace mqm {

bool is_rigid(const DefiningGraph& g, std::span<const Letter> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].gen != w[i + 1].gen && g.adjacent(w[i].gen, w[i + 1].gen))
      return false;
  return true;
}

RaagSegment make_segment(const DefiningGraph& g, Word w) {
  if (w.empty())
    throw DomainError("segment: empty word");
  if (!is_reduced(g, w))
    throw DomainError("segment: word '" + format_word(g, w) + "' is not reduced");
  if (!is_rigid(g, w))
    throw DomainError("segment: word '" + format_word(g, w) +
                      "' has commuting consecutive letters");
  return RaagSegment{std::move(w)};
}

RaagSegment parse_segment(const DefiningGraph& g, std::string_view text) {
  return make_segment(g, parse_word(g, text));
}

RaagModel::RaagModel(const DefiningGraph& g, std::optional<int> sigma)
    : g_(&g), dim_(max_clique_size(g)), sigma_(sigma) {
  // Edgeless graphs give trees, whose staircase length is 1.
  if (!sigma_ && g.edge_count() == 0)
    sigma_ = 1;
}

RaagModel::Vertex RaagModel::median(const Vertex& x, const Vertex& y,
                                    const Vertex& z) const {
  Trace xi = invert(x);
  return multiply(x, prefix_meet(multiply(xi, y), multiply(xi, z)));
}

std::vector<RaagModel::Vertex> RaagModel::neighbors(const Vertex& x) const {
  std::vector<Vertex> out;
  for (int v = 0; v < static_cast<int>(g_->size()); ++v)
    for (int s : {1, -1})
      out.push_back(multiply(x, generator(*g_, v, s)));
  return out;
}

std::vector<RaagModel::Vertex> RaagModel::ball(const Vertex& x, std::size_t r,
                                               std::size_t budget) const {
  auto b = enumerate_ball(*g_, r, budget);
  if (!x.is_identity())
    for (auto& t : b)
      t = multiply(x, t);
  return b;
}

bool RaagModel::contains(const Halfspace& h, const Vertex& z) const {
  // z lies on the side of anchor*v iff |z^-1 anchor v| < |z^-1 anchor|,
  // i.e. z^-1 anchor can end with v^-1.
  Word t = reduced_concat(*g_, inverse(z.word()), h.anchor.word());
  bool toward_side =
      word_can_end_with(*g_, t, Letter{h.v, static_cast<std::int8_t>(-1)});
  return toward_side == h.toward;
}

RaagModel::Halfspace RaagModel::edge_halfspace(const Vertex& g, Letter l) const {
  const GeneratorSet lk = g_->link_mask(l.gen);
  if (l.sign > 0)
    return {l.gen, coset_canonical_rep(g, lk), true};
  Trace start = multiply(g, generator(*g_, l.gen, -1));
  return {l.gen, coset_canonical_rep(start, lk), false};
}

RaagModel::Vertex RaagModel::inner_endpoint(const Halfspace& h) const {
  return h.toward ? multiply(h.anchor, generator(*g_, h.v)) : h.anchor;
}

RaagModel::Vertex RaagModel::outer_endpoint(const Halfspace& h) const {
  return h.toward ? h.anchor : multiply(h.anchor, generator(*g_, h.v));
}

RaagModel::Interval RaagModel::interval(const Vertex& x, const Vertex& y) const {
  Trace d = multiply(invert(x), y);
  Poset order = heap(d);
  return Interval{x, d.word(), std::move(order)};
}

RaagModel::Halfspace RaagModel::interval_halfspace(const Interval& iv,
                                                   std::size_t i) const {
  // The canonical word is a linear extension, so its first i letters form
  // a prefix containing every predecessor of occurrence i.
  Trace p = reduce(*g_, std::span<const Letter>(iv.word.data(), i));
  return edge_halfspace(multiply(iv.base, p), iv.word[i]);
}

std::vector<RaagModel::Halfspace>
RaagModel::interval_halfspaces(const Interval& iv) const {
  std::vector<Halfspace> out;
  out.reserve(iv.size());
  Trace g = iv.base;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    out.push_back(edge_halfspace(g, iv.word[i]));
    g = multiply(g, Trace::from_canonical(*g_, Word{iv.word[i]}));
  }
  return out;
}

RaagModel::Halfspace RaagModel::act(const Group& g, const Halfspace& h) const {
  return {h.v, coset_canonical_rep(multiply(g, h.anchor), g_->link_mask(h.v)),
          h.toward};
}

namespace {

// Occurrence of the hyperplane of h in the interval, or -1.
int find_occurrence(const RaagModel& m, const RaagInterval& iv,
                    const RaagHalfspace& h) {
  Trace g = iv.base;
  const auto& G = m.graph();
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (iv.word[i].gen == h.v && m.edge_halfspace(g, iv.word[i]).same_hyperplane(h))
      return static_cast<int>(i);
    g = multiply(g, Trace::from_canonical(G, Word{iv.word[i]}));
  }
  return -1;
}

} // namespace

Relation RaagModel::relation(const Halfspace& h, const Halfspace& k) const {
  if (h.same_hyperplane(k))
    return h.toward == k.toward ? Relation::Equal : Relation::Complement;

  // Each dual edge sits on one side of the other hyperplane.
  const bool eh_in_k = contains(k, h.anchor);
  const bool ek_in_h = contains(h, k.anchor);
  // x: endpoint of e_H away from e_K; y: endpoint of e_K away from e_H.
  const Vertex x = ek_in_h ? outer_endpoint(h) : inner_endpoint(h);
  const Vertex y = eh_in_k ? outer_endpoint(k) : inner_endpoint(k);
  const Interval iv = interval(x, y);
  const int ih = find_occurrence(*this, iv, h);
  const int ik = find_occurrence(*this, iv, k);
  if (ih < 0 || ik < 0)
    throw Error("relation: witness interval misses a hyperplane");
  if (!iv.order.comparable(static_cast<std::size_t>(ih),
                           static_cast<std::size_t>(ik)))
    return Relation::Transverse;

  // Sides containing y are "plus"; h is H+ iff e_K lies in h.
  const bool h_plus = ek_in_h;
  const bool k_plus = !eh_in_k;
  if (ih < ik) { // H+ strictly contains K+
    if (h_plus && k_plus)
      return Relation::KInH;
    if (h_plus)
      return Relation::Covering;
    if (k_plus)
      return Relation::Disjoint;
    return Relation::HInK;
  }
  // K+ strictly contains H+
  if (h_plus && k_plus)
    return Relation::HInK;
  if (h_plus)
    return Relation::Disjoint;
  if (k_plus)
    return Relation::Covering;
  return Relation::KInH;
}

bool RaagModel::tightly_nested(const Halfspace& h, const Halfspace& k) const {
  if (relation(h, k) != Relation::KInH)
    return false;
  const Interval iv = interval(outer_endpoint(h), inner_endpoint(k));
  const int ih = find_occurrence(*this, iv, h);
  const int ik = find_occurrence(*this, iv, k);
  if (ih < 0 || ik < 0)
    throw Error("tightly_nested: witness interval misses a hyperplane");
  return iv.order.covers(static_cast<std::size_t>(ih),
                         static_cast<std::size_t>(ik));
}

std::vector<RaagModel::Vertex>
RaagModel::dual_endpoints(const Halfspace& h, std::size_t window,
                          bool inside) const {
  std::vector<Vertex> out;
  const Trace v = generator(*g_, h.v);
  // inside xor toward picks the anchor-side endpoint.
  const bool use_anchor = inside != h.toward;
  for (const auto& u : enumerate_parabolic_ball(*g_, g_->link_mask(h.v), window)) {
    Trace base = multiply(h.anchor, u);
    out.push_back(use_anchor ? base : multiply(base, v));
  }
  return out;
}

std::vector<RaagModel::Vertex> RaagModel::heads(const Halfspace& h,
                                                std::size_t window) const {
  return dual_endpoints(h, window, false);
}

std::vector<RaagModel::Vertex> RaagModel::tails(const Halfspace& h,
                                                std::size_t window) const {
  return dual_endpoints(h, window, true);
}

int RaagModel::epsilon(const Segment& s, const Interval& iv,
                       const OccurrenceChain& chain) const {
  const std::size_t l = s.length();
  if (chain.size() != l)
    return 0;
  bool forward = true, backward = true;
  for (std::size_t i = 0; i < l; ++i) {
    Letter got = iv.word[chain[i]];
    forward = forward && got == s.word[i];
    backward = backward && got == s.word[l - 1 - i].inverse();
  }
  if (!forward && !backward)
    return 0;
  if (!is_realizable(chain, iv.order))
    return 0;
  return forward ? 1 : -1;
}

bool RaagModel::chain_viable(const Segment& s, const Interval& iv,
                             const OccurrenceChain& prefix) const {
  const std::size_t l = s.length();
  bool forward = true, backward = true;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    Letter got = iv.word[prefix[i]];
    forward = forward && got == s.word[i];
    backward = backward && got == s.word[l - 1 - i].inverse();
  }
  return forward || backward;
}

std::string RaagModel::format(const Halfspace& h) const {
  return "(" + g_->name(h.v) + ", [" + h.anchor.str() + "], " +
         (h.toward ? "toward" : "away") + ")";
}

Word lambda_pm(const RaagInterval& iv, const OccurrenceChain& chain) {
  Word out;
  for (auto i : chain)
    out.push_back(iv.word[i]);
  return out;
}

Word lambda_pm(const std::vector<RaagHalfspace>& hs) {
  Word out;
  for (const auto& h : hs)
    out.push_back(h.label());
  return out;
}

} // namespace mqm
