#pragma once

#include "mqm/halfspace.hpp"
#include "mqm/trace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mqm {

/// Halfspace of the universal cover of the Salvetti complex.
///
/// The hyperplane is the one dual to the edge (anchor, anchor*v); anchor is
/// the minimal representative of its coset modulo <lk(v)>, so two edges are
/// dual to the same hyperplane iff (v, anchor) agree. `toward` selects the
/// side containing anchor*v.
struct RaagHalfspace {
  std::uint8_t v = 0;
  Trace anchor;
  bool toward = true;

  bool operator==(const RaagHalfspace& o) const {
    return v == o.v && toward == o.toward && anchor == o.anchor;
  }
  bool same_hyperplane(const RaagHalfspace& o) const {
    return v == o.v && anchor == o.anchor;
  }
  /// Signed label: v for the side toward v, v^-1 otherwise.
  Letter label() const { return {v, static_cast<std::int8_t>(toward ? 1 : -1)}; }
};

struct RaagHalfspaceHash {
  std::size_t operator()(const RaagHalfspace& h) const noexcept {
    return TraceHash{}(h.anchor) * 131 + h.v * 2 + (h.toward ? 1 : 0);
  }
};

/// Rigid reduced word: consecutive letters are equal or span a non-edge.
struct RaagSegment {
  Word word;
  std::size_t length() const { return word.size(); }
};

/// Checks rigidity and reducedness; throws DomainError otherwise.
RaagSegment make_segment(const DefiningGraph& g, Word w);
RaagSegment parse_segment(const DefiningGraph& g, std::string_view text);
bool is_rigid(const DefiningGraph& g, std::span<const Letter> w);

/// [x, y] as the heap of x^-1 y based at x.
struct RaagInterval {
  Trace base;
  Word word;
  Poset order;
  std::size_t size() const { return word.size(); }
};

/// Vertices are group elements; the group acts by left multiplication.
class RaagModel {
public:
  using Vertex = Trace;
  using Halfspace = RaagHalfspace;
  using Group = Trace;
  using Segment = RaagSegment;
  using Interval = RaagInterval;

  explicit RaagModel(const DefiningGraph& g, std::optional<int> sigma = {});

  const DefiningGraph& graph() const { return *g_; }
  std::string kind() const { return "raag"; }
  int dim() const { return dim_; }
  /// Declared staircase length; unset means no certified value.
  std::optional<int> staircase_bound() const { return sigma_; }
  void set_staircase_bound(std::optional<int> s) { sigma_ = s; }

  Vertex identity() const { return Trace(*g_); }
  std::size_t distance(const Vertex& x, const Vertex& y) const {
    return mqm::distance(x, y);
  }
  Vertex median(const Vertex& x, const Vertex& y, const Vertex& z) const;
  std::vector<Vertex> neighbors(const Vertex& x) const;
  std::vector<Vertex> ball(const Vertex& x, std::size_t r,
                           std::size_t budget = 5'000'000) const;

  bool contains(const Halfspace& h, const Vertex& z) const;
  Halfspace complement(const Halfspace& h) const {
    return {h.v, h.anchor, !h.toward};
  }
  /// Halfspace dual to the edge (g, g*l), on the side of g*l.
  Halfspace edge_halfspace(const Vertex& g, Letter l) const;
  /// Endpoints of the canonical dual edge inside / outside h.
  Vertex inner_endpoint(const Halfspace& h) const;
  Vertex outer_endpoint(const Halfspace& h) const;

  Interval interval(const Vertex& x, const Vertex& y) const;
  /// Halfspace of occurrence i, oriented toward the far end.
  Halfspace interval_halfspace(const Interval& iv, std::size_t i) const;
  std::vector<Halfspace> interval_halfspaces(const Interval& iv) const;
  Letter interval_label(const Interval& iv, std::size_t i) const {
    return iv.word[i];
  }

  Vertex act(const Group& g, const Vertex& x) const { return multiply(g, x); }
  Halfspace act(const Group& g, const Halfspace& h) const;

  Relation relation(const Halfspace& h, const Halfspace& k) const;
  bool tightly_nested(const Halfspace& h, const Halfspace& k) const;

  /// Endpoints of dual edges of h on the complement side (heads) or on h
  /// itself (tails), for carrier offsets u in <lk v> with |u| <= window.
  std::vector<Vertex> heads(const Halfspace& h, std::size_t window) const;
  std::vector<Vertex> tails(const Halfspace& h, std::size_t window) const;
  /// Single head / tail exists iff lk(v) is empty.
  bool heads_complete(const Halfspace& h) const {
    return g_->link_mask(h.v) == 0;
  }

  int epsilon(const Segment& s, const Interval& iv,
              const OccurrenceChain& chain) const;
  bool chain_viable(const Segment& s, const Interval& iv,
                    const OccurrenceChain& prefix) const;

  std::string format(const Vertex& x) const { return x.str(); }
  std::string format(const Halfspace& h) const;

private:
  const DefiningGraph* g_;
  int dim_;
  std::optional<int> sigma_;

  std::vector<Vertex> dual_endpoints(const Halfspace& h, std::size_t window,
                                     bool inside) const;
};

/// Signed labels of a chain read from an interval.
Word lambda_pm(const RaagInterval& iv, const OccurrenceChain& chain);
/// Signed labels of a halfspace sequence.
Word lambda_pm(const std::vector<RaagHalfspace>& hs);

} // namespace mqm
