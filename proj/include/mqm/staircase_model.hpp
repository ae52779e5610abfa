#pragma once

#include "mqm/halfspace.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mqm {

/// Vertex (x, y) of the infinite staircase, x <= y.
struct StairVertex {
  long x = 0;
  long y = 0;
  bool operator==(const StairVertex&) const = default;
  auto operator<=>(const StairVertex&) const = default;
};

/// {coordinate > level} when `upper`, else {coordinate <= level}.
/// axis 0 reads the x coordinate, axis 1 the y coordinate.
struct StairHalfspace {
  int axis = 0;
  long level = 0;
  bool upper = true;
  bool operator==(const StairHalfspace&) const = default;
  auto operator<=>(const StairHalfspace&) const = default;
};

struct StairSegment {
  std::vector<StairHalfspace> halfspaces;
  std::size_t length() const { return halfspaces.size(); }
};

struct StairInterval {
  std::vector<StairHalfspace> halfspaces;
  Poset order;
  std::size_t size() const { return halfspaces.size(); }
};

/// The square complex on {(x, y) in Z^2 : x <= y}; Z shifts the diagonal.
/// It has infinite staircase length, so no defect bound is available.
class StaircaseModel {
public:
  using Vertex = StairVertex;
  using Halfspace = StairHalfspace;
  using Group = long;
  using Segment = StairSegment;
  using Interval = StairInterval;

  std::string kind() const { return "staircase"; }
  int dim() const { return 2; }
  std::optional<int> staircase_bound() const { return std::nullopt; }

  /// {y > 0}, dual to ((0,0),(0,1)).
  static Halfspace hx() { return {1, 0, true}; }
  /// {x > 0}, dual to ((0,1),(1,1)).
  static Halfspace hy() { return {0, 0, true}; }
  /// The segment (hx, hy).
  static Segment standard_segment() { return {{hx(), hy()}}; }

  bool valid(const Vertex& v) const { return v.x <= v.y; }
  std::size_t distance(const Vertex& a, const Vertex& b) const;
  Vertex median(const Vertex& a, const Vertex& b, const Vertex& c) const;
  std::vector<Vertex> neighbors(const Vertex& v) const;
  std::vector<Vertex> ball(const Vertex& v, std::size_t r) const;

  bool contains(const Halfspace& h, const Vertex& v) const;
  Halfspace complement(const Halfspace& h) const {
    return {h.axis, h.level, !h.upper};
  }

  Interval interval(const Vertex& a, const Vertex& b) const;
  Halfspace interval_halfspace(const Interval& iv, std::size_t i) const {
    return iv.halfspaces[i];
  }
  std::vector<Halfspace> interval_halfspaces(const Interval& iv) const {
    return iv.halfspaces;
  }

  Vertex act(Group g, const Vertex& v) const { return {v.x + g, v.y + g}; }
  Halfspace act(Group g, const Halfspace& h) const {
    return {h.axis, h.level + g, h.upper};
  }

  /// h subset of k, as vertex sets.
  bool subset(const Halfspace& h, const Halfspace& k) const;
  Relation relation(const Halfspace& h, const Halfspace& k) const;
  bool tightly_nested(const Halfspace& h, const Halfspace& k) const;

  std::vector<Vertex> heads(const Halfspace& h, std::size_t window) const;
  std::vector<Vertex> tails(const Halfspace& h, std::size_t window) const;

  int epsilon(const Segment& s, const Interval& iv,
              const OccurrenceChain& chain) const;
  bool chain_viable(const Segment&, const Interval&,
                    const OccurrenceChain&) const {
    return true;
  }

  std::string format(const Vertex& v) const;
  std::string format(const Halfspace& h) const;

  /// Halfspaces of hyperplanes meeting the box 0 <= x <= y <= side-1.
  std::vector<Halfspace> box_halfspaces(long side) const;

private:
  std::vector<Vertex> dual_endpoints(const Halfspace& h, std::size_t window,
                                     bool inside) const;
};

} // namespace mqm
