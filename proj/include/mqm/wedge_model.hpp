#pragma once

#include "mqm/halfspace.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mqm {

/// Vertex of the wedge of [-1,0]^n and [0,1]^n glued at the origin.
/// Unused trailing coordinates stay 0.
struct WedgeVertex {
  std::array<std::int8_t, 4> c{};
  bool operator==(const WedgeVertex&) const = default;
  auto operator<=>(const WedgeVertex&) const = default;
};

/// {v : v[coord] == pole} when at_pole, else its complement.
struct WedgeHalfspace {
  int coord = 0;
  int pole = 1;
  bool at_pole = true;
  bool operator==(const WedgeHalfspace&) const = default;
  auto operator<=>(const WedgeHalfspace&) const = default;
};

/// Pair of permutations acting on the negative and the positive cube.
struct WedgeGroup {
  std::array<std::uint8_t, 4> minus{0, 1, 2, 3};
  std::array<std::uint8_t, 4> plus{0, 1, 2, 3};
};

struct WedgeSegment {
  std::vector<WedgeHalfspace> halfspaces;
  std::size_t length() const { return halfspaces.size(); }
};

struct WedgeInterval {
  std::vector<WedgeHalfspace> halfspaces;
  Poset order;
  std::size_t size() const { return halfspaces.size(); }
};

/// Finite truncation X_n (1 <= n <= 4) with Gamma_n = S_n x S_n; every
/// query is answered by brute force over the 2^(n+1) - 1 vertices.
class WedgeModel {
public:
  using Vertex = WedgeVertex;
  using Halfspace = WedgeHalfspace;
  using Group = WedgeGroup;
  using Segment = WedgeSegment;
  using Interval = WedgeInterval;

  explicit WedgeModel(int n);

  std::string kind() const { return "wedge"; }
  int n() const { return n_; }
  int dim() const { return n_; }
  /// No proper chain of halfspaces has length above 2.
  std::optional<int> staircase_bound() const { return std::nullopt; }

  Vertex origin() const { return {}; }
  /// The all -1 corner (sign = -1) or the all +1 corner (sign = +1).
  Vertex corner(int sign) const;
  /// {v_1 != -1}, dual to the first edge of X^-.
  static Halfspace h_minus() { return {0, -1, false}; }
  /// {v_1 == +1}, dual to the first edge of X^+.
  static Halfspace h_plus() { return {0, 1, true}; }
  static Segment standard_segment() { return {{h_minus(), h_plus()}}; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::vector<Halfspace> halfspaces() const;
  const std::vector<Group>& group() const { return group_; }

  bool valid(const Vertex& v) const;
  std::size_t distance(const Vertex& a, const Vertex& b) const;
  Vertex median(const Vertex& a, const Vertex& b, const Vertex& c) const;
  std::vector<Vertex> neighbors(const Vertex& v) const;

  bool contains(const Halfspace& h, const Vertex& v) const {
    return (v.c[static_cast<std::size_t>(h.coord)] == h.pole) == h.at_pole;
  }
  Halfspace complement(const Halfspace& h) const {
    return {h.coord, h.pole, !h.at_pole};
  }

  Interval interval(const Vertex& a, const Vertex& b) const;
  Halfspace interval_halfspace(const Interval& iv, std::size_t i) const {
    return iv.halfspaces[i];
  }
  std::vector<Halfspace> interval_halfspaces(const Interval& iv) const {
    return iv.halfspaces;
  }

  Vertex act(const Group& g, const Vertex& v) const;
  Halfspace act(const Group& g, const Halfspace& h) const;

  bool subset(const Halfspace& h, const Halfspace& k) const;
  Relation relation(const Halfspace& h, const Halfspace& k) const;
  bool tightly_nested(const Halfspace& h, const Halfspace& k) const;

  std::vector<Vertex> heads(const Halfspace& h, std::size_t window = 0) const;
  std::vector<Vertex> tails(const Halfspace& h, std::size_t window = 0) const;

  int epsilon(const Segment& s, const Interval& iv,
              const OccurrenceChain& chain) const;
  bool chain_viable(const Segment&, const Interval&,
                    const OccurrenceChain&) const {
    return true;
  }

  std::string format(const Vertex& v) const;
  std::string format(const Halfspace& h) const;

private:
  int n_;
  std::vector<Vertex> vertices_;
  std::vector<Group> group_;
};

} // namespace mqm
