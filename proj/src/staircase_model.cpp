#include "mqm/staircase_model.hpp"

#include "mqm/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace mqm {

namespace {

long coord(const StairVertex& v, int axis) { return axis == 0 ? v.x : v.y; }

long med3(long a, long b, long c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

} // namespace

std::size_t StaircaseModel::distance(const Vertex& a, const Vertex& b) const {
  // The region is orthogonally convex, so graph distance is l1.
  return static_cast<std::size_t>(std::labs(a.x - b.x) + std::labs(a.y - b.y));
}

StaircaseModel::Vertex StaircaseModel::median(const Vertex& a, const Vertex& b,
                                              const Vertex& c) const {
  return {med3(a.x, b.x, c.x), med3(a.y, b.y, c.y)};
}

std::vector<StaircaseModel::Vertex>
StaircaseModel::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  for (Vertex w : {Vertex{v.x - 1, v.y}, Vertex{v.x + 1, v.y},
                   Vertex{v.x, v.y - 1}, Vertex{v.x, v.y + 1}})
    if (valid(w))
      out.push_back(w);
  return out;
}

std::vector<StaircaseModel::Vertex> StaircaseModel::ball(const Vertex& v,
                                                         std::size_t r) const {
  std::vector<Vertex> out;
  const long R = static_cast<long>(r);
  for (long dx = -R; dx <= R; ++dx)
    for (long dy = -R + std::labs(dx); dy <= R - std::labs(dx); ++dy) {
      Vertex w{v.x + dx, v.y + dy};
      if (valid(w))
        out.push_back(w);
    }
  std::sort(out.begin(), out.end(), [&](const Vertex& a, const Vertex& b) {
    auto da = distance(v, a), db = distance(v, b);
    return da != db ? da < db : a < b;
  });
  return out;
}

bool StaircaseModel::contains(const Halfspace& h, const Vertex& v) const {
  return (coord(v, h.axis) > h.level) == h.upper;
}

bool StaircaseModel::subset(const Halfspace& h, const Halfspace& k) const {
  if (h.upper != k.upper)
    return false; // one of them is unbounded where the other is empty
  if (h.upper) {
    // {y>a} in {x>b} fails for points far up-left.
    if (h.axis == 1 && k.axis == 0)
      return false;
    return h.level >= k.level;
  }
  // {x<=a} in {y<=b} fails for points far up.
  if (h.axis == 0 && k.axis == 1)
    return false;
  return h.level <= k.level;
}

Relation StaircaseModel::relation(const Halfspace& h, const Halfspace& k) const {
  if (h.axis == k.axis && h.level == k.level)
    return h.upper == k.upper ? Relation::Equal : Relation::Complement;
  if (subset(h, k))
    return Relation::HInK;
  if (subset(k, h))
    return Relation::KInH;
  if (subset(h, complement(k)))
    return Relation::Disjoint;
  if (subset(complement(h), k))
    return Relation::Covering;
  return Relation::Transverse;
}

bool StaircaseModel::tightly_nested(const Halfspace& h,
                                    const Halfspace& k) const {
  if (relation(h, k) != Relation::KInH)
    return false;
  const long lo = std::min(h.level, k.level) - 1;
  const long hi = std::max(h.level, k.level) + 1;
  for (int axis : {0, 1})
    for (bool upper : {true, false})
      for (long level = lo; level <= hi; ++level) {
        Halfspace p{axis, level, upper};
        if (p == h || p == k)
          continue;
        if (relation(h, p) == Relation::KInH && relation(p, k) == Relation::KInH)
          return false;
      }
  return true;
}

StaircaseModel::Interval StaircaseModel::interval(const Vertex& a,
                                                  const Vertex& b) const {
  std::vector<Halfspace> hs;
  for (int axis : {0, 1}) {
    long ca = coord(a, axis), cb = coord(b, axis);
    for (long l = std::min(ca, cb); l < std::max(ca, cb); ++l)
      hs.push_back({axis, l, cb > ca});
  }
  // Number along a linear extension of reverse inclusion: a halfspace comes
  // after everything strictly containing it.
  std::vector<int> above(hs.size(), 0);
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < hs.size(); ++j)
      if (i != j && relation(hs[j], hs[i]) == Relation::KInH)
        ++above[i];
  std::vector<std::size_t> idx(hs.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) {
    return above[p] != above[q] ? above[p] < above[q] : hs[p] < hs[q];
  });
  Interval iv;
  for (auto i : idx)
    iv.halfspaces.push_back(hs[i]);
  iv.order = Poset(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      if (relation(iv.halfspaces[i], iv.halfspaces[j]) == Relation::KInH)
        iv.order.add_relation(i, j);
  iv.order.close();
  return iv;
}

std::vector<StaircaseModel::Vertex>
StaircaseModel::dual_endpoints(const Halfspace& h, std::size_t window,
                               bool inside) const {
  // Dual edges of level l: on axis 1, (x,l)-(x,l+1) for x <= l; on axis 0,
  // (l,y)-(l+1,y) for y >= l+1. The endpoint with coordinate l+1 lies in
  // the upper side.
  std::vector<Vertex> out;
  const bool high = inside == h.upper;
  const long c = h.level + (high ? 1 : 0);
  for (long t = 0; t <= static_cast<long>(window); ++t) {
    if (h.axis == 1)
      out.push_back({h.level - t, c});
    else
      out.push_back({c, h.level + 1 + t});
  }
  return out;
}

std::vector<StaircaseModel::Vertex>
StaircaseModel::heads(const Halfspace& h, std::size_t window) const {
  return dual_endpoints(h, window, false);
}

std::vector<StaircaseModel::Vertex>
StaircaseModel::tails(const Halfspace& h, std::size_t window) const {
  return dual_endpoints(h, window, true);
}

int StaircaseModel::epsilon(const Segment& s, const Interval& iv,
                            const OccurrenceChain& chain) const {
  const std::size_t l = s.length();
  if (chain.size() != l || l == 0)
    return 0;
  auto in_orbit = [&](const std::vector<Halfspace>& ref) {
    const Halfspace& t0 = iv.halfspaces[chain[0]];
    if (t0.axis != ref[0].axis || t0.upper != ref[0].upper)
      return false;
    const long g = t0.level - ref[0].level;
    for (std::size_t i = 0; i < l; ++i)
      if (!(act(g, ref[i]) == iv.halfspaces[chain[i]]))
        return false;
    return true;
  };
  if (in_orbit(s.halfspaces))
    return 1;
  std::vector<Halfspace> rev;
  for (std::size_t i = l; i-- > 0;)
    rev.push_back(complement(s.halfspaces[i]));
  return in_orbit(rev) ? -1 : 0;
}

std::string StaircaseModel::format(const Vertex& v) const {
  return "[" + std::to_string(v.x) + "," + std::to_string(v.y) + "]";
}

std::string StaircaseModel::format(const Halfspace& h) const {
  return std::string("{") + (h.axis == 0 ? "x" : "y") + (h.upper ? ">" : "<=") +
         std::to_string(h.level) + "}";
}

std::vector<StaircaseModel::Halfspace>
StaircaseModel::box_halfspaces(long side) const {
  std::vector<Halfspace> out;
  for (int axis : {0, 1})
    for (long l = 0; l + 2 <= side; ++l)
      for (bool upper : {true, false})
        out.push_back({axis, l, upper});
  return out;
}

} // namespace mqm
