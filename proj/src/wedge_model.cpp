#include "mqm/wedge_model.hpp"

#include "mqm/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace mqm {

WedgeModel::WedgeModel(int n) : n_(n) {
  if (n < 1 || n > 4)
    throw DomainError("wedge: n must lie in 1..4");
  for (int sign : {-1, 1})
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (sign > 0 && mask == 0)
        continue; // origin already listed
      Vertex v;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1U)
          v.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(sign);
      vertices_.push_back(v);
    }
  std::sort(vertices_.begin(), vertices_.end());

  std::array<std::uint8_t, 4> p{0, 1, 2, 3};
  std::vector<std::array<std::uint8_t, 4>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  for (const auto& a : perms)
    for (const auto& b : perms)
      group_.push_back({a, b});
}

WedgeModel::Vertex WedgeModel::corner(int sign) const {
  Vertex v;
  for (int i = 0; i < n_; ++i)
    v.c[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(sign);
  return v;
}

std::vector<WedgeModel::Halfspace> WedgeModel::halfspaces() const {
  std::vector<Halfspace> out;
  for (int i = 0; i < n_; ++i)
    for (int pole : {-1, 1})
      for (bool at : {true, false})
        out.push_back({i, pole, at});
  return out;
}

bool WedgeModel::valid(const Vertex& v) const {
  bool neg = false, pos = false;
  for (int i = 0; i < 4; ++i) {
    auto x = v.c[static_cast<std::size_t>(i)];
    if (i >= n_ && x != 0)
      return false;
    neg = neg || x < 0;
    pos = pos || x > 0;
  }
  return !(neg && pos);
}

std::size_t WedgeModel::distance(const Vertex& a, const Vertex& b) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < 4; ++i)
    d += static_cast<std::size_t>(std::abs(a.c[i] - b.c[i]));
  return d;
}

WedgeModel::Vertex WedgeModel::median(const Vertex& a, const Vertex& b,
                                      const Vertex& c) const {
  Vertex m;
  for (std::size_t i = 0; i < 4; ++i)
    m.c[i] = std::max(std::min(a.c[i], b.c[i]),
                      std::min(std::max(a.c[i], b.c[i]), c.c[i]));
  return m;
}

std::vector<WedgeModel::Vertex> WedgeModel::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  for (const auto& w : vertices_)
    if (distance(v, w) == 1)
      out.push_back(w);
  return out;
}

WedgeModel::Interval WedgeModel::interval(const Vertex& a, const Vertex& b) const {
  std::vector<Halfspace> hs;
  for (int i = 0; i < n_; ++i)
    for (int pole : {-1, 1}) {
      bool ina = a.c[static_cast<std::size_t>(i)] == pole;
      bool inb = b.c[static_cast<std::size_t>(i)] == pole;
      if (ina != inb)
        hs.push_back({i, pole, inb});
    }
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

WedgeModel::Vertex WedgeModel::act(const Group& g, const Vertex& v) const {
  bool neg = std::any_of(v.c.begin(), v.c.end(), [](auto x) { return x < 0; });
  const auto& perm = neg ? g.minus : g.plus;
  Vertex out;
  for (std::size_t i = 0; i < 4; ++i)
    out.c[perm[i]] = v.c[i];
  return out;
}

WedgeModel::Halfspace WedgeModel::act(const Group& g, const Halfspace& h) const {
  const auto& perm = h.pole < 0 ? g.minus : g.plus;
  return {perm[static_cast<std::size_t>(h.coord)], h.pole, h.at_pole};
}

bool WedgeModel::subset(const Halfspace& h, const Halfspace& k) const {
  return std::all_of(vertices_.begin(), vertices_.end(), [&](const Vertex& v) {
    return !contains(h, v) || contains(k, v);
  });
}

Relation WedgeModel::relation(const Halfspace& h, const Halfspace& k) const {
  if (h.coord == k.coord && h.pole == k.pole)
    return h.at_pole == k.at_pole ? Relation::Equal : Relation::Complement;
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

bool WedgeModel::tightly_nested(const Halfspace& h, const Halfspace& k) const {
  if (relation(h, k) != Relation::KInH)
    return false;
  for (const auto& p : halfspaces()) {
    if (p == h || p == k)
      continue;
    if (relation(h, p) == Relation::KInH && relation(p, k) == Relation::KInH)
      return false;
  }
  return true;
}

std::vector<WedgeModel::Vertex> WedgeModel::heads(const Halfspace& h,
                                                  std::size_t) const {
  std::vector<Vertex> out;
  const auto i = static_cast<std::size_t>(h.coord);
  for (const auto& v : vertices_) {
    if (v.c[i] != 0)
      continue;
    Vertex w = v;
    w.c[i] = static_cast<std::int8_t>(h.pole);
    if (!valid(w))
      continue;
    out.push_back(contains(h, v) ? w : v);
  }
  return out;
}

std::vector<WedgeModel::Vertex> WedgeModel::tails(const Halfspace& h,
                                                  std::size_t window) const {
  return heads(complement(h), window);
}

int WedgeModel::epsilon(const Segment& s, const Interval& iv,
                        const OccurrenceChain& chain) const {
  const std::size_t l = s.length();
  if (chain.size() != l || l == 0)
    return 0;
  auto in_orbit = [&](const std::vector<Halfspace>& ref) {
    return std::any_of(group_.begin(), group_.end(), [&](const Group& g) {
      for (std::size_t i = 0; i < l; ++i)
        if (!(act(g, ref[i]) == iv.halfspaces[chain[i]]))
          return false;
      return true;
    });
  };
  if (in_orbit(s.halfspaces))
    return 1;
  std::vector<Halfspace> rev;
  for (std::size_t i = l; i-- > 0;)
    rev.push_back(complement(s.halfspaces[i]));
  return in_orbit(rev) ? -1 : 0;
}

std::string WedgeModel::format(const Vertex& v) const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    auto x = v.c[static_cast<std::size_t>(i)];
    s += x < 0 ? '-' : (x > 0 ? '+' : '0');
  }
  return s;
}

std::string WedgeModel::format(const Halfspace& h) const {
  return "{v" + std::to_string(h.coord + 1) + (h.at_pole ? "==" : "!=") +
         (h.pole < 0 ? "-1" : "+1") + "}";
}

} // namespace mqm
