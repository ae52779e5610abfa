#include "mqm/poset.hpp"

#include "mqm/error.hpp"

#include <algorithm>
#include <bit>

namespace mqm {

Poset::Poset(std::size_t n)
    : n_(n), words_((n + 63) / 64), succ_(n * ((n + 63) / 64), 0), up_(n),
      down_(n) {}

void Poset::add_relation(std::size_t i, std::size_t j) {
  if (i >= j || j >= n_)
    throw DomainError("poset: relation must point forward");
  set(i, j);
}

void Poset::close() {
  for (std::size_t i = n_; i-- > 0;) {
    std::uint64_t* row = &succ_[i * words_];
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!less(i, j))
        continue;
      const std::uint64_t* other = &succ_[j * words_];
      for (std::size_t w = 0; w < words_; ++w)
        row[w] |= other[w];
    }
  }
  for (auto& v : up_)
    v.clear();
  for (auto& v : down_)
    v.clear();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (less(i, j) && between_count(i, j) == 0) {
        up_[i].push_back(static_cast<std::uint32_t>(j));
        down_[j].push_back(static_cast<std::uint32_t>(i));
      }
}

bool Poset::covers(std::size_t i, std::size_t j) const {
  if (i >= j || !less(i, j))
    return false;
  return std::find(up_[i].begin(), up_[i].end(), j) != up_[i].end();
}

std::size_t Poset::between_count(std::size_t i, std::size_t j) const {
  std::size_t c = 0;
  for (std::size_t k = i + 1; k < j; ++k)
    if (less(i, k) && less(k, j))
      ++c;
  return c;
}

bool Poset::has_outside_between(const std::vector<std::uint32_t>& chain) const {
  if (chain.size() < 2)
    return false;
  const std::size_t a = chain.front(), b = chain.back();
  std::size_t inside = 0;
  for (std::size_t k = a + 1; k < b; ++k)
    if (less(a, k) && less(k, b))
      ++inside;
  // The interior chain members are all strictly between a and b.
  return inside != chain.size() - 2;
}

bool Poset::is_antichain() const {
  return std::all_of(succ_.begin(), succ_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool Poset::is_total() const {
  for (std::size_t i = 0; i + 1 < n_; ++i)
    if (!less(i, i + 1))
      return false;
  return true;
}

void Poset::for_each_covering_chain(
    std::size_t l,
    const std::function<void(const std::vector<std::uint32_t>&)>& f,
    const std::function<bool(const std::vector<std::uint32_t>&)>& viable) const {
  if (l == 0)
    return;
  std::vector<std::uint32_t> chain;
  chain.reserve(l);
  std::function<void()> extend = [&]() {
    if (viable && !viable(chain))
      return;
    if (chain.size() == l) {
      f(chain);
      return;
    }
    for (auto j : up_[chain.back()]) {
      chain.push_back(j);
      extend();
      chain.pop_back();
    }
  };
  for (std::uint32_t i = 0; i < n_; ++i) {
    chain.assign(1, i);
    extend();
  }
}

std::vector<std::uint64_t> Poset::ideals() const {
  if (n_ > 63)
    throw BudgetExceeded("poset: too many elements for ideal enumeration");
  std::vector<std::uint64_t> pred(n_, 0);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (less(i, j))
        pred[j] |= std::uint64_t{1} << i;
  // Ideals in elements 0..k-1, built by deciding element k last; since the
  // numbering is a linear extension, predecessors are already decided.
  std::vector<std::uint64_t> out{0};
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t m = out.size();
    for (std::size_t t = 0; t < m; ++t)
      if ((out[t] & pred[k]) == pred[k])
        out.push_back(out[t] | (std::uint64_t{1} << k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> Poset::linear_extensions() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  std::vector<char> used(n_, 0);
  std::function<void()> rec = [&]() {
    if (cur.size() == n_) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (used[j])
        continue;
      bool ready = true;
      for (std::uint32_t i = 0; i < j && ready; ++i)
        if (!used[i] && less(i, j))
          ready = false;
      if (!ready)
        continue;
      used[j] = 1;
      cur.push_back(j);
      rec();
      cur.pop_back();
      used[j] = 0;
    }
  };
  rec();
  return out;
}

} // namespace mqm
