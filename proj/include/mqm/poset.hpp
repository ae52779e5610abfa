#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace mqm {

/// Finite strict partial order on {0, ..., n-1} stored as successor bitsets.
///
/// Elements are always numbered along some linear extension, so i < j in
/// the order implies i < j as integers. Every poset built in this library
/// (heaps, H-intervals) satisfies that.
class Poset {
public:
  Poset() = default;
  explicit Poset(std::size_t n);

  std::size_t size() const { return n_; }

  /// Records i < j (requires i < j as integers). Call close() afterwards.
  void add_relation(std::size_t i, std::size_t j);
  /// Transitive closure; establishes the cover lists.
  void close();

  bool less(std::size_t i, std::size_t j) const {
    return (succ_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  bool comparable(std::size_t i, std::size_t j) const {
    return i < j ? less(i, j) : less(j, i);
  }
  /// i is covered by j: i < j with nothing strictly between.
  bool covers(std::size_t i, std::size_t j) const;

  const std::vector<std::uint32_t>& upper_covers(std::size_t i) const {
    return up_[i];
  }
  const std::vector<std::uint32_t>& lower_covers(std::size_t i) const {
    return down_[i];
  }

  /// Number of elements strictly between i and j.
  std::size_t between_count(std::size_t i, std::size_t j) const;
  /// True iff some element outside `chain` lies strictly between its
  /// first and last members. `chain` must be increasing.
  bool has_outside_between(const std::vector<std::uint32_t>& chain) const;

  bool is_antichain() const;
  bool is_total() const;

  /// Calls `f` on every chain c_1 < ... < c_l in which each step is a cover.
  /// `viable(prefix)` may prune partial chains; it sees prefixes of length
  /// 1..l.
  void for_each_covering_chain(
      std::size_t l,
      const std::function<void(const std::vector<std::uint32_t>&)>& f,
      const std::function<bool(const std::vector<std::uint32_t>&)>& viable =
          nullptr) const;

  /// Order ideals (down-closed subsets) as bit masks; needs size() <= 63.
  std::vector<std::uint64_t> ideals() const;

  /// Every linear extension, for small posets only.
  std::vector<std::vector<std::uint32_t>> linear_extensions() const;

private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> succ_;
  std::vector<std::vector<std::uint32_t>> up_;
  std::vector<std::vector<std::uint32_t>> down_;

  void set(std::size_t i, std::size_t j) {
    succ_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
};

} // namespace mqm
