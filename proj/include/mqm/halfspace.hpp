#pragma once

#include "mqm/poset.hpp"

#include <string>
#include <vector>

namespace mqm {

/// Position of two halfspaces h, k relative to each other.
enum class Relation {
  Equal,      // h = k
  Complement, // h = complement of k
  Transverse, // all four quadrants nonempty
  HInK,       // h strictly inside k
  KInH,       // k strictly inside h
  Disjoint,   // h inside complement of k
  Covering,   // complement of h inside k
};

std::string to_string(Relation r);

/// Relation of (k, h) given the relation of (h, k).
Relation swapped(Relation r);
/// Relation of (h, complement k) given the relation of (h, k).
Relation with_complement(Relation r);

/// A chain of occurrences inside an interval poset, increasing.
using OccurrenceChain = std::vector<std::uint32_t>;

/// No element outside the chain lies between its first and last members.
inline bool is_realizable(const OccurrenceChain& chain, const Poset& order) {
  return !order.has_outside_between(chain);
}

} // namespace mqm
