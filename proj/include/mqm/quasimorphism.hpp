#pragma once

#include "mqm/raag_model.hpp"
#include "mqm/rational.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace mqm {

// --- Brooks counting on free groups -------------------------------------
// Words are freely reduced letter sequences; inputs that are not reduced
// raise DomainError.

bool freely_reduced(std::span<const Letter> w);
/// Free reduction (no commutation).
Word free_reduce(std::span<const Letter> w);

/// C_w(g): possibly overlapping occurrences of w in g.
std::size_t count_overlapping(std::span<const Letter> w, std::span<const Letter> g);
/// c_w(g): maximal number of pairwise disjoint occurrences (greedy).
std::size_t count_nonoverlapping(std::span<const Letter> w,
                                 std::span<const Letter> g);
/// H_w = C_w - C_{w^-1}.
long brooks_big(std::span<const Letter> w, std::span<const Letter> g);
/// h_w = c_w - c_{w^-1}.
long brooks_small(std::span<const Letter> w, std::span<const Letter> g);
/// w = u...u for some nonempty proper prefix u.
bool is_self_overlapping(std::span<const Letter> w);
bool is_subword(std::span<const Letter> needle, std::span<const Letter> hay);

/// All freely reduced words of length 1..max_len over `rank` generators,
/// in shortlex order.
std::vector<Word> reduced_words(int rank, std::size_t max_len);

// --- homogenization -----------------------------------------------------

struct HomogenizeEstimate {
  long n = 0;
  long value = 0;    // f(gamma^n)
  Rational estimate; // value / n
  std::optional<Rational> lower, upper;
};

/// f(gamma^N)/N with the bracket +-D/N when a defect bound D is given.
HomogenizeEstimate homogenize(const std::function<long(const Trace&)>& f,
                              const Trace& gamma, long N,
                              std::optional<long> defect = std::nullopt);

// --- RAAG constructions -------------------------------------------------

/// Halfspaces crossed by the path x, x w_1, x w_1 w_2, ..., oriented
/// forward. For a rigid reduced w this is a segment with head x.
std::vector<RaagHalfspace> segment_along(const RaagModel& m, const Trace& x,
                                         std::span<const Letter> w);

/// f_s(x, gamma x).
long f_s_x(const RaagModel& m, const RaagSegment& s, const Trace& x,
           const Trace& gamma);

struct GammaNested {
  OccurrenceChain chain;
  std::vector<RaagHalfspace> halfspaces;
  Word labels;
  bool realizable = false;
  std::optional<RaagSegment> segment;
};

/// Longest covering chain (h_1, ..., h_l) of [x, gamma x] with h_l tightly
/// containing gamma h_1; ties go to the lexicographically least chain.
/// Throws HypothesisFailure when gamma is trivial or no chain qualifies.
GammaNested max_gamma_nested_segment(const RaagModel& m, const Trace& gamma,
                                     const Trace& x);

struct SeparatingWitness {
  int v = -1;       // generator of F being padded
  int v_prime = -1; // generator outside F, not adjacent to v
  bool flipped = false; // v <-> v^-1 applied before splitting
  Word w_tilde;     // cyclic permutation of w not ending in v^+-1
  Word w1, w2;
  int k = 0;
  Word w_prime;
};

/// w' = w1 v^-k v' v^3k v' v^-k w2 for w over an independent F.
/// Throws DomainError on malformed input and HypothesisFailure when no
/// (v, v') pair exists, i.e. <F> is a direct factor.
SeparatingWitness separating_witness(const DefiningGraph& g, GeneratorSet f,
                                     std::span<const Letter> w);

/// Drops generators outside F and freely reduces.
Word retract(std::span<const Letter> w, GeneratorSet f);

struct BrooksDistanceWitness {
  Letter a, b;
  int k = 0;
  Word witness; // a^k w b^k
};

/// Letters a, b of the symmetrized basis chosen as in the bounded-distance
/// argument, in generator order with v before v^-1. Throws DomainError if
/// w = w' and HypothesisFailure when the basis is too small.
BrooksDistanceWitness brooks_distance_witness(int rank, std::span<const Letter> w,
                                              std::span<const Letter> w_prime);

} // namespace mqm
