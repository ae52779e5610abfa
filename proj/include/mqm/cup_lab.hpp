#pragma once

#include "mqm/cochain.hpp"
#include "mqm/raag_model.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace mqm {

/// First/last labels of s against first/last labels of r.
struct CupHypothesis {
  struct Pair {
    int s_gen, r_gen;
    bool adjacent;
  };
  std::vector<Pair> pairs;
  bool holds = true;
};

CupHypothesis cup_label_hypothesis(const DefiningGraph& g, const RaagSegment& s,
                                   const RaagSegment& r);

/// Tabulated f_s, f_r, kappa = delta f_r, 2 eta and 2 beta on a ball around
/// the identity. Index order is row-major with the first argument slowest.
struct CupTables {
  std::vector<Trace> ball;
  std::vector<long> fs, fr;  // N^2
  std::vector<long> kappa;   // N^3
  std::vector<long> eta2;    // N^3
  std::vector<long> beta2;   // N^4
  long kappa_sup_ball = 0;   // over ball tuples
  long kappa_sup_used = 0;   // also over the head/tail tuples feeding eta
  std::size_t heads_used = 0;
};

struct CupOptions {
  std::size_t radius = 2;
  std::size_t window = 0;
  unsigned workers = 1;
  bool run_anyway = false;
  std::uint64_t budget = 50'000'000; // cap on N^4
};

CupTables build_cup_tables(const RaagModel& m, const RaagSegment& s,
                           const RaagSegment& r, const CupOptions& opt);

struct CupReport {
  CupHypothesis hypothesis;
  bool scanned = false;
  std::size_t ball_size = 0;
  // delta beta = delta f_s cup kappa on every 5-tuple of the ball.
  std::uint64_t tuples = 0;
  std::uint64_t failures = 0;
  std::optional<std::array<std::size_t, 5>> first_failure;
  std::uint64_t beta_tuples = 0;
  Rational beta_sup;   // scanned supremum
  std::array<std::size_t, 4> beta_argmax{};
  Rational kappa_sup;  // scanned over ball tuples and head/tail tuples
  std::optional<int> sigma;
  int d = 0;
  std::optional<Rational> bound;
  bool bound_respected = false;
  std::size_t window = 0;
};

CupReport cup_vanishing_report(const RaagModel& m, const RaagSegment& s,
                               const RaagSegment& r, const CupOptions& opt);

struct HeadConstancyWitness {
  bool at_head = true;
  Trace p, q, x;
  long value_p = 0, value_q = 0;
};

struct HeadConstancyReport {
  std::size_t translates = 0;
  std::uint64_t checks = 0;
  std::size_t window = 0;
  std::optional<HeadConstancyWitness> counterexample;
};

/// f_r(p, x) over the heads p of each translate of s (and over the tails),
/// for x in the radius ball. Translates are those found in intervals of the
/// same ball. Stops at the first counterexample.
HeadConstancyReport head_constancy(const RaagModel& m, const RaagSegment& s,
                                   const RaagSegment& r, std::size_t radius,
                                   std::size_t window);

} // namespace mqm
