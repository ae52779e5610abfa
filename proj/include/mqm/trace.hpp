#pragma once

#include "mqm/defining_graph.hpp"
#include "mqm/poset.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mqm {

/// A standard generator or its inverse.
struct Letter {
  std::uint8_t gen = 0;
  std::int8_t sign = 1;

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  /// Sort key: generator order first, then v before v^-1.
  int key() const { return 2 * gen + (sign < 0 ? 1 : 0); }

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter& o) const { return key() <=> o.key(); }
};

using Word = std::vector<Letter>;

Word inverse(std::span<const Letter> w);

/// "a,b^-1,a" -> letters. Whitespace around tokens is ignored; the empty
/// string is the empty word. Throws ParseError naming the bad token.
Word parse_word(const DefiningGraph& g, std::string_view text);
std::string format_word(const DefiningGraph& g, std::span<const Letter> w);
std::vector<std::string> word_tokens(const DefiningGraph& g,
                                     std::span<const Letter> w);

/// Free reduction plus commutation: true iff no cancellation is possible.
bool is_reduced(const DefiningGraph& g, std::span<const Letter> w);

/// Element of A(G) held as the lexicographically least reduced word.
class Trace {
public:
  /// Placeholder with no graph; only assignment is meaningful.
  Trace() = default;
  explicit Trace(const DefiningGraph& g) : g_(&g) {}

  const DefiningGraph& graph() const { return *g_; }
  const Word& word() const { return w_; }
  std::size_t length() const { return w_.size(); }
  bool is_identity() const { return w_.empty(); }

  /// Wraps a word that is already canonical. Unchecked.
  static Trace from_canonical(const DefiningGraph& g, Word w) {
    Trace t(g);
    t.w_ = std::move(w);
    return t;
  }

  bool operator==(const Trace& o) const { return g_ == o.g_ && w_ == o.w_; }
  /// Shortlex order on canonical words.
  bool operator<(const Trace& o) const;

  std::string str() const { return format_word(*g_, w_); }

private:
  const DefiningGraph* g_ = nullptr;
  Word w_;
};

struct TraceHash {
  std::size_t operator()(const Trace& t) const noexcept;
};

/// Canonical trace of an arbitrary word over V(G)^±.
Trace reduce(const DefiningGraph& g, std::span<const Letter> letters);
Trace parse_trace(const DefiningGraph& g, std::string_view text);
Trace generator(const DefiningGraph& g, int v, int sign = 1);

Trace multiply(const Trace& x, const Trace& y);
Trace invert(const Trace& x);
inline std::size_t length(const Trace& x) { return x.length(); }
inline Trace operator*(const Trace& x, const Trace& y) { return multiply(x, y); }
Trace power(const Trace& x, long n);

/// D(x, y) = |x^-1 y|.
std::size_t distance(const Trace& x, const Trace& y);

/// Dependence order of the occurrences of a word: positions i < j are
/// directly related when their generators are equal or not adjacent.
Poset heap(const DefiningGraph& g, std::span<const Letter> w);
inline Poset heap(const Trace& x) { return heap(x.graph(), x.word()); }

/// Lexicographically least linearization of the heap of a reduced word.
Word canonical_linearization(const DefiningGraph& g, std::span<const Letter> w);

/// Reduced (not canonical) word for a*b, where a is reduced.
Word reduced_concat(const DefiningGraph& g, std::span<const Letter> a,
                    std::span<const Letter> b);
/// True iff the element of the reduced word w can end with `l`.
bool word_can_end_with(const DefiningGraph& g, std::span<const Letter> w,
                       Letter l);

/// True iff x has a reduced expression ending (starting) with `l`.
bool can_end_with(const Trace& x, Letter l);
bool can_start_with(const Trace& x, Letter l);

/// median(1, x, y): the largest common prefix of x and y.
Trace prefix_meet(const Trace& x, const Trace& y);

/// Minimal-length element of g<S>.
Trace coset_canonical_rep(const Trace& g, GeneratorSet s);

/// Membership in the parabolic subgroup <S>.
bool parabolic_member(const Trace& g, GeneratorSet s);

/// All elements of length <= r, in BFS (shortlex) order.
std::vector<Trace> enumerate_ball(const DefiningGraph& g, std::size_t r,
                                  std::size_t budget = 5'000'000);
/// Elements of <S> of length <= r, in BFS order.
std::vector<Trace> enumerate_parabolic_ball(const DefiningGraph& g,
                                            GeneratorSet s, std::size_t r,
                                            std::size_t budget = 5'000'000);

} // namespace mqm
