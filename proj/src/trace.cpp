#include "mqm/trace.hpp"

#include "mqm/error.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace mqm {

namespace {

bool dependent(const DefiningGraph& g, Letter a, Letter b) {
  return a.gen == b.gen || !g.adjacent(a.gen, b.gen);
}

// Appends `l` to a reduced word, cancelling against the last occurrence of
// its generator when every letter after it commutes with that generator.
void push_reduced(const DefiningGraph& g, Word& w, Letter l) {
  for (std::size_t k = w.size(); k-- > 0;) {
    Letter u = w[k];
    if (u.gen == l.gen) {
      if (u.sign != l.sign) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
        return;
      }
      break;
    }
    if (!g.adjacent(u.gen, l.gen))
      break;
  }
  w.push_back(l);
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

} // namespace

Word inverse(std::span<const Letter> w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out)
    l = l.inverse();
  return out;
}

Word parse_word(const DefiningGraph& g, std::string_view text) {
  Word out;
  if (trim(text).empty())
    return out;
  std::size_t start = 0, index = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string tok = trim(text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start));
    int sign = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      std::string exp = tok.substr(caret + 1);
      if (exp == "-1")
        sign = -1;
      else if (exp != "1")
        throw ParseError("word: token " + std::to_string(index) + " '" + tok +
                         "': exponent must be 1 or -1");
      tok.resize(caret);
    }
    int v = g.find(tok);
    if (v < 0)
      throw ParseError("word: token " + std::to_string(index) +
                       ": unknown generator '" + tok + "'");
    out.push_back({static_cast<std::uint8_t>(v), static_cast<std::int8_t>(sign)});
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
    ++index;
  }
  return out;
}

std::vector<std::string> word_tokens(const DefiningGraph& g,
                                     std::span<const Letter> w) {
  std::vector<std::string> out;
  for (auto l : w)
    out.push_back(g.name(l.gen) + (l.sign < 0 ? "^-1" : ""));
  return out;
}

std::string format_word(const DefiningGraph& g, std::span<const Letter> w) {
  std::string s;
  for (auto& t : word_tokens(g, w)) {
    if (!s.empty())
      s += ',';
    s += t;
  }
  return s;
}

bool is_reduced(const DefiningGraph& g, std::span<const Letter> w) {
  Word acc;
  for (auto l : w) {
    std::size_t before = acc.size();
    push_reduced(g, acc, l);
    if (acc.size() < before)
      return false;
  }
  return true;
}

bool Trace::operator<(const Trace& o) const {
  if (w_.size() != o.w_.size())
    return w_.size() < o.w_.size();
  return w_ < o.w_;
}

std::size_t TraceHash::operator()(const Trace& t) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto l : t.word()) {
    h ^= static_cast<std::size_t>(l.key());
    h *= 1099511628211ULL;
  }
  return h;
}

Word canonical_linearization(const DefiningGraph& g, std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::vector<std::vector<std::uint32_t>> out(n);
  std::vector<std::uint32_t> indeg(n, 0);
  // Only the nearest dependent earlier occurrence per generator is needed
  // as a DAG edge; transitivity covers the rest.
  std::vector<int> last(g.size(), -1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (last[v] < 0)
        continue;
      if (v == w[j].gen || !g.adjacent(static_cast<int>(v), w[j].gen)) {
        out[static_cast<std::size_t>(last[v])].push_back(static_cast<std::uint32_t>(j));
        ++indeg[j];
      }
    }
    last[w[j].gen] = static_cast<int>(j);
  }
  using Item = std::pair<int, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::uint32_t j = 0; j < n; ++j)
    if (indeg[j] == 0)
      ready.push({w[j].key(), j});
  Word res;
  res.reserve(n);
  while (!ready.empty()) {
    auto [key, j] = ready.top();
    ready.pop();
    res.push_back(w[j]);
    for (auto k : out[j])
      if (--indeg[k] == 0)
        ready.push({w[k].key(), k});
  }
  return res;
}

Trace reduce(const DefiningGraph& g, std::span<const Letter> letters) {
  Word acc;
  acc.reserve(letters.size());
  for (auto l : letters) {
    if (l.gen >= g.size() || (l.sign != 1 && l.sign != -1))
      throw DomainError("reduce: letter outside the alphabet");
    push_reduced(g, acc, l);
  }
  return Trace::from_canonical(g, canonical_linearization(g, acc));
}

Trace parse_trace(const DefiningGraph& g, std::string_view text) {
  auto w = parse_word(g, text);
  return reduce(g, w);
}

Trace generator(const DefiningGraph& g, int v, int sign) {
  Letter l{static_cast<std::uint8_t>(v), static_cast<std::int8_t>(sign)};
  return Trace::from_canonical(g, Word{l});
}

namespace {

void check_same(const Trace& x, const Trace& y) {
  if (&x.graph() != &y.graph() && !(x.graph() == y.graph()))
    throw DomainError("traces over different defining graphs");
}

} // namespace

Trace multiply(const Trace& x, const Trace& y) {
  check_same(x, y);
  if (y.is_identity())
    return x;
  if (x.is_identity())
    return y;
  const auto& g = x.graph();
  Word acc = x.word();
  for (auto l : y.word())
    push_reduced(g, acc, l);
  return Trace::from_canonical(g, canonical_linearization(g, acc));
}

Trace invert(const Trace& x) {
  const auto& g = x.graph();
  return Trace::from_canonical(g, canonical_linearization(g, inverse(x.word())));
}

Trace power(const Trace& x, long n) {
  Trace base = n < 0 ? invert(x) : x;
  Trace out(x.graph());
  for (long i = 0; i < (n < 0 ? -n : n); ++i)
    out = multiply(out, base);
  return out;
}

std::size_t distance(const Trace& x, const Trace& y) {
  check_same(x, y);
  // |x^-1 y| without canonicalizing: count surviving letters.
  const auto& g = x.graph();
  Word acc = inverse(x.word());
  for (auto l : y.word())
    push_reduced(g, acc, l);
  return acc.size();
}

Poset heap(const DefiningGraph& g, std::span<const Letter> w) {
  Poset p(w.size());
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (dependent(g, w[i], w[j]))
        p.add_relation(i, j);
  p.close();
  return p;
}

Word reduced_concat(const DefiningGraph& g, std::span<const Letter> a,
                    std::span<const Letter> b) {
  Word acc(a.begin(), a.end());
  for (auto l : b)
    push_reduced(g, acc, l);
  return acc;
}

bool can_end_with(const Trace& x, Letter l) {
  return word_can_end_with(x.graph(), x.word(), l);
}

bool word_can_end_with(const DefiningGraph& g, std::span<const Letter> w,
                       Letter l) {
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k].gen == l.gen)
      return w[k].sign == l.sign;
    if (!g.adjacent(w[k].gen, l.gen))
      return false;
  }
  return false;
}

bool can_start_with(const Trace& x, Letter l) {
  const auto& g = x.graph();
  for (auto u : x.word()) {
    if (u.gen == l.gen)
      return u.sign == l.sign;
    if (!g.adjacent(u.gen, l.gen))
      return false;
  }
  return false;
}

namespace {

// Removes the first occurrence of l.gen from w; caller guarantees it is
// heap-minimal and equals l.
void strip_front(Word& w, Letter l) {
  auto it = std::find_if(w.begin(), w.end(),
                         [&](Letter u) { return u.gen == l.gen; });
  w.erase(it);
}

bool starts_with(const DefiningGraph& g, const Word& w, Letter l) {
  for (auto u : w) {
    if (u.gen == l.gen)
      return u.sign == l.sign;
    if (!g.adjacent(u.gen, l.gen))
      return false;
  }
  return false;
}

} // namespace

Trace prefix_meet(const Trace& x, const Trace& y) {
  check_same(x, y);
  const auto& g = x.graph();
  Word a = x.word(), b = y.word(), m;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      Letter l = a[k];
      if (!starts_with(g, a, l) || !starts_with(g, b, l))
        continue;
      strip_front(a, l);
      strip_front(b, l);
      m.push_back(l);
      progress = true;
      break;
    }
  }
  return Trace::from_canonical(g, canonical_linearization(g, m));
}

Trace coset_canonical_rep(const Trace& x, GeneratorSet s) {
  if (s == 0)
    return x;
  const auto& g = x.graph();
  Word w = x.word();
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = w.size(); k-- > 0;) {
      if (!((s >> w[k].gen) & 1U))
        continue;
      bool maximal = true;
      for (std::size_t j = k + 1; j < w.size() && maximal; ++j)
        if (dependent(g, w[k], w[j]))
          maximal = false;
      if (maximal) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
        progress = true;
        break;
      }
    }
  }
  return Trace::from_canonical(g, canonical_linearization(g, w));
}

bool parabolic_member(const Trace& x, GeneratorSet s) {
  return std::all_of(x.word().begin(), x.word().end(),
                     [&](Letter l) { return (s >> l.gen) & 1U; });
}

std::vector<Trace> enumerate_parabolic_ball(const DefiningGraph& g,
                                            GeneratorSet s, std::size_t r,
                                            std::size_t budget) {
  std::vector<Trace> out{Trace(g)};
  std::unordered_set<Trace, TraceHash> seen{Trace(g)};
  std::size_t frontier = 0;
  for (std::size_t depth = 0; depth < r; ++depth) {
    std::size_t end = out.size();
    for (std::size_t i = frontier; i < end; ++i) {
      for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        if (!((s >> v) & 1U))
          continue;
        for (int sign : {1, -1}) {
          Trace t = multiply(out[i], generator(g, v, sign));
          if (t.length() != depth + 1 || seen.count(t))
            continue;
          if (out.size() >= budget)
            throw BudgetExceeded("ball enumeration exceeded budget of " +
                                 std::to_string(budget) + " vertices");
          seen.insert(t);
          out.push_back(std::move(t));
        }
      }
    }
    frontier = end;
  }
  return out;
}

std::vector<Trace> enumerate_ball(const DefiningGraph& g, std::size_t r,
                                  std::size_t budget) {
  return enumerate_parabolic_ball(g, g.all(), r, budget);
}

} // namespace mqm
