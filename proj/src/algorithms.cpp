#include "mqm/algorithms.hpp"

#include <cstdlib>

namespace mqm {

std::vector<OccurrenceChain> covering_chains(const Poset& order, std::size_t l) {
  std::vector<OccurrenceChain> out;
  order.for_each_covering_chain(
      l, [&](const OccurrenceChain& c) { out.push_back(c); });
  return out;
}

TripleMax scan_triples(const std::vector<long>& table, std::size_t n,
                       unsigned workers) {
  std::vector<TripleMax> part(std::max(1U, workers));
  parallel_chunks(n, workers, [&](std::size_t b, std::size_t e, unsigned c) {
    TripleMax best;
    for (std::size_t i = b; i < e; ++i) {
      const long* ti = &table[i * n];
      for (std::size_t j = 0; j < n; ++j) {
        const long* tj = &table[j * n];
        const long tij = ti[j];
        for (std::size_t k = 0; k < n; ++k) {
          long v = tj[k] - ti[k] + tij;
          long a = std::labs(v);
          if (a > best.max_abs) {
            best.max_abs = a;
            best.value = v;
            best.argmax = {i, j, k};
          }
        }
      }
      best.triples += static_cast<std::uint64_t>(n) * n;
    }
    part[c] = best;
  });
  TripleMax out;
  // Chunks cover increasing i, so a strict comparison keeps the least triple.
  for (const auto& p : part) {
    out.triples += p.triples;
    if (p.max_abs > out.max_abs) {
      out.max_abs = p.max_abs;
      out.value = p.value;
      out.argmax = p.argmax;
    }
  }
  return out;
}

} // namespace mqm
