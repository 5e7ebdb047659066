#include "regraph/coupling.hpp"

#include <algorithm>

#include "regraph/error.hpp"

namespace regraph {

std::vector<LabeledEdge> required_edges(const CycleSpec& alpha) {
  std::vector<LabeledEdge> out;
  const std::size_t k = alpha.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int s = alpha.vertices[i];
    const int t = alpha.vertices[(i + 1) % k];
    const Letter l = alpha.word[i];
    out.push_back(l.inverted() ? LabeledEdge{l.index(), t, s} : LabeledEdge{l.index(), s, t});
  }
  return out;
}

PermGraph size_bias_coupling(const PermGraph& g, const CycleSpec& alpha) {
  validate_cycle(g, alpha);
  PermGraph out = g;
  for (int l = 1; l <= g.d(); ++l) {
    std::vector<int> p = g.perm(l - 1);
    std::vector<int> inv = g.inverse_perm(l - 1);
    for (const auto& e : required_edges(alpha)) {
      if (e.label != l) continue;
      // Transposition of the values p[a] and b.
      const int a = e.tail;
      const int b = e.head;
      const int x = inv[static_cast<std::size_t>(b)];
      const int old = p[static_cast<std::size_t>(a)];
      p[static_cast<std::size_t>(x)] = old;
      inv[static_cast<std::size_t>(old)] = x;
      p[static_cast<std::size_t>(a)] = b;
      inv[static_cast<std::size_t>(b)] = a;
    }
    out.set_perm(l - 1, std::move(p));
  }
  return out;
}

Partition monotone_partition(const CycleSpec& alpha, const std::vector<CycleSpec>& candidates) {
  const auto need = required_edges(alpha);
  const CycleSpec self = canonical_cycle(alpha);
  Partition out;
  for (const auto& beta : candidates) {
    if (canonical_cycle(beta) == self) continue;
    bool conflict = false;
    for (const auto& e : required_edges(beta)) {
      for (const auto& a : need) {
        if (e.label != a.label) continue;
        if ((e.tail == a.tail && e.head != a.head) || (e.head == a.head && e.tail != a.tail)) conflict = true;
      }
    }
    (conflict ? out.minus : out.plus).push_back(beta);
  }
  return out;
}

CycleSpec random_cycle_spec(int n, int d, int k, Rng& rng) {
  if (k < 1 || k > n || d < 1) throw InvalidInput("random_cycle_spec needs 1 <= k <= n, d >= 1");
  CycleSpec c;
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < k; ++i) {
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(i) + uniform_index(rng, static_cast<std::uint64_t>(n - i))]);
    c.vertices.push_back(pool[static_cast<std::size_t>(i)]);
  }
  // Rejection keeps the word uniform among reduced ones.
  for (;;) {
    c.word.clear();
    for (int i = 0; i < k; ++i) c.word.push_back(Letter::from_code(static_cast<int>(uniform_index(rng, 2 * static_cast<std::uint64_t>(d)))));
    if (is_cyclically_reduced(c.word)) return c;
  }
}

}  // namespace regraph
