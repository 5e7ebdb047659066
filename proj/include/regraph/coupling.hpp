#pragma once

#include <utility>
#include <vector>

#include "regraph/graph.hpp"
#include "regraph/rng.hpp"

namespace regraph {

// Directed pi_l-edges (l, x, y) with pi_l(x) = y that a labeled cycle needs.
struct LabeledEdge {
  int label;  // 1-based
  int tail;
  int head;
  auto operator<=>(const LabeledEdge&) const = default;
};

std::vector<LabeledEdge> required_edges(const CycleSpec& alpha);

// G' distributed as G conditioned to contain alpha: for each label, the
// required pairs (a_m, b_m) are forced in order by transpositions applied
// after pi_l.
PermGraph size_bias_coupling(const PermGraph& g, const CycleSpec& alpha);

struct Partition {
  std::vector<CycleSpec> minus;
  std::vector<CycleSpec> plus;
};

// Splits candidates (alpha itself excluded) into those that share a tail or
// a head with one of alpha's labeled edges but disagree on the other end,
// and the rest.
Partition monotone_partition(const CycleSpec& alpha, const std::vector<CycleSpec>& candidates);

// Uniform random labeled cycle of length k: distinct vertices and a
// uniformly chosen cyclically reduced word.
CycleSpec random_cycle_spec(int n, int d, int k, Rng& rng);

}  // namespace regraph
