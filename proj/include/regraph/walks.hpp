#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "regraph/graph.hpp"
#include "regraph/words.hpp"

namespace regraph {

// Directed-edge view of a graph. Every undirected edge (loops included)
// contributes two directed edges that are each other's reversal.
struct DirectedEdges {
  std::vector<int> tail;
  std::vector<int> head;
  std::vector<int> reversal;
  std::vector<Letter> letter;  // meaningful for PermGraph only
  std::vector<std::vector<int>> out;  // per vertex

  std::size_t size() const { return tail.size(); }
};

DirectedEdges directed_edges(const PermGraph& g);
DirectedEdges directed_edges(const SimpleGraph& g);

// Dense non-backtracking edge matrix: entry (e, f) = 1 iff head(e) = tail(f)
// and f is not the reversal of e.
IntMatrix nb_edge_matrix(const DirectedEdges& e);

// Counts of cycles by length and by word class. Lengths up to max_length are
// covered; absent entries are zero.
struct CycleCensus {
  std::map<int, std::int64_t> by_length;
  std::map<WordClass, std::int64_t> by_word;
  int max_length = std::numeric_limits<int>::max();

  std::int64_t count(int k) const {
    auto it = by_length.find(k);
    return it == by_length.end() ? 0 : it->second;
  }
};

struct CycleList {
  CycleCensus census;
  std::vector<CycleSpec> cycles;  // canonical forms, sorted
};

inline constexpr std::uint64_t kDefaultWalkBudget = 100'000'000;

// All cycles of length <= r. PermGraph cycles start at length 1 (loops) and
// carry words; SimpleGraph cycles start at length 3.
CycleList enumerate_cycles(const PermGraph& g, int r, std::uint64_t budget = kDefaultWalkBudget);
CycleList enumerate_cycles(const SimpleGraph& g, int r, std::uint64_t budget = kDefaultWalkBudget);

// Cycles of length <= r through vertex v, canonical and sorted.
std::vector<CycleSpec> cycles_through(const PermGraph& g, int v, int r);
std::vector<CycleSpec> cycles_through(const SimpleGraph& g, int v, int r);

// CNBW_1..CNBW_r (index k-1) as traces of powers of the non-backtracking
// matrix, computed by sparse propagation. Throws RangeError on overflow.
std::vector<std::int64_t> cnbw_via_nb_matrix(const DirectedEdges& e, int r);
std::vector<std::int64_t> cnbw_via_nb_matrix(const PermGraph& g, int r);
std::vector<std::int64_t> cnbw_via_nb_matrix(const SimpleGraph& g, int r);

// Sum over j | k of 2j C_j. Throws InvalidInput when k exceeds the census
// coverage.
std::int64_t cnbw_from_cycles(const CycleCensus& census, int k);

// Per-length count of CNB walks that are not repeated traversals of one cycle.
std::vector<std::int64_t> bad_walk_probe(const PermGraph& g, int r);
std::vector<std::int64_t> bad_walk_probe(const SimpleGraph& g, int r);

nlohmann::json to_json(const CycleCensus& c);

}  // namespace regraph
