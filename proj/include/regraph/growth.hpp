#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "regraph/graph.hpp"
#include "regraph/rng.hpp"
#include "regraph/words.hpp"

namespace regraph {

// d permutations grown one element at a time by the Chinese restaurant
// process, stored as successor/predecessor maps.
class PermTower {
 public:
  explicit PermTower(int d);
  // The tower whose top level is the given permutations of {0..n-1}; the
  // lower levels follow by deleting the largest element.
  static PermTower from_perms(const std::vector<std::vector<int>>& perms);

  int n() const { return n_; }
  int d() const { return static_cast<int>(next_.size()); }
  int next(int l, int x) const { return next_[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)]; }
  int prev(int l, int x) const { return prev_[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)]; }
  int step(int x, Letter letter) const {
    return letter.inverted() ? prev(letter.index() - 1, x) : next(letter.index() - 1, x);
  }

  // Adds element n. after[l] = j in [0, n) splices it right after j in
  // permutation l; -1 makes it a fixed point.
  void insert(const std::vector<int>& after);
  // One uniform choice among the n+1 seats per permutation.
  std::vector<int> seat_choices(Rng& rng) const;
  // Deletes element n-1 from every permutation.
  void remove_last();

  PermGraph graph() const;
  bool operator==(const PermTower&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> next_;
  std::vector<std::vector<int>> prev_;
};

PermTower crp_extend(const PermTower& tower, Rng& rng);

// Jump times after the current size n0: partial sums of Exp(n0+1), Exp(n0+2),
// ... that do not exceed the horizon.
std::vector<double> poissonized_times(double horizon, int n0, Rng& rng);

enum class EventKind { grown, spontaneous, split };
std::string to_string(EventKind k);

// Birth of a cycle through the new vertex: grown when the letters entering
// and leaving it agree. A loop at the new vertex is spontaneous.
EventKind classify_event(const CycleSpec& born, int new_vertex);
// Death of an existing cycle into which the new vertex was inserted at
// `edges_hit` of its edges.
EventKind classify_event(int edges_hit);

// Short cycles through v, each once, starting at v. Word letters carry
// vertices[i] to vertices[i+1].
std::vector<CycleSpec> cycles_through(const PermTower& t, int v, int r);

// Class indices refer to the table; -1 marks a cycle longer than its max
// length (or no cycle).
struct GrowthEvent {
  double time = 0;
  EventKind kind = EventKind::spontaneous;
  int before = -1;
  int after = -1;
};

// Changes to the short-cycle census caused by one insertion.
struct InsertionOutcome {
  std::vector<int> destroyed;  // class indices
  std::vector<int> created;
  std::vector<GrowthEvent> events;  // time left at 0
};

// Inserts element n with the given seats and classifies every short cycle
// created or destroyed.
InsertionOutcome insert_and_track(PermTower& tower, const std::vector<int>& after, const WordClassTable& table);

struct Trajectory {
  std::vector<double> times;                     // absolute grid times
  std::vector<int> vertices;                     // N at each grid time
  std::vector<std::vector<std::int64_t>> by_word;    // [grid][class]
  std::vector<std::vector<std::int64_t>> by_length;  // [grid][k-1]
  std::vector<GrowthEvent> events;               // events after the warm-up
};

inline constexpr int kDefaultMaxVertices = 5'000'000;

// Grows from the empty graph through the warm-up time s, then records the
// census at s + g for g in grid (sorted, within [0, horizon]) and every event
// in (s, s + horizon].
Trajectory simulate_growth(const WordClassTable& table, double s, double horizon, const std::vector<double>& grid,
                           Rng& rng, int max_vertices = kDefaultMaxVertices);

// Long-format exports keyed by run id.
class TrajectoryStore {
 public:
  explicit TrajectoryStore(const WordClassTable& table) : table_(&table) {}
  void append(std::uint64_t run_id, Trajectory t);
  std::string counts_csv() const;
  std::string events_csv() const;

 private:
  const WordClassTable* table_;
  mutable std::mutex lock_;
  std::vector<std::pair<std::uint64_t, Trajectory>> runs_;
};

}  // namespace regraph
