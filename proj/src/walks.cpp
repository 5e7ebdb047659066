#include "regraph/walks.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "regraph/error.hpp"

namespace regraph {

DirectedEdges directed_edges(const PermGraph& g) {
  DirectedEdges de;
  const int n = g.n();
  const std::size_t m = 2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(g.d());
  de.tail.resize(m);
  de.head.resize(m);
  de.reversal.resize(m);
  de.letter.resize(m);
  de.out.assign(static_cast<std::size_t>(n), {});
  for (int l = 0; l < g.d(); ++l) {
    const auto& p = g.perm(l);
    for (int x = 0; x < n; ++x) {
      const auto id = static_cast<std::size_t>(2 * (l * n + x));
      const int y = p[static_cast<std::size_t>(x)];
      de.tail[id] = x;
      de.head[id] = y;
      de.letter[id] = Letter(l + 1, false);
      de.reversal[id] = static_cast<int>(id + 1);
      de.tail[id + 1] = y;
      de.head[id + 1] = x;
      de.letter[id + 1] = Letter(l + 1, true);
      de.reversal[id + 1] = static_cast<int>(id);
    }
  }
  for (int v = 0; v < n; ++v) {
    auto& o = de.out[static_cast<std::size_t>(v)];
    for (int l = 0; l < g.d(); ++l) {
      o.push_back(2 * (l * n + v));
      o.push_back(2 * (l * n + g.inverse_perm(l)[static_cast<std::size_t>(v)]) + 1);
    }
  }
  return de;
}

DirectedEdges directed_edges(const SimpleGraph& g) {
  DirectedEdges de;
  de.out.assign(static_cast<std::size_t>(g.n()), {});
  for (auto [u, v] : g.edges()) {
    const int id = static_cast<int>(de.tail.size());
    de.tail.insert(de.tail.end(), {u, v});
    de.head.insert(de.head.end(), {v, u});
    de.reversal.insert(de.reversal.end(), {id + 1, id});
    de.out[static_cast<std::size_t>(u)].push_back(id);
    de.out[static_cast<std::size_t>(v)].push_back(id + 1);
  }
  return de;
}

IntMatrix nb_edge_matrix(const DirectedEdges& e) {
  const auto m = static_cast<Eigen::Index>(e.size());
  IntMatrix b = IntMatrix::Zero(m, m);
  for (std::size_t f = 0; f < e.size(); ++f) {
    for (int g : e.out[static_cast<std::size_t>(e.head[f])]) {
      if (g != e.reversal[f]) b(static_cast<Eigen::Index>(f), g) = 1;
    }
  }
  return b;
}

namespace {

// Depth-first search for closed non-backtracking paths with distinct
// vertices that start and end at `start`. With `above_start`, only vertices
// larger than start are visited.
class CycleSearch {
 public:
  CycleSearch(const DirectedEdges& de, int r, int min_length, bool labeled, std::uint64_t budget)
      : de_(de), r_(r), min_length_(min_length), labeled_(labeled), budget_(budget),
        used_(de.out.size(), 0) {}

  void run(int start, bool above_start, const std::function<void(const CycleSpec&)>& emit) {
    start_ = start;
    above_ = above_start;
    emit_ = &emit;
    used_[static_cast<std::size_t>(start)] = 1;
    extend(start);
    used_[static_cast<std::size_t>(start)] = 0;
  }

 private:
  void extend(int cur) {
    for (int f : de_.out[static_cast<std::size_t>(cur)]) {
      if (++steps_ > budget_) throw ResourceError("cycle enumeration exceeds the walk budget");
      if (!path_.empty() && f == de_.reversal[static_cast<std::size_t>(path_.back())]) continue;
      const int h = de_.head[static_cast<std::size_t>(f)];
      const int len = static_cast<int>(path_.size()) + 1;
      if (h == start_) {
        if (len >= min_length_) {
          path_.push_back(f);
          (*emit_)(spec());
          path_.pop_back();
        }
        continue;
      }
      if (len >= r_ || used_[static_cast<std::size_t>(h)] || (above_ && h < start_)) continue;
      used_[static_cast<std::size_t>(h)] = 1;
      path_.push_back(f);
      extend(h);
      path_.pop_back();
      used_[static_cast<std::size_t>(h)] = 0;
    }
  }

  CycleSpec spec() const {
    CycleSpec c;
    for (int f : path_) {
      c.vertices.push_back(de_.tail[static_cast<std::size_t>(f)]);
      if (labeled_) c.word.push_back(de_.letter[static_cast<std::size_t>(f)]);
    }
    return c;
  }

  const DirectedEdges& de_;
  int r_;
  int min_length_;
  bool labeled_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<char> used_;
  std::vector<int> path_;
  int start_ = 0;
  bool above_ = false;
  const std::function<void(const CycleSpec&)>* emit_ = nullptr;
};

CycleList enumerate(const DirectedEdges& de, int r, int min_length, bool labeled, std::uint64_t budget) {
  CycleList out;
  out.census.max_length = r;
  for (int k = 1; k <= r; ++k) out.census.by_length[k] = 0;
  CycleSearch search(de, r, min_length, labeled, budget);
  const std::function<void(const CycleSpec&)> emit = [&](const CycleSpec& c) {
    if (!(canonical_cycle(c) == c)) return;
    ++out.census.by_length[c.length()];
    if (labeled) ++out.census.by_word[canonicalize(c.word)];
    out.cycles.push_back(c);
  };
  for (int s = 0; s < static_cast<int>(de.out.size()); ++s) search.run(s, true, emit);
  std::sort(out.cycles.begin(), out.cycles.end());
  return out;
}

std::vector<CycleSpec> through(const DirectedEdges& de, int v, int r, int min_length, bool labeled) {
  std::vector<CycleSpec> out;
  CycleSearch search(de, r, min_length, labeled, kDefaultWalkBudget);
  const std::function<void(const CycleSpec&)> emit = [&](const CycleSpec& c) { out.push_back(canonical_cycle(c)); };
  search.run(v, false, emit);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_r(int r, int least) {
  if (r < least) throw InvalidInput("cycle length bound r must be at least " + std::to_string(least));
}

}  // namespace

CycleList enumerate_cycles(const PermGraph& g, int r, std::uint64_t budget) {
  check_r(r, 1);
  return enumerate(directed_edges(g), r, 1, true, budget);
}

CycleList enumerate_cycles(const SimpleGraph& g, int r, std::uint64_t budget) {
  check_r(r, 3);
  return enumerate(directed_edges(g), r, 3, false, budget);
}

std::vector<CycleSpec> cycles_through(const PermGraph& g, int v, int r) {
  return through(directed_edges(g), v, r, 1, true);
}

std::vector<CycleSpec> cycles_through(const SimpleGraph& g, int v, int r) {
  return through(directed_edges(g), v, r, 3, false);
}

std::vector<std::int64_t> cnbw_via_nb_matrix(const DirectedEdges& de, int r) {
  check_r(r, 1);
  const std::size_t m = de.size();
  std::vector<std::int64_t> total(static_cast<std::size_t>(r), 0);
  std::vector<std::int64_t> cur(m), next(m);
  for (std::size_t e = 0; e < m; ++e) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[e] = 1;
    for (int k = 1; k <= r; ++k) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t f = 0; f < m; ++f) {
        if (cur[f] == 0) continue;
        for (int g : de.out[static_cast<std::size_t>(de.head[f])]) {
          if (g == de.reversal[f]) continue;
          auto& slot = next[static_cast<std::size_t>(g)];
          if (__builtin_add_overflow(slot, cur[f], &slot)) throw RangeError("CNBW count overflows 64 bits");
        }
      }
      std::swap(cur, next);
      auto& t = total[static_cast<std::size_t>(k - 1)];
      if (__builtin_add_overflow(t, cur[e], &t)) throw RangeError("CNBW count overflows 64 bits");
    }
  }
  return total;
}

std::vector<std::int64_t> cnbw_via_nb_matrix(const PermGraph& g, int r) {
  return cnbw_via_nb_matrix(directed_edges(g), r);
}

std::vector<std::int64_t> cnbw_via_nb_matrix(const SimpleGraph& g, int r) {
  return cnbw_via_nb_matrix(directed_edges(g), r);
}

std::int64_t cnbw_from_cycles(const CycleCensus& census, int k) {
  if (k < 1) throw InvalidInput("CNBW length must be positive");
  if (k > census.max_length) throw InvalidInput("census does not cover length " + std::to_string(k));
  std::int64_t total = 0;
  for (int j = 1; j <= k; ++j) {
    if (k % j == 0) total += 2 * static_cast<std::int64_t>(j) * census.count(j);
  }
  return total;
}

namespace {

template <class Graph>
std::vector<std::int64_t> bad_walks(const Graph& g, int r) {
  const auto matrix = cnbw_via_nb_matrix(g, r);
  const int least = std::is_same_v<Graph, SimpleGraph> ? 3 : 1;
  const CycleCensus census = r >= least ? enumerate_cycles(g, r).census : CycleCensus{};
  std::vector<std::int64_t> out(static_cast<std::size_t>(r));
  for (int k = 1; k <= r; ++k) out[static_cast<std::size_t>(k - 1)] = matrix[static_cast<std::size_t>(k - 1)] - cnbw_from_cycles(census, k);
  return out;
}

}  // namespace

std::vector<std::int64_t> bad_walk_probe(const PermGraph& g, int r) { return bad_walks(g, r); }
std::vector<std::int64_t> bad_walk_probe(const SimpleGraph& g, int r) { return bad_walks(g, r); }

nlohmann::json to_json(const CycleCensus& c) {
  nlohmann::json by_length = nlohmann::json::object();
  for (auto [k, v] : c.by_length) by_length[std::to_string(k)] = v;
  nlohmann::json by_word = nlohmann::json::object();
  for (const auto& [w, v] : c.by_word) by_word[to_string(w)] = v;
  return {{"by_length", std::move(by_length)}, {"by_word", std::move(by_word)}};
}

}  // namespace regraph
