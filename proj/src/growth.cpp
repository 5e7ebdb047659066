#include "regraph/growth.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "regraph/error.hpp"

namespace regraph {

PermTower::PermTower(int d) : next_(static_cast<std::size_t>(d)), prev_(static_cast<std::size_t>(d)) {
  if (d < 1) throw InvalidInput("PermTower needs d >= 1");
}

PermTower PermTower::from_perms(const std::vector<std::vector<int>>& perms) {
  if (perms.empty()) throw InvalidInput("need at least one permutation");
  const PermGraph check(static_cast<int>(perms.front().size()), perms);
  PermTower t(check.d());
  for (int x = 0; x < check.n(); ++x) {
    std::vector<int> after;
    for (int l = 0; l < check.d(); ++l) {
      // Nearest predecessor of x in its cycle among 0..x-1.
      int p = check.inverse_perm(l)[static_cast<std::size_t>(x)];
      while (p > x) p = check.inverse_perm(l)[static_cast<std::size_t>(p)];
      after.push_back(p == x ? -1 : p);
    }
    t.insert(after);
  }
  return t;
}

void PermTower::insert(const std::vector<int>& after) {
  if (static_cast<int>(after.size()) != d()) throw InvalidInput("one seat per permutation");
  const int v = n_;
  for (std::size_t l = 0; l < after.size(); ++l) {
    const int j = after[l];
    if (j < -1 || j >= n_) throw InvalidInput("seat out of range");
    auto& nx = next_[l];
    auto& pv = prev_[l];
    if (j == -1) {
      nx.push_back(v);
      pv.push_back(v);
      continue;
    }
    const int o = nx[static_cast<std::size_t>(j)];
    nx[static_cast<std::size_t>(j)] = v;
    pv[static_cast<std::size_t>(o)] = v;
    nx.push_back(o);
    pv.push_back(j);
  }
  ++n_;
}

std::vector<int> PermTower::seat_choices(Rng& rng) const {
  std::vector<int> out;
  for (int l = 0; l < d(); ++l) {
    const auto c = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n_) + 1));
    out.push_back(c == n_ ? -1 : c);
  }
  return out;
}

void PermTower::remove_last() {
  if (n_ == 0) throw InvalidInput("tower is empty");
  const int x = n_ - 1;
  for (std::size_t l = 0; l < next_.size(); ++l) {
    auto& nx = next_[l];
    auto& pv = prev_[l];
    const int p = pv[static_cast<std::size_t>(x)];
    const int q = nx[static_cast<std::size_t>(x)];
    if (p != x) {
      nx[static_cast<std::size_t>(p)] = q;
      pv[static_cast<std::size_t>(q)] = p;
    }
    nx.pop_back();
    pv.pop_back();
  }
  --n_;
}

PermGraph PermTower::graph() const {
  if (n_ == 0) throw InvalidInput("tower is empty");
  return PermGraph(n_, next_);
}

PermTower crp_extend(const PermTower& tower, Rng& rng) {
  PermTower out = tower;
  out.insert(out.seat_choices(rng));
  return out;
}

std::vector<double> poissonized_times(double horizon, int n0, Rng& rng) {
  if (!(horizon >= 0)) throw InvalidInput("horizon must be >= 0");
  if (n0 < 0) throw InvalidInput("start size must be >= 0");
  std::vector<double> out;
  double t = 0;
  for (std::int64_t i = n0 + 1;; ++i) {
    t += exponential(rng, static_cast<double>(i));
    if (t > horizon) return out;
    if (out.size() >= static_cast<std::size_t>(kDefaultMaxVertices)) throw ResourceError("too many jumps before the horizon");
    out.push_back(t);
  }
}

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::grown:
      return "grown";
    case EventKind::spontaneous:
      return "spontaneous";
    case EventKind::split:
      return "split";
  }
  return "?";
}

EventKind classify_event(const CycleSpec& born, int new_vertex) {
  const auto k = born.vertices.size();
  const auto at = static_cast<std::size_t>(std::find(born.vertices.begin(), born.vertices.end(), new_vertex) - born.vertices.begin());
  if (at == k || born.word.size() != k) throw InvalidInput("cycle does not pass through the new vertex");
  if (k == 1) return EventKind::spontaneous;
  return born.word[(at + k - 1) % k] == born.word[at] ? EventKind::grown : EventKind::spontaneous;
}

EventKind classify_event(int edges_hit) {
  if (edges_hit < 1) throw InvalidInput("an untouched cycle has no event");
  return edges_hit == 1 ? EventKind::grown : EventKind::split;
}

namespace {

class TowerCycles {
 public:
  TowerCycles(const PermTower& t, int v, int r) : t_(t), v_(v), r_(r) {}

  std::vector<CycleSpec> run() {
    path_.vertices = {v_};
    extend(v_);
    return std::move(out_);
  }

 private:
  void extend(int x) {
    const int letters = 2 * t_.d();
    for (int c = 0; c < letters; ++c) {
      const Letter l = Letter::from_code(c);
      if (!path_.word.empty() && l == path_.word.back().inverse()) continue;
      const int y = t_.step(x, l);
      if (y == v_) {
        if (!path_.word.empty() && l == path_.word.front().inverse()) continue;
        path_.word.push_back(l);
        if (preferred()) out_.push_back(path_);
        path_.word.pop_back();
        continue;
      }
      if (static_cast<int>(path_.word.size()) + 1 >= r_) continue;
      if (std::find(path_.vertices.begin(), path_.vertices.end(), y) != path_.vertices.end()) continue;
      path_.vertices.push_back(y);
      path_.word.push_back(l);
      extend(y);
      path_.word.pop_back();
      path_.vertices.pop_back();
    }
  }

  // Each cycle is met once per direction; keep the one whose (second
  // vertex, first letter) is smaller.
  bool preferred() const {
    const auto& vs = path_.vertices;
    const auto& w = path_.word;
    const std::size_t k = w.size();
    const int fwd_second = k > 1 ? vs[1] : vs[0];
    const int rev_second = k > 1 ? vs[k - 1] : vs[0];
    return std::pair{fwd_second, w.front().code()} < std::pair{rev_second, w.back().inverse().code()};
  }

  const PermTower& t_;
  int v_;
  int r_;
  CycleSpec path_;
  std::vector<CycleSpec> out_;
};

struct Edge {
  int label;
  int tail;
  int head;
  bool operator==(const Edge&) const = default;
};

Edge edge_at(const CycleSpec& c, std::size_t i) {
  const int a = c.vertices[i];
  const int b = c.vertices[(i + 1) % c.vertices.size()];
  const Letter l = c.word[i];
  return l.inverted() ? Edge{l.index(), b, a} : Edge{l.index(), a, b};
}

}  // namespace

std::vector<CycleSpec> cycles_through(const PermTower& t, int v, int r) {
  if (v < 0 || v >= t.n()) throw InvalidInput("vertex out of range");
  if (r < 1) throw InvalidInput("r must be >= 1");
  return TowerCycles(t, v, r).run();
}

InsertionOutcome insert_and_track(PermTower& tower, const std::vector<int>& after, const WordClassTable& table) {
  const int r = table.max_length();
  const int v = tower.n();
  if (static_cast<int>(after.size()) != tower.d()) throw InvalidInput("one seat per permutation");

  std::vector<Edge> removed;
  for (int l = 0; l < tower.d(); ++l) {
    const int j = after[static_cast<std::size_t>(l)];
    if (j >= 0 && j < v) removed.push_back({l + 1, j, tower.next(l, j)});
  }
  // Old cycles through a removed edge, with the number of removed edges each
  // one uses and the position of the last one.
  std::map<CycleSpec, std::pair<int, std::size_t>> dying;
  for (const auto& e : removed) {
    for (const auto& found : cycles_through(tower, e.tail, r)) {
      const CycleSpec c = canonical_cycle(found);
      int hits = 0;
      std::size_t where = 0;
      for (std::size_t i = 0; i < c.word.size(); ++i) {
        if (std::find(removed.begin(), removed.end(), edge_at(c, i)) != removed.end()) {
          ++hits;
          where = i;
        }
      }
      if (hits > 0) dying.emplace(c, std::pair{hits, where});
    }
  }

  tower.insert(after);
  InsertionOutcome out;
  for (const auto& [c, info] : dying) {
    const int before = table.index_of_word(c.word);
    out.destroyed.push_back(before);
    const EventKind kind = classify_event(info.first);
    int grown = -1;
    if (kind == EventKind::grown && c.length() < r) {
      Word w = c.word;
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(info.second), w[info.second]);
      grown = table.index_of_word(w);
    }
    out.events.push_back({0, kind, before, grown});
  }
  for (const auto& c : cycles_through(tower, v, r)) {
    const int idx = table.index_of_word(c.word);
    out.created.push_back(idx);
    if (classify_event(c, v) == EventKind::spontaneous) {
      out.events.push_back({0, EventKind::spontaneous, -1, idx});
    }
  }
  return out;
}

Trajectory simulate_growth(const WordClassTable& table, double s, double horizon, const std::vector<double>& grid,
                           Rng& rng, int max_vertices) {
  if (!(s >= 0) || !(horizon >= 0)) throw InvalidInput("s and horizon must be >= 0");
  if (!std::is_sorted(grid.begin(), grid.end())) throw InvalidInput("grid must be sorted");
  if (!grid.empty() && (grid.front() < 0 || grid.back() > horizon)) throw InvalidInput("grid must lie in [0, horizon]");

  const int r = table.max_length();
  PermTower tower(table.d());
  std::vector<std::int64_t> words(table.size(), 0);
  std::vector<std::int64_t> lengths(static_cast<std::size_t>(r), 0);
  Trajectory out;
  const double end = s + horizon;
  double t = 0;
  std::size_t gi = 0;
  for (;;) {
    const double next = t + exponential(rng, static_cast<double>(tower.n()) + 1);
    while (gi < grid.size() && s + grid[gi] < next) {
      out.times.push_back(s + grid[gi]);
      out.vertices.push_back(tower.n());
      out.by_word.push_back(words);
      out.by_length.push_back(lengths);
      ++gi;
    }
    if (next > end) break;
    if (tower.n() >= max_vertices) throw ResourceError("growth exceeded the vertex cap");
    t = next;
    auto step = insert_and_track(tower, tower.seat_choices(rng), table);
    for (int i : step.destroyed) {
      --words[static_cast<std::size_t>(i)];
      --lengths[static_cast<std::size_t>(table[static_cast<std::size_t>(i)].length - 1)];
    }
    for (int i : step.created) {
      ++words[static_cast<std::size_t>(i)];
      ++lengths[static_cast<std::size_t>(table[static_cast<std::size_t>(i)].length - 1)];
    }
    if (t > s) {
      for (auto& e : step.events) {
        e.time = t;
        out.events.push_back(e);
      }
    }
  }
  return out;
}

void TrajectoryStore::append(std::uint64_t run_id, Trajectory t) {
  std::lock_guard guard(lock_);
  runs_.emplace_back(run_id, std::move(t));
}

namespace {

std::string key_of(const WordClassTable& table, int i) {
  return i < 0 ? std::string() : to_string(table[static_cast<std::size_t>(i)]);
}

template <class Runs>
std::vector<const std::pair<std::uint64_t, Trajectory>*> sorted_runs(const Runs& runs) {
  std::vector<const std::pair<std::uint64_t, Trajectory>*> out;
  for (const auto& r : runs) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->first < b->first; });
  return out;
}

}  // namespace

std::string TrajectoryStore::counts_csv() const {
  std::lock_guard guard(lock_);
  std::ostringstream out;
  out << std::setprecision(17) << "run_id,t,key_type,key,count\n";
  for (const auto* run : sorted_runs(runs_)) {
    const Trajectory& tr = run->second;
    for (std::size_t g = 0; g < tr.times.size(); ++g) {
      for (std::size_t i = 0; i < table_->size(); ++i) {
        out << run->first << ',' << tr.times[g] << ",word," << key_of(*table_, static_cast<int>(i)) << ','
            << tr.by_word[g][i] << '\n';
      }
      for (std::size_t k = 0; k < tr.by_length[g].size(); ++k) {
        out << run->first << ',' << tr.times[g] << ",length," << k + 1 << ',' << tr.by_length[g][k] << '\n';
      }
    }
  }
  return out.str();
}

std::string TrajectoryStore::events_csv() const {
  std::lock_guard guard(lock_);
  std::ostringstream out;
  out << std::setprecision(17) << "run_id,t,kind,before,after\n";
  for (const auto* run : sorted_runs(runs_)) {
    for (const auto& e : run->second.events) {
      out << run->first << ',' << e.time << ',' << to_string(e.kind) << ',' << key_of(*table_, e.before) << ','
          << key_of(*table_, e.after) << '\n';
    }
  }
  return out.str();
}

}  // namespace regraph
