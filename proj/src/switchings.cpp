#include "regraph/switchings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "regraph/error.hpp"

namespace regraph {

namespace {

using Edge = std::pair<int, int>;

Edge undirected(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Edges removed by the forward edit (cycle edges, then replacement edges).
std::vector<Edge> cycle_side(const Switching& s) {
  const auto& v = s.cycle.vertices;
  const std::size_t k = v.size();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(undirected(v[i], v[(i + 1) % k]));
  for (std::size_t i = 0; i < k; ++i) out.push_back(undirected(s.w[i], s.u[(i + 1) % k]));
  return out;
}

// Edges added by the forward edit.
std::vector<Edge> path_side(const Switching& s) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < s.cycle.vertices.size(); ++i) {
    out.push_back(undirected(s.cycle.vertices[i], s.u[i]));
    out.push_back(undirected(s.cycle.vertices[i], s.w[i]));
  }
  return out;
}

bool distinct(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

// Shape conditions shared by both directions: `present` must all be edges of
// g, `absent` none, each side 2k distinct non-loop pairs, sides disjoint.
bool admissible(const SimpleGraph& g, const Switching& s, const std::vector<Edge>& present,
                const std::vector<Edge>& absent) {
  const std::size_t k = s.cycle.vertices.size();
  if (k < 3 || s.u.size() != k || s.w.size() != k) return false;
  if (!distinct(s.cycle.vertices) || !distinct(s.w)) return false;
  std::set<Edge> all;
  for (const auto* side : {&present, &absent}) {
    for (auto [a, b] : *side) {
      if (a == b || !all.insert({a, b}).second) return false;
    }
  }
  for (auto [a, b] : present) {
    if (!g.has_edge(a, b)) return false;
  }
  for (auto [a, b] : absent) {
    if (g.has_edge(a, b)) return false;
  }
  return true;
}

// Short cycles of g that use at least one of the given edges, found by
// closing paths b -> a of length 2..r-1 around each edge (a, b).
std::set<CycleSpec> cycles_using(const SimpleGraph& g, const std::vector<Edge>& edges, int r) {
  std::set<CycleSpec> out;
  std::vector<int> path;
  for (auto [a, b] : edges) {
    if (!g.has_edge(a, b)) continue;
    path = {a, b};
    auto rec = [&](auto&& self) -> void {
      const int last = path.back();
      const int len = static_cast<int>(path.size());
      for (int x : g.neighbors(last)) {
        if (x == a) {
          if (len >= 3) out.insert(canonical_cycle(CycleSpec{path, {}}));
          continue;
        }
        if (len >= r || std::find(path.begin(), path.end(), x) != path.end()) continue;
        path.push_back(x);
        self(self);
        path.pop_back();
      }
    };
    rec(rec);
  }
  return out;
}

SimpleGraph edit(const SimpleGraph& g, const std::vector<Edge>& remove, const std::vector<Edge>& add) {
  SimpleGraph out = g;
  for (auto [a, b] : remove) out.remove_edge(a, b);
  for (auto [a, b] : add) out.add_edge(a, b);
  return out;
}

bool valid(const SimpleGraph& g, const Switching& s, int r, bool forward) {
  const auto deleted = forward ? cycle_side(s) : path_side(s);
  const auto added = forward ? path_side(s) : cycle_side(s);
  if (!admissible(g, s, deleted, added)) return false;
  if (s.length() > r) return false;
  const SimpleGraph after = edit(g, deleted, added);
  const std::set<CycleSpec> alpha{canonical_cycle(CycleSpec{s.cycle.vertices, {}})};
  const auto destroyed = cycles_using(g, deleted, r);
  const auto created = cycles_using(after, added, r);
  return forward ? (destroyed == alpha && created.empty()) : (destroyed.empty() && created == alpha);
}

double log_falling(int n, int k) {
  double s = 0;
  for (int i = 0; i < k; ++i) s += std::log(static_cast<double>(n - i));
  return s;
}

void check_alpha(const SimpleGraph& g, const CycleSpec& alpha, int r) {
  validate_cycle(g, alpha);
  if (alpha.length() > r) throw InvalidInput("cycle is longer than the short-cycle bound r");
}

// Enumerates every assignment of (u_i, w_i) produced by `choices(i)` and
// counts valid ones, or samples when the space exceeds the cap.
template <class Choices, class Fits>
SwitchingCount scan(const SimpleGraph& g, const CycleSpec& alpha, int r, Rng& rng, std::uint64_t cap,
                    bool forward, std::uint64_t space, Choices choices, Fits fits) {
  const std::size_t k = alpha.vertices.size();
  Switching s{CycleSpec{alpha.vertices, {}}, std::vector<int>(k), std::vector<int>(k)};
  SwitchingCount out;
  if (space > cap) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      for (std::size_t i = 0; i < k; ++i) {
        const auto& opts = choices(i);
        const auto& pick = opts[uniform_index(rng, opts.size())];
        s.w[i] = pick.second;
        s.u[forward ? (i + 1) % k : i] = pick.first;
      }
      if (valid(g, s, r, forward)) {
        out.sample = s;
        break;
      }
    }
    return out;
  }
  std::int64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      if (!valid(g, s, r, forward)) return;
      ++count;
      if (uniform_index(rng, static_cast<std::uint64_t>(count)) == 0) out.sample = s;
      return;
    }
    for (const auto& [uu, ww] : choices(i)) {
      if (!fits(s, i, uu, ww)) continue;
      s.w[i] = ww;
      s.u[forward ? (i + 1) % k : i] = uu;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  out.count_valid = count;
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) return std::numeric_limits<std::uint64_t>::max();
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> Switching::replacement_edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.emplace_back(w[i], u[(i + 1) % u.size()]);
  return out;
}

bool is_valid_forward(const SimpleGraph& g, const Switching& s, int r) { return valid(g, s, r, true); }
bool is_valid_backward(const SimpleGraph& g, const Switching& s, int r) { return valid(g, s, r, false); }

SimpleGraph apply_forward(const SimpleGraph& g, const Switching& s) {
  if (!admissible(g, s, cycle_side(s), path_side(s))) throw InvalidInput("forward switching does not fit the graph");
  return edit(g, cycle_side(s), path_side(s));
}

SimpleGraph apply_backward(const SimpleGraph& g, const Switching& s) {
  if (!admissible(g, s, path_side(s), cycle_side(s))) throw InvalidInput("backward switching does not fit the graph");
  return edit(g, path_side(s), cycle_side(s));
}

SwitchingCount forward_switchings(const SimpleGraph& g, const CycleSpec& alpha, int r, Rng& rng,
                                  std::uint64_t cap) {
  check_alpha(g, alpha, r);
  if (!contains(g, alpha)) throw InvalidInput("cycle is not contained in the graph");
  // Oriented edge (w_i, u_{i+1}).
  std::vector<std::pair<int, int>> oriented;
  for (int x = 0; x < g.n(); ++x) {
    for (int y : g.neighbors(x)) oriented.emplace_back(y, x);
  }
  const auto space = saturating_pow(oriented.size(), alpha.length());
  const auto& v = alpha.vertices;
  const std::size_t k = v.size();
  // Necessary conditions checked early: w's distinct, and u_i, w_i distinct
  // from and not adjacent to v_i.
  auto fits = [&](const Switching& s, std::size_t i, int uu, int ww) {
    const int vi = v[i];
    const int vn = v[(i + 1) % k];
    if (ww == vi || g.has_edge(vi, ww) || uu == vn || g.has_edge(vn, uu)) return false;
    return std::find(s.w.begin(), s.w.begin() + static_cast<std::ptrdiff_t>(i), ww) == s.w.begin() + static_cast<std::ptrdiff_t>(i);
  };
  return scan(g, alpha, r, rng, cap, true, space, [&](std::size_t) -> const auto& { return oriented; }, fits);
}

SwitchingCount backward_switchings(const SimpleGraph& g, const CycleSpec& alpha, int r, Rng& rng,
                                   std::uint64_t cap) {
  check_alpha(g, alpha, r);
  std::vector<std::vector<std::pair<int, int>>> paths(alpha.vertices.size());
  for (std::size_t i = 0; i < alpha.vertices.size(); ++i) {
    const auto& nb = g.neighbors(alpha.vertices[i]);
    for (int a : nb)
      for (int b : nb)
        if (a != b) paths[i].emplace_back(a, b);
  }
  const auto per = static_cast<std::uint64_t>(g.d()) * static_cast<std::uint64_t>(std::max(g.d() - 1, 0));
  const auto space = saturating_pow(per, alpha.length());
  const auto& v = alpha.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (g.has_edge(v[i], v[(i + 1) % v.size()])) return SwitchingCount{0, std::nullopt};
  }
  // w's distinct and w_{i-1} not adjacent to u_i.
  auto fits = [&](const Switching& s, std::size_t i, int uu, int ww) {
    if (i > 0 && (s.w[i - 1] == uu || g.has_edge(s.w[i - 1], uu))) return false;
    return std::find(s.w.begin(), s.w.begin() + static_cast<std::ptrdiff_t>(i), ww) == s.w.begin() + static_cast<std::ptrdiff_t>(i);
  };
  return scan(g, alpha, r, rng, cap, false, space, [&](std::size_t i) -> const auto& { return paths[i]; }, fits);
}

SwitchingKernel switching_kernel(int n, int d, int r) {
  if (r < 3) throw InvalidInput("switching chain needs r >= 3");
  if (d < 2 || n < 3) throw InvalidInput("switching chain needs d >= 2, n >= 3");
  return SwitchingKernel{n, d, r};
}

namespace {

double log_forward_proposal(int n, int d, int k) {
  return -(std::log(n) + (2 * k - 1) * std::log(d) + log_falling(n, k));
}

double log_backward_proposal(int n, int d, int k) {
  return -(log_falling(n, k) + k * (std::log(d) + std::log(d - 1)));
}

// log of the probability that one ordered configuration of length k is
// taken, chosen as large as the proposals allow.
double log_move(int n, int d, int r, int k) {
  const double log_choose_k = -std::log(r - 2) - std::log(2.0);
  auto weight = [&](int j) { return -(log_falling(n, j) + j * std::log(d)) - std::log(2.0 * j); };
  double scale = std::numeric_limits<double>::infinity();
  for (int j = 3; j <= std::min(r, n); ++j) {
    const double room = log_choose_k + std::min(log_forward_proposal(n, d, j), log_backward_proposal(n, d, j));
    scale = std::min(scale, room - weight(j));
  }
  return scale + weight(k);
}

}  // namespace

double SwitchingKernel::forward_proposal(int k) const {
  return std::exp(-std::log(r - 2) - std::log(2.0) + log_forward_proposal(n, d, k));
}

double SwitchingKernel::backward_proposal(int k) const {
  return std::exp(-std::log(r - 2) - std::log(2.0) + log_backward_proposal(n, d, k));
}

double SwitchingKernel::forward_accept(int k) const {
  return std::min(1.0, std::exp(log_move(n, d, r, k) - std::log(forward_proposal(k))));
}

double SwitchingKernel::backward_accept(int k) const {
  return std::min(1.0, std::exp(log_move(n, d, r, k) - std::log(backward_proposal(k))));
}

SimpleGraph switching_step(const SimpleGraph& g, int r, Rng& rng) {
  const int n = g.n();
  const int d = g.d();
  const SwitchingKernel kern = switching_kernel(n, d, r);
  const int k = 3 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(r - 2)));
  if (k > n) return g;
  const bool forward = bernoulli(rng, 0.5);
  Switching s{CycleSpec{std::vector<int>(static_cast<std::size_t>(k)), {}}, std::vector<int>(static_cast<std::size_t>(k)),
              std::vector<int>(static_cast<std::size_t>(k))};
  auto& v = s.cycle.vertices;
  auto pick_neighbor = [&](int x) { return g.neighbors(x)[uniform_index(rng, static_cast<std::uint64_t>(d))]; };
  std::vector<int> pool(static_cast<std::size_t>(n));
  auto draw_distinct = [&](std::vector<int>& into) {
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
      const auto j = static_cast<std::size_t>(i) + uniform_index(rng, static_cast<std::uint64_t>(n - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      into[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(i)];
    }
  };
  if (forward) {
    v[0] = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n)));
    for (int i = 1; i < k; ++i) v[static_cast<std::size_t>(i)] = pick_neighbor(v[static_cast<std::size_t>(i - 1)]);
    draw_distinct(s.w);
    for (int i = 0; i < k; ++i) s.u[static_cast<std::size_t>((i + 1) % k)] = pick_neighbor(s.w[static_cast<std::size_t>(i)]);
    if (!bernoulli(rng, kern.forward_accept(k))) return g;
    return is_valid_forward(g, s, r) ? apply_forward(g, s) : g;
  }
  draw_distinct(v);
  for (int i = 0; i < k; ++i) {
    const auto& nb = g.neighbors(v[static_cast<std::size_t>(i)]);
    const auto a = uniform_index(rng, static_cast<std::uint64_t>(d));
    auto b = uniform_index(rng, static_cast<std::uint64_t>(d - 1));
    if (b >= a) ++b;
    s.u[static_cast<std::size_t>(i)] = nb[a];
    s.w[static_cast<std::size_t>(i)] = nb[b];
  }
  if (!bernoulli(rng, kern.backward_accept(k))) return g;
  return is_valid_backward(g, s, r) ? apply_backward(g, s) : g;
}

}  // namespace regraph
