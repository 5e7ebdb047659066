#include "regraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "regraph/error.hpp"

namespace regraph {

namespace {

std::vector<int> invert(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size(), -1);
  for (std::size_t x = 0; x < perm.size(); ++x) {
    const int y = perm[x];
    if (y < 0 || static_cast<std::size_t>(y) >= perm.size() || inv[static_cast<std::size_t>(y)] != -1) {
      throw InvalidInput("not a permutation");
    }
    inv[static_cast<std::size_t>(y)] = static_cast<int>(x);
  }
  return inv;
}

}  // namespace

PermGraph::PermGraph(int n, std::vector<std::vector<int>> perms) : n_(n), forward_(std::move(perms)) {
  if (n < 1) throw InvalidInput("PermGraph needs n >= 1");
  for (const auto& p : forward_) {
    if (static_cast<int>(p.size()) != n) throw InvalidInput("permutation has wrong size");
    inverse_.push_back(invert(p));
  }
}

PermGraph PermGraph::identity(int n, int d) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return PermGraph(n, std::vector<std::vector<int>>(static_cast<std::size_t>(d), id));
}

void PermGraph::set_perm(int l, std::vector<int> perm) {
  if (static_cast<int>(perm.size()) != n_) throw InvalidInput("permutation has wrong size");
  inverse_[static_cast<std::size_t>(l)] = invert(perm);
  forward_[static_cast<std::size_t>(l)] = std::move(perm);
}

SimpleGraph::SimpleGraph(int n, int d, const std::vector<std::pair<int, int>>& edges)
    : d_(d), adj_(static_cast<std::size_t>(n)) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("simple graph cannot have loops");
    if (has_edge(u, v)) throw InvalidInput("simple graph cannot have repeated edges");
    add_edge(u, v);
  }
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

void SimpleGraph::add_edge(int u, int v) {
  auto insert = [](std::vector<int>& nb, int x) { nb.insert(std::lower_bound(nb.begin(), nb.end(), x), x); };
  insert(adj_[static_cast<std::size_t>(u)], v);
  insert(adj_[static_cast<std::size_t>(v)], u);
}

void SimpleGraph::remove_edge(int u, int v) {
  auto erase = [](std::vector<int>& nb, int x) {
    auto it = std::lower_bound(nb.begin(), nb.end(), x);
    if (it == nb.end() || *it != x) throw InvalidInput("removing an absent edge");
    nb.erase(it);
  };
  erase(adj_[static_cast<std::size_t>(u)], v);
  erase(adj_[static_cast<std::size_t>(v)], u);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::is_regular() const {
  return std::all_of(adj_.begin(), adj_.end(), [&](const auto& nb) { return static_cast<int>(nb.size()) == d_; });
}

PermGraph sample_permutation_model(int n, int d, Rng& rng) {
  if (n < 1) throw InvalidInput("permutation model needs n >= 1");
  if (d < 1) throw InvalidInput("permutation model needs d >= 1");
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& p : perms) {
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = p.size(); i > 1; --i) {
      std::swap(p[i - 1], p[uniform_index(rng, i)]);
    }
  }
  return PermGraph(n, std::move(perms));
}

SimpleGraph sample_uniform_model(int n, int d, Rng& rng, std::uint64_t max_retries) {
  if (n < 1 || d < 0) throw InvalidInput("uniform model needs n >= 1, d >= 0");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) throw InvalidInput("uniform model needs n*d even");
  if (d >= n) throw InvalidInput("uniform model needs d < n");
  const std::size_t points = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
  std::vector<int> owner(points);
  for (std::size_t i = 0; i < points; ++i) owner[i] = static_cast<int>(i) / d;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (std::uint64_t attempt = 0; attempt < max_retries; ++attempt) {
    for (std::size_t i = points; i > 1; --i) std::swap(owner[i - 1], owner[uniform_index(rng, i)]);
    for (auto& nb : adj) nb.clear();
    bool simple = true;
    for (std::size_t i = 0; i < points && simple; i += 2) {
      const int u = owner[i];
      const int v = owner[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      auto& nb = adj[static_cast<std::size_t>(u)];
      if (std::find(nb.begin(), nb.end(), v) != nb.end()) {
        simple = false;
        break;
      }
      nb.push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    if (!simple) continue;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(points / 2);
    for (int u = 0; u < n; ++u) {
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    return SimpleGraph(n, d, edges);
  }
  throw ResourceError("uniform model: rejection retry cap exceeded");
}

IntMatrix adjacency_matrix(const PermGraph& g) {
  IntMatrix a = IntMatrix::Zero(g.n(), g.n());
  for (int l = 0; l < g.d(); ++l) {
    const auto& p = g.perm(l);
    for (int x = 0; x < g.n(); ++x) {
      a(x, p[static_cast<std::size_t>(x)]) += 1;
      a(p[static_cast<std::size_t>(x)], x) += 1;
    }
  }
  return a;
}

IntMatrix adjacency_matrix(const SimpleGraph& g) {
  IntMatrix a = IntMatrix::Zero(g.n(), g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v : g.neighbors(u)) a(u, v) = 1;
  }
  return a;
}

namespace {

void validate_vertices(int n, const CycleSpec& alpha) {
  if (alpha.vertices.empty()) throw InvalidInput("empty cycle");
  std::set<int> seen;
  for (int v : alpha.vertices) {
    if (v < 0 || v >= n) throw InvalidInput("cycle vertex out of range");
    if (!seen.insert(v).second) throw InvalidInput("cycle vertices are not distinct");
  }
}

}  // namespace

void validate_cycle(const PermGraph& g, const CycleSpec& alpha) {
  validate_vertices(g.n(), alpha);
  if (alpha.word.size() != alpha.vertices.size()) throw InvalidInput("cycle word length mismatch");
  for (Letter l : alpha.word) {
    if (l.index() < 1 || l.index() > g.d()) throw InvalidInput("cycle label out of range");
  }
  if (!is_cyclically_reduced(alpha.word)) throw InvalidInput("cycle word is not cyclically reduced");
}

void validate_cycle(const SimpleGraph& g, const CycleSpec& alpha) {
  validate_vertices(g.n(), alpha);
  if (alpha.length() < 3) throw InvalidInput("simple-graph cycles have length >= 3");
  if (!alpha.word.empty()) throw InvalidInput("simple-graph cycles carry no word");
}

bool contains(const PermGraph& g, const CycleSpec& alpha) {
  const std::size_t k = alpha.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (g.step(alpha.vertices[i], alpha.word[i]) != alpha.vertices[(i + 1) % k]) return false;
  }
  return true;
}

bool contains(const SimpleGraph& g, const CycleSpec& alpha) {
  const std::size_t k = alpha.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(alpha.vertices[i], alpha.vertices[(i + 1) % k])) return false;
  }
  return true;
}

CycleSpec canonical_cycle(const CycleSpec& c) {
  const std::size_t k = c.vertices.size();
  const auto start = static_cast<std::size_t>(
      std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());
  const bool labeled = !c.word.empty();

  CycleSpec fwd;
  CycleSpec rev;
  for (std::size_t i = 0; i < k; ++i) {
    fwd.vertices.push_back(c.vertices[(start + i) % k]);
    rev.vertices.push_back(c.vertices[(start + k - i) % k]);
    if (labeled) {
      fwd.word.push_back(c.word[(start + i) % k]);
      // Reverse walk leaves s_{start-i} along the inverse of the letter that
      // entered it.
      rev.word.push_back(c.word[(start + 2 * k - i - 1) % k].inverse());
    }
  }
  auto key = [&](const CycleSpec& s) {
    const int second = k > 1 ? s.vertices[1] : s.vertices[0];
    const int letter = labeled ? s.word[0].code() : 0;
    return std::pair{second, letter};
  };
  return key(rev) < key(fwd) ? rev : fwd;
}

nlohmann::json to_json(const PermGraph& g) {
  nlohmann::json perms = nlohmann::json::array();
  for (int l = 0; l < g.d(); ++l) {
    nlohmann::json row = nlohmann::json::array();
    for (int y : g.perm(l)) row.push_back(y + 1);
    perms.push_back(std::move(row));
  }
  return {{"model", "permutation"}, {"n", g.n()}, {"d", g.d()}, {"perms", std::move(perms)}};
}

nlohmann::json to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"model", "uniform"}, {"n", g.n()}, {"d", g.d()}, {"edges", std::move(edges)}};
}

PermGraph perm_graph_from_json(const nlohmann::json& j) {
  if (j.at("model") != "permutation") throw InvalidInput("expected a permutation-model graph");
  const int n = j.at("n").get<int>();
  std::vector<std::vector<int>> perms;
  for (const auto& row : j.at("perms")) {
    std::vector<int> p;
    for (const auto& y : row) p.push_back(y.get<int>() - 1);
    perms.push_back(std::move(p));
  }
  if (static_cast<int>(perms.size()) != j.at("d").get<int>()) throw InvalidInput("perms count != d");
  return PermGraph(n, std::move(perms));
}

SimpleGraph simple_graph_from_json(const nlohmann::json& j) {
  if (j.at("model") != "uniform") throw InvalidInput("expected a uniform-model graph");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  SimpleGraph g(j.at("n").get<int>(), j.at("d").get<int>(), edges);
  if (!g.is_regular()) throw InvalidInput("graph is not regular");
  return g;
}

}  // namespace regraph
