#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "regraph/rng.hpp"
#include "regraph/words.hpp"

namespace regraph {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// d permutations of {0..n-1}; the 2d-regular labeled multigraph with an edge
// x -> perm(x) labeled l for every l. Vertices are 0-based in memory and
// 1-based in serialized form.
class PermGraph {
 public:
  PermGraph() = default;
  PermGraph(int n, std::vector<std::vector<int>> perms);

  static PermGraph identity(int n, int d);

  int n() const { return n_; }
  int d() const { return static_cast<int>(forward_.size()); }
  int degree() const { return 2 * d(); }

  // Image of x under letter (pi_l or pi_l^{-1}).
  int step(int x, Letter letter) const {
    const auto l = static_cast<std::size_t>(letter.index() - 1);
    return letter.inverted() ? inverse_[l][static_cast<std::size_t>(x)] : forward_[l][static_cast<std::size_t>(x)];
  }

  const std::vector<int>& perm(int l) const { return forward_[static_cast<std::size_t>(l)]; }
  const std::vector<int>& inverse_perm(int l) const { return inverse_[static_cast<std::size_t>(l)]; }

  // Replace permutation l wholesale (must be a bijection on {0..n-1}).
  void set_perm(int l, std::vector<int> perm);

  bool operator==(const PermGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> forward_;
  std::vector<std::vector<int>> inverse_;
};

// Simple d-regular graph stored as sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int n, int d, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int d() const { return d_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;

  // Edge surgery; callers restore regularity before handing the graph on.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Sorted (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const;
  bool is_regular() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int d_ = 0;
  std::vector<std::vector<int>> adj_;
};

// A cycle on labeled vertices s_0..s_{k-1}. For a PermGraph cycle, word[i]
// carries s_i to s_{i+1} (indices mod k); for a SimpleGraph cycle the word
// is empty.
struct CycleSpec {
  std::vector<int> vertices;
  Word word;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const CycleSpec&) const = default;
  auto operator<=>(const CycleSpec&) const = default;
};

PermGraph sample_permutation_model(int n, int d, Rng& rng);

// Pairing model conditioned on simplicity, so exactly uniform.
SimpleGraph sample_uniform_model(int n, int d, Rng& rng, std::uint64_t max_retries = 1'000'000);

// Loops contribute 2 on the diagonal.
IntMatrix adjacency_matrix(const PermGraph& g);
IntMatrix adjacency_matrix(const SimpleGraph& g);

// Structural checks on a cycle specification. Throw InvalidInput.
void validate_cycle(const PermGraph& g, const CycleSpec& alpha);
void validate_cycle(const SimpleGraph& g, const CycleSpec& alpha);

bool contains(const PermGraph& g, const CycleSpec& alpha);
bool contains(const SimpleGraph& g, const CycleSpec& alpha);

// Rotation/reflection normal form: minimal vertex first, then the direction
// whose (second vertex, first letter) is smaller.
CycleSpec canonical_cycle(const CycleSpec& c);

nlohmann::json to_json(const PermGraph& g);
nlohmann::json to_json(const SimpleGraph& g);
PermGraph perm_graph_from_json(const nlohmann::json& j);
SimpleGraph simple_graph_from_json(const nlohmann::json& j);

}  // namespace regraph
