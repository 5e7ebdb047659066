#include <cmath>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "regraph/error.hpp"
#include "regraph/graph.hpp"

using namespace regraph;

TEST_CASE("permutation model basics") {
  Rng rng = make_stream(1, 0);
  const PermGraph one = sample_permutation_model(1, 3, rng);
  CHECK(one == PermGraph::identity(1, 3));
  CHECK(adjacency_matrix(sample_permutation_model(1, 2, rng))(0, 0) == 4);

  for (int t = 0; t < 20; ++t) {
    const IntMatrix a = adjacency_matrix(sample_permutation_model(9, 3, rng));
    CHECK(a == a.transpose());
    for (int i = 0; i < 9; ++i) CHECK(a.row(i).sum() == 6);
  }

  Rng r1 = make_stream(5, 3), r2 = make_stream(5, 3);
  CHECK(sample_permutation_model(3, 1, r1) == sample_permutation_model(3, 1, r2));
  CHECK_THROWS_AS(sample_permutation_model(0, 1, rng), InvalidInput);

  const PermGraph swap(2, {{1, 0}});
  IntMatrix expect(2, 2);
  expect << 0, 2, 2, 0;
  CHECK(adjacency_matrix(swap) == expect);
}

TEST_CASE("uniform model basics") {
  Rng rng = make_stream(2, 0);
  const SimpleGraph tri = sample_uniform_model(3, 2, rng);
  IntMatrix expect(3, 3);
  expect << 0, 1, 1, 1, 0, 1, 1, 1, 0;
  CHECK(adjacency_matrix(tri) == expect);
  CHECK_THROWS_AS(sample_uniform_model(3, 3, rng), InvalidInput);
  CHECK_THROWS_AS(sample_uniform_model(4, 4, rng), InvalidInput);
  CHECK_THROWS_AS(sample_uniform_model(40, 8, rng, 1), ResourceError);
}

TEST_CASE("uniform model is uniform on labeled cubic graphs with 6 vertices") {
  const auto all = oracle::labeled_regular_graphs(6, 3);
  REQUIRE(all.size() == 70);
  std::map<std::vector<std::pair<int, int>>, int> freq;
  for (const auto& e : all) freq[e] = 0;
  Rng rng = make_stream(3, 0);
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    auto it = freq.find(sample_uniform_model(6, 3, rng).edges());
    REQUIRE(it != freq.end());
    ++it->second;
  }
  const double p = 1.0 / 70.0;
  const double se = std::sqrt(samples * p * (1 - p));
  for (const auto& [e, c] : freq) CHECK(std::abs(c - samples * p) < 4 * se);
}

TEST_CASE("cycle specs") {
  const PermGraph g(3, {{1, 2, 0}, {0, 2, 1}});
  const CycleSpec tri{{0, 1, 2}, {Letter(1, false), Letter(1, false), Letter(1, false)}};
  CHECK(contains(g, tri));
  const CycleSpec dbl{{1, 2}, {Letter(1, false), Letter(2, false)}};
  CHECK(contains(g, dbl));
  const CycleSpec loop{{0}, {Letter(2, false)}};
  CHECK(contains(g, loop));
  CHECK_THROWS_AS(validate_cycle(g, CycleSpec{{0, 0}, {Letter(1, false), Letter(1, false)}}), InvalidInput);
  CHECK_THROWS_AS(validate_cycle(g, CycleSpec{{0, 1}, {Letter(1, false), Letter(1, true)}}), InvalidInput);

  // Rotations and reversal share a canonical form.
  const CycleSpec rot{{2, 0, 1}, {Letter(1, false), Letter(1, false), Letter(1, false)}};
  const CycleSpec rev{{0, 2, 1}, {Letter(1, true), Letter(1, true), Letter(1, true)}};
  CHECK(canonical_cycle(rot) == canonical_cycle(tri));
  CHECK(canonical_cycle(rev) == canonical_cycle(tri));
  const CycleSpec dbl_rev{{2, 1}, {Letter(1, true), Letter(2, true)}};
  CHECK(canonical_cycle(dbl_rev) == canonical_cycle(dbl));
}

TEST_CASE("graph json round trip") {
  Rng rng = make_stream(4, 0);
  const PermGraph p = sample_permutation_model(7, 2, rng);
  CHECK(perm_graph_from_json(to_json(p)) == p);
  const SimpleGraph s = sample_uniform_model(8, 3, rng);
  CHECK(simple_graph_from_json(to_json(s)) == s);
  CHECK(to_json(PermGraph::identity(2, 1)).dump() == R"({"d":1,"model":"permutation","n":2,"perms":[[1,2]]})");
}
