#include <cmath>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "regraph/error.hpp"
#include "regraph/switchings.hpp"
#include "regraph/walks.hpp"

using namespace regraph;

namespace {

std::int64_t falling(int n, int k) {
  std::int64_t out = 1;
  for (int i = 0; i < k; ++i) out *= n - i;
  return out;
}

std::int64_t ipow(std::int64_t b, int k) {
  std::int64_t out = 1;
  for (int i = 0; i < k; ++i) out *= b;
  return out;
}

}  // namespace

TEST_CASE("switching counts respect their bounds and invert each other") {
  Rng rng = make_stream(31, 0);
  int forward_checked = 0;
  int backward_checked = 0;
  for (int t = 0; t < 16; ++t) {
    const int n = 14 + t % 2 * 2;
    const SimpleGraph g = sample_uniform_model(n, 3, rng);
    const int r = 3;
    const auto cyc = enumerate_cycles(g, r);
    for (const auto& alpha : cyc.cycles) {
      const int k = alpha.length();
      const auto f = forward_switchings(g, alpha, r, rng);
      REQUIRE(f.count_valid);
      CHECK(*f.count_valid <= falling(n, k) * ipow(3, k));
      if (!f.sample) continue;
      const SimpleGraph h = apply_forward(g, *f.sample);
      CHECK(h.is_regular());
      CHECK(apply_backward(h, *f.sample) == g);
      CHECK(is_valid_backward(h, *f.sample, r));
      auto before = cyc.cycles;
      before.erase(std::find(before.begin(), before.end(), alpha));
      CHECK(enumerate_cycles(h, r).cycles == before);
      ++forward_checked;
    }
    const CycleSpec beta{{0, 1, 2}, {}};
    const auto b = backward_switchings(g, beta, r, rng);
    REQUIRE(b.count_valid);
    CHECK(*b.count_valid <= ipow(6, 3));
    if (b.sample) {
      const SimpleGraph h = apply_backward(g, *b.sample);
      auto expect = cyc.cycles;
      expect.push_back(canonical_cycle(beta));
      std::sort(expect.begin(), expect.end());
      CHECK(enumerate_cycles(h, r).cycles == expect);
      CHECK(apply_forward(h, *b.sample) == g);
      CHECK(is_valid_forward(h, *b.sample, r));
      ++backward_checked;
    }
  }
  CHECK(forward_checked > 0);
  CHECK(backward_checked > 0);
}

TEST_CASE("switching counts agree with brute force over all configurations") {
  Rng rng = make_stream(34, 0);
  const SimpleGraph g = sample_uniform_model(12, 3, rng);
  const CycleSpec beta{{0, 1, 2}, {}};
  std::int64_t brute = 0;
  Switching s{beta, {0, 0, 0}, {0, 0, 0}};
  for (int a0 = 0; a0 < 6; ++a0)
    for (int a1 = 0; a1 < 6; ++a1)
      for (int a2 = 0; a2 < 6; ++a2) {
        const int picks[3] = {a0, a1, a2};
        for (int i = 0; i < 3; ++i) {
          const auto& nb = g.neighbors(beta.vertices[static_cast<std::size_t>(i)]);
          const int x = picks[i] / 2;
          int y = (x + 1 + picks[i] % 2) % 3;
          s.u[static_cast<std::size_t>(i)] = nb[static_cast<std::size_t>(x)];
          s.w[static_cast<std::size_t>(i)] = nb[static_cast<std::size_t>(y)];
        }
        brute += is_valid_backward(g, s, 3) ? 1 : 0;
      }
  CHECK(*backward_switchings(g, beta, 3, rng).count_valid == brute);
}

TEST_CASE("switching inputs are checked") {
  Rng rng = make_stream(32, 0);
  const SimpleGraph g = sample_uniform_model(10, 3, rng);
  CycleSpec missing{{0, 1, 2}, {}};
  if (!contains(g, missing)) CHECK_THROWS_AS(forward_switchings(g, missing, 4, rng), InvalidInput);
  CHECK_THROWS_AS(backward_switchings(g, CycleSpec{{0, 1, 2, 3, 4}, {}}, 4, rng), InvalidInput);
  const auto big = backward_switchings(g, CycleSpec{{0, 3, 6}, {}}, 4, rng, 10);
  if (!g.has_edge(0, 3) && !g.has_edge(3, 6) && !g.has_edge(0, 6)) CHECK_FALSE(big.count_valid);
}

TEST_CASE("switching chain is reversible with respect to the uniform law") {
  // Each ordered configuration moves forward from G and backward from G'
  // with the same probability, and validity is symmetric under the edit, so
  // P(G -> G') = P(G' -> G).
  for (int n : {6, 10, 40, 200})
    for (int r : {3, 4, 6}) {
      const SwitchingKernel kern = switching_kernel(n, 3, r);
      for (int k = 3; k <= std::min(r, n); ++k) {
        const double f = kern.forward_proposal(k) * kern.forward_accept(k);
        const double b = kern.backward_proposal(k) * kern.backward_accept(k);
        CHECK(f == doctest::Approx(b).epsilon(1e-12));
        CHECK(kern.forward_accept(k) <= 1.0);
        CHECK(kern.backward_accept(k) <= 1.0);
        // Per switching (2k ordered configurations) the move probability is
        // proportional to 1/([n]_k d^k).
        const double weight = 1.0 / (static_cast<double>(falling(n, k)) * static_cast<double>(ipow(3, k)));
        const double f3 = kern.forward_proposal(3) * kern.forward_accept(3);
        CHECK(2 * k * f / weight == doctest::Approx(6 * f3 * falling(n, 3) * 27.0).epsilon(1e-9));
      }
    }

  Rng rng = make_stream(33, 0);
  SimpleGraph g = sample_uniform_model(40, 3, rng);
  int moved = 0;
  for (int t = 0; t < 20000; ++t) {
    SimpleGraph h = switching_step(g, 3, rng);
    CHECK(h.is_regular());
    moved += h == g ? 0 : 1;
    g = std::move(h);
  }
  CHECK(moved > 0);
}
