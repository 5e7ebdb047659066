#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "regraph/graph.hpp"
#include "regraph/rng.hpp"

namespace regraph {

// A switching on the cycle v_0..v_{k-1} (cycle.vertices) with the vertex
// pairs (u_i, w_i). Forward: delete v_i v_{i+1} and w_i u_{i+1}, add v_i u_i
// and v_i w_i. Backward is the inverse edit.
struct Switching {
  CycleSpec cycle;
  std::vector<int> u;
  std::vector<int> w;

  int length() const { return cycle.length(); }
  // Oriented edges (w_i, u_{i+1}).
  std::vector<std::pair<int, int>> replacement_edges() const;
  bool operator==(const Switching&) const = default;
};

using ForwardSwitching = Switching;
using BackwardSwitching = Switching;

struct SwitchingCount {
  std::optional<std::int64_t> count_valid;  // empty in sampling mode
  std::optional<Switching> sample;
};

inline constexpr std::uint64_t kDefaultSwitchingCap = 50'000'000;

// Structural admissibility plus: the short cycles (length <= r) change by
// exactly alpha.
bool is_valid_forward(const SimpleGraph& g, const Switching& s, int r);
bool is_valid_backward(const SimpleGraph& g, const Switching& s, int r);

SimpleGraph apply_forward(const SimpleGraph& g, const Switching& s);
SimpleGraph apply_backward(const SimpleGraph& g, const Switching& s);

// Counts valid forward switchings for the cycle alpha of g with alpha's
// vertex order fixed, and draws one uniformly. Beyond `cap` candidate
// configurations only a sample is attempted.
SwitchingCount forward_switchings(const SimpleGraph& g, const CycleSpec& alpha, int r, Rng& rng,
                                  std::uint64_t cap = kDefaultSwitchingCap);
SwitchingCount backward_switchings(const SimpleGraph& g, const CycleSpec& alpha, int r, Rng& rng,
                                   std::uint64_t cap = kDefaultSwitchingCap);

// Transition probabilities of one switching_step proposal. For a length k
// configuration c, the step moves forward along c with probability
// forward_move(k) and backward along c with probability backward_move(k),
// provided c is valid; forward_move(k) = backward_move(k) for every k.
struct SwitchingKernel {
  int n;
  int d;
  int r;
  // Probabilities that the proposal produces a specific ordered
  // configuration of length k.
  double forward_proposal(int k) const;
  double backward_proposal(int k) const;
  // Acceptance probabilities.
  double forward_accept(int k) const;
  double backward_accept(int k) const;
};

SwitchingKernel switching_kernel(int n, int d, int r);

// One step of the switching chain: k uniform in {3..r}, fair coin for the
// direction, a uniformly random configuration, Metropolis acceptance so that
// every valid switching of length k is taken with probability proportional
// to 1/([n]_k d^k). Invalid proposals hold.
SimpleGraph switching_step(const SimpleGraph& g, int r, Rng& rng);

}  // namespace regraph
