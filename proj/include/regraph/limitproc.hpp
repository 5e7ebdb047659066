#pragma once

#include <vector>

#include "regraph/growth.hpp"
#include "regraph/rng.hpp"
#include "regraph/words.hpp"

namespace regraph {

// P(Yule process from j is at k after time tau)
//   = C(k-1, k-j) e^{-j tau} (1 - e^{-tau})^{k-j};  0 for j > k.
double yule_pmf(int j, int k, double tau);

// Exact Yule path from j run for time tau; returns the final size.
std::int64_t simulate_yule(int j, double tau, Rng& rng);

// Fraction of j-cycles at time s that have grown to k-cycles at t >= s.
double expected_alpha(int j, int k, double s, double t);

// Cov(N_j(s), N_k(t)) of the stationary limit process, s <= t.
double limit_covariance(int d, int j, int k, double s, double t);

// delta_ik (k/2) e^{-k |t - s|}.
double ou_covariance(int i, int k, double s, double t);

// Immigration rate of k-cycles whose words use letter d+1.
Rational nu_rate(int d, int k);

// Immigration rate mu(w) summed over classes of length k:
// (a(d,k) - a(d,k-1)) / 2.
Rational total_immigration_rate(int d, int k);

// Event-driven simulation of the word process truncated at the table's max
// length. Classes of length l immigrate at rate mu(w); each letter of an
// atom doubles at rate 1; atoms longer than the table are retired.
// Stationary start draws Poi(1/h(w)) atoms of each class at time 0.
// Records N_w at every grid time (sorted, within [0, horizon]); events are
// logged only when asked.
Trajectory simulate_limit(const WordClassTable& table, double horizon, const std::vector<double>& grid,
                          bool stationary_init, Rng& rng, bool record_events = false);

// Series (2d-1)^{-k/2} sum_{j | k} 2j N_j(t) minus its stationary mean
// (2d-1)^{-k/2} sum_{j | k} a(d,j), one value per grid time.
std::vector<double> chebyshev_fluctuation_series(const Trajectory& tr, int d, int k);

// Exact Cov(tr T_i(t), tr T_k(s)) of the finite-d limit object, s <= t:
// (1/4)(2d-1)^{-(i+k)/2} sum_{a | i, b | k} 4ab Cov(N_b(s), N_a(t)).
double chebyshev_trace_covariance(int d, int i, int k, double s, double t);

}  // namespace regraph
