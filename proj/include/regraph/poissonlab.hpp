#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "regraph/words.hpp"

namespace regraph {

enum class Model { permutation, uniform };

std::string to_string(Model m);
Model parse_model(std::string_view s);

// Means of the limiting independent Poisson cycle counts, k = first..r.
// permutation: a(d,k)/2k from k = 1. uniform: (d-1)^k/2k, zero below 3.
struct PoissonTarget {
  Model model = Model::permutation;
  int d = 0;
  int r = 0;
  std::map<int, Rational> means;

  int first_length() const { return model == Model::permutation ? 1 : 3; }
  // Means of the compared coordinates, in length order.
  std::vector<double> compared_means() const;
};

PoissonTarget poisson_targets(Model model, int d, int r);

// Limit mean 1/h(w) of the count of cycles with word class w, |w| <= r.
std::map<WordClass, Rational> word_class_means(int d, int r);

// Probability 1/[n]_k that a fixed labeled k-cycle is present in the
// permutation model.
double cycle_indicator_mean(int n, int k);

using Point = std::vector<std::int64_t>;

// Finite PMF on integer vectors. Exact PMFs carry the mass they leave outside
// their truncation box in tail_mass; empirical ones carry their sample count.
struct Pmf {
  std::size_t dimension = 0;
  std::map<Point, double> mass;
  double tail_mass = 0;
  std::uint64_t sample_count = 0;
};

Pmf empirical_pmf(const std::vector<Point>& samples);

// Per-coordinate cap k with P(Poi(mean) > k) < tail.
std::vector<std::int64_t> poisson_box(const std::vector<double>& means, double tail = 1e-6);

Pmf product_poisson_pmf(const std::vector<double>& means, const std::vector<std::int64_t>& box);

// Half the l1 distance over the union support, with both tail masses counted
// as full discrepancy. Clamped to [0, 1].
double tv_distance(const Pmf& p, const Pmf& q);

// Plug-in bias allowance: occupied cells / (2 samples) + exact tail mass.
double tv_bias_bound(const Pmf& empirical, const Pmf& exact);

struct TvRow {
  int n = 0;
  double tv = 0;
  double tv_bias_bound = 0;
  double rate_shape = 0;
};

struct TvReport {
  Model model = Model::permutation;
  int d = 0;
  int r = 0;
  std::uint64_t samples = 0;
  std::vector<TvRow> rows;
};

// Samples graphs at each n, counts cycles by length and compares with the
// product Poisson target. rate_shape is C/n with C fitted to the largest n
// (shape only; the constant is not known).
TvReport tv_convergence_experiment(Model model, int d, int r, const std::vector<int>& n_list,
                                   std::uint64_t samples, std::uint64_t seed, int workers = 1);

nlohmann::json to_json(const TvReport& report);
std::string to_csv(const TvReport& report);

struct MonotonicityReport {
  std::uint64_t trials = 0;
  std::uint64_t minus_checked = 0;
  std::uint64_t plus_checked = 0;
  std::uint64_t minus_violations = 0;  // beta in the minus part with J_beta = 1
  std::uint64_t plus_violations = 0;   // beta in the plus part with J_beta < I_beta
};

// Random (G, alpha) pairs in the permutation model, alpha of uniform length
// in 1..r. Only cycles present in G or G' can violate either inequality, so
// those are the candidates.
MonotonicityReport coupling_monotonicity_report(int n, int d, int r, std::uint64_t trials, std::uint64_t seed,
                                                int workers = 1);

nlohmann::json to_json(const MonotonicityReport& report);

}  // namespace regraph
