#include "regraph/limitproc.hpp"

#include <algorithm>
#include <cmath>

#include "regraph/error.hpp"

namespace regraph {

namespace {

double log_choose(int n, int k) { return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0); }

}  // namespace

double yule_pmf(int j, int k, double tau) {
  if (j < 1) throw InvalidInput("Yule start must be >= 1");
  if (!(tau >= 0)) throw InvalidInput("tau must be >= 0");
  if (k < j) return 0;
  if (tau == 0) return k == j ? 1 : 0;
  return std::exp(log_choose(k - 1, k - j) - j * tau + (k - j) * std::log(-std::expm1(-tau)));
}

std::int64_t simulate_yule(int j, double tau, Rng& rng) {
  if (j < 1) throw InvalidInput("Yule start must be >= 1");
  std::int64_t x = j;
  double t = exponential(rng, static_cast<double>(x));
  while (t <= tau) {
    ++x;
    t += exponential(rng, static_cast<double>(x));
  }
  return x;
}

double expected_alpha(int j, int k, double s, double t) {
  if (s > t) throw InvalidInput("expected_alpha needs s <= t");
  return yule_pmf(j, k, t - s);
}

double limit_covariance(int d, int j, int k, double s, double t) {
  if (s > t) throw InvalidInput("limit_covariance needs s <= t");
  if (j > k) return 0;
  return static_cast<double>(count_reduced_words(d, j)) / (2.0 * j) * yule_pmf(j, k, t - s);
}

double ou_covariance(int i, int k, double s, double t) {
  if (i != k) return 0;
  return k / 2.0 * std::exp(-k * std::abs(t - s));
}

Rational nu_rate(int d, int k) {
  if (d < 1 || k < 1) throw InvalidInput("nu_rate needs d, k >= 1");
  return Rational(count_reduced_words(d + 1, k) - count_reduced_words(d + 1, k - 1) - count_reduced_words(d, k) +
                      count_reduced_words(d, k - 1),
                  2);
}

Rational total_immigration_rate(int d, int k) {
  if (d < 1 || k < 1) throw InvalidInput("total_immigration_rate needs d, k >= 1");
  return Rational(count_reduced_words(d, k) - count_reduced_words(d, k - 1), 2);
}

Trajectory simulate_limit(const WordClassTable& table, double horizon, const std::vector<double>& grid,
                          bool stationary_init, Rng& rng, bool record_events) {
  if (!(horizon >= 0)) throw InvalidInput("horizon must be >= 0");
  if (!std::is_sorted(grid.begin(), grid.end())) throw InvalidInput("grid must be sorted");
  if (!grid.empty() && (grid.front() < 0 || grid.back() > horizon)) throw InvalidInput("grid must lie in [0, horizon]");

  const std::size_t classes = table.size();
  std::vector<double> cumulative(classes);
  double immigration = 0;
  for (std::size_t i = 0; i < classes; ++i) {
    immigration += boost::rational_cast<double>(mu_rate(table[i]));
    cumulative[i] = immigration;
  }

  std::vector<int> atoms;  // current class of each live atom
  std::vector<std::int64_t> words(classes, 0);
  std::int64_t letters = 0;
  auto add = [&](int c) {
    atoms.push_back(c);
    ++words[static_cast<std::size_t>(c)];
    letters += table[static_cast<std::size_t>(c)].length;
  };
  if (stationary_init) {
    for (std::size_t i = 0; i < classes; ++i) {
      const auto m = poisson(rng, 1.0 / table[i].period);
      for (std::int64_t a = 0; a < m; ++a) add(static_cast<int>(i));
    }
  }

  Trajectory out;
  auto record = [&](double at) {
    out.times.push_back(at);
    out.by_word.push_back(words);
    std::vector<std::int64_t> lengths(static_cast<std::size_t>(table.max_length()), 0);
    for (std::size_t i = 0; i < classes; ++i) lengths[static_cast<std::size_t>(table[i].length - 1)] += words[i];
    out.by_length.push_back(std::move(lengths));
  };

  double t = 0;
  std::size_t gi = 0;
  for (;;) {
    const double rate = immigration + static_cast<double>(letters);
    const double next = rate > 0 ? t + exponential(rng, rate) : horizon + 1;
    while (gi < grid.size() && grid[gi] < next) record(grid[gi++]);
    if (next > horizon) break;
    t = next;
    double u = uniform01(rng) * rate;
    if (u < immigration) {
      const auto c = static_cast<int>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
      const int cls = std::min(c, static_cast<int>(classes) - 1);
      add(cls);
      if (record_events) out.events.push_back({t, EventKind::spontaneous, -1, cls});
      continue;
    }
    u -= immigration;
    // Atom chosen with probability proportional to its length, then a
    // uniform letter of it.
    std::size_t a = 0;
    for (; a + 1 < atoms.size(); ++a) {
      const double len = table[static_cast<std::size_t>(atoms[a])].length;
      if (u < len) break;
      u -= len;
    }
    const int from = atoms[a];
    const int len = table[static_cast<std::size_t>(from)].length;
    const int position = std::min(static_cast<int>(u), len - 1);
    const int to = table.doubled(static_cast<std::size_t>(from), position);
    --words[static_cast<std::size_t>(from)];
    letters -= len;
    if (record_events) out.events.push_back({t, EventKind::grown, from, to});
    if (to < 0) {
      atoms[a] = atoms.back();
      atoms.pop_back();
    } else {
      atoms[a] = to;
      ++words[static_cast<std::size_t>(to)];
      letters += len + 1;
    }
  }
  return out;
}

namespace {

std::vector<int> divisors(int k) {
  std::vector<int> out;
  for (int j = 1; j <= k; ++j)
    if (k % j == 0) out.push_back(j);
  return out;
}

}  // namespace

std::vector<double> chebyshev_fluctuation_series(const Trajectory& tr, int d, int k) {
  if (d < 1 || k < 1) throw InvalidInput("chebyshev_fluctuation_series needs d, k >= 1");
  const double scale = std::pow(2.0 * d - 1, -k / 2.0);
  double mean = 0;
  for (int j : divisors(k)) mean += static_cast<double>(count_reduced_words(d, j));
  mean *= scale;
  std::vector<double> out;
  for (const auto& lengths : tr.by_length) {
    if (static_cast<int>(lengths.size()) < k) throw InvalidInput("trajectory does not cover every divisor of k");
    double sum = 0;
    for (int j : divisors(k)) sum += 2.0 * j * static_cast<double>(lengths[static_cast<std::size_t>(j - 1)]);
    out.push_back(scale * sum - mean);
  }
  return out;
}

double chebyshev_trace_covariance(int d, int i, int k, double s, double t) {
  if (s > t) throw InvalidInput("chebyshev_trace_covariance needs s <= t");
  double sum = 0;
  for (int a : divisors(i))
    for (int b : divisors(k)) sum += 4.0 * a * b * limit_covariance(d, b, a, s, t);
  return 0.25 * std::pow(2.0 * d - 1, -(i + k) / 2.0) * sum;
}

}  // namespace regraph
