#include "regraph/poissonlab.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "regraph/coupling.hpp"
#include "regraph/error.hpp"
#include "regraph/graph.hpp"
#include "regraph/parallel.hpp"
#include "regraph/walks.hpp"

namespace regraph {

std::string to_string(Model m) { return m == Model::permutation ? "permutation" : "uniform"; }

Model parse_model(std::string_view s) {
  if (s == "permutation") return Model::permutation;
  if (s == "uniform") return Model::uniform;
  throw InvalidInput("unknown model: " + std::string(s));
}

std::vector<double> PoissonTarget::compared_means() const {
  std::vector<double> out;
  for (int k = first_length(); k <= r; ++k) out.push_back(boost::rational_cast<double>(means.at(k)));
  return out;
}

PoissonTarget poisson_targets(Model model, int d, int r) {
  PoissonTarget t{model, d, r, {}};
  if (model == Model::permutation) {
    if (d < 1 || r < 1) throw InvalidInput("permutation targets need d >= 1, r >= 1");
    for (int k = 1; k <= r; ++k) t.means[k] = Rational(count_reduced_words(d, k), 2 * k);
    return t;
  }
  if (d < 3 || r < 3) throw InvalidInput("uniform targets need d >= 3, r >= 3");
  t.means[1] = t.means[2] = Rational(0);
  std::int64_t power = (d - 1) * (d - 1);
  for (int k = 3; k <= r; ++k) {
    if (__builtin_mul_overflow(power, static_cast<std::int64_t>(d - 1), &power)) throw RangeError("(d-1)^k overflows");
    t.means[k] = Rational(power, 2 * k);
  }
  return t;
}

std::map<WordClass, Rational> word_class_means(int d, int r) {
  std::map<WordClass, Rational> out;
  for (int k = 1; k <= r; ++k) {
    for (const auto& c : enumerate_word_classes(d, k)) out.emplace(c, Rational(1, c.period));
  }
  return out;
}

double cycle_indicator_mean(int n, int k) {
  if (k < 1 || k > n) throw InvalidInput("cycle_indicator_mean needs 1 <= k <= n");
  double log_falling = 0;
  for (int i = 0; i < k; ++i) log_falling += std::log(static_cast<double>(n - i));
  return std::exp(-log_falling);
}

Pmf empirical_pmf(const std::vector<Point>& samples) {
  if (samples.empty()) throw InvalidInput("empirical_pmf needs at least one sample");
  Pmf p;
  p.dimension = samples.front().size();
  p.sample_count = samples.size();
  std::map<Point, std::uint64_t> counts;
  for (const auto& x : samples) {
    if (x.size() != p.dimension) throw InvalidInput("samples differ in dimension");
    ++counts[x];
  }
  const auto total = static_cast<double>(samples.size());
  for (const auto& [x, c] : counts) p.mass.emplace(x, static_cast<double>(c) / total);
  return p;
}

namespace {

// P(Poi(mean) > k).
double poisson_upper(double mean, std::int64_t k) {
  if (mean == 0) return 0;
  return boost::math::gamma_p(static_cast<double>(k + 1), mean);
}

}  // namespace

std::vector<std::int64_t> poisson_box(const std::vector<double>& means, double tail) {
  std::vector<std::int64_t> box;
  for (double m : means) {
    if (!(m >= 0)) throw InvalidInput("Poisson means must be >= 0");
    std::int64_t k = static_cast<std::int64_t>(m);
    while (poisson_upper(m, k) >= tail) ++k;
    box.push_back(k);
  }
  return box;
}

Pmf product_poisson_pmf(const std::vector<double>& means, const std::vector<std::int64_t>& box) {
  if (means.size() != box.size()) throw InvalidInput("means and box differ in dimension");
  const std::size_t dim = means.size();
  std::vector<std::vector<double>> marginal(dim);
  double log_inside = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(means[i] >= 0)) throw InvalidInput("Poisson means must be >= 0");
    if (box[i] < 0) throw InvalidInput("box caps must be >= 0");
    for (std::int64_t k = 0; k <= box[i]; ++k) {
      const double m = means[i];
      marginal[i].push_back(m == 0 ? (k == 0 ? 1.0 : 0.0)
                                   : std::exp(-m + static_cast<double>(k) * std::log(m) - std::lgamma(static_cast<double>(k) + 1)));
    }
    log_inside += std::log1p(-poisson_upper(means[i], box[i]));
  }
  Pmf p;
  p.dimension = dim;
  p.tail_mass = -std::expm1(log_inside);
  Point x(dim, 0);
  for (;;) {
    double v = 1;
    for (std::size_t i = 0; i < dim; ++i) v *= marginal[i][static_cast<std::size_t>(x[i])];
    if (v > 0) p.mass.emplace(x, v);
    std::size_t i = 0;
    while (i < dim && ++x[i] > box[i]) x[i++] = 0;
    if (i == dim) break;
  }
  return p;
}

double tv_distance(const Pmf& p, const Pmf& q) {
  if (p.dimension != q.dimension) throw InvalidInput("tv_distance: dimension mismatch");
  double sum = 0;
  auto a = p.mass.begin();
  auto b = q.mass.begin();
  while (a != p.mass.end() || b != q.mass.end()) {
    if (b == q.mass.end() || (a != p.mass.end() && a->first < b->first)) {
      sum += a->second;
      ++a;
    } else if (a == p.mass.end() || b->first < a->first) {
      sum += b->second;
      ++b;
    } else {
      sum += std::abs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  sum += p.tail_mass + q.tail_mass;
  return std::clamp(sum / 2, 0.0, 1.0);
}

double tv_bias_bound(const Pmf& empirical, const Pmf& exact) {
  if (empirical.sample_count == 0) throw InvalidInput("tv_bias_bound needs an empirical PMF");
  return static_cast<double>(empirical.mass.size()) / (2.0 * static_cast<double>(empirical.sample_count)) + exact.tail_mass;
}

TvReport tv_convergence_experiment(Model model, int d, int r, const std::vector<int>& n_list,
                                   std::uint64_t samples, std::uint64_t seed, int workers) {
  if (samples == 0) throw InvalidInput("samples must be positive");
  if (n_list.empty()) throw InvalidInput("n_list is empty");
  const PoissonTarget target = poisson_targets(model, d, r);
  const auto means = target.compared_means();
  const auto box = poisson_box(means);
  const Pmf exact = product_poisson_pmf(means, box);
  const int first = target.first_length();

  TvReport report{model, d, r, samples, {}};
  for (std::size_t row = 0; row < n_list.size(); ++row) {
    const int n = n_list[row];
    auto counts = run_replicas(seed, static_cast<std::uint64_t>(row) << 40, samples, workers, [&](Rng& rng, std::size_t) {
      const CycleCensus census = model == Model::permutation ? enumerate_cycles(sample_permutation_model(n, d, rng), r).census
                                                            : enumerate_cycles(sample_uniform_model(n, d, rng), r).census;
      Point x;
      for (int k = first; k <= r; ++k) x.push_back(census.count(k));
      return x;
    });
    const Pmf emp = empirical_pmf(counts);
    report.rows.push_back({n, tv_distance(emp, exact), tv_bias_bound(emp, exact), 0});
  }
  const auto& last = report.rows.back();
  for (auto& row : report.rows) row.rate_shape = last.tv * last.n / row.n;
  return report;
}

nlohmann::json to_json(const TvReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n}, {"tv", r.tv}, {"tv_bias_bound", r.tv_bias_bound}, {"rate_shape", r.rate_shape}});
  }
  return {{"model", to_string(report.model)},
          {"d", report.d},
          {"r", report.r},
          {"samples", report.samples},
          {"rate_shape_note", "shape only: C/n with C fitted to the largest n"},
          {"rows", std::move(rows)}};
}

std::string to_csv(const TvReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "n,tv,tv_bias_bound,rate_shape\n";
  for (const auto& r : report.rows) out << r.n << ',' << r.tv << ',' << r.tv_bias_bound << ',' << r.rate_shape << '\n';
  return out.str();
}

MonotonicityReport coupling_monotonicity_report(int n, int d, int r, std::uint64_t trials, std::uint64_t seed,
                                                int workers) {
  if (n < 1 || d < 1 || r < 1) throw InvalidInput("monotonicity report needs n, d, r >= 1");
  const auto parts = run_replicas(seed, 0, trials, workers, [&](Rng& rng, std::size_t) {
    const PermGraph g = sample_permutation_model(n, d, rng);
    const int k = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(std::min(r, n))));
    const CycleSpec alpha = random_cycle_spec(n, d, k, rng);
    const PermGraph coupled = size_bias_coupling(g, alpha);
    std::set<CycleSpec> pool;
    for (const auto& c : enumerate_cycles(g, r).cycles) pool.insert(c);
    for (const auto& c : enumerate_cycles(coupled, r).cycles) pool.insert(c);
    const Partition part = monotone_partition(alpha, {pool.begin(), pool.end()});
    MonotonicityReport m;
    m.trials = 1;
    for (const auto& beta : part.minus) {
      ++m.minus_checked;
      if (contains(coupled, beta)) ++m.minus_violations;
    }
    for (const auto& beta : part.plus) {
      ++m.plus_checked;
      if (contains(g, beta) && !contains(coupled, beta)) ++m.plus_violations;
    }
    return m;
  });
  MonotonicityReport total;
  for (const auto& m : parts) {
    total.trials += m.trials;
    total.minus_checked += m.minus_checked;
    total.plus_checked += m.plus_checked;
    total.minus_violations += m.minus_violations;
    total.plus_violations += m.plus_violations;
  }
  return total;
}

nlohmann::json to_json(const MonotonicityReport& m) {
  return {{"trials", m.trials},
          {"minus_checked", m.minus_checked},
          {"plus_checked", m.plus_checked},
          {"minus_violations", m.minus_violations},
          {"plus_violations", m.plus_violations}};
}

}  // namespace regraph
