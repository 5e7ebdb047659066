#include "regraph/gffcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "regraph/error.hpp"

namespace regraph {

double green_halfplane(std::complex<double> z, std::complex<double> w) {
  if (!(z.imag() > 0) || !(w.imag() > 0)) throw InvalidInput("points must lie in the upper half-plane");
  if (z == w) throw InvalidInput("Green's function is singular at z = w");
  return (std::log(std::abs(z - std::conj(w))) - std::log(std::abs(z - w))) / (2 * std::numbers::pi);
}

namespace {

// log|e^{t0+ia} - e^{t1+ib}| via the half-angle difference.
double log_gap(double t0, double t1, double angle) {
  const double gap = std::hypot(std::exp(t0) - std::exp(t1), 2 * std::exp((t0 + t1) / 2) * std::sin(angle / 2));
  return std::log(std::max(gap, std::numeric_limits<double>::denorm_min()));
}

}  // namespace

QuadratureResult gff_cheb_covariance(int j, int k, double t0, double t1, double tolerance) {
  if (j < 1 || k < 1) throw InvalidInput("j and k must be >= 1");
  if (t0 > t1) throw InvalidInput("gff_cheb_covariance needs t0 <= t1");
  const double pi = std::numbers::pi;
  boost::math::quadrature::tanh_sinh<double> inner;
  double inner_error = 0;

  auto kernel = [&](double u, double v, double diff) {
    return std::sin(j * u) * (log_gap(t0, t1, diff) - log_gap(t0, t1, u + v));
  };
  auto outer = [&](double v) {
    // xc: signed distance to the nearer endpoint.
    auto below = [&](double u, double xc) { return kernel(u, v, u > v / 2 ? -xc : u - v); };
    auto above = [&](double u, double xc) { return kernel(u, v, u < (v + pi) / 2 ? -xc : u - v); };
    double e1 = 0, e2 = 0;
    double sum = 0;
    if (v > 0) sum += inner.integrate(below, 0.0, v, 1e-10, &e1);
    if (v < pi) sum += inner.integrate(above, v, pi, 1e-10, &e2);
    inner_error = std::max(inner_error, std::abs(e1 * sum) + std::abs(e2 * sum));
    return std::sin(k * v) * sum;
  };
  double outer_error = 0;
  double l1 = 0;
  const double raw = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(outer, 0.0, pi, 15, 1e-11, &outer_error, &l1);
  const double error = (outer_error * l1 + inner_error * pi) / (2 * pi);
  const double value = -raw / (2 * pi);
  if (!(error <= tolerance) || !std::isfinite(value)) {
    throw NumericError("GFF covariance quadrature did not converge", error);
  }
  return {value, error};
}

double gff_cheb_closed_form(int j, int k, double t0, double t1) {
  if (j != k) return 0;
  return std::numbers::pi / (4.0 * k) * std::exp(k * (t0 - t1));
}

double height_pairing(const Spectrum& s, int d, int k, double conditional_mean) {
  if (s.scale != Scale::unit) throw InvalidInput("height pairing needs a unit-scale spectrum");
  if (s.degree != 2 * d) throw InvalidInput("spectrum degree does not match 2d");
  if (k < 1) throw InvalidInput("k must be >= 1");
  return -(linear_statistic(s, basis_element(Basis::cheb_t, k)) - conditional_mean) / k;
}

std::vector<std::optional<double>> stratified_residuals(const std::vector<double>& values,
                                                        const std::vector<std::int64_t>& strata, int min_count) {
  if (values.size() != strata.size()) throw InvalidInput("values and strata differ in length");
  std::map<std::int64_t, std::pair<double, int>> acc;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto& a = acc[strata[i]];
    a.first += values[i];
    ++a.second;
  }
  std::vector<std::optional<double>> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& a = acc[strata[i]];
    if (a.second < min_count) {
      out.emplace_back();
    } else {
      out.emplace_back(values[i] - a.first / a.second);
    }
  }
  return out;
}

std::vector<GffPair> gff_covariance_table(int max_k, const std::vector<double>& lags, double tolerance) {
  std::vector<GffPair> out;
  for (int j = 1; j <= max_k; ++j)
    for (int k = 1; k <= max_k; ++k)
      for (double lag : lags) {
        const auto q = gff_cheb_covariance(j, k, 0, lag, tolerance);
        const double exact = gff_cheb_closed_form(j, k, 0, lag);
        out.push_back({j, k, lag, q.value, exact, std::abs(q.value - exact)});
      }
  return out;
}

nlohmann::json to_json(const std::vector<GffPair>& pairs) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : pairs) {
    rows.push_back({{"j", p.j}, {"k", p.k}, {"lag", p.lag}, {"numeric", p.numeric}, {"closed_form", p.closed_form}, {"abs_err", p.abs_err}});
  }
  return {{"pairs", std::move(rows)}};
}

}  // namespace regraph
