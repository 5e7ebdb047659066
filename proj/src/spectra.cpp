#include "regraph/spectra.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace regraph {

std::string to_string(Scale s) {
  switch (s) {
    case Scale::raw:
      return "raw";
    case Scale::half_spectral:
      return "half_spectral";
    case Scale::unit:
      return "unit";
  }
  return "unknown";
}

Spectrum eigenvalues(const IntMatrix& adjacency, int degree, Scale scale) {
  if (adjacency.rows() != adjacency.cols() || adjacency != adjacency.transpose()) {
    throw InvalidInput("adjacency matrix is not symmetric");
  }
  if (adjacency.rows() > kMaxDenseSize) throw ResourceError("matrix exceeds the dense eigensolver cap");
  if (scale != Scale::raw && degree < 2) throw InvalidInput("rescaled spectra need degree >= 2");
  Spectrum s;
  s.scale = scale;
  s.degree = degree;
  if (adjacency.rows() == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency.cast<double>(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge", 0.0);
  s.values = solver.eigenvalues().reverse();
  if (scale == Scale::half_spectral) s.values /= std::sqrt(degree - 1.0);
  if (scale == Scale::unit) s.values /= 2 * std::sqrt(degree - 1.0);
  return s;
}

std::string to_csv(const Spectrum& s) {
  std::ostringstream out;
  out.precision(17);
  out << "eigenvalue_" << to_string(s.scale) << "\n";
  for (double v : s.values) out << v << "\n";
  return out.str();
}

int mobius(int n) {
  if (n < 1) throw InvalidInput("mobius needs n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

PolySeries<double> mobius_basis(int degree, int k) {
  if (k < 1) throw InvalidInput("mobius basis index must be positive");
  PolySeries<double> f{Basis::gamma_hat, degree, Eigen::VectorXd::Zero(k + 1)};
  for (int j = 1; j <= k; ++j) {
    if (k % j) continue;
    f.coeffs[j] = mobius(k / j) * std::pow(degree - 1.0, j / 2.0) / (2.0 * k);
  }
  return f;
}

KestenMcKay kesten_mckay(int degree) {
  if (degree < 3) throw InvalidInput("Kesten-McKay density needs degree >= 3");
  return KestenMcKay{degree};
}

double KestenMcKay::density(double x) const {
  const double d = degree;
  const double inside = 4 * (d - 1) - x * x;
  if (inside <= 0) return 0.0;
  return d * std::sqrt(inside) / (2 * std::numbers::pi * (d * d - x * x));
}

double KestenMcKay::a0_quadrature(const PolySeries<double>& f) const {
  const double radius = support_radius();
  auto integrand = [&](double theta) {
    const double c = std::cos(theta);
    return evaluate(f, c) * density(radius * c) * radius * std::sin(theta);
  };
  double error = 0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, std::numbers::pi, 15, 1e-13, &error);
  if (error > 1e-10) throw NumericError("Kesten-McKay quadrature did not reach 1e-10", error);
  return value;
}

double KestenMcKay::a0(const PolySeries<double>& f) const {
  if (f.basis == Basis::gamma_hat && f.degree == degree) return f.coeffs.size() ? f.coeffs[0] : 0.0;
  if (f.basis == Basis::cheb_t) {
    double total = 0;
    for (Eigen::Index k = 0; k < f.coeffs.size(); ++k) {
      if (k == 0) {
        total += f.coeffs[0];
      } else if (k % 2 == 0) {
        total -= f.coeffs[k] * (degree - 2.0) / (2.0 * std::pow(degree - 1.0, static_cast<double>(k / 2)));
      }
    }
    return total;
  }
  return a0_quadrature(f);
}

double KestenMcKay::cdf(double x) const {
  const double radius = support_radius();
  if (x <= -radius) return 0.0;
  if (x >= radius) return 1.0;
  const double top = std::acos(x / radius);
  auto integrand = [&](double theta) { return density(radius * std::cos(theta)) * radius * std::sin(theta); };
  double error = 0;
  const double tail =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, top, 15, 1e-13, &error);
  return 1.0 - tail;
}

double linear_statistic(const Spectrum& s, const PolySeries<double>& f) {
  if (s.scale != Scale::unit) throw InvalidInput("linear statistics need a unit-scale spectrum");
  const PolySeries<double> g = f.basis == Basis::gamma_hat && f.degree == s.degree ? f : convert(f, Basis::gamma_hat, s.degree);
  double total = 0;
  for (double x : s.values) total += evaluate(g, x);
  const double a0 = g.coeffs.size() ? g.coeffs[0] : 0.0;
  return total - static_cast<double>(s.values.size()) * a0;
}

}  // namespace regraph
