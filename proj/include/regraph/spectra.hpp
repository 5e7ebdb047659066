#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "regraph/error.hpp"
#include "regraph/graph.hpp"

namespace regraph {

// raw: eigenvalues of A. half_spectral: of A / sqrt(D-1), support [-2, 2].
// unit: of A / (2 sqrt(D-1)), support [-1, 1]. D is the graph degree.
enum class Scale { raw, half_spectral, unit };

std::string to_string(Scale s);

struct Spectrum {
  Eigen::VectorXd values;  // descending
  Scale scale = Scale::raw;
  int degree = 0;
};

inline constexpr int kMaxDenseSize = 5000;

// Throws InvalidInput for a non-symmetric matrix or degree < 2 with a
// rescaled output, ResourceError above kMaxDenseSize.
Spectrum eigenvalues(const IntMatrix& adjacency, int degree, Scale scale);

std::string to_csv(const Spectrum& s);

// Polynomial bases. For a graph of degree D:
//   gamma:      G_0 = 1, G_k(x) = 2 T_k(x/2) + [k even] (D-2)/(D-1)^(k/2)
//   gamma_hat:  G^_k(x) = G_k(2x), the same family on [-1, 1].
// A 2d-regular permutation-model graph has D = 2d.
enum class Basis { monomial, gamma, gamma_hat, cheb_t, cheb_u };

template <class Scalar>
struct PolySeries {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Basis basis = Basis::monomial;
  int degree = 0;  // graph degree D, used by the gamma bases only
  Vector coeffs;
};

namespace detail {

// Monomial coefficients of T_0..T_m (column k holds T_k).
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> chebyshev_table(int m, bool second_kind) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix t = Matrix::Zero(m + 1, m + 1);
  t(0, 0) = 1;
  if (m >= 1) t(1, 1) = second_kind ? 2 : 1;
  for (int k = 2; k <= m; ++k) {
    for (int i = 0; i <= k; ++i) {
      Scalar v = -t(i, k - 2);
      if (i > 0) v += 2 * t(i - 1, k - 1);
      t(i, k) = v;
    }
  }
  return t;
}

template <class Scalar>
Scalar gamma_shift(int degree, int k) {
  if (k == 0 || k % 2 != 0) return Scalar(0);
  return Scalar(degree - 2) / std::pow(Scalar(degree - 1), Scalar(k / 2));
}

// Column k = monomial coefficients of basis element k.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis_matrix(Basis b, int degree, int m) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  switch (b) {
    case Basis::monomial:
      return Matrix::Identity(m + 1, m + 1);
    case Basis::cheb_t:
      return chebyshev_table<Scalar>(m, false);
    case Basis::cheb_u:
      return chebyshev_table<Scalar>(m, true);
    case Basis::gamma:
    case Basis::gamma_hat: {
      if (degree < 2) throw InvalidInput("gamma bases need graph degree >= 2");
      Matrix t = chebyshev_table<Scalar>(m, false);
      // 2 T_k(x/2) for gamma, 2 T_k(x) for gamma_hat.
      for (int i = 0; i <= m; ++i) {
        const Scalar row = b == Basis::gamma ? std::pow(Scalar(0.5), Scalar(i)) : Scalar(1);
        for (int k = 1; k <= m; ++k) t(i, k) *= 2 * row;
      }
      for (int k = 2; k <= m; k += 2) t(0, k) += gamma_shift<Scalar>(degree, k);
      return t;
    }
  }
  throw InvalidInput("unknown basis");
}

}  // namespace detail

// Conversions run in extended precision for double series; the monomial
// change of basis loses about a digit per 3 degrees otherwise.
template <class Scalar>
using WideScalar = std::conditional_t<std::is_same_v<Scalar, double>, long double, Scalar>;

template <class Scalar>
typename PolySeries<Scalar>::Vector to_monomial(const PolySeries<Scalar>& f) {
  using W = WideScalar<Scalar>;
  const int m = static_cast<int>(f.coeffs.size()) - 1;
  if (m < 0) return f.coeffs;
  return (detail::basis_matrix<W>(f.basis, f.degree, m) * f.coeffs.template cast<W>()).template cast<Scalar>();
}

template <class Scalar>
PolySeries<Scalar> from_monomial(const typename PolySeries<Scalar>::Vector& mono, Basis b, int degree = 0) {
  using W = WideScalar<Scalar>;
  PolySeries<Scalar> out{b, degree, mono};
  const int m = static_cast<int>(mono.size()) - 1;
  if (m < 0) return out;
  const auto t = detail::basis_matrix<W>(b, degree, m);
  // Triangular with nonzero diagonal.
  out.coeffs = t.template triangularView<Eigen::Upper>().solve(mono.template cast<W>()).template cast<Scalar>();
  return out;
}

template <class Scalar>
PolySeries<Scalar> convert(const PolySeries<Scalar>& f, Basis b, int degree) {
  using W = WideScalar<Scalar>;
  PolySeries<Scalar> out{b, degree, f.coeffs};
  const int m = static_cast<int>(f.coeffs.size()) - 1;
  if (m < 0) return out;
  const auto to = detail::basis_matrix<W>(f.basis, f.degree, m);
  const auto from = detail::basis_matrix<W>(b, degree, m);
  const Eigen::Matrix<W, Eigen::Dynamic, 1> mono = to * f.coeffs.template cast<W>();
  out.coeffs = from.template triangularView<Eigen::Upper>().solve(mono).template cast<Scalar>();
  return out;
}

// Clenshaw for the Chebyshev and gamma bases, Horner for monomials.
template <class Scalar>
Scalar evaluate(const PolySeries<Scalar>& f, Scalar x) {
  const auto m = f.coeffs.size();
  if (m == 0) return Scalar(0);
  if (f.basis == Basis::monomial) {
    Scalar acc = 0;
    for (auto i = m; i-- > 0;) acc = acc * x + f.coeffs[i];
    return acc;
  }
  typename PolySeries<Scalar>::Vector c = f.coeffs;
  Scalar y = x;
  if (f.basis == Basis::gamma || f.basis == Basis::gamma_hat) {
    if (f.basis == Basis::gamma) y = x / 2;
    for (Eigen::Index k = 1; k < c.size(); ++k) {
      c[0] += f.coeffs[k] * detail::gamma_shift<Scalar>(f.degree, static_cast<int>(k));
      c[k] = 2 * f.coeffs[k];
    }
  }
  Scalar b1 = 0, b2 = 0;
  for (auto k = m; k-- > 1;) {
    const Scalar b0 = c[k] + 2 * y * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  // T: c0 + y b1 - b2; U: c0 + 2y b1 - b2.
  return f.basis == Basis::cheb_u ? c[0] + 2 * y * b1 - b2 : c[0] + y * b1 - b2;
}

// Basis element k as a series in its own basis.
template <class Scalar = double>
PolySeries<Scalar> basis_element(Basis b, int k, int degree = 0) {
  PolySeries<Scalar> f{b, degree, PolySeries<Scalar>::Vector::Zero(k + 1)};
  f.coeffs[k] = 1;
  return f;
}

// Gamma_k or Gamma^_k in monomial form.
template <class Scalar = double>
PolySeries<Scalar> gamma_polynomial(int degree, int k, Basis variant) {
  if (variant != Basis::gamma && variant != Basis::gamma_hat) throw InvalidInput("variant must be a gamma basis");
  if (k < 0) throw InvalidInput("negative polynomial index");
  return PolySeries<Scalar>{Basis::monomial, 0, to_monomial(basis_element<Scalar>(variant, k, degree))};
}

// f_k = (1/2k) sum_{j | k} mu(k/j) (D-1)^(j/2) Gamma^_j, in the gamma_hat
// basis.
PolySeries<double> mobius_basis(int degree, int k);

int mobius(int n);

// Kesten-McKay law of degree D >= 3 on the raw scale.
struct KestenMcKay {
  int degree;
  double density(double x) const;
  double support_radius() const { return 2 * std::sqrt(degree - 1.0); }
  // Integral of f(x / (2 sqrt(D-1))) against the law, that is, of a
  // unit-scale polynomial against the unit-scale law. Closed form for
  // cheb_t and gamma_hat series, adaptive Gauss-Kronrod otherwise.
  double a0(const PolySeries<double>& f) const;
  double a0_quadrature(const PolySeries<double>& f) const;
  double cdf(double x) const;
};

KestenMcKay kesten_mckay(int degree);

// sum_i f(lambda_i) - n a_0 with a_0 the Gamma^_0 coefficient of f.
double linear_statistic(const Spectrum& s, const PolySeries<double>& f);

}  // namespace regraph
