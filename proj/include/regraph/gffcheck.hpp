#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "regraph/spectra.hpp"

namespace regraph {

// Green's function of the upper half-plane,
// -(1/2pi) log|z - w| + (1/2pi) log|z - conj(w)|.
double green_halfplane(std::complex<double> z, std::complex<double> w);

struct QuadratureResult {
  double value = 0;
  double error = 0;
};

// Covariance of the Chebyshev-U pairings of the field along
// Omega(x, t) = e^t (x + i sqrt(1 - x^2)):
//   -(1/2pi) int_0^pi int_0^pi sin(ju) sin(kv)
//        log|(e^{t0+iu} - e^{t1+iv}) / (e^{t0+iu} - e^{t1-iv})| du dv,
// by nested adaptive quadrature split on the diagonal. Throws NumericError
// when the error estimate exceeds the tolerance.
QuadratureResult gff_cheb_covariance(int j, int k, double t0, double t1, double tolerance = 1e-5);

// delta_jk (pi / 4k) e^{k(t0 - t1)}.
double gff_cheb_closed_form(int j, int k, double t0, double t1);

// -(1/k) (sum_i T_k(lambda_i) - conditional_mean) on a unit-scale
// spectrum of a 2d-regular graph.
double height_pairing(const Spectrum& s, int d, int k, double conditional_mean);

// Values minus the mean of their stratum; strata with fewer than min_count
// members give nullopt.
std::vector<std::optional<double>> stratified_residuals(const std::vector<double>& values,
                                                        const std::vector<std::int64_t>& strata, int min_count = 30);

struct GffPair {
  int j = 0;
  int k = 0;
  double lag = 0;
  double numeric = 0;
  double closed_form = 0;
  double abs_err = 0;
};

std::vector<GffPair> gff_covariance_table(int max_k, const std::vector<double>& lags, double tolerance = 1e-5);
nlohmann::json to_json(const std::vector<GffPair>& pairs);

}  // namespace regraph
