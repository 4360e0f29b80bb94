#pragma once

#include "jue/cheb.hpp"
#include "jue/weight.hpp"

#include <cstddef>
#include <vector>

namespace jue {

/// Finite Hilbert transform against the arcsine weight, evaluated term-wise
/// on the Chebyshev basis: T_0 contributes 0 and T_n (n >= 1) contributes
/// U_{n-1}(x).
double hilbert_transform(const ChebSeries& w, double x);

/// Limiting covariance functional of linear statistics; symmetric bilinear
/// form, computed from the Hilbert-transform representation by
/// Gauss-Chebyshev quadrature.
double sigma2(const ChebSeries& w, const ChebSeries& g);

struct CltMoments {
    double mu = 0.0;
    double var = 0.0;
};

/// Limiting mean and variance of sum f(lambda_j) - N int f dmu.
CltMoments clt_moments(const ChebSeries& f, double alpha, double beta, const ChebSeries& t);

struct MollifierSpec {
    double epsilon = 0.0;
    double center = 0.0; // in (-1,1)
};

/// Cauchy-mollified jump profile: sqrt(2)pi (1_{(-inf,x]} * phi_eps)(z),
/// decreasing from sqrt(2)pi at -inf to 0 at +inf.
double mollified_jump(const MollifierSpec& m, double z);

/// Deterministic centering subtracted from the counting process to make it
/// asymptotically mean-zero.
double tilde_shift(double x, double alpha, double beta, const ChebSeries& t);

/// Leading terms of log E e^{gamma h_N(x)} away from the edges.
double predict_edge_ratio(std::size_t N, double x, double gamma);

/// Leading terms of log D_N(x1,x2;g1,g2)/D_N(x1;g1+g2) for nearby jumps.
double predict_merging_ratio(std::size_t N, double x1, double x2, double g1, double g2);

/// Full first-order prediction for log D_N(...; t+w)/D_N(...; t) with jump
/// locations held fixed.
double predict_separated_ratio(std::size_t N, const ChebSeries& w, const std::vector<Jump>& jumps,
                               double alpha, double beta, const ChebSeries& t);

} // namespace jue
