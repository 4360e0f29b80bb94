#pragma once

#include "jue/special.hpp"
#include "jue/weight.hpp"

#include <array>
#include <string>
#include <vector>

namespace jue {

struct Matrix2C {
    cplx a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

    cplx det() const { return a11 * a22 - a12 * a21; }
    double norm() const;

    static Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
    Matrix2C inverse() const;
    Matrix2C operator*(const Matrix2C& o) const;
    Matrix2C operator-(const Matrix2C& o) const;
};

/// Side from which a contour point is approached: Plus is the left side of
/// the oriented contour (the upper side for cuts on the real line).
enum class Side { Plus, Minus };

using SzegoSpec = WeightSpec;

/// phi(z) = z + (z-1)^{1/2}(z+1)^{1/2}, analytic off [-1,1], ~2z at infinity.
cplx phi_map(cplx z);

/// Boundary values phi_pm(x) = x +- i sqrt(1-x^2) on (-1,1).
cplx phi_map_boundary(double x, Side side);

/// Global 2x2 outer solution D_inf^{s3} Q(z) D(z)^{-s3} for the weight s;
/// analytic off [-1,1], -> I at infinity.
Matrix2C global_parametrix(cplx z, const SzegoSpec& s);

/// Scalar Szego function D(z) = D_w D_t D_gamma for the weight s.
cplx szego_d(cplx z, const SzegoSpec& s);

/// Off-diagonal jump matrix of the outer problem at x in (-1,1):
/// [[0, e^{sqrt2 pi g} w_J(x)], [-e^{-sqrt2 pi g}/w_J(x), 0]] with g the sum
/// of jump strengths located at or to the right of x.
Matrix2C outer_jump(double x, const SzegoSpec& s);

/// Bessel-kernel model matrix; rays at arg z = 2pi/3, pi, -2pi/3.
Matrix2C bessel_parametrix(cplx z, double alpha);

/// Confluent hypergeometric model matrix for purely imaginary parameter b;
/// rays at arg z = 0, pi/4, 3pi/4, pi, 5pi/4, 7pi/4.
Matrix2C hg_parametrix(cplx z, cplx b);

/// d/dz of hg_parametrix on the same sector conventions.
Matrix2C hg_parametrix_prime(cplx z, cplx b);

/// Jump matrix of the hypergeometric model on ray k = 1..6 (rays numbered
/// counterclockwise from the positive real axis).
Matrix2C hg_jump(int k, cplx b);

/// Model matrix lambda^{-s3/4} B ((1+e^{-i pi/2} sqrt(lambda))/sqrt(lambda+1))^{-i sqrt2 gamma s3},
/// analytic off (-infty, 0].
Matrix2C model_m(cplx lambda, double gamma);

/// Extrapolates f(eta) to eta -> 0 through eta = 1e-4, 1e-5, 1e-6 by the
/// quadratic Lagrange polynomial.
template <typename F>
auto extrapolate_boundary(F&& f) {
    constexpr double eta[3] = {1e-4, 1e-5, 1e-6};
    double w[3];
    for (int i = 0; i < 3; ++i) {
        w[i] = 1.0;
        for (int j = 0; j < 3; ++j)
            if (j != i) w[i] *= (0.0 - eta[j]) / (eta[i] - eta[j]);
    }
    auto v0 = f(eta[0]);
    auto v1 = f(eta[1]);
    auto v2 = f(eta[2]);
    return decltype(v0){v0.a11 * w[0] + v1.a11 * w[1] + v2.a11 * w[2],
                        v0.a12 * w[0] + v1.a12 * w[1] + v2.a12 * w[2],
                        v0.a21 * w[0] + v1.a21 * w[1] + v2.a21 * w[2],
                        v0.a22 * w[0] + v1.a22 * w[1] + v2.a22 * w[2]};
}

/// One automated verification item: residual against its tolerance, plus the
/// raw offset-eta residual sequence when the item is a jump check (must
/// decrease towards the boundary).
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    std::vector<double> eta_residuals;

    bool passed() const;
};

std::vector<CheckResult> check_global(const SzegoSpec& s, std::uint64_t seed = 7);
std::vector<CheckResult> check_bessel(double alpha, std::uint64_t seed = 7);
std::vector<CheckResult> check_hg(cplx b, std::uint64_t seed = 7);
std::vector<CheckResult> check_model(double gamma, std::uint64_t seed = 7);
std::vector<CheckResult> check_phi();

} // namespace jue
