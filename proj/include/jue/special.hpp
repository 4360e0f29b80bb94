#pragma once

#include <complex>

namespace jue {

using cplx = std::complex<double>;

/// log Gamma, principal branch (Lanczos with reflection).
cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);

/// Digamma for complex argument.
cplx digamma(cplx z);

/// Modified Bessel functions of real order nu > -1 at complex argument,
/// |arg z| <= pi/2 as produced by a principal square root. Ascending series
/// for |z| <= 20, asymptotic expansions beyond. Orders within 1e-8 of an
/// integer are evaluated by the integer-order formulas.
cplx bessel_i(double nu, cplx z);
cplx bessel_k(double nu, cplx z);
cplx bessel_i_prime(double nu, cplx z);
cplx bessel_k_prime(double nu, cplx z);

/// Tricomi confluent hypergeometric U(a, 1, w). The branch of log w / w^{-a}
/// is fixed by the caller-supplied continued argument arg_w (|w| and arg_w
/// describe w, which may live off the principal sheet).
cplx tricomi_u1(cplx a, double abs_w, double arg_w);

/// d/dw U(a, 1, w) on the same branch.
cplx tricomi_u1_prime(cplx a, double abs_w, double arg_w);

} // namespace jue
