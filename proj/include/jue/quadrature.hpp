#pragma once

#include <cstddef>
#include <vector>

namespace jue {

/// Nodes and weights of a Gauss rule on [-1,1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule, exact for polynomials of degree 2n-1.
GaussRule gauss_legendre(std::size_t n);

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b, a, b > -1.
GaussRule gauss_jacobi(std::size_t n, double a, double b);

/// First-kind Gauss-Chebyshev nodes cos((i-1/2)pi/n); every weight is pi/n
/// against 1/sqrt(1-x^2).
GaussRule gauss_chebyshev(std::size_t n);

} // namespace jue
