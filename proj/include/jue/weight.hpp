#pragma once

#include "jue/cheb.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace jue {

/// A jump factor exp(sqrt(2) pi gamma) applied for x <= location.
struct Jump {
    double location = 0.0;
    double gamma = 0.0;
};

/// Weight W(x) = exp(sum_k sqrt(2) pi gamma_k 1_{x<=x_k}) (1-x)^a (1+x)^b e^{t(x)}
/// on (-1,1), with 0-2 jumps at nondecreasing interior locations.
struct WeightSpec {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<Jump> jumps;
    ChebSeries t;

    WeightSpec() = default;
    WeightSpec(double a, double b, std::vector<Jump> j = {}, ChebSeries ts = {});

    /// Jump-free smooth part (1-x)^a (1+x)^b e^{t(x)}.
    double smooth_part(double x) const;

    /// Full weight including jump factors.
    double operator()(double x) const;

    /// Combined jump strength at coincident locations folded in; removes
    /// zero-strength jumps.
    WeightSpec normalized() const;

    WeightSpec with_jump(double location, double gamma) const;
    WeightSpec without_jumps() const;
};

/// Composite Gauss grid adapted to a WeightSpec: panels split at jump
/// locations, Gauss-Jacobi exponents at the endpoint panels, smooth factors
/// folded into the node weights.
struct QuadratureGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> panel_boundaries;

    /// sum_i w_i f(x_i)
    double integrate(const std::vector<double>& f_values) const;
    double total_mass() const;
};

/// Build the composite rule with `order` nodes per panel.
QuadratureGrid build_quadrature(const WeightSpec& w, std::size_t order);

} // namespace jue
