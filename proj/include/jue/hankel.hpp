#pragma once

#include "jue/weight.hpp"

#include <cstddef>
#include <vector>

namespace jue {

/// Three-term recurrence data of the monic orthogonal polynomials of a
/// discrete measure: pi_{k+1} = (x - b_k) pi_k - a_k^2 pi_{k-1}, squared
/// norms h_k kept in log scale.
struct RecurrenceTable {
    std::vector<double> b;
    std::vector<double> a2;    // a2[0] = 0 by convention
    std::vector<double> log_h;

    /// log D_N = sum_{k<N} log h_k.
    double log_hankel(std::size_t N) const;
};

/// Discretized Stieltjes procedure on a quadrature grid, N coefficients.
/// Throws a precision error naming the failing index if a squared norm
/// loses positivity.
RecurrenceTable stieltjes_recurrence(const QuadratureGrid& grid, std::size_t N);

struct HankelResult {
    double log_d = 0.0;
    std::size_t node_count = 0;
    bool stable = false;
};

/// log det of the moment matrix, via orthogonal-polynomial norms on a
/// composite grid whose per-panel order is doubled until the value is
/// stable to 1e-10 (or a node cap is hit, reported via `stable`).
HankelResult log_hankel_detailed(const WeightSpec& w, std::size_t N);
double log_hankel(const WeightSpec& w, std::size_t N);

/// Brute-force log det of the N x N moment matrix built on the same
/// converged grid, for cross-checking; N <= 8 only.
double log_hankel_moment_oracle(const WeightSpec& w, std::size_t N);

/// log E exp(gamma h_N(x)) for the ensemble of the jump-free weight w.
double log_exp_moment(std::size_t N, double x, double gamma, const WeightSpec& w);

/// log of D_N(two jumps at x,y, both gamma) * D_N(no jump)
///        / (D_N(jump at x) * D_N(jump at y)), base weight w jump-free.
double log_two_point_ratio(std::size_t N, double x, double y, double gamma,
                           const WeightSpec& w = WeightSpec{});

/// |centered difference of log D_N in the last jump location minus the
/// closed-form derivative from the orthogonal polynomials|, N <= 12.
double verify_differential_identity(const WeightSpec& w, std::size_t N, double x2, double step);

} // namespace jue
