#pragma once

#include "jue/cheb.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace jue {

enum class SampleMethod { manova, mcmc, tridiagonal };

std::string method_name(SampleMethod m);
SampleMethod method_from_name(const std::string& name);

struct EnsembleSpec {
    std::size_t N = 1;
    double alpha = 0.0;
    double beta = 0.0;
    ChebSeries t;
    SampleMethod method = SampleMethod::tridiagonal;
    std::uint64_t seed = 0;

    /// Throws invalid_argument on violated invariants (alpha/beta range,
    /// manova integrality, tridiagonal needs t empty).
    void validate() const;
};

struct EigenvalueSample {
    std::vector<double> values; // sorted ascending, in [-1,1]
    EnsembleSpec spec;
    std::uint64_t draw_index = 0;
};

/// Eigenvalues of a Hermitian pencil built from two complex Wishart
/// matrices; requires integer alpha, beta >= 0 and t empty.
EigenvalueSample sample_manova(const EnsembleSpec& spec, std::uint64_t draw_index);

/// Metropolis chain on the joint log density, single-coordinate proposals,
/// scale tuned to 30-50% acceptance during the first half of the sweeps and
/// frozen afterward.
EigenvalueSample sample_mcmc(const EnsembleSpec& spec, std::size_t sweeps, std::uint64_t draw_index);

/// Eigenvalues of the random tridiagonal model; real alpha, beta > -1,
/// t empty.
EigenvalueSample sample_tridiagonal(const EnsembleSpec& spec, std::uint64_t draw_index);

/// Dispatch on spec.method (mcmc uses default_sweeps).
EigenvalueSample sample(const EnsembleSpec& spec, std::uint64_t draw_index,
                        std::size_t default_sweeps = 0);

} // namespace jue
