#pragma once

#include "jue/sampler.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace jue {

/// Log-correlated covariance kernel on (-1,1)^2, closed form.
double kernel_sigma(double x, double y);

/// K-term partial sum of the sine-series expansion of the kernel.
double kernel_sigma_series(double x, double y, std::size_t K);

/// Truncated series representation of the field:
/// X(x) = sum_{k<=K} sqrt(2/k) sin(k theta) g_k, theta = arccos(-x).
struct FieldSample {
    std::size_t K = 0;
    std::vector<double> g;

    double eval(double x) const;
    double truncated_variance(double x) const;
};

FieldSample sample_field(std::size_t K, std::uint64_t seed, std::uint64_t stream_index);

/// Cauchy-mollified field X_eps(x) = int_{-1}^{1} phi_eps(x-u) X(u) du,
/// evaluated by fixed quadrature over [-1,1].
class MollifiedField {
public:
    MollifiedField(const FieldSample& f, double eps, std::size_t order = 512);

    double eval(double x) const;

    /// Var X_eps(x) of the truncation, from the mollified basis functions.
    double variance(double x) const;

private:
    const FieldSample field_;
    double eps_;
    std::vector<double> nodes_, weights_;
};

struct GmcWeights {
    std::vector<double> grid;
    std::vector<double> weights;
    double gamma = 0.0;
};

/// Normalized exponential weights e^{gamma X_eps}/E e^{gamma X_eps} on a
/// grid; gamma outside (0, sqrt 2) triggers a warning on stderr.
GmcWeights gmc_weights(const FieldSample& f, double gamma, double eps, const std::vector<double>& grid);

struct MeasureComparison {
    // Two-sample KS distances for the functionals int T_k dmu, k = 0,1,2.
    double ks[3] = {0.0, 0.0, 0.0};
    std::size_t trials = 0;
};

/// Compares the eigenvalue-side random measure (density e^{gamma h_N}
/// normalized by its quadrature expectation) with the mollified-field
/// measure across independent trials.
MeasureComparison compare_measures(const EnsembleSpec& spec, double gamma, double eps,
                                   std::size_t trials);

} // namespace jue
