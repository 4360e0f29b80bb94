#include "jue/field.hpp"

#include "jue/counting.hpp"
#include "jue/hankel.hpp"
#include "jue/quadrature.hpp"
#include "jue/rng.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace jue {

namespace {
double theta_of(double x) { return std::acos(-x); }

double cauchy_kernel(double u, double eps) {
    const double r = u / eps;
    return 1.0 / (std::numbers::pi * eps * (1.0 + r * r));
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i; else ++j;
        const double fa = static_cast<double>(i) / static_cast<double>(a.size());
        const double fb = static_cast<double>(j) / static_cast<double>(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}
} // namespace

double kernel_sigma(double x, double y) {
    if (x == y) throw std::invalid_argument("kernel_sigma: diverges on the diagonal");
    const double num = 1.0 - x * y + std::sqrt(1.0 - x * x) * std::sqrt(1.0 - y * y);
    return std::log(std::abs(num / (x - y)));
}

double kernel_sigma_series(double x, double y, std::size_t K) {
    const double th = theta_of(x), ph = theta_of(y);
    double s = 0.0;
    for (std::size_t k = 1; k <= K; ++k)
        s += 2.0 / static_cast<double>(k) * std::sin(k * th) * std::sin(k * ph);
    return s;
}

double FieldSample::eval(double x) const {
    const double th = theta_of(x);
    double s = 0.0;
    for (std::size_t k = 1; k <= K; ++k)
        s += std::sqrt(2.0 / static_cast<double>(k)) * std::sin(k * th) * g[k - 1];
    return s;
}

double FieldSample::truncated_variance(double x) const {
    const double th = theta_of(x);
    double s = 0.0;
    for (std::size_t k = 1; k <= K; ++k) {
        const double b = std::sin(k * th);
        s += 2.0 / static_cast<double>(k) * b * b;
    }
    return s;
}

FieldSample sample_field(std::size_t K, std::uint64_t seed, std::uint64_t stream_index) {
    if (K == 0) throw std::invalid_argument("sample_field: K must be >= 1");
    RngStream rng(seed, stream_index);
    FieldSample f;
    f.K = K;
    f.g.resize(K);
    for (std::size_t k = 0; k < K; ++k) f.g[k] = rng.normal();
    return f;
}

MollifiedField::MollifiedField(const FieldSample& f, double eps, std::size_t order)
    : field_(f), eps_(eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("MollifiedField: eps must be positive");
    const GaussRule rule = gauss_legendre(order);
    nodes_ = rule.nodes;
    weights_ = rule.weights;
}

double MollifiedField::eval(double x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        s += weights_[i] * cauchy_kernel(x - nodes_[i], eps_) * field_.eval(nodes_[i]);
    return s;
}

double MollifiedField::variance(double x) const {
    // Var X_eps(x) = sum_k (2/k) c_k(x)^2 with c_k the mollified basis.
    double var = 0.0;
    for (std::size_t k = 1; k <= field_.K; ++k) {
        double c = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            c += weights_[i] * cauchy_kernel(x - nodes_[i], eps_) * std::sin(k * theta_of(nodes_[i]));
        var += 2.0 / static_cast<double>(k) * c * c;
    }
    return var;
}

GmcWeights gmc_weights(const FieldSample& f, double gamma, double eps, const std::vector<double>& grid) {
    if (!(gamma > 0.0 && gamma < std::numbers::sqrt2))
        std::cerr << "gmc_weights: gamma outside the subcritical range (0, sqrt(2))\n";
    const MollifiedField mf(f, eps);
    GmcWeights out;
    out.grid = grid;
    out.gamma = gamma;
    out.weights.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double xv = mf.eval(grid[i]);
        const double var = mf.variance(grid[i]);
        out.weights[i] = std::exp(gamma * xv - 0.5 * gamma * gamma * var);
    }
    return out;
}

MeasureComparison compare_measures(const EnsembleSpec& spec, double gamma, double eps,
                                   std::size_t trials) {
    if (trials < 100) throw std::invalid_argument("compare_measures: need at least 100 trials");
    spec.validate();

    const std::size_t order = 32;
    const GaussRule rule = gauss_legendre(order);

    // Deterministic eigenvalue-side normalization from quadrature.
    WeightSpec w(spec.alpha, spec.beta, {}, spec.t);
    std::vector<double> log_norm(order);
    for (std::size_t i = 0; i < order; ++i)
        log_norm[i] = log_exp_moment(spec.N, rule.nodes[i], gamma, w);

    const std::size_t K = 256;
    std::vector<std::vector<double>> eig_m(3), fld_m(3);
    for (auto& v : eig_m) v.reserve(trials);
    for (auto& v : fld_m) v.reserve(trials);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const EigenvalueSample s = sample(spec, trial);
        const FieldSample f = sample_field(K, spec.seed ^ 0x9e3779b97f4a7c15ULL, trial);
        const MollifiedField mf(f, eps, 256);

        double em[3] = {}, fm[3] = {};
        for (std::size_t i = 0; i < order; ++i) {
            const double x = rule.nodes[i];
            const double eig_density = std::exp(gamma * counting_h(s, x) - log_norm[i]);
            const double fld_density =
                std::exp(gamma * mf.eval(x) - 0.5 * gamma * gamma * mf.variance(x));
            for (unsigned k = 0; k < 3; ++k) {
                const double tk = cheb_t(k, x);
                em[k] += rule.weights[i] * tk * eig_density;
                fm[k] += rule.weights[i] * tk * fld_density;
            }
        }
        for (unsigned k = 0; k < 3; ++k) {
            eig_m[k].push_back(em[k]);
            fld_m[k].push_back(fm[k]);
        }
    }

    MeasureComparison out;
    out.trials = trials;
    for (unsigned k = 0; k < 3; ++k) out.ks[k] = ks_distance(eig_m[k], fld_m[k]);
    return out;
}

} // namespace jue
