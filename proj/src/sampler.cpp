#include "jue/sampler.hpp"

#include "jue/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace jue {

std::string method_name(SampleMethod m) {
    switch (m) {
    case SampleMethod::manova: return "manova";
    case SampleMethod::mcmc: return "mcmc";
    case SampleMethod::tridiagonal: return "tridiagonal";
    }
    return "?";
}

SampleMethod method_from_name(const std::string& name) {
    if (name == "manova") return SampleMethod::manova;
    if (name == "mcmc") return SampleMethod::mcmc;
    if (name == "tridiagonal") return SampleMethod::tridiagonal;
    throw std::invalid_argument("unknown sampling method: " + name);
}

void EnsembleSpec::validate() const {
    if (N == 0) throw std::invalid_argument("EnsembleSpec: N must be >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("EnsembleSpec: alpha and beta must be > -1");
    if (method == SampleMethod::manova) {
        const bool a_ok = alpha >= 0.0 && alpha == std::floor(alpha);
        const bool b_ok = beta >= 0.0 && beta == std::floor(beta);
        if (!a_ok || !b_ok)
            throw std::invalid_argument("EnsembleSpec: manova requires nonnegative integer alpha, beta");
        if (!t.empty()) throw std::invalid_argument("EnsembleSpec: manova requires empty t");
    }
    if (method == SampleMethod::tridiagonal && !t.empty())
        throw std::invalid_argument("EnsembleSpec: tridiagonal requires empty t");
}

EigenvalueSample sample_manova(const EnsembleSpec& spec, std::uint64_t draw_index) {
    EnsembleSpec s = spec;
    s.method = SampleMethod::manova;
    s.validate();
    RngStream rng(s.seed, draw_index);

    const Eigen::Index n = static_cast<Eigen::Index>(s.N);
    const Eigen::Index n1 = n + static_cast<Eigen::Index>(s.alpha);
    const Eigen::Index n2 = n + static_cast<Eigen::Index>(s.beta);

    auto gaussian_matrix = [&](Eigen::Index rows) {
        Eigen::MatrixXcd m(rows, n);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                m(i, j) = std::complex<double>(rng.normal(), rng.normal());
        return m;
    };
    const Eigen::MatrixXcd a = gaussian_matrix(n1);
    const Eigen::MatrixXcd b = gaussian_matrix(n2);
    const Eigen::MatrixXcd A = a.adjoint() * a;
    const Eigen::MatrixXcd S = A + b.adjoint() * b;

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver(A, S, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success) throw std::runtime_error("sample_manova: eigensolver failed");

    EigenvalueSample out;
    out.spec = s;
    out.draw_index = draw_index;
    out.values.resize(s.N);
    for (std::size_t j = 0; j < s.N; ++j) {
        double x = solver.eigenvalues()(static_cast<Eigen::Index>(j));
        x = std::clamp(x, 0.0, 1.0);
        out.values[j] = 1.0 - 2.0 * x;
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

namespace {
double log_density(const std::vector<double>& lam, const EnsembleSpec& s) {
    double v = 0.0;
    for (std::size_t j = 0; j < lam.size(); ++j) {
        if (!(lam[j] > -1.0 && lam[j] < 1.0)) return -std::numeric_limits<double>::infinity();
        v += s.alpha * std::log(1.0 - lam[j]) + s.beta * std::log(1.0 + lam[j]);
        if (!s.t.empty()) v += s.t.eval(lam[j]);
        for (std::size_t k = 0; k < j; ++k) v += 2.0 * std::log(std::abs(lam[j] - lam[k]));
    }
    return v;
}

// Change in the log density when coordinate i moves to xp.
double log_density_delta(const std::vector<double>& lam, std::size_t i, double xp, const EnsembleSpec& s) {
    const double x = lam[i];
    double d = s.alpha * (std::log(1.0 - xp) - std::log(1.0 - x)) +
               s.beta * (std::log(1.0 + xp) - std::log(1.0 + x));
    if (!s.t.empty()) d += s.t.eval(xp) - s.t.eval(x);
    for (std::size_t k = 0; k < lam.size(); ++k) {
        if (k == i) continue;
        if (xp == lam[k]) return -std::numeric_limits<double>::infinity();
        d += 2.0 * (std::log(std::abs(xp - lam[k])) - std::log(std::abs(x - lam[k])));
    }
    return d;
}
} // namespace

EigenvalueSample sample_mcmc(const EnsembleSpec& spec, std::size_t sweeps, std::uint64_t draw_index) {
    EnsembleSpec s = spec;
    s.method = SampleMethod::mcmc;
    s.validate();
    if (sweeps == 0) throw std::invalid_argument("sample_mcmc: sweeps must be >= 1");
    RngStream rng(s.seed, draw_index);

    // Start at the quantiles of the limiting distribution (distinct by
    // construction).
    std::vector<double> lam(s.N);
    for (std::size_t j = 0; j < s.N; ++j)
        lam[j] = -std::cos((static_cast<double>(j) + 0.5) * std::numbers::pi / static_cast<double>(s.N));
    if (!(log_density(lam, s) > -std::numeric_limits<double>::infinity()))
        throw std::runtime_error("sample_mcmc: degenerate initial state");

    double scale = 2.0 / static_cast<double>(s.N);
    const std::size_t tune_sweeps = std::max<std::size_t>(1, sweeps / 2);
    for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
        std::size_t accepted = 0;
        for (std::size_t i = 0; i < s.N; ++i) {
            const double xp = lam[i] + scale * rng.normal();
            const double u = rng.uniform();
            if (!(xp > -1.0 && xp < 1.0)) continue;
            const double d = log_density_delta(lam, i, xp, s);
            if (std::log(u) < d) {
                lam[i] = xp;
                ++accepted;
            }
        }
        if (sweep < tune_sweeps) {
            const double rate = static_cast<double>(accepted) / static_cast<double>(s.N);
            if (rate > 0.5) scale *= 1.1;
            else if (rate < 0.3) scale *= 0.9;
        }
    }

    EigenvalueSample out;
    out.spec = s;
    out.draw_index = draw_index;
    out.values = std::move(lam);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

EigenvalueSample sample_tridiagonal(const EnsembleSpec& spec, std::uint64_t draw_index) {
    EnsembleSpec s = spec;
    s.method = SampleMethod::tridiagonal;
    s.validate();
    RngStream rng(s.seed, draw_index);

    const std::size_t N = s.N;
    const double a = s.alpha, b = s.beta;

    // Independent coefficients on (-1,1) with density prop. to
    // (1-x)^{s-1}(1+x)^{t-1}; the even/odd parameter choices make the
    // eigenvalues of the assembled tridiagonal matrix follow the target
    // density on [-2,2], which is then halved.
    auto draw_shifted_beta = [&](double sp, double tp) { return 1.0 - 2.0 * rng.beta(sp, tp); };
    std::vector<double> al(2 * N - 1);
    for (std::size_t k = 0; k < 2 * N - 1; ++k) {
        const double kk = static_cast<double>(k);
        const double NN = static_cast<double>(N);
        if (k % 2 == 0)
            al[k] = draw_shifted_beta((2.0 * NN - kk - 2.0) / 2.0 + a + 1.0,
                                      (2.0 * NN - kk - 2.0) / 2.0 + b + 1.0);
        else
            al[k] = draw_shifted_beta((2.0 * NN - kk - 3.0) / 2.0 + a + b + 2.0,
                                      (2.0 * NN - kk - 1.0) / 2.0);
    }
    auto alpha_at = [&](std::ptrdiff_t k) -> double {
        if (k < 0 || k >= static_cast<std::ptrdiff_t>(2 * N - 1)) return -1.0;
        return al[static_cast<std::size_t>(k)];
    };

    Eigen::VectorXd diag(static_cast<Eigen::Index>(N));
    Eigen::VectorXd offdiag(static_cast<Eigen::Index>(N > 1 ? N - 1 : 1));
    for (std::size_t k = 0; k < N; ++k) {
        const std::ptrdiff_t kk = static_cast<std::ptrdiff_t>(k);
        diag(static_cast<Eigen::Index>(k)) =
            (1.0 - alpha_at(2 * kk - 1)) * alpha_at(2 * kk) - (1.0 + alpha_at(2 * kk - 1)) * alpha_at(2 * kk - 2);
        if (k + 1 < N) {
            const double prod = (1.0 - alpha_at(2 * kk - 1)) * (1.0 - alpha_at(2 * kk) * alpha_at(2 * kk)) *
                                (1.0 + alpha_at(2 * kk + 1));
            offdiag(static_cast<Eigen::Index>(k)) = std::sqrt(std::max(prod, 0.0));
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, offdiag.head(static_cast<Eigen::Index>(N > 1 ? N - 1 : 0)),
                                  Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("sample_tridiagonal: eigensolver failed");

    EigenvalueSample out;
    out.spec = s;
    out.draw_index = draw_index;
    out.values.resize(N);
    for (std::size_t j = 0; j < N; ++j)
        out.values[j] = std::clamp(0.5 * solver.eigenvalues()(static_cast<Eigen::Index>(j)), -1.0, 1.0);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

EigenvalueSample sample(const EnsembleSpec& spec, std::uint64_t draw_index, std::size_t default_sweeps) {
    switch (spec.method) {
    case SampleMethod::manova: return sample_manova(spec, draw_index);
    case SampleMethod::mcmc:
        return sample_mcmc(spec, default_sweeps == 0 ? 4 * spec.N + 200 : default_sweeps, draw_index);
    case SampleMethod::tridiagonal: return sample_tridiagonal(spec, draw_index);
    }
    throw std::invalid_argument("sample: unknown method");
}

} // namespace jue
