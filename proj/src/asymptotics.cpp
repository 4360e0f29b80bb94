#include "jue/asymptotics.hpp"

#include "jue/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jue {

namespace {
constexpr double kSqrt2Pi = std::numbers::sqrt2 * std::numbers::pi;

double arcsine_F(double x) { return 1.0 - std::acos(x) / std::numbers::pi; }

// int f(x)/sqrt(1-x^2) dx over [-1,1].
double chebyshev_integral(const ChebSeries& f, std::size_t order = 256) {
    const GaussRule rule = gauss_chebyshev(order);
    double s = 0.0;
    for (std::size_t i = 0; i < order; ++i) s += rule.weights[i] * f.eval(rule.nodes[i]);
    return s;
}
} // namespace

double hilbert_transform(const ChebSeries& w, double x) {
    if (!(std::abs(x) < 1.0)) throw std::invalid_argument("hilbert_transform: |x| < 1 required");
    const auto& c = w.coeffs();
    double s = 0.0;
    for (std::size_t n = 1; n < c.size(); ++n) s += c[n] * cheb_u(static_cast<unsigned>(n - 1), x);
    return s;
}

double sigma2(const ChebSeries& w, const ChebSeries& g) {
    if (w.empty() || g.empty()) return 0.0;
    const ChebSeries wp = w.derivative();
    const std::size_t order = 256;
    const GaussRule rule = gauss_chebyshev(order);
    double s = 0.0;
    for (std::size_t i = 0; i < order; ++i) {
        const double x = rule.nodes[i];
        s += rule.weights[i] * wp.eval(x) * hilbert_transform(g, x) * (1.0 - x * x);
    }
    // One sqrt(1-x^2) factor cancels against the Gauss-Chebyshev weight.
    return s / (2.0 * std::numbers::pi);
}

CltMoments clt_moments(const ChebSeries& f, double alpha, double beta, const ChebSeries& t) {
    CltMoments m;
    m.mu = (alpha + beta) / (2.0 * std::numbers::pi) * chebyshev_integral(f) -
           0.5 * alpha * f.eval(1.0) - 0.5 * beta * f.eval(-1.0) + sigma2(f, t);
    m.var = sigma2(f, f);
    return m;
}

double mollified_jump(const MollifierSpec& m, double z) {
    if (!(m.epsilon > 0.0)) throw std::invalid_argument("mollified_jump: epsilon must be positive");
    return 0.5 * kSqrt2Pi + std::numbers::sqrt2 * std::atan((m.center - z) / m.epsilon);
}

double tilde_shift(double x, double alpha, double beta, const ChebSeries& t) {
    if (!(x >= -1.0 && x <= 1.0)) throw std::invalid_argument("tilde_shift: x must be in [-1,1]");
    double bracket = 0.5 * (alpha + beta) * arcsine_F(x);
    if (x >= 1.0) bracket -= 0.5 * alpha;
    bracket -= 0.5 * beta; // 1_{[-1,inf)} is 1 on the whole domain
    if (!t.empty() && std::abs(x) < 1.0)
        bracket += hilbert_transform(t, x) * std::sqrt(1.0 - x * x) / (2.0 * std::numbers::pi);
    return kSqrt2Pi * bracket;
}

double predict_edge_ratio(std::size_t N, double x, double gamma) {
    const double NN = static_cast<double>(N);
    return kSqrt2Pi * gamma * NN * arcsine_F(x) + 0.5 * gamma * gamma * std::log(NN) +
           0.25 * gamma * gamma * std::log(1.0 - x * x);
}

double predict_merging_ratio(std::size_t N, double x1, double x2, double g1, double g2) {
    const double NN = static_cast<double>(N);
    const double arc = std::asin(x2) - std::asin(x1);
    return std::numbers::sqrt2 * NN * g2 * arc - g1 * g2 * std::max(0.0, std::log(std::abs(x1 - x2) * NN));
}

double predict_separated_ratio(std::size_t N, const ChebSeries& w, const std::vector<Jump>& jumps,
                               double alpha, double beta, const ChebSeries& t) {
    if (w.empty()) return 0.0;
    const double integral = chebyshev_integral(w);
    double v = static_cast<double>(N) * integral / std::numbers::pi +
               (alpha + beta) / (2.0 * std::numbers::pi) * integral -
               0.5 * beta * w.eval(-1.0) - 0.5 * alpha * w.eval(1.0) +
               0.5 * sigma2(w, w) + sigma2(w, t);
    for (const Jump& j : jumps)
        v -= j.gamma / std::numbers::sqrt2 * std::sqrt(1.0 - j.location * j.location) *
             hilbert_transform(w, j.location);
    return v;
}

} // namespace jue
