#include "jue/weight.hpp"

#include "jue/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jue {

namespace {
constexpr double kSqrt2Pi = std::numbers::sqrt2 * std::numbers::pi;
}

WeightSpec::WeightSpec(double a, double b, std::vector<Jump> j, ChebSeries ts)
    : alpha(a), beta(b), jumps(std::move(j)), t(std::move(ts)) {
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("WeightSpec: alpha and beta must be > -1");
    std::sort(jumps.begin(), jumps.end(), [](const Jump& u, const Jump& v) { return u.location < v.location; });
    for (const Jump& jmp : jumps)
        if (!(jmp.location > -1.0 && jmp.location < 1.0))
            throw std::invalid_argument("WeightSpec: jump locations must lie in (-1,1)");
    if (jumps.size() > 2) throw std::invalid_argument("WeightSpec: at most two jumps");
}

double WeightSpec::smooth_part(double x) const {
    double v = std::pow(1.0 - x, alpha) * std::pow(1.0 + x, beta);
    if (!t.empty()) v *= std::exp(t.eval(x));
    return v;
}

double WeightSpec::operator()(double x) const {
    double g = 0.0;
    for (const Jump& jmp : jumps)
        if (x <= jmp.location) g += jmp.gamma;
    return smooth_part(x) * std::exp(kSqrt2Pi * g);
}

WeightSpec WeightSpec::normalized() const {
    WeightSpec out(alpha, beta, {}, t);
    for (const Jump& jmp : jumps) {
        if (jmp.gamma == 0.0) continue;
        if (!out.jumps.empty() && out.jumps.back().location == jmp.location)
            out.jumps.back().gamma += jmp.gamma;
        else
            out.jumps.push_back(jmp);
    }
    return out;
}

WeightSpec WeightSpec::with_jump(double location, double gamma) const {
    WeightSpec out = *this;
    out.jumps.push_back({location, gamma});
    std::sort(out.jumps.begin(), out.jumps.end(),
              [](const Jump& u, const Jump& v) { return u.location < v.location; });
    return out.normalized();
}

WeightSpec WeightSpec::without_jumps() const {
    WeightSpec out = *this;
    out.jumps.clear();
    return out;
}

double QuadratureGrid::integrate(const std::vector<double>& f_values) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f_values[i];
    return s;
}

double QuadratureGrid::total_mass() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

QuadratureGrid build_quadrature(const WeightSpec& w_in, std::size_t order) {
    if (order == 0) throw std::invalid_argument("build_quadrature: order must be >= 1");
    const WeightSpec w = w_in.normalized();

    QuadratureGrid grid;
    grid.panel_boundaries.push_back(-1.0);
    for (const Jump& jmp : w.jumps) grid.panel_boundaries.push_back(jmp.location);
    grid.panel_boundaries.push_back(1.0);

    const std::size_t npanels = grid.panel_boundaries.size() - 1;
    grid.nodes.reserve(npanels * order);
    grid.weights.reserve(npanels * order);

    for (std::size_t p = 0; p < npanels; ++p) {
        const double a = grid.panel_boundaries[p];
        const double b = grid.panel_boundaries[p + 1];
        const bool touches_left = (p == 0);
        const bool touches_right = (p + 1 == npanels);
        const double ja = touches_right ? w.alpha : 0.0;
        const double jb = touches_left ? w.beta : 0.0;
        const GaussRule rule = gauss_jacobi(order, ja, jb);

        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (b + a);
        // Base-weight factors supplied by the rule after the affine map.
        const double log_scale = std::log(half)
                                 + ja * std::log(0.5 * (1.0 - a))
                                 + jb * std::log(0.5 * (b + 1.0));

        // Jump factor is constant on the open panel: all jumps at or to the
        // right of this panel apply.
        double gsum = 0.0;
        for (const Jump& jmp : w.jumps)
            if (jmp.location >= b - 1e-300) gsum += jmp.gamma;
        const double jump_factor = kSqrt2Pi * gsum;

        for (std::size_t i = 0; i < order; ++i) {
            const double x = half * rule.nodes[i] + mid;
            double logw = std::log(rule.weights[i]) + log_scale + jump_factor;
            if (!touches_right) logw += w.alpha * std::log(1.0 - x);
            if (!touches_left) logw += w.beta * std::log(1.0 + x);
            if (!w.t.empty()) logw += w.t.eval(x);
            grid.nodes.push_back(x);
            grid.weights.push_back(std::exp(logw));
        }
    }
    return grid;
}

} // namespace jue
