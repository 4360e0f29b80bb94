#include "jue/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jue {

namespace {
constexpr double kSqrt2Pi = std::numbers::sqrt2 * std::numbers::pi;
}

double arcsine_cdf(double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw std::invalid_argument("arcsine_cdf: x must be in [-1,1]");
    return 1.0 - std::acos(x) / std::numbers::pi;
}

double percentile(std::size_t j, std::size_t N) {
    if (j < 1 || j > N) throw std::invalid_argument("percentile: j must be in 1..N");
    return -std::cos((static_cast<double>(j) - 0.5) * std::numbers::pi / static_cast<double>(N));
}

double counting_h(const EigenvalueSample& sample, double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw std::invalid_argument("counting_h: x must be in [-1,1]");
    const auto& v = sample.values;
    const auto count = std::upper_bound(v.begin(), v.end(), x) - v.begin();
    return kSqrt2Pi * (static_cast<double>(count) - static_cast<double>(v.size()) * arcsine_cdf(x));
}

RigidityStats rigidity_stats(const EigenvalueSample& sample) {
    const auto& v = sample.values;
    const std::size_t N = v.size();
    RigidityStats st;
    st.sup_h = 0.0;
    st.inf_h = 0.0;
    double best = -1.0;
    for (std::size_t j = 1; j <= N; ++j) {
        const double F = arcsine_cdf(v[j - 1]);
        st.sup_h = std::max(st.sup_h, kSqrt2Pi * (static_cast<double>(j) - static_cast<double>(N) * F));
        st.inf_h = std::min(st.inf_h, kSqrt2Pi * (static_cast<double>(j) - 1.0 - static_cast<double>(N) * F));
        const double kj = percentile(j, N);
        const double fl = std::abs(v[j - 1] - kj) / std::sqrt(1.0 - kj * kj);
        if (fl > best) {
            best = fl;
            st.argmax_index = j;
        }
    }
    st.max_scaled_fluct = best;
    return st;
}

double edge_window_max(const EigenvalueSample& sample, double x_cut) {
    const auto& v = sample.values;
    const std::size_t N = v.size();
    double m = 0.0;
    for (std::size_t j = 1; j <= N && v[j - 1] <= x_cut; ++j)
        m = std::max(m, kSqrt2Pi * (static_cast<double>(j) - static_cast<double>(N) * arcsine_cdf(v[j - 1])));
    return m;
}

WilsonInterval wilson_interval(std::size_t hits, std::size_t trials, double z) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    WilsonInterval w;
    w.freq = p;
    w.lo = std::max(0.0, center - half);
    w.hi = std::min(1.0, center + half);
    return w;
}

RigidityFrequencies mc_rigidity(const EnsembleSpec& spec, std::size_t trials, double epsilon) {
    if (trials == 0) throw std::invalid_argument("mc_rigidity: trials must be >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("mc_rigidity: epsilon must be positive");
    spec.validate();

    const double logN = std::log(static_cast<double>(spec.N));
    const double fl_lo = std::max(0.0, (1.0 - epsilon)) * logN / static_cast<double>(spec.N);
    const double fl_hi = (1.0 + epsilon) * logN / static_cast<double>(spec.N);
    const double h_lo = std::max(0.0, (1.0 - epsilon)) * std::numbers::sqrt2 * logN;
    const double h_hi = (1.0 + epsilon) * std::numbers::sqrt2 * logN;

    std::size_t fl_hits = 0, h_hits = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const EigenvalueSample s = sample(spec, trial);
        const RigidityStats st = rigidity_stats(s);
        if (st.max_scaled_fluct >= fl_lo && st.max_scaled_fluct <= fl_hi) ++fl_hits;
        const double hmax = std::max(st.sup_h, -st.inf_h);
        if (hmax >= h_lo && hmax <= h_hi) ++h_hits;
    }

    RigidityFrequencies out;
    out.fluct_event = wilson_interval(fl_hits, trials);
    out.counting_event = wilson_interval(h_hits, trials);
    out.trials = trials;
    return out;
}

} // namespace jue
