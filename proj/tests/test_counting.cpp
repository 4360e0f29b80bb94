#include <doctest.h>

#include "jue/counting.hpp"
#include "jue/sampler.hpp"

#include <cmath>
#include <numbers>

using namespace jue;

namespace {
constexpr double kSqrt2Pi = std::numbers::sqrt2 * std::numbers::pi;

EigenvalueSample quantile_sample(std::size_t N) {
    EigenvalueSample s;
    s.spec.N = N;
    for (std::size_t j = 1; j <= N; ++j) s.values.push_back(percentile(j, N));
    return s;
}
} // namespace

TEST_CASE("limiting CDF values") {
    CHECK(arcsine_cdf(-1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(arcsine_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(arcsine_cdf(1.0 / std::numbers::sqrt2) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("quantiles") {
    CHECK(percentile(1, 2) == doctest::Approx(-std::numbers::sqrt2 / 2.0).epsilon(1e-15));
    CHECK(percentile(3, 5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    for (std::size_t N : {7, 64, 1000, 10000})
        for (std::size_t j = 1; j <= N; j += std::max<std::size_t>(1, N / 17)) {
            // arccos is ill-conditioned at the hard edges; scale the budget
            // by its derivative there
            const double cond = 1.0 / std::sqrt(1.0 - percentile(j, N) * percentile(j, N));
            CHECK(std::abs(arcsine_cdf(percentile(j, N)) - (j - 0.5) / N) <
                  1e-14 * std::max(1.0, 0.02 * cond));
            CHECK(percentile(j, N) == doctest::Approx(-percentile(N + 1 - j, N)).scale(1.0).epsilon(1e-13));
        }
    CHECK_THROWS(percentile(0, 5));
    CHECK_THROWS(percentile(6, 5));
}

TEST_CASE("counting process boundary and step values") {
    EnsembleSpec spec;
    spec.N = 9;
    spec.seed = 13;
    const EigenvalueSample s = sample(spec, 0);
    CHECK(counting_h(s, -1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(counting_h(s, 1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    // decrease between consecutive jumps equals -sqrt2 pi N dF
    for (std::size_t j = 0; j + 1 < s.values.size(); ++j) {
        const double l = s.values[j], r = s.values[j + 1];
        const double lhs = counting_h(s, r - 1e-12) - counting_h(s, l);
        const double rhs = -kSqrt2Pi * 9.0 * (arcsine_cdf(r - 1e-12) - arcsine_cdf(l));
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }

    EigenvalueSample one;
    one.spec.N = 1;
    one.values = {0.25};
    const double x = 0.25 + 1e-9;
    CHECK(counting_h(one, x) == doctest::Approx(kSqrt2Pi * (1.0 - arcsine_cdf(x))).epsilon(1e-12));
}

TEST_CASE("rigidity statistics") {
    const EigenvalueSample exact = quantile_sample(25);
    const RigidityStats st = rigidity_stats(exact);
    CHECK(st.max_scaled_fluct == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

    EnsembleSpec spec;
    spec.N = 10;
    spec.seed = 31;
    const EigenvalueSample s = sample(spec, 2);
    const RigidityStats r = rigidity_stats(s);
    CHECK(r.sup_h >= 0.0);
    CHECK(r.inf_h <= 0.0);

    // dense-scan oracle on an F-uniform grid
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i <= 100000; ++i) {
        const double x = -std::cos(std::numbers::pi * i / 100000.0);
        const double h = counting_h(s, x);
        hi = std::max(hi, h);
        lo = std::min(lo, h);
    }
    CHECK(hi == doctest::Approx(r.sup_h).epsilon(1e-2));
    CHECK(lo == doctest::Approx(r.inf_h).epsilon(1e-2));
    CHECK(hi <= r.sup_h + 1e-9);
    CHECK(lo >= r.inf_h - 1e-9);

    CHECK(edge_window_max(s, 1.0) == doctest::Approx(r.sup_h).epsilon(1e-12));
}

TEST_CASE("Wilson interval") {
    const WilsonInterval w = wilson_interval(80, 100);
    CHECK(w.freq == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(w.lo > 0.7);
    CHECK(w.hi < 0.9);
    CHECK(w.lo < w.freq);
    CHECK(w.hi > w.freq);
    const WilsonInterval z = wilson_interval(0, 50);
    CHECK(z.lo == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("Monte Carlo rigidity frequencies") {
    EnsembleSpec spec;
    spec.N = 100;
    spec.seed = 5;
    const RigidityFrequencies f1 = mc_rigidity(spec, 200, 0.5);
    const RigidityFrequencies f2 = mc_rigidity(spec, 200, 0.5);
    CHECK(f1.fluct_event.freq == f2.fluct_event.freq);
    CHECK(f1.counting_event.freq == f2.counting_event.freq);
    CHECK(f1.fluct_event.freq >= 0.9);
    CHECK_THROWS(mc_rigidity(spec, 0, 0.5));
}
