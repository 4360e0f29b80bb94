#include <doctest.h>

#include "jue/field.hpp"

#include <cmath>
#include <numbers>

using namespace jue;

TEST_CASE("kernel symmetry and series convergence") {
    CHECK(kernel_sigma(-0.5, 0.3) == doctest::Approx(kernel_sigma(0.3, -0.5)).epsilon(1e-14));

    // pointwise errors oscillate, so compare widely separated truncations
    const double closed = kernel_sigma(-0.5, 0.3);
    const double e64 = std::abs(kernel_sigma_series(-0.5, 0.3, 64) - closed);
    const double e4096 = std::abs(kernel_sigma_series(-0.5, 0.3, 4096) - closed);
    CHECK(e4096 < e64);
    CHECK(e4096 < 1e-3);
}

TEST_CASE("logarithmic divergence on the diagonal") {
    for (double x : {-0.6, 0.0, 0.45}) {
        const double y = x + 1e-6;
        const double lhs = kernel_sigma(x, y) + std::log(std::abs(x - y));
        CHECK(lhs == doctest::Approx(std::log(2.0 * (1.0 - x * x))).epsilon(1e-4));
    }
}

TEST_CASE("field samples have the prescribed second moments") {
    const double x = 0.2;
    const std::size_t K = 200, draws = 10000;
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t d = 0; d < draws; ++d) {
        const double v = sample_field(K, 77, d).eval(x);
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / draws;
    const double var = sumsq / draws - mean * mean;
    const double tv = sample_field(K, 77, 0).truncated_variance(x);

    // closed form of the truncated variance
    const double theta = std::acos(-x);
    double expect = 0.0;
    for (std::size_t k = 1; k <= K; ++k)
        expect += 2.0 / k * std::sin(k * theta) * std::sin(k * theta);
    CHECK(tv == doctest::Approx(expect).epsilon(1e-12));

    const double se_mean = std::sqrt(var / draws);
    CHECK(std::abs(mean) < 4.0 * se_mean);
    CHECK(var == doctest::Approx(tv).epsilon(0.1));
}

TEST_CASE("mollification is linear in the coefficients") {
    FieldSample f1 = sample_field(64, 5, 0);
    FieldSample f2 = sample_field(64, 5, 1);
    FieldSample fc = f1;
    for (std::size_t k = 0; k < fc.g.size(); ++k) fc.g[k] = 2.0 * f1.g[k] - 0.5 * f2.g[k];
    const MollifiedField m1(f1, 0.08), m2(f2, 0.08), mc(fc, 0.08);
    for (double x : {-0.4, 0.1, 0.7})
        CHECK(mc.eval(x) == doctest::Approx(2.0 * m1.eval(x) - 0.5 * m2.eval(x)).epsilon(1e-11));
}

TEST_CASE("normalized exponential weights") {
    const FieldSample f = sample_field(128, 9, 3);
    const std::vector<double> grid = {-0.5, 0.0, 0.5};
    const GmcWeights w = gmc_weights(f, 1e-9, 0.1, grid);
    for (double v : w.weights) CHECK(v == doctest::Approx(1.0).epsilon(1e-6));

    // mean weight over draws approaches 1 (exact Gaussian normalization)
    double sum = 0.0;
    const std::size_t draws = 3000;
    for (std::size_t d = 0; d < draws; ++d)
        sum += gmc_weights(sample_field(128, 9, d), 0.5, 0.1, {0.2}).weights[0];
    CHECK(sum / draws == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("measure comparison is deterministic and guarded") {
    EnsembleSpec spec;
    spec.N = 30;
    spec.seed = 21;
    CHECK_THROWS(compare_measures(spec, 0.5, 0.1, 50));
    const MeasureComparison a = compare_measures(spec, 0.5, 0.1, 100);
    const MeasureComparison b = compare_measures(spec, 0.5, 0.1, 100);
    for (int k = 0; k < 3; ++k) {
        CHECK(a.ks[k] == b.ks[k]);
        CHECK(a.ks[k] >= 0.0);
        CHECK(a.ks[k] <= 1.0);
    }
}
