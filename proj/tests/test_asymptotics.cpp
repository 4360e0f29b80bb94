#include <doctest.h>

#include "jue/asymptotics.hpp"
#include "jue/counting.hpp"
#include "jue/hankel.hpp"
#include "jue/rng.hpp"

#include <cmath>
#include <numbers>

using namespace jue;

namespace {
constexpr double kSqrt2Pi = std::numbers::sqrt2 * std::numbers::pi;

ChebSeries unit(std::size_t k) {
    std::vector<double> c(k + 1, 0.0);
    c[k] = 1.0;
    return ChebSeries(c);
}
} // namespace

TEST_CASE("arcsine-weighted Hilbert transform on the Chebyshev basis") {
    for (double x : {-0.8, -0.1, 0.3, 0.7}) {
        CHECK(hilbert_transform(unit(0), x) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
        CHECK(hilbert_transform(unit(1), x) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(hilbert_transform(unit(2), x) == doctest::Approx(2.0 * x).epsilon(1e-13));
    }
    // linearity
    RngStream rng(3, 0);
    std::vector<double> ca(6), cb(6);
    for (double& v : ca) v = rng.uniform(-1.0, 1.0);
    for (double& v : cb) v = rng.uniform(-1.0, 1.0);
    const ChebSeries a(ca), b(cb);
    std::vector<double> cc(6);
    for (int i = 0; i < 6; ++i) cc[i] = 2.0 * ca[i] - 3.0 * cb[i];
    const ChebSeries c(cc);
    for (double x : {-0.5, 0.2, 0.9})
        CHECK(hilbert_transform(c, x) ==
              doctest::Approx(2.0 * hilbert_transform(a, x) - 3.0 * hilbert_transform(b, x))
                  .epsilon(1e-12));
}

TEST_CASE("covariance form on the Chebyshev basis") {
    CHECK(sigma2(ChebSeries::constant(3.0), unit(4)) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    CHECK(sigma2(unit(1), unit(1)) == doctest::Approx(0.25).epsilon(1e-12));
    // orthogonality: sigma2(T_j, T_k) = (j/4) delta_jk
    for (std::size_t j = 1; j <= 6; ++j)
        for (std::size_t k = 1; k <= 6; ++k) {
            const double expect = (j == k) ? j / 4.0 : 0.0;
            CHECK(sigma2(unit(j), unit(k)) == doctest::Approx(expect).scale(1.0).epsilon(1e-10));
        }
    // symmetry and positivity for random series
    RngStream rng(17, 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> c(11);
        for (double& v : c) v = rng.uniform(-1.0, 1.0);
        const ChebSeries w(c);
        CHECK(sigma2(w, w) >= 0.0);
        CHECK(sigma2(w, unit(2)) == doctest::Approx(sigma2(unit(2), w)).epsilon(1e-11));
    }
}

TEST_CASE("limiting moments of linear statistics") {
    const double a = 0.7, b = 1.9;
    const CltMoments m1 = clt_moments(unit(1), a, b, ChebSeries{});
    CHECK(m1.mu == doctest::Approx((b - a) / 2.0).epsilon(1e-11));
    CHECK(m1.var == doctest::Approx(0.25).epsilon(1e-11));

    const CltMoments mc = clt_moments(ChebSeries::constant(2.5), a, b, ChebSeries{});
    CHECK(mc.mu == doctest::Approx(0.0).scale(1.0).epsilon(1e-11));
    CHECK(mc.var == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("mollified step profile") {
    const MollifierSpec m{0.05, 0.3};
    CHECK(mollified_jump(m, 0.3) == doctest::Approx(kSqrt2Pi / 2.0).epsilon(1e-13));
    CHECK(mollified_jump(m, -1e6) == doctest::Approx(kSqrt2Pi).epsilon(1e-6));
    CHECK(std::abs(mollified_jump(m, 1e6)) < 1e-6);

    // numerical convolution oracle: composite Simpson over a wide bulk,
    // tail below the bulk from the primitive of the Cauchy kernel
    for (double z : {0.1, 0.3, 0.55}) {
        const double lo = m.center - 400.0;
        const std::size_t n = 1000000; // intervals, even
        const double h = (m.center - lo) / n;
        const auto f = [&](double u) {
            return m.epsilon / (std::numbers::pi * ((z - u) * (z - u) + m.epsilon * m.epsilon));
        };
        double conv = f(lo) + f(m.center);
        for (std::size_t i = 1; i < n; ++i) conv += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
        conv *= h / 3.0;
        conv += 0.5 - std::atan((z - lo) / m.epsilon) / std::numbers::pi; // tail below lo
        CHECK(mollified_jump(m, z) == doctest::Approx(kSqrt2Pi * conv).epsilon(1e-9));
    }
}

TEST_CASE("deterministic centering shift") {
    CHECK(tilde_shift(1.0, 0.6, 1.1, ChebSeries{}) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-11));
    CHECK(std::abs(std::abs(tilde_shift(-1.0, 0.6, 1.1, ChebSeries{})) -
                   kSqrt2Pi * 1.1 / 2.0) < 1e-10);
}

TEST_CASE("closed-form prediction identities") {
    const double g = 0.45;
    CHECK(predict_edge_ratio(50, 0.0, g) ==
          doctest::Approx(kSqrt2Pi * g * 25.0 + g * g / 2.0 * std::log(50.0)).epsilon(1e-13));
    const double x = 0.37;
    const double diff = predict_edge_ratio(80, x, g) - predict_edge_ratio(40, x, g) -
                        kSqrt2Pi * g * 40.0 * arcsine_cdf(x);
    CHECK(diff == doctest::Approx(g * g / 2.0 * std::log(2.0)).epsilon(1e-12));

    CHECK(predict_merging_ratio(60, -0.1, 0.1, 0.7, 0.0) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    // below the 1/N separation threshold the log term is clipped to zero
    const double close = predict_merging_ratio(60, 0.0, 0.01, 0.3, 0.4);
    const double expect = std::numbers::sqrt2 * 60.0 * 0.4 * (std::asin(0.01) - std::asin(0.0));
    CHECK(close == doctest::Approx(expect).epsilon(1e-12));

    CHECK(predict_separated_ratio(40, ChebSeries{}, {}, 0.3, 0.4, ChebSeries{}) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
}

TEST_CASE("constant perturbations shift the log determinant by N c") {
    const WeightSpec base(0.2, 0.6, {{0.1, 0.3}});
    const double c = 0.37;
    const WeightSpec shifted(0.2, 0.6, {{0.1, 0.3}}, ChebSeries::constant(c));
    const std::size_t N = 12;
    CHECK(log_hankel(shifted, N) - log_hankel(base, N) ==
          doctest::Approx(N * c).epsilon(1e-10));
    CHECK(predict_separated_ratio(N, ChebSeries::constant(c), base.jumps, 0.2, 0.6, ChebSeries{}) ==
          doctest::Approx(N * c).epsilon(1e-10));
}
