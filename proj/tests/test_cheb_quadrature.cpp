#include <doctest.h>

#include "jue/cheb.hpp"
#include "jue/hankel.hpp"
#include "jue/quadrature.hpp"
#include "jue/rng.hpp"
#include "jue/weight.hpp"

#include <cmath>
#include <numbers>

using namespace jue;

TEST_CASE("Clenshaw matches direct summation") {
    RngStream rng(11, 0);
    std::vector<double> c(13);
    for (double& v : c) v = rng.uniform(-1.0, 1.0);
    const ChebSeries f(c);
    for (int i = 0; i < 40; ++i) {
        const double x = rng.uniform(-1.0, 1.0);
        CHECK(f.eval(x) == doctest::Approx(f.eval_direct(x)).epsilon(1e-12));
    }
}

TEST_CASE("derivative of T3 is 3 U2") {
    const ChebSeries t3({0.0, 0.0, 0.0, 1.0});
    const ChebSeries d = t3.derivative();
    for (double x : {-0.9, -0.3, 0.0, 0.4, 0.8})
        CHECK(d.eval(x) == doctest::Approx(3.0 * cheb_u(2, x)).epsilon(1e-13));
}

TEST_CASE("fit recovers a polynomial exactly") {
    const auto f = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x * x; };
    const ChebSeries s = ChebSeries::fit(f, 6);
    for (double x : {-0.7, 0.1, 0.63}) CHECK(s.eval(x) == doctest::Approx(f(x)).epsilon(1e-13));
}

TEST_CASE("Gauss-Legendre exactness up to degree 2n-1") {
    const GaussRule r = gauss_legendre(8);
    for (int k = 0; k <= 15; ++k) {
        double q = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], k);
        const double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
        CHECK(q == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("Gauss-Jacobi total weight") {
    // int (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
    const double a = 0.5, b = 1.5;
    const GaussRule r = gauss_jacobi(12, a, b);
    double mass = 0.0;
    for (double w : r.weights) mass += w;
    const double exact = std::pow(2.0, a + b + 1.0) * std::exp(std::lgamma(a + 1.0) +
                                                               std::lgamma(b + 1.0) -
                                                               std::lgamma(a + b + 2.0));
    CHECK(mass == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("weight mass closed forms") {
    CHECK(build_quadrature(WeightSpec(0.0, 0.0), 32).total_mass() ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(build_quadrature(WeightSpec(0.5, 0.0), 32).total_mass() ==
          doctest::Approx(4.0 * std::numbers::sqrt2 / 3.0).epsilon(1e-12));

    const double x = 0.3, g = 0.4;
    const WeightSpec wj(0.0, 0.0, {{x, g}});
    const double exact = std::exp(std::numbers::sqrt2 * std::numbers::pi * g) * (x + 1.0) + (1.0 - x);
    CHECK(build_quadrature(wj, 32).total_mass() == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("recurrence coefficients in the Legendre case") {
    const WeightSpec w(0.0, 0.0);
    const QuadratureGrid grid = build_quadrature(w, 64);
    const RecurrenceTable t = stieltjes_recurrence(grid, 10);
    CHECK(std::exp(t.log_h[0]) == doctest::Approx(grid.total_mass()).epsilon(1e-13));
    for (std::size_t k = 0; k < 10; ++k) CHECK(std::abs(t.b[k]) < 1e-12);
    for (std::size_t k = 1; k < 10; ++k) {
        const double kk = static_cast<double>(k);
        CHECK(t.a2[k] == doctest::Approx(kk * kk / (4.0 * kk * kk - 1.0)).epsilon(1e-11));
    }
}
