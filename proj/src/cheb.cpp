#include "jue/cheb.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace jue {

ChebSeries ChebSeries::fit(const std::function<double(double)>& f, std::size_t degree) {
    const std::size_t n = degree + 1;
    std::vector<double> fv(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = std::numbers::pi * static_cast<double>(j) / static_cast<double>(degree == 0 ? 1 : degree);
        fv[j] = f(std::cos(theta));
    }
    if (degree == 0) return ChebSeries({f(1.0)});
    // Discrete cosine transform on Chebyshev-Lobatto points.
    std::vector<double> c(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.5 * (fv[0] + (k % 2 == 0 ? fv[degree] : -fv[degree]));
        for (std::size_t j = 1; j < degree; ++j)
            s += fv[j] * std::cos(std::numbers::pi * static_cast<double>(k * j) / static_cast<double>(degree));
        c[k] = 2.0 * s / static_cast<double>(degree);
    }
    c[0] *= 0.5;
    c[degree] *= 0.5;
    return ChebSeries(std::move(c));
}

double ChebSeries::eval(double x) const {
    if (coeffs_.empty()) return 0.0;
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
        const double b0 = 2.0 * x * b1 - b2 + coeffs_[i];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + coeffs_[0];
}

double ChebSeries::eval_direct(double x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        s += coeffs_[k] * cheb_t(static_cast<unsigned>(k), x);
    return s;
}

ChebSeries ChebSeries::derivative() const {
    if (coeffs_.size() <= 1) return ChebSeries{};
    const std::size_t n = coeffs_.size();
    std::vector<double> d(n - 1, 0.0);
    // c'_{k} = c'_{k+2} + 2(k+1) c_{k+1}, downward recurrence.
    double next2 = 0.0, next1 = 0.0;
    for (std::size_t k = n - 1; k-- > 0;) {
        const double dk = next2 + 2.0 * static_cast<double>(k + 1) * coeffs_[k + 1];
        d[k] = dk;
        next2 = next1;
        next1 = dk;
    }
    d[0] *= 0.5;
    return ChebSeries(std::move(d));
}

ChebSeries ChebSeries::operator+(const ChebSeries& other) const {
    std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return ChebSeries(std::move(c));
}

ChebSeries ChebSeries::operator*(double s) const {
    std::vector<double> c = coeffs_;
    for (double& v : c) v *= s;
    return ChebSeries(std::move(c));
}

double cheb_t(unsigned n, double x) {
    if (n == 0) return 1.0;
    double t0 = 1.0, t1 = x;
    for (unsigned k = 1; k < n; ++k) {
        const double t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

double cheb_u(unsigned n, double x) {
    double u0 = 1.0, u1 = 2.0 * x;
    if (n == 0) return u0;
    for (unsigned k = 1; k < n; ++k) {
        const double u2 = 2.0 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

} // namespace jue
