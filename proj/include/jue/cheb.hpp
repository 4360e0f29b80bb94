#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace jue {

/// Chebyshev series f(x) = sum_k c_k T_k(x) on [-1,1].
///
/// An empty coefficient vector represents the zero function. Evaluation is
/// by Clenshaw recurrence.
class ChebSeries {
public:
    ChebSeries() = default;
    explicit ChebSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

    /// Interpolate f at K+1 Chebyshev points of the second kind and return
    /// the degree-K series.
    static ChebSeries fit(const std::function<double(double)>& f, std::size_t degree);

    static ChebSeries constant(double c) { return ChebSeries({c}); }

    bool empty() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    double operator()(double x) const { return eval(x); }
    double eval(double x) const;

    /// Direct sum of c_k T_k(x), used only to cross-check Clenshaw.
    double eval_direct(double x) const;

    /// Series of the derivative f'(x).
    ChebSeries derivative() const;

    ChebSeries operator+(const ChebSeries& other) const;
    ChebSeries operator*(double s) const;

private:
    std::vector<double> coeffs_;
};

/// Chebyshev polynomials of the first and second kind.
double cheb_t(unsigned n, double x);
double cheb_u(unsigned n, double x);

} // namespace jue
