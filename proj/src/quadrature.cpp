#include "jue/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jue {

GaussRule gauss_legendre(std::size_t n) { return gauss_jacobi(n, 0.0, 0.0); }

GaussRule gauss_jacobi(std::size_t n, double a, double b) {
    if (n == 0) throw std::invalid_argument("gauss_jacobi: order must be >= 1");
    if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("gauss_jacobi: exponents must be > -1");

    // Golub-Welsch on the Jacobi-polynomial recurrence.
    Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
    Eigen::VectorXd offdiag(static_cast<Eigen::Index>(n > 1 ? n - 1 : 1));
    const double apb = a + b;
    diag(0) = (b - a) / (apb + 2.0);
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double den = (2.0 * kk + apb) * (2.0 * kk + apb + 2.0);
        diag(static_cast<Eigen::Index>(k)) = (b * b - a * a) / den;
        const double num = 4.0 * kk * (kk + a) * (kk + b) * (kk + apb);
        const double den2 = (2.0 * kk + apb) * (2.0 * kk + apb) * (2.0 * kk + apb + 1.0) * (2.0 * kk + apb - 1.0);
        offdiag(static_cast<Eigen::Index>(k - 1)) = std::sqrt(num / den2);
    }

    // Total mass 2^{a+b+1} B(a+1, b+1).
    const double log_mu0 = (apb + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(apb + 2.0);
    const double mu0 = std::exp(log_mu0);

    // Eigenvalues-only solve keeps large orders O(n^2); the first-component
    // weights are recovered as Christoffel numbers after a Newton polish of
    // each node against the orthonormal recurrence.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, offdiag.head(static_cast<Eigen::Index>(n > 1 ? n - 1 : 0)),
                                  Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigensolver failed");

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double inv_sqrt_mu0 = 1.0 / std::sqrt(mu0);
    for (std::size_t i = 0; i < n; ++i) {
        double x = solver.eigenvalues()(static_cast<Eigen::Index>(i));
        double sumsq = 1.0 / mu0;
        for (int it = 0; it < 4; ++it) {
            // Orthonormal recurrence a_{k+1} q_{k+1} = (x - b_k) q_k - a_k q_{k-1}.
            double qm = 0.0, q = inv_sqrt_mu0;
            double dqm = 0.0, dq = 0.0;
            sumsq = q * q;
            for (std::size_t k = 0; k < n; ++k) {
                const double bk = diag(static_cast<Eigen::Index>(k));
                const double ak = (k > 0) ? offdiag(static_cast<Eigen::Index>(k - 1)) : 0.0;
                const double ak1 = (k + 1 < n) ? offdiag(static_cast<Eigen::Index>(k)) : 1.0;
                const double qn = ((x - bk) * q - ak * qm) / ak1;
                const double dqn = (q + (x - bk) * dq - ak * dqm) / ak1;
                qm = q; q = qn;
                dqm = dq; dq = dqn;
                if (k + 1 < n) sumsq += q * q;
            }
            // q now holds q_n(x), dq its derivative.
            if (it == 3) break; // weight must be taken at the final x
            const double step = q / dq;
            x -= step;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 1.0 / sumsq;
    }
    return rule;
}

GaussRule gauss_chebyshev(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_chebyshev: order must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.assign(n, std::numbers::pi / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        rule.nodes[i] = std::cos((static_cast<double>(i) + 0.5) * std::numbers::pi / static_cast<double>(n));
    return rule;
}

} // namespace jue
