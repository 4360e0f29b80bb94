#include "jue/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace jue {

namespace {
constexpr double kSqrt2Pi = std::numbers::sqrt2 * std::numbers::pi;

double arcsine_F(double x) { return 1.0 - std::acos(x) / std::numbers::pi; }
} // namespace

double RecurrenceTable::log_hankel(std::size_t N) const {
    if (N > log_h.size()) throw std::invalid_argument("RecurrenceTable: N exceeds table size");
    double s = 0.0;
    for (std::size_t k = 0; k < N; ++k) s += log_h[k];
    return s;
}

RecurrenceTable stieltjes_recurrence(const QuadratureGrid& grid, std::size_t N) {
    const std::size_t m = grid.nodes.size();
    if (m < 4 * N) throw std::invalid_argument("stieltjes_recurrence: need at least 4N nodes");

    RecurrenceTable tab;
    tab.b.resize(N);
    tab.a2.assign(N, 0.0);
    tab.log_h.resize(N);

    // Orthonormal-polynomial values at the nodes; squared norms recovered
    // from the off-diagonal products to stay in log scale.
    std::vector<double> qm(m, 0.0), q(m), r(m);
    const double h0 = grid.total_mass();
    if (!(h0 > 0.0)) throw std::runtime_error("stieltjes_recurrence: nonpositive total mass");
    const double inv = 1.0 / std::sqrt(h0);
    for (std::size_t i = 0; i < m; ++i) q[i] = inv;
    tab.log_h[0] = std::log(h0);

    double a_prev = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        double bk = 0.0;
        for (std::size_t i = 0; i < m; ++i) bk += grid.weights[i] * grid.nodes[i] * q[i] * q[i];
        tab.b[k] = bk;
        if (k + 1 == N) break;

        double norm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            r[i] = (grid.nodes[i] - bk) * q[i] - a_prev * qm[i];
            norm2 += grid.weights[i] * r[i] * r[i];
        }
        if (!(norm2 > 0.0)) {
            std::ostringstream msg;
            msg << "stieltjes_recurrence: lost positivity at k=" << (k + 1);
            throw std::runtime_error(msg.str());
        }
        const double ak = std::sqrt(norm2);
        tab.a2[k + 1] = norm2;
        tab.log_h[k + 1] = tab.log_h[k] + std::log(norm2);
        for (std::size_t i = 0; i < m; ++i) {
            const double qn = r[i] / ak;
            qm[i] = q[i];
            q[i] = qn;
        }
        a_prev = ak;
    }
    return tab;
}

HankelResult log_hankel_detailed(const WeightSpec& w, std::size_t N) {
    if (N == 0) throw std::invalid_argument("log_hankel: N must be >= 1");
    std::size_t order = std::max<std::size_t>(8 * N, 32);
    const std::size_t order_cap = 1 << 15;

    HankelResult res;
    QuadratureGrid grid = build_quadrature(w, order);
    double prev = stieltjes_recurrence(grid, N).log_hankel(N);
    while (order < order_cap) {
        order *= 2;
        grid = build_quadrature(w, order);
        const double cur = stieltjes_recurrence(grid, N).log_hankel(N);
        const bool ok = std::abs(cur - prev) <= 1e-10 + 1e-13 * std::abs(cur);
        prev = cur;
        if (ok) {
            res.stable = true;
            break;
        }
    }
    res.log_d = prev;
    res.node_count = grid.nodes.size();
    return res;
}

double log_hankel(const WeightSpec& w, std::size_t N) { return log_hankel_detailed(w, N).log_d; }

double log_hankel_moment_oracle(const WeightSpec& w, std::size_t N) {
    if (N == 0 || N > 8) throw std::invalid_argument("moment oracle: N must be in 1..8");

    // Share the converged grid with the recurrence path so both values are
    // exact functionals of the same discrete measure; the comparison then
    // probes only the linear algebra.
    std::size_t order = std::max<std::size_t>(8 * N, 32);
    QuadratureGrid grid = build_quadrature(w, order);
    double prev = stieltjes_recurrence(grid, N).log_hankel(N);
    while (order < (1u << 15)) {
        order *= 2;
        QuadratureGrid next = build_quadrature(w, order);
        const double cur = stieltjes_recurrence(next, N).log_hankel(N);
        grid = std::move(next);
        if (std::abs(cur - prev) <= 1e-10 + 1e-13 * std::abs(cur)) break;
        prev = cur;
    }

    // Moments and Cholesky in extended precision; the moment matrix is the
    // ill-conditioned object here, the recurrence path never forms it.
    long double mom[16] = {};
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        long double p = 1.0L;
        for (std::size_t j = 0; j <= 2 * N - 2; ++j) {
            mom[j] += static_cast<long double>(grid.weights[i]) * p;
            p *= static_cast<long double>(grid.nodes[i]);
        }
    }
    long double L[8][8] = {};
    long double logdet = 0.0L;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            long double s = mom[i + j];
            for (std::size_t k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
            if (j == i) {
                if (s <= 0.0L) throw std::runtime_error("moment oracle: matrix not positive definite");
                L[i][i] = std::sqrt(s);
                logdet += 2.0L * std::log(L[i][i]);
            } else {
                L[i][j] = s / L[j][j];
            }
        }
    }
    return static_cast<double>(logdet);
}

double log_exp_moment(std::size_t N, double x, double gamma, const WeightSpec& w) {
    if (!w.jumps.empty()) throw std::invalid_argument("log_exp_moment: base weight must be jump-free");
    if (!(std::abs(x) < 1.0)) throw std::invalid_argument("log_exp_moment: |x| < 1 required");
    if (gamma == 0.0) return 0.0;
    const double with = log_hankel(w.with_jump(x, gamma), N);
    const double base = log_hankel(w, N);
    return -kSqrt2Pi * gamma * static_cast<double>(N) * arcsine_F(x) + with - base;
}

double log_two_point_ratio(std::size_t N, double x, double y, double gamma, const WeightSpec& w) {
    if (!w.jumps.empty()) throw std::invalid_argument("log_two_point_ratio: base weight must be jump-free");
    if (x == y)
        throw std::invalid_argument("log_two_point_ratio: coincident locations; use a single jump of strength 2*gamma");
    if (x > y) std::swap(x, y);
    if (gamma == 0.0) return 0.0;
    const double both = log_hankel(w.with_jump(x, gamma).with_jump(y, gamma), N);
    const double base = log_hankel(w, N);
    const double first = log_hankel(w.with_jump(x, gamma), N);
    const double second = log_hankel(w.with_jump(y, gamma), N);
    return both + base - first - second;
}

double verify_differential_identity(const WeightSpec& w_in, std::size_t N, double x2, double step) {
    if (N == 0 || N > 12) throw std::invalid_argument("verify_differential_identity: N must be in 1..12");
    if (!(step > 0.0)) throw std::invalid_argument("verify_differential_identity: step must be positive");
    // A zero-strength jump at x2 leaves the weight (hence D_N) unchanged and
    // the closed form carries the vanishing factor 1 - e^0.
    for (const Jump& j : w_in.jumps)
        if (std::abs(j.location - x2) < 1e-12 && j.gamma == 0.0) return 0.0;
    const WeightSpec w = w_in.normalized();
    if (w.jumps.empty()) throw std::invalid_argument("verify_differential_identity: weight needs a jump");

    // The moved jump is the one at x2.
    std::size_t idx = w.jumps.size();
    for (std::size_t k = 0; k < w.jumps.size(); ++k)
        if (std::abs(w.jumps[k].location - x2) < 1e-12) idx = k;
    if (idx == w.jumps.size()) throw std::invalid_argument("verify_differential_identity: no jump at x2");
    const double gamma2 = w.jumps[idx].gamma;
    if (gamma2 == 0.0) return 0.0;

    auto shifted = [&](double dx) {
        WeightSpec v = w;
        v.jumps[idx].location = x2 + dx;
        return v;
    };
    const double fd = (log_hankel(shifted(step), N) - log_hankel(shifted(-step), N)) / (2.0 * step);

    // Closed form: with pi_k monic orthogonal for the full jump weight,
    //   d/dx2 log D_N = w_s(x2) (1 - e^{sqrt2 pi g2})
    //                   (pi_N pi_{N-1}' - pi_{N-1} pi_N')(z) / h_{N-1},
    // z approaching x2 off the real axis; w_s is the smooth factor alone.
    QuadratureGrid grid = build_quadrature(w, std::max<std::size_t>(8 * (N + 1), 64));
    const RecurrenceTable tab = stieltjes_recurrence(grid, N + 1);

    const std::complex<double> z(x2, 1e-6);
    std::complex<double> pm = 0.0, p = 1.0, dpm = 0.0, dp = 0.0;
    std::complex<double> pN, dpN, pNm1, dpNm1;
    for (std::size_t k = 0; k <= N; ++k) {
        if (k == N - 1) { pNm1 = p; dpNm1 = dp; }
        if (k == N) { pN = p; dpN = dp; break; }
        const std::complex<double> pn = (z - tab.b[k]) * p - tab.a2[k] * pm;
        const std::complex<double> dpn = p + (z - tab.b[k]) * dp - tab.a2[k] * dpm;
        pm = p; p = pn;
        dpm = dp; dp = dpn;
    }
    const double hNm1 = std::exp(tab.log_h[N - 1]);
    const std::complex<double> wron = pN * dpNm1 - pNm1 * dpN;
    const double rhs = w.smooth_part(x2) * (1.0 - std::exp(kSqrt2Pi * gamma2)) * std::real(wron) / hNm1;

    return std::abs(fd - rhs);
}

} // namespace jue
