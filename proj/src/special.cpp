#include "jue/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jue {

namespace {
constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, 9-term coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

cplx log_gamma_positive(cplx z) {
    // Requires Re z > 0.5.
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}
} // namespace

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // Reflection; keep the branch consistent for arguments off the poles.
        const cplx s = std::sin(kPi * z);
        if (s == cplx(0.0)) throw std::invalid_argument("log_gamma: pole");
        return std::log(kPi) - std::log(s) - log_gamma_positive(1.0 - z);
    }
    return log_gamma_positive(z);
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx digamma(cplx z) {
    cplx acc = 0.0;
    while (z.real() < 9.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Asymptotic series with Bernoulli numbers B_2..B_12.
    const cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx s = std::log(z) - 0.5 * inv;
    static const double bern[6] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
    cplx p = inv2;
    for (int k = 0; k < 6; ++k) {
        s -= bern[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return s + acc;
}

namespace {
bool near_integer(double nu, int& n) {
    const double r = std::round(nu);
    if (std::abs(nu - r) < 1e-8) {
        n = static_cast<int>(r);
        return true;
    }
    return false;
}

cplx bessel_i_series(double nu, cplx z) {
    const cplx q = 0.25 * z * z;
    // tgamma keeps the sign of Gamma(nu+1) for negative non-integer orders.
    cplx term = std::pow(0.5 * z, nu) / std::tgamma(nu + 1.0);
    cplx sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (nu + static_cast<double>(k)));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// K_n for integer n >= 0 by the logarithmic series.
cplx bessel_k_integer_series(int n, cplx z) {
    const cplx q = 0.25 * z * z;
    const cplx lzh = std::log(0.5 * z);
    cplx sum = 0.0;

    if (n > 0) {
        // Finite part: (1/2) (z/2)^{-n} sum_{k<n} (n-k-1)!/k! (-q)^k.
        cplx term = 0.5 * std::exp(-static_cast<double>(n) * lzh) * std::tgamma(static_cast<double>(n));
        for (int k = 0; k < n; ++k) {
            sum += term;
            term *= -q / (static_cast<double>(k + 1) * static_cast<double>(n - k - 1));
            if (k + 2 > n) break;
        }
    }

    sum += (n % 2 == 0 ? -1.0 : 1.0) * lzh * bessel_i_series(static_cast<double>(n), z);

    // Series with digamma weights.
    double psi1 = -std::numbers::egamma;                 // psi(1)
    double psin = psi1;                                  // psi(n+1)
    for (int j = 1; j <= n; ++j) psin += 1.0 / static_cast<double>(j);
    cplx term = 0.5 * (n % 2 == 0 ? 1.0 : -1.0) * std::exp(static_cast<double>(n) * lzh) /
                std::tgamma(static_cast<double>(n) + 1.0);
    cplx s2 = term * (psi1 + psin);
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(n + k));
        psi1 += 1.0 / static_cast<double>(k);
        psin += 1.0 / static_cast<double>(n + k);
        const cplx add = term * (psi1 + psin);
        s2 += add;
        if (std::abs(add) < 1e-18 * (std::abs(s2) + 1e-300)) break;
    }
    return sum + s2;
}

// Coefficients a_k(nu) of the large-argument expansions.
double asym_coeff_step(double nu, int k, double prev) {
    const double m = 2.0 * static_cast<double>(k) - 1.0;
    return prev * (4.0 * nu * nu - m * m) / (8.0 * static_cast<double>(k));
}

cplx bessel_k_asym(double nu, cplx z) {
    cplx sum = 1.0, term = 1.0;
    double coeff = 1.0;
    for (int k = 1; k < 40; ++k) {
        coeff = asym_coeff_step(nu, k, coeff);
        term = coeff / std::pow(z, k);
        if (std::abs(term) > std::abs(sum)) break;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::sqrt(kPi / (2.0 * z)) * std::exp(-z) * sum;
}

cplx bessel_i_asym(double nu, cplx z) {
    cplx s_plus = 1.0, s_minus = 1.0;
    double coeff = 1.0;
    for (int k = 1; k < 40; ++k) {
        coeff = asym_coeff_step(nu, k, coeff);
        const cplx term = coeff / std::pow(z, k);
        if (std::abs(term) > 1.0) break;
        s_plus += (k % 2 == 0 ? term : -term);
        s_minus += term;
        if (std::abs(term) < 1e-18) break;
    }
    const double sgn = z.imag() >= 0.0 ? 1.0 : -1.0;
    const cplx refl = std::exp(cplx(0.0, sgn * (nu + 0.5) * kPi));
    return (std::exp(z) * s_plus + refl * std::exp(-z) * s_minus) / std::sqrt(2.0 * kPi * z);
}
} // namespace

cplx bessel_i(double nu, cplx z) {
    if (std::abs(z) > 20.0) return bessel_i_asym(nu, z);
    int n = 0;
    if (near_integer(nu, n)) return bessel_i_series(static_cast<double>(std::abs(n)), z);
    return bessel_i_series(nu, z);
}

namespace {
// K_nu(z) = int_0^infty e^{-z cosh t} cosh(nu t) dt for Re z > 0. Trapezoid
// on the even integrand converges geometrically; used in the mid range where
// the ascending series cancels catastrophically (error ~ e^{2|z|} eps).
cplx bessel_k_integral(double nu, cplx z) {
    const double h = 0.02;
    const double t_max = std::acosh(760.0 / std::max(1.0, z.real()));
    cplx sum = 0.5 * std::exp(-z);
    for (double t = h; t <= t_max; t += h)
        sum += std::exp(-z * std::cosh(t)) * std::cosh(nu * t);
    return h * sum;
}
} // namespace

cplx bessel_k(double nu, cplx z) {
    if (std::abs(z) > 20.0) return bessel_k_asym(nu, z);
    if (std::abs(z) > 2.0 && z.real() >= 1.0) return bessel_k_integral(nu, z);
    int n = 0;
    if (near_integer(nu, n)) return bessel_k_integer_series(std::abs(n), z);
    return 0.5 * kPi / std::sin(nu * kPi) * (bessel_i_series(-nu, z) - bessel_i_series(nu, z));
}

cplx bessel_i_prime(double nu, cplx z) { return bessel_i(nu + 1.0, z) + nu / z * bessel_i(nu, z); }

cplx bessel_k_prime(double nu, cplx z) { return -bessel_k(nu + 1.0, z) + nu / z * bessel_k(nu, z); }

cplx tricomi_u1(cplx a, double abs_w, double arg_w) {
    const cplx w = std::polar(abs_w, arg_w);
    const cplx logw(std::log(abs_w), arg_w);

    if (abs_w <= 40.0) {
        // Logarithmic ascending series for b = 1; the continued log fixes
        // the sheet.
        cplx coeff = 1.0;     // (a)_k / (k!)^2 w^k
        cplx psi_a = digamma(a);
        double psi_k1 = -std::numbers::egamma; // psi(k+1)
        cplx sum = logw + psi_a - 2.0 * psi_k1;
        for (int k = 1; k < 400; ++k) {
            coeff *= (a + static_cast<double>(k - 1)) * w /
                     (static_cast<double>(k) * static_cast<double>(k));
            psi_a += 1.0 / (a + static_cast<double>(k - 1));
            psi_k1 += 1.0 / static_cast<double>(k);
            const cplx add = coeff * (logw + psi_a - 2.0 * psi_k1);
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum) && k > 4) break;
        }
        return -std::exp(-log_gamma(a)) * sum;
    }

    // Asymptotic series w^{-a} sum_k (a)_k (a)_k / (k! (-w)^k).
    cplx sum = 1.0, term = 1.0;
    for (int k = 1; k < 60; ++k) {
        const cplx ak = a + static_cast<double>(k - 1);
        const cplx next = term * ak * ak / (static_cast<double>(k) * (-w));
        if (std::abs(next) > std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::exp(-a * logw) * sum;
}

cplx tricomi_u1_prime(cplx a, double abs_w, double arg_w) {
    const cplx w = std::polar(abs_w, arg_w);
    const cplx logw(std::log(abs_w), arg_w);

    if (abs_w <= 40.0) {
        // Termwise derivative of the logarithmic series:
        // d/dw [w^k (log w + c_k)] = w^{k-1} (k (log w + c_k) + 1).
        cplx coeff = 1.0; // (a)_k / (k!)^2, with w powers applied separately
        cplx psi_a = digamma(a);
        double psi_k1 = -std::numbers::egamma;
        cplx wk1 = 1.0; // w^{k-1}, starting at k = 1
        cplx sum = 1.0 / w; // k = 0 term: derivative of log w
        for (int k = 1; k < 400; ++k) {
            coeff *= (a + static_cast<double>(k - 1)) /
                     (static_cast<double>(k) * static_cast<double>(k));
            psi_a += 1.0 / (a + static_cast<double>(k - 1));
            psi_k1 += 1.0 / static_cast<double>(k);
            const cplx ck = psi_a - 2.0 * psi_k1;
            const cplx add = coeff * wk1 * (static_cast<double>(k) * (logw + ck) + 1.0);
            sum += add;
            wk1 *= w;
            if (std::abs(add) < 1e-18 * std::abs(sum) && k > 4) break;
        }
        return -std::exp(-log_gamma(a)) * sum;
    }

    cplx sum = -a, term = 1.0;
    for (int k = 1; k < 60; ++k) {
        const cplx ak = a + static_cast<double>(k - 1);
        const cplx next = term * ak * ak / (static_cast<double>(k) * (-w));
        if (std::abs(next) > std::abs(term)) break;
        term = next;
        sum += term * (-a - static_cast<double>(k));
        if (std::abs(term) < 1e-18) break;
    }
    return std::exp((-a - 1.0) * logw) * sum;
}

} // namespace jue
