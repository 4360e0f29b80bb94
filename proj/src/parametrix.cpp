#include "jue/parametrix.hpp"

#include "jue/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jue {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

cplx sqrt_zm1_zp1(cplx z) { return std::sqrt(z - 1.0) * std::sqrt(z + 1.0); }

bool on_segment(cplx z) { return z.imag() == 0.0 && std::abs(z.real()) < 1.0; }

double arcsine_F(double x) { return 1.0 - std::acos(x) / kPi; }
} // namespace

double Matrix2C::norm() const {
    return std::max(std::max(std::abs(a11), std::abs(a12)),
                    std::max(std::abs(a21), std::abs(a22)));
}

Matrix2C Matrix2C::inverse() const {
    const cplx d = det();
    if (d == cplx(0.0)) throw std::domain_error("Matrix2C: singular");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

Matrix2C Matrix2C::operator*(const Matrix2C& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

Matrix2C Matrix2C::operator-(const Matrix2C& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
}

cplx phi_map(cplx z) {
    if (on_segment(z)) throw std::invalid_argument("phi_map: z on [-1,1], use the boundary variant");
    return z + sqrt_zm1_zp1(z);
}

cplx phi_map_boundary(double x, Side side) {
    if (!(std::abs(x) <= 1.0)) throw std::invalid_argument("phi_map_boundary: |x| <= 1 required");
    const double s = std::sqrt(1.0 - x * x);
    return {x, side == Side::Plus ? s : -s};
}

namespace {
cplx szego_dw(cplx z, const SzegoSpec& s) {
    return std::exp(0.5 * s.alpha * std::log(z - 1.0) + 0.5 * s.beta * std::log(z + 1.0) -
                    0.5 * (s.alpha + s.beta) * std::log(phi_map(z)));
}

cplx szego_dt(cplx z, const SzegoSpec& s) {
    const auto& c = s.t.coeffs();
    if (c.empty()) return 1.0;
    cplx acc = c[0];
    const cplx ip = 1.0 / phi_map(z);
    cplx p = 1.0;
    for (std::size_t k = 1; k < c.size(); ++k) {
        p *= ip;
        acc += c[k] * p;
    }
    return std::exp(0.5 * acc);
}

cplx szego_dgamma(cplx z, const SzegoSpec& s) {
    if (s.jumps.empty()) return 1.0;
    const cplx sq = std::sqrt((z - 1.0) / (z + 1.0));
    cplx acc = 0.0;
    for (const Jump& j : s.jumps) {
        const double t0 = std::sqrt((1.0 - j.location) / (1.0 + j.location));
        acc += j.gamma * (0.5 * kPi - std::atan(t0 / sq));
    }
    return std::exp(std::numbers::sqrt2 * acc);
}

double szego_dinf(const SzegoSpec& s) {
    double logd = -0.5 * (s.alpha + s.beta) * std::numbers::ln2;
    if (!s.t.coeffs().empty()) logd += 0.5 * s.t.coeffs()[0];
    for (const Jump& j : s.jumps) logd += j.gamma * kPi * arcsine_F(j.location) / std::numbers::sqrt2;
    return std::exp(logd);
}
} // namespace

cplx szego_d(cplx z, const SzegoSpec& s) {
    if (on_segment(z)) throw std::invalid_argument("szego_d: z on [-1,1]");
    return szego_dw(z, s) * szego_dt(z, s) * szego_dgamma(z, s);
}

Matrix2C global_parametrix(cplx z, const SzegoSpec& s) {
    if (on_segment(z)) throw std::invalid_argument("global_parametrix: z on [-1,1]");
    const cplx a = std::pow((z + 1.0) / (z - 1.0), 0.25);
    const cplx ap = 0.5 * (a + 1.0 / a);
    const cplx am = (a - 1.0 / a) / (2.0 * kI);
    const cplx d = szego_d(z, s);
    const double dinf = szego_dinf(s);
    // D_inf^{s3} Q D^{-s3} with Q = [[ap, -am], [am, ap]].
    return {dinf * ap / d, -dinf * am * d, am / (dinf * d), ap * d / dinf};
}

Matrix2C outer_jump(double x, const SzegoSpec& s) {
    double g = 0.0;
    for (const Jump& j : s.jumps)
        if (j.location >= x) g += j.gamma;
    const double wj = s.smooth_part(x);
    const double e = std::exp(std::numbers::sqrt2 * kPi * g);
    return {0.0, e * wj, -1.0 / (e * wj), 0.0};
}

Matrix2C bessel_parametrix(cplx z, double alpha) {
    if (z == cplx(0.0)) throw std::invalid_argument("bessel_parametrix: z = 0");
    const double th = std::arg(z);
    if (std::abs(std::abs(th) - 2.0 * kPi / 3.0) < 1e-13 || std::abs(std::abs(th) - kPi) < 1e-13)
        throw std::invalid_argument("bessel_parametrix: z on a jump ray, use offset boundary values");
    const cplx s = std::sqrt(z);
    const Matrix2C core{bessel_i(alpha, s), kI / kPi * bessel_k(alpha, s),
                        kPi * kI * s * bessel_i_prime(alpha, s), -s * bessel_k_prime(alpha, s)};
    if (th > 2.0 * kPi / 3.0)
        return core * Matrix2C{1.0, 0.0, -std::exp(cplx(0.0, alpha * kPi)), 1.0};
    if (th < -2.0 * kPi / 3.0)
        return core * Matrix2C{1.0, 0.0, std::exp(cplx(0.0, -alpha * kPi)), 1.0};
    return core;
}

namespace {
struct HgConstants {
    cplx b;
    cplx c11, c22;            // left constant diagonal
    cplx pref12, pref21;      // -Gamma(1-b)/Gamma(b), -Gamma(1+b)/Gamma(-b)
    cplx e2b, e1b;            // e^{2 pi i b}, e^{pi i b}
};

HgConstants hg_constants(cplx b) {
    if (std::abs(b.real()) > 1e-12)
        throw std::invalid_argument("hg_parametrix: parameter must be purely imaginary");
    if (b == cplx(0.0)) throw std::invalid_argument("hg_parametrix: parameter must be nonzero");
    HgConstants c;
    c.b = b;
    c.e1b = std::exp(kI * kPi * b);
    c.e2b = c.e1b * c.e1b;
    c.pref12 = -std::exp(log_gamma(1.0 - b) - log_gamma(b));
    c.pref21 = -std::exp(log_gamma(1.0 + b) - log_gamma(-b));
    // Left diagonal chosen so that the z -> 0 limits of the first column in
    // the sector arg z in (pi/4, 3pi/4) both equal Gamma(1-b).
    c.c11 = std::exp(-kI * kPi * b);
    c.c22 = std::exp(log_gamma(1.0 - b) - log_gamma(1.0 + b));
    return c;
}

// Base solution in the sector between the rays arg z = 0 and pi/4, with the
// continued argument theta of z supplied by the caller. deriv selects d/dz.
Matrix2C hg_base(double absz, double theta, const HgConstants& c, bool deriv) {
    const cplx z = std::polar(absz, theta);
    const cplx em = std::exp(-0.5 * kI * z), ep = std::exp(0.5 * kI * z);
    const cplx u11 = tricomi_u1(c.b, absz, theta + 0.5 * kPi);
    const cplx u12 = tricomi_u1(1.0 - c.b, absz, theta - 0.5 * kPi);
    const cplx u21 = tricomi_u1(1.0 + c.b, absz, theta + 0.5 * kPi);
    const cplx u22 = tricomi_u1(-c.b, absz, theta - 0.5 * kPi);
    Matrix2C m;
    if (!deriv) {
        m = {u11 * c.e2b * em, c.pref12 * u12 * c.e1b * ep,
             c.pref21 * u21 * c.e1b * em, u22 * ep};
    } else {
        const cplx d11 = tricomi_u1_prime(c.b, absz, theta + 0.5 * kPi);
        const cplx d12 = tricomi_u1_prime(1.0 - c.b, absz, theta - 0.5 * kPi);
        const cplx d21 = tricomi_u1_prime(1.0 + c.b, absz, theta + 0.5 * kPi);
        const cplx d22 = tricomi_u1_prime(-c.b, absz, theta - 0.5 * kPi);
        m = {(kI * d11 - 0.5 * kI * u11) * c.e2b * em,
             c.pref12 * (-kI * d12 + 0.5 * kI * u12) * c.e1b * ep,
             c.pref21 * (kI * d21 - 0.5 * kI * u21) * c.e1b * em,
             (-kI * d22 + 0.5 * kI * u22) * ep};
    }
    m.a11 *= c.c11;
    m.a12 *= c.c11;
    m.a21 *= c.c22;
    m.a22 *= c.c22;
    return m;
}

Matrix2C hg_jump_raw(int k, const HgConstants& c) {
    switch (k) {
        case 1: return {0.0, 1.0 / c.e1b, -c.e1b, 0.0};
        case 2: return {1.0, 0.0, c.e1b, 1.0};
        case 3: return {1.0, 0.0, 1.0 / c.e1b, 1.0};
        case 4: return {0.0, c.e1b, -1.0 / c.e1b, 0.0};
        case 5: return {1.0, 0.0, 1.0 / c.e1b, 1.0};
        case 6: return {1.0, 0.0, c.e1b, 1.0};
        default: throw std::invalid_argument("hg_jump: ray index must be 1..6");
    }
}

// Right factor and continued argument for the sector containing principal
// argument th. Sectors are bounded by the six rays.
Matrix2C hg_sector_factor(double th, const HgConstants& c, double& theta_out) {
    const Matrix2C j2 = hg_jump_raw(2, c);
    const Matrix2C j3i = hg_jump_raw(3, c).inverse();
    const Matrix2C j4i = hg_jump_raw(4, c).inverse();
    const Matrix2C j5i = hg_jump_raw(5, c).inverse();
    const Matrix2C j1i = hg_jump_raw(1, c).inverse();
    const Matrix2C j6i = hg_jump_raw(6, c).inverse();
    theta_out = th;
    if (th > 0.0 && th < 0.25 * kPi) return Matrix2C::identity();
    if (th > 0.25 * kPi && th < 0.75 * kPi) return j2;
    if (th > 0.75 * kPi && th < kPi) return j2 * j3i;
    if (th > -kPi && th < -0.75 * kPi) {
        theta_out = th + 2.0 * kPi;
        return j2 * j3i * j4i;
    }
    if (th > -0.75 * kPi && th < -0.5 * kPi) {
        theta_out = th + 2.0 * kPi;
        return j2 * j3i * j4i * j5i;
    }
    if (th > -0.5 * kPi && th < -0.25 * kPi) return j1i * j6i;
    if (th > -0.25 * kPi && th < 0.0) return j1i;
    throw std::invalid_argument("hg_parametrix: z on a jump ray, use offset boundary values");
}
} // namespace

Matrix2C hg_parametrix(cplx z, cplx b) {
    const HgConstants c = hg_constants(b);
    double theta = 0.0;
    const Matrix2C right = hg_sector_factor(std::arg(z), c, theta);
    return hg_base(std::abs(z), theta, c, false) * right;
}

Matrix2C hg_parametrix_prime(cplx z, cplx b) {
    const HgConstants c = hg_constants(b);
    double theta = 0.0;
    const Matrix2C right = hg_sector_factor(std::arg(z), c, theta);
    return hg_base(std::abs(z), theta, c, true) * right;
}

Matrix2C hg_jump(int k, cplx b) { return hg_jump_raw(k, hg_constants(b)); }

Matrix2C model_m(cplx lambda, double gamma) {
    if (lambda.imag() == 0.0 && lambda.real() <= 0.0)
        throw std::invalid_argument("model_m: lambda on (-inf, 0]");
    const cplx q = std::pow(lambda, 0.25);
    const cplx r = (1.0 + std::exp(-0.5 * kI * kPi) * std::sqrt(lambda)) / std::sqrt(lambda + 1.0);
    const cplx p = std::exp(-kI * std::numbers::sqrt2 * gamma * std::log(r));
    const double is2 = 1.0 / std::numbers::sqrt2;
    // lambda^{-s3/4} B p^{s3} with B = (1/sqrt2) [[1, i], [i, 1]].
    return {is2 * p / q, is2 * kI / (p * q), is2 * kI * q * p, is2 * q / p};
}

bool CheckResult::passed() const {
    if (!(residual <= tolerance)) return false;
    for (std::size_t k = 1; k < eta_residuals.size(); ++k)
        if (!(eta_residuals[k] <= 1.05 * eta_residuals[k - 1] + 1e-13)) return false;
    return true;
}

namespace {
// Jump residual with boundary values taken from both sides at matched
// offsets along `dir` and extrapolated to the contour.
template <typename F>
CheckResult jump_check(const std::string& name, F&& f, cplx point, cplx plus_dir,
                       const Matrix2C& J, double tol) {
    CheckResult r;
    r.name = name;
    r.tolerance = tol;
    for (double eta : {1e-4, 1e-5, 1e-6}) {
        const Matrix2C d = f(point + eta * plus_dir) - f(point - eta * plus_dir) * J;
        r.eta_residuals.push_back(d.norm());
    }
    const Matrix2C plus = extrapolate_boundary([&](double eta) { return f(point + eta * plus_dir); });
    const Matrix2C minus = extrapolate_boundary([&](double eta) { return f(point - eta * plus_dir); });
    r.residual = (plus - minus * J).norm();
    return r;
}

// Same, with angular offsets around a ray through the origin.
template <typename F>
CheckResult ray_jump_check(const std::string& name, F&& f, double radius, double ray_angle,
                           double plus_sign, const Matrix2C& J, double tol) {
    CheckResult r;
    r.name = name;
    r.tolerance = tol;
    auto at = [&](double delta) { return f(std::polar(radius, ray_angle + delta)); };
    for (double eta : {1e-4, 1e-5, 1e-6}) {
        const Matrix2C d = at(plus_sign * eta) - at(-plus_sign * eta) * J;
        r.eta_residuals.push_back(d.norm());
    }
    const Matrix2C plus = extrapolate_boundary([&](double eta) { return at(plus_sign * eta); });
    const Matrix2C minus = extrapolate_boundary([&](double eta) { return at(-plus_sign * eta); });
    r.residual = (plus - minus * J).norm();
    return r;
}
} // namespace

std::vector<CheckResult> check_phi() {
    std::vector<CheckResult> out;
    out.push_back({"phi(1) = 1", std::abs(phi_map(cplx(1.0, 0.0)) - 1.0), 1e-14, {}});

    double dev = 0.0;
    for (double th : {0.3, 1.7, -2.4})
        dev = std::max(dev, std::abs(phi_map(std::polar(1e6, th)) / (2.0 * std::polar(1e6, th)) - 1.0));
    out.push_back({"phi(z)/(2z) -> 1 at |z|=1e6", dev, 1e-6, {}});

    double prod = 0.0, match = 0.0;
    for (double x : {-0.7, 0.1, 0.6}) {
        prod = std::max(prod, std::abs(phi_map_boundary(x, Side::Plus) * phi_map_boundary(x, Side::Minus) - 1.0));
        for (Side side : {Side::Plus, Side::Minus}) {
            // Extrapolated off-cut values must agree with the closed-form
            // boundary values.
            const double sgn = side == Side::Plus ? 1.0 : -1.0;
            cplx v = 0.0;
            const double eta[3] = {1e-4, 1e-5, 1e-6};
            for (int i = 0; i < 3; ++i) {
                double w = 1.0;
                for (int j = 0; j < 3; ++j)
                    if (j != i) w *= (0.0 - eta[j]) / (eta[i] - eta[j]);
                v += w * phi_map(cplx(x, sgn * eta[i]));
            }
            match = std::max(match, std::abs(v - phi_map_boundary(x, side)));
        }
    }
    out.push_back({"phi_+ phi_- = 1 on (-1,1)", prod, 1e-14, {}});
    out.push_back({"phi boundary values match extrapolation", match, 1e-10, {}});
    return out;
}

std::vector<CheckResult> check_global(const SzegoSpec& s, std::uint64_t seed) {
    std::vector<CheckResult> out;
    RngStream rng(seed, 0);

    double ddev = 0.0;
    for (int k = 0; k < 100; ++k) {
        cplx z;
        if (k % 5 == 0) {
            z = cplx(2.0 * rng.uniform() - 1.0, 0.1 + 0.9 * rng.uniform());
        } else {
            z = std::polar(1.05 + 3.0 * rng.uniform(), kPi * (2.0 * rng.uniform() - 1.0));
        }
        ddev = std::max(ddev, std::abs(global_parametrix(z, s).det() - 1.0));
    }
    out.push_back({"det P = 1 at 100 random z", ddev, 1e-10, {}});

    std::vector<double> cuts{-1.0};
    for (const Jump& j : s.jumps) cuts.push_back(j.location);
    cuts.push_back(1.0);
    auto f = [&](cplx z) { return global_parametrix(z, s); };
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = std::max(cuts[i], -0.93), hi = std::min(cuts[i + 1], 0.93);
        if (!(hi > lo)) continue;
        for (double frac : {0.3, 0.62}) {
            const double x = lo + frac * (hi - lo);
            out.push_back(jump_check("jump residual at x=" + std::to_string(x), f, cplx(x, 0.0),
                                     cplx(0.0, 1.0), outer_jump(x, s), 1e-10));
        }
    }

    out.push_back({"P(z) -> I at |z|=1e6",
                   (global_parametrix(cplx(7.1e5, 7.1e5), s) - Matrix2C::identity()).norm(), 1e-5, {}});
    return out;
}

std::vector<CheckResult> check_bessel(double alpha, std::uint64_t seed) {
    std::vector<CheckResult> out;
    RngStream rng(seed, 1);
    const double r23 = 2.0 * kPi / 3.0;

    double ddev = 0.0;
    const double sector_mid[3] = {0.0, 0.5 * (r23 + kPi), -0.5 * (r23 + kPi)};
    const double sector_half[3] = {r23 - 0.02, 0.5 * (kPi - r23) - 0.02, 0.5 * (kPi - r23) - 0.02};
    for (int reg = 0; reg < 3; ++reg)
        for (int k = 0; k < 34; ++k) {
            const double th = sector_mid[reg] + sector_half[reg] * (2.0 * rng.uniform() - 1.0);
            const cplx z = std::polar(0.05 + 8.0 * rng.uniform(), th);
            ddev = std::max(ddev, std::abs(bessel_parametrix(z, alpha).det() - 1.0));
        }
    out.push_back({"det Phi = 1 in each region", ddev, 1e-10, {}});

    auto f = [&](cplx z) { return bessel_parametrix(z, alpha); };
    const cplx ea = std::exp(cplx(0.0, alpha * kPi));
    for (double rad : {0.7, 2.3}) {
        out.push_back(ray_jump_check("jump on upper ray, |z|=" + std::to_string(rad), f, rad, r23,
                                     -1.0, Matrix2C{1.0, 0.0, ea, 1.0}, 1e-9));
        out.push_back(ray_jump_check("jump on (-inf,0), |z|=" + std::to_string(rad), f, rad,
                                     kPi, -1.0, Matrix2C{0.0, 1.0, -1.0, 0.0}, 1e-9));
        out.push_back(ray_jump_check("jump on lower ray, |z|=" + std::to_string(rad), f, rad, -r23,
                                     -1.0, Matrix2C{1.0, 0.0, 1.0 / ea, 1.0}, 1e-9));
    }

    double adev = 0.0;
    for (double th : {0.0, 0.5 * kPi, -0.5 * kPi}) {
        const cplx z = std::polar(1e4, th);
        const cplx s = std::sqrt(z);
        const cplx es = std::exp(s), esm = std::exp(-s);
        const cplx pz = std::pow(kPi * kPi * z, 0.25);
        const double a2 = alpha * alpha;
        // (pi^2 z)^{-s3/4}/sqrt2 [[1,i],[i,1]] (I + R/(8 sqrt z)) e^{sqrt z s3}
        const Matrix2C mid{1.0, kI, kI, 1.0};
        const cplx c = 1.0 / (8.0 * s);
        const Matrix2C corr{1.0 + c * (-1.0 - 4.0 * a2), c * (-2.0 * kI),
                            c * (-2.0 * kI), 1.0 + c * (1.0 + 4.0 * a2)};
        const double is2 = 1.0 / std::numbers::sqrt2;
        const Matrix2C approx =
            Matrix2C{is2 / pz, 0.0, 0.0, is2 * pz} * mid * corr * Matrix2C{es, 0.0, 0.0, esm};
        const Matrix2C got = bessel_parametrix(z, alpha);
        adev = std::max({adev, std::abs(got.a11 / approx.a11 - 1.0),
                         std::abs(got.a12 / approx.a12 - 1.0), std::abs(got.a21 / approx.a21 - 1.0),
                         std::abs(got.a22 / approx.a22 - 1.0)});
    }
    out.push_back({"asymptotic expansion match at |z|=1e4", adev, 1e-3, {}});
    return out;
}

std::vector<CheckResult> check_hg(cplx b, std::uint64_t seed) {
    (void)seed;
    std::vector<CheckResult> out;
    auto f = [&](cplx z) { return hg_parametrix(z, b); };

    const double angles[6] = {0.0, 0.25 * kPi, 0.75 * kPi, kPi, -0.75 * kPi, -0.25 * kPi};
    const double plus_sign[6] = {1.0, 1.0, -1.0, -1.0, -1.0, 1.0};
    for (int k = 1; k <= 6; ++k)
        for (double rad : {0.6, 1.7})
            out.push_back(ray_jump_check("jump on ray " + std::to_string(k) + ", |z|=" + std::to_string(rad),
                                         f, rad, angles[k - 1], plus_sign[k - 1], hg_jump(k, b), 1e-8));

    const cplx target = std::exp(log_gamma(1.0 - b));
    const cplx z0 = std::polar(1e-9, 0.375 * kPi);
    const Matrix2C v = hg_parametrix(z0, b);
    out.push_back({"entry (1,1) -> Gamma(1-b) as z -> 0", std::abs(v.a11 - target), 1e-6, {}});
    out.push_back({"entry (2,1) -> Gamma(1-b) as z -> 0", std::abs(v.a21 - target), 1e-6, {}});

    const cplx z1 = std::polar(1e-7, 0.375 * kPi);
    const Matrix2C lim = hg_parametrix(z1, b).inverse() * hg_parametrix_prime(z1, b);
    const cplx want = -2.0 * kPi * b / (std::exp(kI * kPi * b) - std::exp(-kI * kPi * b));
    out.push_back({"(Phi^-1 Phi')_21 -> -2 pi b / (e^{i pi b} - e^{-i pi b})",
                   std::abs(lim.a21 - want), 1e-4, {}});
    return out;
}

std::vector<CheckResult> check_model(double gamma, std::uint64_t seed) {
    std::vector<CheckResult> out;
    RngStream rng(seed, 2);

    double ddev = 0.0;
    for (int k = 0; k < 100; ++k) {
        const cplx z = std::polar(0.05 + 5.0 * rng.uniform(), (kPi - 0.02) * (2.0 * rng.uniform() - 1.0));
        ddev = std::max(ddev, std::abs(model_m(z, gamma).det() - 1.0));
    }
    out.push_back({"det M = 1 at 100 random lambda", ddev, 1e-10, {}});

    auto f = [&](cplx z) { return model_m(z, gamma); };
    const double e = std::exp(std::numbers::sqrt2 * kPi * gamma);
    for (double x : {-3.0, -1.5})
        out.push_back(jump_check("jump on (-inf,-1) at " + std::to_string(x), f, cplx(x, 0.0),
                                 cplx(0.0, 1.0), Matrix2C{0.0, e, -1.0 / e, 0.0}, 1e-10));
    for (double x : {-0.6, -0.2})
        out.push_back(jump_check("jump on (-1,0) at " + std::to_string(x), f, cplx(x, 0.0),
                                 cplx(0.0, 1.0), Matrix2C{0.0, 1.0, -1.0, 0.0}, 1e-10));

    double adev = 0.0;
    for (double th : {kPi / 3.0, -2.0 * kPi / 3.0}) {
        const cplx z = std::polar(1e6, th);
        const cplx q = std::pow(z, 0.25);
        const double is2 = 1.0 / std::numbers::sqrt2;
        const double eg = std::exp(-0.5 * std::numbers::sqrt2 * kPi * gamma);
        // (I + O(1/lambda)) [[1,0],[i sqrt2 gamma, 1]] lambda^{-s3/4} B e^{-sqrt2 pi gamma s3/2}
        const Matrix2C want = Matrix2C{1.0, 0.0, kI * std::numbers::sqrt2 * gamma, 1.0} *
                              Matrix2C{1.0 / q, 0.0, 0.0, q} *
                              Matrix2C{is2, is2 * kI, is2 * kI, is2} *
                              Matrix2C{eg, 0.0, 0.0, 1.0 / eg};
        const Matrix2C got = model_m(z, gamma);
        adev = std::max(adev, (got - want).norm() / want.norm());
    }
    out.push_back({"asymptotic prefactor match at |lambda|=1e6", adev, 1e-4, {}});
    return out;
}

} // namespace jue
