#include <zetareg/zeta.hpp>

#include <zetareg/gamma.hpp>
#include <zetareg/quadrature.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace zetareg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
// ln(3 + sqrt(8)), the per-term gain of the accelerated alternating sum
constexpr double kLnAccel = 1.7627471740390860504652186499596;

long double accel_base_pow(int n) {
    // (3 + sqrt(8))^n by binary exponentiation in extended precision; the
    // magnitude exceeds double range for n >~ 400 but stays well inside
    // long double range for every term count we can be asked for.
    long double base = 3.0L + std::sqrt(8.0L);
    long double r = 1.0L;
    int e = n;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Truncation bound of the accelerated alternating sum for a_k = (k+1)^{-s}:
// the terms are moments of a measure of total variation Gamma(sigma)/|Gamma(s)|,
// so |error| <= 4 * V * (3+sqrt(8))^{-n}. Returned as a natural log.
double ln_accel_error_bound(ComplexPoint s, int n) {
    double lnV = std::lgamma(s.sigma) - lgamma_complex(s.value()).real();
    return std::log(4.0) + lnV - n * kLnAccel;
}

int accel_terms_needed(ComplexPoint s, double ln_target) {
    double lnV = std::lgamma(s.sigma) - lgamma_complex(s.value()).real();
    double n = (std::log(4.0) + lnV - ln_target) / kLnAccel;
    return std::max(24, static_cast<int>(std::ceil(n)) + 2);
}

// 1/(e^x - 1) - 1/x on the real axis, stable near 0.
double zeta_kernel_real(double x) {
    if (std::abs(x) < 0.25) {
        // -1/2 + sum B_{2k} x^{2k-1} / (2k)!
        static const double c[] = {
            1.0 / 12.0,          -1.0 / 720.0,        1.0 / 30240.0,
            -1.0 / 1209600.0,    1.0 / 47900160.0,    -6.7425706521589e-11,
            1.7255832236801e-12,
        };
        double x2 = x * x;
        double odd = c[6];
        for (int i = 5; i >= 0; --i) odd = odd * x2 + c[i];
        return -0.5 + x * odd;
    }
    return 1.0 / std::expm1(x) - 1.0 / x;
}

// h(x) = 1/(e^x - 1) - e^{-x}/x, analytic at 0 with h(0) = 1/2; the
// singular part of the Mellin kernel with the subtraction realised through
// e^{-x}/x instead of the [0,1] cutoff (the difference integrates in closed
// form to Gamma(s-1) - 1/(s-1)).
Complex mellin_kernel_h(Complex x) {
    if (std::abs(x) < 0.25) {
        // c_m = ((-1)^m + B_{m+1}) / (m+1)!
        static const std::array<double, 16> c = [] {
            const double B[] = {1.0, -0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0,
                                -1.0 / 30, 0.0, 5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6, 0.0,
                                -3617.0 / 510};
            std::array<double, 16> out{};
            double fact = 1.0;
            for (int m = 0; m < 16; ++m) {
                fact *= (m + 1);
                double sign = (m % 2 == 0) ? 1.0 : -1.0;
                out[static_cast<size_t>(m)] = (sign + B[m + 1]) / fact;
            }
            return out;
        }();
        Complex acc = c[15];
        for (int m = 14; m >= 0; --m) acc = acc * x + c[static_cast<size_t>(m)];
        return acc;
    }
    return 1.0 / (std::exp(x) - 1.0) - std::exp(-x) / x;
}

ZetaValue mellin_real_axis(ComplexPoint s, const EvalConfig& cfg, Complex gamma_s,
                           double abs_gamma) {
    const Complex sc = s.value();
    // Literal two-integral form. Quadrature budgets are expressed at the
    // scale of Gamma(s)*zeta(s) so the final division meets cfg.tol.
    const double tol_scaled = 0.25 * cfg.tol * abs_gamma;

    auto f1 = [&](double x) -> Complex {
        return zeta_kernel_real(x) * std::exp((sc - 1.0) * std::log(x));
    };
    QuadResult i1 = integrate_gk(f1, 0.0, 1.0, tol_scaled, cfg.mellin_panels);

    // Upper tail cutoff where the integrand bound x^{sigma-1} e^{-x} (times
    // a safe constant) falls below a tenth of the budget.
    double u = std::log(40.0 / (0.1 * 4.0 * tol_scaled));
    double xstar = std::max({u, 2.0 * s.sigma + 4.0, 3.0});
    for (int i = 0; i < 3; ++i)
        xstar = std::max({u + std::max(s.sigma - 1.0, 0.0) * std::log(xstar),
                          2.0 * s.sigma + 4.0, 3.0});
    double tail_bound = 3.0 * std::pow(xstar, s.sigma - 1.0) * std::exp(-xstar);

    auto f2 = [&](double x) -> Complex {
        return std::exp((sc - 1.0) * std::log(x)) / std::expm1(x);
    };
    QuadResult i2 = integrate_gk(f2, 1.0, xstar, tol_scaled, cfg.mellin_panels);

    Complex total = i1.value + i2.value + 1.0 / (sc - 1.0);
    ZetaValue out;
    out.value = total / gamma_s;
    double rounding = 5e-16 * (i1.abs_integral + i2.abs_integral + std::abs(1.0 / (sc - 1.0)));
    out.abs_err = (i1.abs_err + i2.abs_err + tail_bound + rounding) / abs_gamma +
                  std::abs(out.value) * 3e-14;
    out.method = Method::Mellin;
    out.terms_used = i1.evals + i2.evals;
    return out;
}

ZetaValue mellin_rotated_ray(ComplexPoint s, const EvalConfig& cfg, double abs_gamma) {
    // Same integral on the ray arg x = phi (no poles of the kernel are
    // crossed: they sit on the imaginary axis). The e^{-t*phi} modulus of
    // x^{s-1} is factored out of the numerical sum so nothing underflows,
    // and the residual cancellation is e^{t(pi/2 - phi)} = e^c instead of
    // e^{pi t / 2}.
    const double t = s.t;
    const double c = 12.0;
    const double phi = kPi / 2.0 - c / t;
    const double cosphi = std::cos(phi);
    const Complex sc = s.value();
    const Complex lg = lgamma_complex(sc);

    // Budget for the scaled integral J'' = e^{t*phi} * integral.
    const double ln_tol_scaled = std::log(0.25 * cfg.tol) + lg.real() + t * phi;
    const double tol_scaled = std::exp(ln_tol_scaled);

    double u = std::log(30.0 / cosphi) - std::log(0.1) - ln_tol_scaled;
    double r_out = std::max(u / cosphi, 6.0);
    for (int i = 0; i < 3; ++i)
        r_out = std::max((u + std::max(s.sigma - 1.0, 0.0) * std::log(r_out)) / cosphi, 6.0);
    double tail_scaled =
        3.0 * std::pow(r_out, std::max(s.sigma - 1.0, 0.0)) * std::exp(-r_out * cosphi) / cosphi;

    const Complex ray = std::polar(1.0, phi);
    auto f = [&](double r) -> Complex {
        // r^{sigma-1} e^{i(t ln r + sigma phi)} h(r e^{i phi}); this is
        // x^{s-1} h(x) dx/dr with the e^{-t phi} modulus removed.
        Complex expo((s.sigma - 1.0) * std::log(r), t * std::log(r) + s.sigma * phi);
        return std::exp(expo) * mellin_kernel_h(r * ray);
    };
    QuadResult q = integrate_gk(f, 0.0, r_out, tol_scaled, cfg.mellin_panels);

    // zeta = 1/(s-1) + e^{-t phi} J'' / Gamma(s)
    Complex w = std::exp(Complex(-t * phi, 0.0) - lg);
    ZetaValue out;
    out.value = 1.0 / (sc - 1.0) + q.value * w;
    double rounding = 5e-16 * q.abs_integral;
    out.abs_err = (q.abs_err + tail_scaled + rounding) * std::abs(w) +
                  std::abs(out.value) * 3e-14;
    out.method = Method::Mellin;
    out.terms_used = q.evals;
    return out;
}

std::vector<long> primes_up_to(long n) {
    std::vector<bool> composite(static_cast<size_t>(std::max(n + 1, 2L)), false);
    std::vector<long> primes;
    for (long p = 2; p <= n; ++p) {
        if (composite[static_cast<size_t>(p)]) continue;
        primes.push_back(p);
        for (long q = p * p; q <= n; q += p) composite[static_cast<size_t>(q)] = true;
    }
    return primes;
}

}  // namespace

ZetaValue eta_eval(ComplexPoint s, const EvalConfig& cfg) {
    cfg.validate();
    if (!(s.sigma > 0)) throw DomainError("eta_eval: requires Re(s) > 0");
    const Complex sc = s.value();
    if (std::abs(sc - 1.0) < 1e-12) throw PoleProximity("eta_eval: s too close to 1");

    // 1 - 2^{1-s} vanishes at s = 1 + 2 pi i k / ln 2; for k != 0 those points
    // sit on sigma = 1 and the 0/0 cancellation there is not usable.
    double k = std::round(s.t * kLn2 / (2.0 * kPi));
    if (k != 0.0) {
        Complex sing(1.0, 2.0 * kPi * k / kLn2);
        if (std::abs(sc - sing) < 1e-9)
            throw PrefactorSingularity("eta_eval: prefactor zero at s = 1 + 2 pi i k / ln 2");
    }

    const Complex prefactor = 1.0 - std::exp((1.0 - sc) * kLn2);
    const double abs_pref = std::abs(prefactor);
    const double ln_target = std::log(cfg.tol * abs_pref);
    int n = accel_terms_needed(s, ln_target);
    if (n > cfg.max_terms)
        throw Nonconvergence("eta_eval: max_terms too small for requested tolerance");

    // Chebyshev-weighted acceleration of sum_{k>=0} (-1)^k (k+1)^{-s}
    // (Cohen-Rodriguez Villegas-Zagier recurrence). The weights overflow
    // double range for large n, so the recurrence runs in long double.
    long double d = accel_base_pow(n);
    d = (d + 1.0L / d) / 2.0L;
    long double b = -1.0L;
    long double cw = -d;
    std::complex<long double> acc(0.0L, 0.0L);
    const long double nl = static_cast<long double>(n);
    for (int kk = 0; kk < n; ++kk) {
        cw = b - cw;
        Complex term = std::exp(-sc * std::log(static_cast<double>(kk + 1)));
        acc += cw * std::complex<long double>(term.real(), term.imag());
        const long double kl = static_cast<long double>(kk);
        b = (kl + nl) * (kl - nl) * b / ((kl + 0.5L) * (kl + 1.0L));
    }
    std::complex<long double> eta = acc / d;
    Complex eta_d(static_cast<double>(eta.real()), static_cast<double>(eta.imag()));

    ZetaValue out;
    out.value = eta_d / prefactor;
    double ln_err = ln_accel_error_bound(s, n) - std::log(abs_pref);
    out.abs_err = std::exp(std::max(ln_err, -690.0)) + std::abs(out.value) * 1e-15;
    out.method = Method::Eta;
    out.terms_used = n;
    return out;
}

ZetaValue mellin_eval(ComplexPoint s, const EvalConfig& cfg) {
    cfg.validate();
    if (!(s.sigma > 0)) throw DomainError("mellin_eval: requires Re(s) > 0");
    const Complex sc = s.value();
    if (std::abs(sc - 1.0) < 1e-12) throw PoleProximity("mellin_eval: s too close to 1");
    if (s.t < 0.0) {
        // zeta(conj s) = conj zeta(s); evaluate in the upper half-plane.
        ZetaValue v = mellin_eval(s.conj(), cfg);
        v.value = std::conj(v.value);
        return v;
    }

    double ln_abs_gamma = lgamma_complex(sc).real();
    if (ln_abs_gamma < -640.0)
        throw QuadratureFailure("mellin_eval: |Gamma(s)| below double-precision scaling range");
    double abs_gamma = std::exp(ln_abs_gamma);

    if (s.t <= 8.0) return mellin_real_axis(s, cfg, gamma_complex(sc), abs_gamma);
    return mellin_rotated_ray(s, cfg, abs_gamma);
}

ZetaValue zeta_eval(ComplexPoint s, const EvalConfig& cfg) {
    cfg.validate();
    const Complex sc = s.value();
    const double dist_pole = std::abs(sc - 1.0);
    if (dist_pole < 1e-12) throw PoleProximity("zeta_eval: s = 1 is the pole");
    if (dist_pole < 0.05) {
        // Leading Laurent form; the first Stieltjes coefficient bounds the
        // truncation at ~0.073 |s-1|.
        ZetaValue out;
        out.value = 1.0 / (sc - 1.0) + euler_gamma;
        out.abs_err = 0.1 * dist_pole;
        out.method = Method::Laurent;
        out.terms_used = 1;
        return out;
    }
    if (s.sigma > 0.0) {
        try {
            return eta_eval(s, cfg);
        } catch (const PrefactorSingularity&) {
            return mellin_eval(s, cfg);
        }
    }
    // Reflection into sigma >= 1: zeta(s) = chi(s) zeta(1-s).
    ZetaValue inner = zeta_eval(ComplexPoint(1.0 - s.sigma, -s.t), cfg);
    Complex chi = chi_factor(s);
    ZetaValue out;
    out.value = chi * inner.value;
    out.abs_err = std::abs(chi) * inner.abs_err + std::abs(out.value) * 1e-12;
    out.method = Method::Reflection;
    out.terms_used = inner.terms_used;
    return out;
}

Complex euler_product_eval(ComplexPoint s, long prime_bound) {
    if (!(s.sigma > 1.0)) throw DomainError("euler_product_eval: requires Re(s) > 1");
    if (prime_bound < 2) throw DomainError("euler_product_eval: prime_bound must be >= 2");
    const Complex sc = s.value();
    Complex prod = 1.0;
    for (long p : primes_up_to(prime_bound))
        prod *= 1.0 / (1.0 - std::exp(-sc * std::log(static_cast<double>(p))));
    return prod;
}

double hardy_theta(double t) {
    if (!(t >= 1.0)) throw DomainError("hardy_theta: requires t >= 1");
    double u = t / 2.0;
    return u * std::log(u / kPi) - u - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t * t);
}

HardyZDetail hardy_z_detail(double t, const EvalConfig& cfg) {
    if (!(t >= 1.0)) throw DomainError("hardy_z: requires t >= 1");
    ZetaValue zv = zeta_eval(ComplexPoint(0.5, t), cfg);
    double theta = hardy_theta(t);
    Complex rotated = std::polar(1.0, theta) * zv.value;
    // Next asymptotic term bounds the theta error; 1e-8 for t >= 10.
    double theta_err = 31.0 / (80640.0 * std::pow(t, 5.0)) * 1.5 + 1e-12;
    HardyZDetail out;
    out.z = rotated.real();
    out.imag_residual = rotated.imag();
    out.residual_bound = 10.0 * (zv.abs_err + theta_err) * (1.0 + std::abs(zv.value));
    return out;
}

double hardy_z(double t, const EvalConfig& cfg) { return hardy_z_detail(t, cfg).z; }

}  // namespace zetareg
