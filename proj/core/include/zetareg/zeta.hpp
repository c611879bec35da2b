#pragma once

#include <zetareg/types.hpp>

namespace zetareg {

/// zeta(s) from the alternating series (1 - 2^{1-s})^{-1} sum (-1)^{n+1} n^{-s},
/// Re(s) > 0, with Chebyshev-weighted acceleration of the alternating sum.
/// The reported abs_err is a rigorous truncation bound divided by the
/// prefactor modulus.
///
/// Throws PoleProximity within 1e-12 of s = 1, PrefactorSingularity within
/// 1e-9 of s = 1 + 2*pi*i*k/ln 2 (k != 0), Nonconvergence if cfg.max_terms
/// cannot reach cfg.tol.
ZetaValue eta_eval(ComplexPoint s, const EvalConfig& cfg = {});

/// zeta(s) from the regulated Mellin representation for Re(s) > 0:
///
///   zeta(s) = Gamma(s)^{-1} [ I1 + I2 + 1/(s-1) ],
///   I1 = integral_0^1 (1/(e^x - 1) - 1/x) x^{s-1} dx,
///   I2 = integral_1^inf x^{s-1} / (e^x - 1) dx,
///
/// where 1/(s-1) is the analytically continued value of the subtracted
/// integral_0^1 x^{s-2} dx. Both integrals by adaptive quadrature; the
/// upper tail is truncated where the integrand bound drops below a tenth
/// of the required accuracy. For |t| > 8 the same integral is evaluated on
/// a rotated ray (no poles are crossed), which avoids the e^{pi|t|/2}
/// cancellation that plain real-axis quadrature cannot survive in doubles.
ZetaValue mellin_eval(ComplexPoint s, const EvalConfig& cfg = {});

/// Dispatching evaluator:
///   |s-1| < 0.05     -> first-order Laurent form 1/(s-1) + euler_gamma,
///   Re(s) > 0        -> eta_eval, falling back to mellin_eval on a
///                       prefactor singularity,
///   Re(s) <= 0       -> reflection zeta(s) = chi(s) zeta(1-s).
/// Throws PoleProximity only within 1e-12 of s = 1.
ZetaValue zeta_eval(ComplexPoint s, const EvalConfig& cfg = {});

/// Truncated Euler product over primes <= prime_bound; Re(s) > 1 only.
/// Serves as an independent oracle for the half-plane of absolute
/// convergence.
Complex euler_product_eval(ComplexPoint s, long prime_bound);

/// Riemann-Siegel theta by its asymptotic expansion,
///   theta(t) = (t/2) ln(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3),
/// absolute error <= 1e-8 for t >= 10. Requires t >= 1.
double hardy_theta(double t);

/// Hardy Z function Z(t) = Re[ e^{i theta(t)} zeta(1/2 + it) ]; real-valued
/// with the same zeros as zeta on the critical line. Requires t >= 1.
double hardy_z(double t, const EvalConfig& cfg = {});

/// Z with its imaginary-part residual and the residual bound, for
/// diagnostics: |imag| should not exceed the bound.
struct HardyZDetail {
    double z;
    double imag_residual;
    double residual_bound;
};
HardyZDetail hardy_z_detail(double t, const EvalConfig& cfg = {});

inline constexpr double euler_gamma = 0.577215664901532860606512090082;

}  // namespace zetareg
