#pragma once

#include <zetareg/types.hpp>

namespace zetareg {

/// Gamma(z) for complex z via a fixed 13-term Lanczos rational approximation
/// (g = 6.0246800407767296), reflected for Re(z) < 1/2.
/// Relative error ~1e-14 away from the poles. Throws PoleOfGamma within
/// 1e-12 of a non-positive integer.
Complex gamma_complex(Complex z);
inline Complex gamma_complex(ComplexPoint s) { return gamma_complex(s.value()); }

/// log Gamma(z), continuous in t along vertical lines (no mod-2pi jumps in
/// the imaginary part for Re(z) >= 1/2). Safe for |Im z| far beyond the
/// overflow range of gamma_complex.
Complex lgamma_complex(Complex z);

/// log sin(z) without overflow for large |Im z|.
Complex log_sin(Complex z);

/// chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s), the functional-equation
/// factor: zeta(s) = chi(s) zeta(1-s). Evaluated in log-space for large |t|.
Complex chi_factor(ComplexPoint s);
Complex log_chi_factor(ComplexPoint s);

}  // namespace zetareg
