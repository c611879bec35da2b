#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace zetareg {

using Complex = std::complex<double>;

// Base class for all numerical-domain failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleProximity : Error {
    using Error::Error;
};
struct PrefactorSingularity : Error {
    using Error::Error;
};
struct Nonconvergence : Error {
    using Error::Error;
};
struct QuadratureFailure : Error {
    using Error::Error;
};
struct PoleOfGamma : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct OnCriticalLine : Error {
    using Error::Error;
};
struct ZeroValue : Error {
    using Error::Error;
};
struct EmptyDomain : Error {
    using Error::Error;
};
struct RankDeficient : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct FitPoor : Error {
    using Error::Error;
};

/// A point s = sigma + i*t of the complex plane. Components must be finite.
struct ComplexPoint {
    double sigma = 0.0;
    double t = 0.0;

    ComplexPoint() = default;
    ComplexPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {
        if (!std::isfinite(sigma) || !std::isfinite(t))
            throw DomainError("ComplexPoint: components must be finite");
    }
    explicit ComplexPoint(Complex z) : ComplexPoint(z.real(), z.imag()) {}

    Complex value() const { return {sigma, t}; }
    ComplexPoint conj() const { return {sigma, -t}; }
};

enum class Method { Eta, Mellin, Reflection, Laurent };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Eta: return "eta";
        case Method::Mellin: return "mellin";
        case Method::Reflection: return "reflection";
        case Method::Laurent: return "laurent";
    }
    return "?";
}

/// An evaluated zeta value with its method tag and absolute error estimate.
struct ZetaValue {
    Complex value{};
    double abs_err = 0.0;
    Method method = Method::Eta;
    int terms_used = 0;
};

struct EvalConfig {
    double tol = 1e-10;      // target absolute error
    int max_terms = 4096;    // series-length cap
    int mellin_panels = 20000;  // quadrature subdivision cap

    void validate() const {
        if (!(tol > 0)) throw DomainError("EvalConfig: tol must be > 0");
        if (max_terms < 16) throw DomainError("EvalConfig: max_terms must be >= 16");
        if (mellin_panels < 1) throw DomainError("EvalConfig: mellin_panels must be >= 1");
    }
};

}  // namespace zetareg
