#pragma once

#include <complex>
#include <cmath>
#include <numbers>

#include "sge/errors.hpp"

namespace sge {

using Cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Cplx iu{0.0, 1.0};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(Cplx z, const char* what) {
    if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite value");
}

inline double abs2(Cplx z) { return z.real()*z.real() + z.imag()*z.imag(); }

} // namespace sge
