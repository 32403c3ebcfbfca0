#pragma once

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "sge/complex_utils.hpp"
#include "sge/errors.hpp"

namespace sge {

// Double-exponential quadrature on (a, b). Handles integrable endpoint
// singularities, which is what every integral in this library has.
// Throws NonConvergence if the error estimate misses the gate. Integrands
// whose endpoint factors cancel should use the binary form f(x, xc) with
// xc the exact distance to the nearest endpoint (real-valued f only).
template <class F>
auto integrate_de(F&& f, double a, double b, double gate = 1e-9) {
    boost::math::quadrature::tanh_sinh<double> integrator(15);
    double error = 0, l1 = 0;
    std::size_t levels = 0;
    auto result = integrator.integrate(f, a, b, 1e-13, &error, &l1, &levels);
    if (!(error <= gate * (l1 + 1e-300))) {
        throw NonConvergence("tanh-sinh quadrature failed to reach tolerance");
    }
    return result;
}

} // namespace sge
