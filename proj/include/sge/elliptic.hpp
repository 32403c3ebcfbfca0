#pragma once

#include <span>
#include <vector>

#include "sge/complex_utils.hpp"

namespace sge {

// Elliptic modulus pair (k, k') with k^2 + k'^2 = 1. The pair constructor
// accepts any branch of the complement; the single-argument factory selects
// the principal square root.
class Modulus {
public:
    Modulus(Cplx k, Cplx k_prime);
    static Modulus from_k(Cplx k);

    Cplx k() const { return k_; }
    Cplx k_prime() const { return kp_; }

    // complement-swapped pair (k', k)
    Modulus complementary() const { return Modulus(kp_, k_); }

private:
    Cplx k_, kp_;
};

// tau = i K'/K, upper half-plane
struct PeriodRatio {
    Cplx tau;
    explicit PeriodRatio(Cplx t);
};

// q = exp(i pi tau), |q| < 1
struct Nome {
    Cplx q;
    explicit Nome(Cplx value);
};

struct QuarterPeriods {
    Cplx K;
    Cplx K_prime;
};

// Complete elliptic integral of the first kind at modulus m.k().
// Real k in (-1, 1): arithmetic-geometric mean. Anything else: adaptive
// quadrature of the defining integral on the principal branch; on the real
// cut m = k^2 > 1 the value is the continuation from Im(m) > 0, so that
// K(1/k) = k [K(k) + i K'(k)] for real k in (0,1).
Cplx complete_K(const Modulus& m);
Cplx complete_K_prime(const Modulus& m);

// kernel on the squared modulus, exposed for the transform/bridge layers
Cplx complete_K_msq(Cplx m_squared);

QuarterPeriods quarter_periods(const Modulus& m);

PeriodRatio tau_from_modulus(const Modulus& m);
Nome nome_from_tau(const PeriodRatio& t);
Modulus modulus_from_tau(const PeriodRatio& t);

// Continuous argument of a sample sequence. Element 0 carries the principal
// argument; consecutive outputs differ by the principal argument of the
// sample ratio, which must stay strictly inside (-pi, pi).
std::vector<double> unwrap_phase(std::span<const Cplx> samples);

} // namespace sge
