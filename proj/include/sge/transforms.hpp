#pragma once

#include <utility>

#include "sge/complex_utils.hpp"
#include "sge/elliptic.hpp"

namespace sge {

struct Sl2zElement {
    int a, b, c, d;
    Sl2zElement(int a_, int b_, int c_, int d_);
    Cplx apply(Cplx tau) const; // (a tau + b)/(c tau + d)
};

// The six-case modular equivalence table. Raw tau maps are kept exactly as
// tabulated even when they land in the lower half-plane; tau_uhp is the
// mirrored representative -tau used for theta evaluation, which carries the
// tabulated modulus map.
struct ModularCaseResult {
    int case_id;
    Cplx tau_raw;
    PeriodRatio tau_uhp;
    Modulus m;
};

Cplx modular_case_tau(int case_id, Cplx tau);
Modulus modular_case_modulus(int case_id, const Modulus& m);
ModularCaseResult apply_modular_case(int case_id, const PeriodRatio& t, const Modulus& m);

// Descending Landen step k1 = (1 - k')/(1 + k'), complement 2 sqrt(k')/(1 + k');
// the period ratio doubles.
Modulus landen_descend(const Modulus& m);
// Inverse step: modulus whose descent gives m.
Modulus landen_ascend(const Modulus& m);

// |nd(u;k) - [dn(u1;k1) - k1 cn(u1;k1)]/(1 - k1)|, u1 = 2u/(1 + k1)
double landen_gauss_identity(Cplx u, const Modulus& m);

// residuals of sn(t/kk;kk) = kb sn(t;kb) and cn(t/kk;kk) = dn(t;kb), kk = 1/kb
std::pair<double, double> reciprocal_modulus_identities(double t, const Modulus& m_b);

// |K(1/k) - k (K(k) + i K'(k))| for real k in (0,1)
double reciprocal_K_identity(const Modulus& m);

// residuals of cn(u+K+iK') = -i(k'/k) nc(u) and dn(u+K+iK') = i k' sc(u)
std::pair<double, double> half_period_shift_identities(Cplx u, const Modulus& m);

// residuals of dn(u1,k1) = cn(k1 u1, k'_k) and cn(u1,k1) = dn(k1 u1, k'_k),
// k1 = 1/k'_k; the left sides run through the complex-lattice path.
std::pair<double, double> reciprocal_jef_map(Cplx u1, const Modulus& m_k);

} // namespace sge
