#pragma once

#include "sge/complex_utils.hpp"
#include "sge/elliptic.hpp"

namespace sge {

struct JefPoint {
    Cplx u;
    Modulus m;
};

struct JefBundle {
    Cplx sn, cn, dn;
};

// Reference path: theta ratios at v = u/(2K). Degenerate moduli k = 0 and
// k' = 0 use the trigonometric/hyperbolic closed forms. Complex and |k| > 1
// moduli are supported through the quadrature quarter periods.
JefBundle jef(const JefPoint& p);

Cplx sn(const JefPoint& p);
Cplx cn(const JefPoint& p);
Cplx dn(const JefPoint& p);
Cplx nd(const JefPoint& p);
Cplx sc(const JefPoint& p);
Cplx nc(const JefPoint& p);
Cplx cs(const JefPoint& p);

// Trigonometric series in the nome, valid in the strip |Im(u/K)| < Im(iK'/K).
Cplx sn_fourier(const JefPoint& p, const Nome& nome);
Cplx dn_fourier(const JefPoint& p, const Nome& nome);
Cplx nd_fourier(const JefPoint& p, const Nome& nome);

// Bilateral cosecant partial-fraction series, symmetric truncation in
// m in [-n_terms, n_terms]; same strip of validity.
Cplx sn_csc(const JefPoint& p, int n_terms);
Cplx cn_csc(const JefPoint& p, int n_terms);

} // namespace sge
