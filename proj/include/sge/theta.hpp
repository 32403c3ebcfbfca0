#pragma once

#include "sge/complex_utils.hpp"

namespace sge {

// Argument/period pair of the one-dimensional theta functions, in the
// convention theta3(l; B) = sum_n exp(i pi B n^2 + 2 pi i l n), period 1 in l.
struct ThetaArgs {
    Cplx l;
    Cplx B;
};

Cplx theta1(const ThetaArgs& a);
Cplx theta2(const ThetaArgs& a);
Cplx theta3(const ThetaArgs& a);
Cplx theta4(const ThetaArgs& a);

// theta4(l;B)/theta3(l;B) evaluated through the series (lattice-reduced).
Cplx theta_ratio_43(Cplx l, Cplx B);

// Infinite-product form of theta2, truncated at n_terms factors per side.
// The overall nome-dependent constant is fixed by matching the series at l = 0.
Cplx theta2_product(Cplx l, Cplx B, int n_terms);

// Product form of theta4/theta3 (odd nome powers only), truncated at n_terms.
Cplx theta_ratio_43_product(Cplx l, Cplx B, int n_terms);

} // namespace sge
