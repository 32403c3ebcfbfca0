#pragma once

#include <utility>

#include "sge/complex_utils.hpp"
#include "sge/elliptic.hpp"
#include "sge/solutions.hpp"

namespace sge {

// Parameter map from the direct-integration breather modulus k_b to the
// half-period-ratio theta representation. Theta-side quantities live on the
// lattice tau1 = (1 + tau_b)/2 and are derived from theta constants there.
struct BreatherBridge {
    double H, k_b;
    double K_b, t0;
    Cplx tau_b, q_b;
    Cplx tau1, q1, q_tilde;
    Cplx k1, k1_prime, K1;
    Cplx sqrt_k1p; // branch satisfying K_b = sqrt(k1') K1
    Cplx a;        // theta-argument rate, l = i a t
    int branch;    // sign of sqrt_k1p against the principal square root
    double r_nome;     // |q_b - q_tilde^2|
    double r_periods;  // |K_b - sqrt_k1p K1|
    double r_rate;     // |a - 1/(4 i sqrt_k1p K1)|
    double r_tau;      // |tau_b - 2 tau_tilde|, tau_tilde = log(q_tilde)/(i pi)
    double r_chain;    // |k1'(chain)^2 - 1/k_b'^2| of the complement-reciprocal relation
};

// branch = 0 selects the sign automatically; +-1 forces it.
BreatherBridge breather_bridge(double k_b, int branch = 0);

// Parameter map from the direct kink modulus k_k to the theta side
// k' = (k'_k - 1)/(k'_k + 1) < 0, with the residual of every map relation.
struct KinkBridge {
    double H, k_k, k_k_prime;
    double K_k, K_pk;
    double k, k_prime; // theta side; k_prime < 0
    double K, Kp;
    Cplx tau, tau_k;
    Cplx s0;           // i (k'_k/k_k)(1 - k1), squares to k'
    Cplx a;            // theta-argument rate, l = l0 + i a t
    double r_period_scale; // K(k') vs (1 + k'_k)/2 K(k_k)
    double r_tau_map;      // -1/tau vs 2(tau_k - 1), real part reduced mod 2
    double r_coeff1;       // 2 sqrt(k') K' vs i k_k K_k, principal branch
    double r_coeff2;       // rate relation at magnitude level
    double r_s0;           // |s0^2 - k'|
};

KinkBridge kink_bridge(double k_k);

// max_t |w_direct(t) - w_theta(t)| of the two log arguments
double verify_equivalence_breather(double H, const Grid& g);

struct KinkEquivalenceReport {
    double r_coeff;     // |s0^2 - k'|
    double r_K_recip;   // K(k1) vs k'_k (K'(k_k) + i K(k_k)), k1 = 1/k'_k
    double r_const;     // nd-argument constant vs K/2 + iK'
    double r_rate;      // nd-argument rate vs -1/(2 s0)
    double end_to_end;  // max_t |w_direct - w_theta|
};
KinkEquivalenceReport verify_equivalence_kink(double H, const Grid& g);

// Period integral of dE/sqrt(E(E-E1)(E-E2)) over the spectral a-cycle.
struct PeriodIntegral {
    Cplx closed;          // closed form
    Cplx oracle;          // quadrature of the defining integral
    Cplx loop;            // branch-tracked loop around (E1, E2), breather only
    Cplx second;          // companion cycle, defined as tau * closed
    double rel_magnitude; // | |closed| - |oracle| | / |closed|
};

PeriodIntegral period_integral_kink(const KinkSpectrum& s);
PeriodIntegral period_integral_breather(const BreatherSpectrum& s);

// The modular chain connecting breather and kink period ratios.
struct ModularChain {
    Cplx phi;             // breather angle, possibly continued to pi + i eta
    Cplx s_b, s_b_prime;
    Cplx tau_b, tau_2, tau_1, tau_3, tau_k;
    Cplx s_2, s_2_prime, s_1_prime;
    Cplx lambda_b, k3, h, h_prime;
    Cplx k_k_route1, k_k_route2;
    double r_s1p;   // s'_1 vs -e^{i phi}
    double r_k3;    // k3 dual formulas
    double r_kk;    // two kink-modulus routes
    double r_tau3;  // 2 tau_k vs tau_b + 1 (continued case), mod 2
};

ModularChain kink_breather_chain_phi(double phi);
ModularChain kink_breather_chain_eta(double eta);

// residuals of the two coefficient relations tying sqrt(k') K' to k_k K_k
std::pair<double, double> coefficient_relations(double k_k);

} // namespace sge
