#include "sge/theta.hpp"

#include <cmath>

#include "sge/errors.hpp"

namespace sge {

namespace {

constexpr double term_cutoff = 1e-16;
constexpr int max_terms = 10000;
constexpr double q_abs_limit = 0.99;

struct Reduced {
    Cplx l;          // argument in the fundamental cell
    Cplx factor;     // theta(l_orig) = factor * theta(l_reduced), per function below
    long n_tau;      // B-direction shifts applied
    long n_one;      // unit shifts applied
};

// Shift l by integers and by multiples of B into the cell
// |Re l| <= 1/2, |Im l| <= Im(B)/2 (approximately), tracking the exact
// quasi-periodicity multiplier exp(-i pi n^2 B - 2 pi i n l_red).
Reduced reduce(Cplx l, Cplx B) {
    if (!(B.imag() > 0.0)) throw DomainError("theta: Im(B) must be positive");
    double n_real = std::round(l.imag() / B.imag());
    if (std::abs(n_real) > 1e6) throw NonConvergence("theta: argument too far from the fundamental cell");
    long n = static_cast<long>(n_real);
    Cplx lr = l - static_cast<double>(n) * B;
    double m_real = std::round(lr.real());
    long m = static_cast<long>(m_real);
    lr -= static_cast<double>(m);
    Cplx factor = std::exp(-iu * pi * (static_cast<double>(n) * static_cast<double>(n)) * B
                           - 2.0 * pi * iu * static_cast<double>(n) * lr);
    if (!is_finite(factor))
        throw NonConvergence("theta: quasi-periodicity factor overflowed");
    return {lr, factor, n, m};
}

double parity_sign(long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

Cplx nome_checked(Cplx B) {
    Cplx q = std::exp(iu * pi * B);
    if (!(std::abs(q) < q_abs_limit))
        throw NonConvergence("theta: |q| >= 0.99, series truncation would lose precision");
    return q;
}

// theta3(l) = 1 + sum_{n>=1} q^{n^2} (e^{2 pi i n l} + e^{-2 pi i n l})
// alternate = true flips the sign of odd-n terms (giving theta4).
Cplx theta34_series(Cplx l, Cplx B, bool alternate) {
    Cplx q = nome_checked(B);
    Cplx q2 = q * q;
    Cplx zp = std::exp(2.0 * pi * iu * l), zm = 1.0 / zp;
    Cplx acc = 1.0;
    int small = 0;
    Cplx qp = 1.0, qodd = q, zpp = 1.0, zmp = 1.0;
    for (int n = 1; n <= max_terms; ++n) {
        qp *= qodd;      // q^{n^2} accumulated through odd powers
        qodd *= q2;
        zpp *= zp;
        zmp *= zm;
        Cplx term = qp * (zpp + zmp);
        if (alternate && (n & 1)) term = -term;
        acc += term;
        small = (std::abs(term) < term_cutoff * (std::abs(acc) + std::abs(qp))) ? small + 1 : 0;
        if (small >= 2) return acc;
    }
    throw NonConvergence("theta3/theta4 series did not converge");
}

// theta1(l) = -i sum_n (-1)^n q^{(n+1/2)^2} e^{(2n+1) pi i l}, n over all integers;
// theta2 is the same without the alternating sign.
Cplx theta12_series(Cplx l, Cplx B, bool odd) {
    Cplx q = nome_checked(B);
    Cplx q2 = q * q;
    Cplx zp = std::exp(pi * iu * l), zm = 1.0 / zp;
    Cplx zp2 = zp * zp, zm2 = zm * zm;
    // n-th term pair: q^{(n+1/2)^2} (e^{(2n+1) pi i l} -+ e^{-(2n+1) pi i l})
    Cplx acc = 0.0;
    int small = 0;
    Cplx qp = std::exp(iu * pi * B * 0.25); // q^{(n+1/2)^2}
    Cplx qeven = q2;                        // q^{2n+2}
    Cplx zpp = zp, zmp = zm;                // e^{+-(2n+1) pi i l}
    for (int n = 0; n <= max_terms; ++n) {
        Cplx pair = odd ? (zpp - zmp) : (zpp + zmp);
        Cplx term = qp * pair;
        if (odd && (n & 1)) term = -term;
        acc += term;
        small = (std::abs(term) < term_cutoff * (std::abs(acc) + std::abs(qp))) ? small + 1 : 0;
        if (n > 0 && small >= 2)
            break;
        qp *= qeven;
        qeven *= q2;
        zpp *= zp2;
        zmp *= zm2;
    }
    return odd ? -iu * acc : acc;
}

} // namespace

Cplx theta3(const ThetaArgs& a) {
    Reduced r = reduce(a.l, a.B);
    return r.factor * theta34_series(r.l, a.B, false);
}

Cplx theta4(const ThetaArgs& a) {
    Reduced r = reduce(a.l, a.B);
    Cplx v = r.factor * theta34_series(r.l, a.B, true);
    return parity_sign(r.n_tau) * v;
}

Cplx theta2(const ThetaArgs& a) {
    Reduced r = reduce(a.l, a.B);
    Cplx v = r.factor * theta12_series(r.l, a.B, false);
    return parity_sign(r.n_one) * v;
}

Cplx theta1(const ThetaArgs& a) {
    Reduced r = reduce(a.l, a.B);
    Cplx v = r.factor * theta12_series(r.l, a.B, true);
    return parity_sign(r.n_tau) * parity_sign(r.n_one) * v;
}

Cplx theta_ratio_43(Cplx l, Cplx B) {
    Reduced r = reduce(l, B);
    Cplx t3 = theta34_series(r.l, B, false);
    Cplx t4 = theta34_series(r.l, B, true);
    if (std::abs(t3) == 0.0) throw PoleProximity("theta_ratio_43: theta3 vanishes");
    return parity_sign(r.n_tau) * t4 / t3;
}

Cplx theta2_product(Cplx l, Cplx B, int n_terms) {
    if (n_terms < 1) throw DomainError("theta2_product: n_terms must be >= 1");
    if (!(B.imag() > 0.0)) throw DomainError("theta2_product: Im(B) must be positive");
    nome_checked(B);
    auto bare = [&](Cplx x) {
        Cplx p = std::exp(-iu * pi * x);
        for (int n = 1; n <= n_terms; ++n)
            p *= 1.0 + std::exp(2.0 * pi * iu * (static_cast<double>(n) * B - x));
        for (int n = 0; n <= n_terms; ++n)
            p *= 1.0 + std::exp(2.0 * pi * iu * (static_cast<double>(n) * B + x));
        if (!is_finite(p)) throw NonConvergence("theta2_product: factor overflow");
        return p;
    };
    Cplx c = theta2(ThetaArgs{0.0, B}) / bare(0.0);
    return c * bare(l);
}

Cplx theta_ratio_43_product(Cplx l, Cplx B, int n_terms) {
    if (n_terms < 1) throw DomainError("theta_ratio_43_product: n_terms must be >= 1");
    Cplx q = std::exp(iu * pi * B);
    if (!(std::abs(q) < 1.0)) throw DomainError("theta_ratio_43_product: |q| must be < 1");
    Cplx zp = std::exp(2.0 * pi * iu * l), zm = 1.0 / zp;
    Cplx p = 1.0;
    Cplx qj = q, q2 = q * q;
    for (int j = 1; j < 2 * n_terms; j += 2, qj *= q2) {
        Cplx a = qj * zp, b = qj * zm;
        Cplx den = (1.0 + a) * (1.0 + b);
        if (std::abs(den) == 0.0) throw PoleProximity("theta_ratio_43_product: pole factor");
        p *= (1.0 - a) * (1.0 - b) / den;
        if (!is_finite(p)) throw NonConvergence("theta_ratio_43_product: factor overflow");
    }
    return p;
}

} // namespace sge
