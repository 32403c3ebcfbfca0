#include "sge/transforms.hpp"

#include <cmath>

#include "sge/errors.hpp"
#include "sge/jacobi.hpp"

namespace sge {

Sl2zElement::Sl2zElement(int a_, int b_, int c_, int d_) : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1) throw DomainError("Sl2zElement: determinant must be 1");
}

Cplx Sl2zElement::apply(Cplx tau) const {
    Cplx den = static_cast<double>(c) * tau + static_cast<double>(d);
    if (std::abs(den) == 0.0) throw DomainError("Sl2zElement: map has a pole at tau");
    return (static_cast<double>(a) * tau + static_cast<double>(b)) / den;
}

Cplx modular_case_tau(int case_id, Cplx tau) {
    switch (case_id) {
        case 1: return tau;
        case 2: return 1.0 - tau;
        case 3: return -tau / (1.0 - tau);
        case 4: return 1.0 / tau;
        case 5: return 1.0 / (1.0 - tau);
        case 6: return -(1.0 - tau) / tau;
    }
    throw BadCase("modular case id must be 1..6");
}

Modulus modular_case_modulus(int case_id, const Modulus& m) {
    Cplx k = m.k(), kp = m.k_prime();
    switch (case_id) {
        case 1: return m;
        case 2: return Modulus(iu * k / kp, 1.0 / kp);
        case 3: return Modulus(1.0 / k, iu * kp / k);
        case 4: return Modulus(kp, k);
        case 5: return Modulus(1.0 / kp, iu * k / kp);
        case 6: return Modulus(iu * kp / k, 1.0 / k);
    }
    throw BadCase("modular case id must be 1..6");
}

ModularCaseResult apply_modular_case(int case_id, const PeriodRatio& t, const Modulus& m) {
    Cplx raw = modular_case_tau(case_id, t.tau);
    Cplx rep = (raw.imag() > 0.0) ? raw : -raw;
    return {case_id, raw, PeriodRatio(rep), modular_case_modulus(case_id, m)};
}

Modulus landen_descend(const Modulus& m) {
    Cplx kp = m.k_prime();
    if (std::abs(kp + 1.0) < 1e-14) throw Degenerate("landen_descend: k' = -1");
    Cplx k1 = (1.0 - kp) / (1.0 + kp);
    Cplx k1p = 2.0 * std::sqrt(kp) / (1.0 + kp);
    return Modulus(k1, k1p);
}

Modulus landen_ascend(const Modulus& m) {
    Cplx k1 = m.k();
    if (std::abs(k1 + 1.0) < 1e-14) throw Degenerate("landen_ascend: k1 = -1");
    Cplx kp = (1.0 - k1) / (1.0 + k1);
    Cplx k = 2.0 * std::sqrt(k1) / (1.0 + k1);
    return Modulus(k, kp);
}

double landen_gauss_identity(Cplx u, const Modulus& m) {
    Modulus m1 = landen_descend(m);
    Cplx k1 = m1.k();
    Cplx u1 = 2.0 * u / (1.0 + k1);
    Cplx lhs = nd(JefPoint{u, m});
    JefBundle b = jef(JefPoint{u1, m1});
    Cplx rhs = (b.dn - k1 * b.cn) / (1.0 - k1);
    return std::abs(lhs - rhs);
}

std::pair<double, double> reciprocal_modulus_identities(double t, const Modulus& m_b) {
    Cplx kb = m_b.k();
    if (!(kb.imag() == 0.0 && kb.real() > 0.0 && kb.real() < 1.0))
        throw DomainError("reciprocal_modulus_identities: k_b must be real in (0,1)");
    Modulus m_k = modular_case_modulus(3, m_b); // (1/k, i k'/k)
    Cplx kk = m_k.k();
    Cplx uk = t / kk;
    JefBundle big = jef(JefPoint{uk, m_k});
    JefBundle base = jef(JefPoint{Cplx(t), m_b});
    double r_sn = std::abs(big.sn - kb * base.sn);
    double r_cn = std::abs(big.cn - base.dn);
    return {r_sn, r_cn};
}

double reciprocal_K_identity(const Modulus& m) {
    Cplx k = m.k();
    if (!(k.imag() == 0.0 && k.real() > 0.0 && k.real() < 1.0))
        throw DomainError("reciprocal_K_identity: k must be real in (0,1)");
    Cplx lhs = complete_K_msq(1.0 / (k * k));
    Cplx rhs = k * (complete_K(m) + iu * complete_K_prime(m));
    return std::abs(lhs - rhs);
}

std::pair<double, double> half_period_shift_identities(Cplx u, const Modulus& m) {
    Cplx K = complete_K(m), Kp = complete_K_prime(m);
    Cplx k = m.k(), kp = m.k_prime();
    JefBundle shifted = jef(JefPoint{u + K + iu * Kp, m});
    JefBundle base = jef(JefPoint{u, m});
    double r_cn = std::abs(shifted.cn - (-iu * kp / k) / base.cn);
    double r_dn = std::abs(shifted.dn - iu * kp * base.sn / base.cn);
    return {r_cn, r_dn};
}

std::pair<double, double> reciprocal_jef_map(Cplx u1, const Modulus& m_k) {
    Cplx kpk = m_k.k_prime();
    if (std::abs(kpk) == 0.0) throw Degenerate("reciprocal_jef_map: k'_k = 0");
    Cplx k1 = 1.0 / kpk;
    Modulus m1 = Modulus::from_k(k1);
    Modulus mc = Modulus::from_k(kpk);
    JefBundle big = jef(JefPoint{u1, m1});
    JefBundle small = jef(JefPoint{k1 * u1, mc});
    double r_dn = std::abs(big.dn - small.cn);
    double r_cn = std::abs(big.cn - small.dn);
    return {r_dn, r_cn};
}

} // namespace sge
